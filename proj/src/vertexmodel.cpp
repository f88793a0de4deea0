#include "sprod/vertexmodel.hpp"

#include "sprod/parallel.hpp"

namespace sprod {

int vertex_dim(VertexKind k) { return (k == VertexKind::SU3 || k == VertexKind::SU3STAR) ? 3 : 2; }

const char* vertex_kind_name(VertexKind k) {
    switch (k) {
    case VertexKind::SU2: return "SU2";
    case VertexKind::SU3: return "SU3";
    case VertexKind::SU3STAR: return "SU3STAR";
    case VertexKind::SU2NORMALIZED: return "SU2NORMALIZED";
    case VertexKind::PERM2: return "PERM2";
    }
    return "?";
}

static size_t flat_index(const std::vector<int>& dims, const std::vector<int>& idx) {
    if (idx.size() != dims.size()) throw Error(ErrorKind::SizeMismatch, "tensor index arity");
    size_t f = 0;
    for (size_t k = 0; k < dims.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= dims[k]) throw Error(ErrorKind::SizeMismatch, "tensor index out of range");
        f = f * dims[k] + idx[k];
    }
    return f;
}

Rat& Tensor::at(const std::vector<int>& idx) { return entries[flat_index(dims, idx)]; }
const Rat& Tensor::at(const std::vector<int>& idx) const { return entries[flat_index(dims, idx)]; }

bool Tensor::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

Tensor build_rmatrix(VertexKind kind, const Rat& l, const Rat& m) {
    const int d = vertex_dim(kind);
    auto r = rmatrix_entries<Rat>(kind, l, m);
    Tensor t;
    t.dims = {d, d, d, d};
    t.labels = {"in_row", "out_row", "in_col", "out_col"};
    t.entries.resize(r.size());
    for (int ia = 0; ia < d; ++ia)
        for (int ja = 0; ja < d; ++ja)
            for (int ib = 0; ib < d; ++ib)
                for (int jb = 0; jb < d; ++jb)
                    t.at({ia, ja, ib, jb}) = r[static_cast<size_t>(d * ia + ib) * d * d + d * ja + jb];
    return t;
}

namespace {

using Dense = Matrix<Rat>;

Dense mul(const Dense& a, const Dense& b) {
    Dense c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

// Embeds a two-space matrix acting on factors (p, q), p < q, of V^{x3}.
Dense embed(const std::vector<Rat>& r, int d, int p, int q) {
    const int n = d * d * d;
    Dense m(n, n);
    auto digit = [d](int x, int pos) { return (pos == 0) ? x / (d * d) : (pos == 1 ? (x / d) % d : x % d); };
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col) {
            int other = 3 - p - q;
            if (digit(row, other) != digit(col, other)) continue;
            int ri = d * digit(row, p) + digit(row, q);
            int ci = d * digit(col, p) + digit(col, q);
            m(row, col) = r[static_cast<size_t>(ri) * d * d + ci];
        }
    return m;
}

} // namespace

Tensor yang_baxter_residual(YBCombo combo, const Rat& l, const Rat& m, const Rat& n) {
    VertexKind first = combo == YBCombo::SU2 ? VertexKind::SU2 : VertexKind::SU3;
    VertexKind second = combo == YBCombo::MIXED_STAR ? VertexKind::SU3STAR : first;
    const int d = vertex_dim(first);
    Dense rab = embed(rmatrix_entries<Rat>(first, l, m), d, 0, 1);
    Dense rac = embed(rmatrix_entries<Rat>(second, l, n), d, 0, 2);
    Dense rbc = embed(rmatrix_entries<Rat>(second, m, n), d, 1, 2);
    Dense lhs = mul(mul(rab, rac), rbc);
    Dense rhs = mul(mul(rbc, rac), rab);
    Tensor t;
    t.dims = {d, d, d, d, d, d};
    t.labels = {"a_out", "b_out", "c_out", "a_in", "b_in", "c_in"};
    t.entries.resize(lhs.a.size());
    for (size_t i = 0; i < lhs.a.size(); ++i) t.entries[i] = lhs.a[i] - rhs.a[i];
    return t;
}

namespace {

EdgeBoundary edge(const LatticeSpec& s, const std::string& id) {
    auto it = s.boundary.find(id);
    if (it == s.boundary.end()) throw Error(ErrorKind::MalformedSpec, "missing boundary for edge " + id);
    return it->second;
}

bool allows(const EdgeBoundary& b, int state0) { return b.summed || b.state - 1 == state0; }

} // namespace

Rat contract_lattice(const LatticeSpec& spec) {
    const int nr = static_cast<int>(spec.rows.size());
    const int nc = static_cast<int>(spec.cols.size());
    for (const auto& [id, b] : spec.boundary) {
        if (id.size() < 2) throw Error(ErrorKind::MalformedSpec, "bad edge id " + id);
        char side = id[0];
        int k = 0;
        try {
            k = std::stoi(id.substr(1));
        } catch (...) {
            throw Error(ErrorKind::MalformedSpec, "bad edge id " + id);
        }
        int lim = (side == 'L' || side == 'R') ? nr : ((side == 'T' || side == 'B') ? nc : -1);
        if (lim < 0 || k < 1 || k > lim) throw Error(ErrorKind::MalformedSpec, "bad edge id " + id);
        int alpha = (side == 'L' || side == 'R') ? spec.rows[k - 1].alphabet : spec.cols[k - 1].alphabet;
        if (!b.summed && (b.state < 1 || b.state > alpha))
            throw Error(ErrorKind::MalformedSpec, "state out of range on edge " + id);
    }
    for (const auto& r : spec.rows)
        if (r.alphabet != 2 && r.alphabet != 3) throw Error(ErrorKind::MalformedSpec, "alphabet must be 2 or 3");
    for (const auto& c : spec.cols)
        if (c.alphabet != 2 && c.alphabet != 3) throw Error(ErrorKind::MalformedSpec, "alphabet must be 2 or 3");

    // vertex weights, flattened d^2 x d^2
    std::vector<std::vector<Rat>> wt(static_cast<size_t>(nr) * nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) {
            const auto& row = spec.rows[i];
            const auto& col = spec.cols[j];
            if (row.alphabet != col.alphabet)
                throw Error(ErrorKind::MalformedSpec, "row and column alphabets differ at a vertex");
            VertexKind k = row.alphabet == 2 ? VertexKind::SU2 : (col.dotted ? VertexKind::SU3STAR : VertexKind::SU3);
            wt[static_cast<size_t>(i) * nc + j] = rmatrix_entries<Rat>(k, row.rapidity, col.rapidity);
        }

    // column tuple indexing, mixed radix with column 0 most significant
    std::vector<size_t> stride(nc + 1, 1);
    for (int j = nc - 1; j >= 0; --j) stride[j] = stride[j + 1] * spec.cols[j].alphabet;
    const size_t ntup = stride[0];
    auto digit = [&](size_t s, int j) { return static_cast<int>((s / stride[j + 1]) % spec.cols[j].alphabet); };

    std::vector<Rat> v(ntup, Rat(0));
    for (size_t s = 0; s < ntup; ++s) {
        bool ok = true;
        for (int j = 0; j < nc && ok; ++j) ok = allows(edge(spec, "T" + std::to_string(j + 1)), digit(s, j));
        if (ok) v[s] = Rat(1);
    }

    for (int i = 0; i < nr; ++i) {
        const int d = spec.rows[i].alphabet;
        EdgeBoundary lb = edge(spec, "L" + std::to_string(i + 1));
        EdgeBoundary rb = edge(spec, "R" + std::to_string(i + 1));
        std::vector<Rat> w(ntup * d, Rat(0));
        for (size_t s = 0; s < ntup; ++s)
            for (int h = 0; h < d; ++h)
                if (allows(lb, h)) w[s * d + h] = v[s];
        for (int j = 0; j < nc; ++j) {
            const auto& r = wt[static_cast<size_t>(i) * nc + j];
            const int dd = d * d;
            std::vector<Rat> nw(ntup * d, Rat(0));
            // gather: target (s', h') with s'_j the bottom state of this vertex
            parallel_for(ntup * d, [&](size_t tgt) {
                size_t s2 = tgt / d;
                int h2 = static_cast<int>(tgt % d);
                int bot = digit(s2, j);
                size_t base = s2 - static_cast<size_t>(bot) * stride[j + 1];
                Rat acc(0);
                for (int top = 0; top < d; ++top) {
                    size_t s1 = base + static_cast<size_t>(top) * stride[j + 1];
                    for (int h1 = 0; h1 < d; ++h1) {
                        const Rat& src = w[s1 * d + h1];
                        if (src.is_zero()) continue;
                        const Rat& x = r[static_cast<size_t>(d * h1 + bot) * dd + d * h2 + top];
                        if (x.is_zero()) continue;
                        acc += src * x;
                    }
                }
                nw[tgt] = std::move(acc);
            });
            w = std::move(nw);
        }
        for (size_t s = 0; s < ntup; ++s) {
            Rat acc(0);
            for (int h = 0; h < d; ++h)
                if (allows(rb, h)) acc += w[s * d + h];
            v[s] = std::move(acc);
        }
    }

    Rat total(0);
    for (size_t s = 0; s < ntup; ++s) {
        if (v[s].is_zero()) continue;
        bool ok = true;
        for (int j = 0; j < nc && ok; ++j) ok = allows(edge(spec, "B" + std::to_string(j + 1)), digit(s, j));
        if (ok) total += v[s];
    }
    return total;
}

static void fix(LatticeSpec& s, const std::string& id, int state) { s.boundary[id] = EdgeBoundary{false, state}; }

LatticeSpec dwpf_lattice(const std::vector<Rat>& lambdas, const std::vector<Rat>& ws) {
    if (lambdas.size() != ws.size()) throw Error(ErrorKind::SizeMismatch, "dwpf lattice needs a square grid");
    return pdwpf_lattice(lambdas, ws);
}

LatticeSpec pdwpf_lattice(const std::vector<Rat>& lambdas, const std::vector<Rat>& ws) {
    if (lambdas.size() > ws.size()) throw Error(ErrorKind::SizeError, "more rows than columns");
    LatticeSpec s;
    for (const auto& l : lambdas) s.rows.push_back({l, 2});
    for (const auto& w : ws) s.cols.push_back({w, 2, false});
    for (size_t i = 1; i <= lambdas.size(); ++i) {
        fix(s, "L" + std::to_string(i), 1);
        fix(s, "R" + std::to_string(i), 2);
    }
    const bool partial = lambdas.size() < ws.size();
    for (size_t j = 1; j <= ws.size(); ++j) {
        fix(s, "T" + std::to_string(j), 1);
        if (partial)
            s.boundary["B" + std::to_string(j)] = EdgeBoundary{true, 1};
        else
            fix(s, "B" + std::to_string(j), 2);
    }
    return s;
}

LatticeSpec su3_lattice(const std::vector<Rat>& lambdas, const std::vector<Rat>& mus, const std::vector<Rat>& ws,
                        const std::vector<Rat>& vs) {
    if (lambdas.size() != ws.size() || mus.size() != vs.size())
        throw Error(ErrorKind::SizeMismatch, "need |lambda| = |w| and |mu| = |v|");
    LatticeSpec s;
    for (const auto& l : lambdas) s.rows.push_back({l, 3});
    for (const auto& m : mus) s.rows.push_back({m, 3});
    for (const auto& w : ws) s.cols.push_back({w, 3, false});
    for (const auto& v : vs) s.cols.push_back({v, 3, true});
    const size_t l = lambdas.size();
    for (size_t i = 1; i <= s.rows.size(); ++i) {
        fix(s, "L" + std::to_string(i), i <= l ? 1 : 3);
        fix(s, "R" + std::to_string(i), 2);
    }
    for (size_t j = 1; j <= s.cols.size(); ++j) {
        fix(s, "B" + std::to_string(j), j <= l ? 2 : 3);
        fix(s, "T" + std::to_string(j), j <= l ? 1 : 2);
    }
    return s;
}

} // namespace sprod
