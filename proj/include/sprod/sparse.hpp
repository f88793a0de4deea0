#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "sprod/exactnum.hpp"
#include "sprod/vertexmodel.hpp"

namespace sprod {

using Complex = std::complex<double>;

template <class S>
struct SparseVec {
    int dim = 0;
    std::map<int, S> entries;

    SparseVec() = default;
    explicit SparseVec(int d) : dim(d) {}

    static SparseVec basis(int d, int i) {
        SparseVec v(d);
        v.entries[i] = S(1);
        return v;
    }
    void add(int i, const S& x) {
        if (sprod::is_zero(x)) return;
        auto it = entries.find(i);
        if (it == entries.end()) {
            entries.emplace(i, x);
            return;
        }
        it->second += x;
        if (sprod::is_zero(it->second)) entries.erase(it);
    }
    S get(int i) const {
        auto it = entries.find(i);
        return it == entries.end() ? S(0) : it->second;
    }
    bool is_zero() const { return entries.empty(); }
};

// Row-compressed sparse matrix; rows[r] maps column -> value, no stored zeros.
template <class S>
struct SparseOp {
    int dim = 0;
    std::vector<std::map<int, S>> rows;

    SparseOp() = default;
    explicit SparseOp(int d) : dim(d), rows(static_cast<size_t>(d)) {}

    static SparseOp identity(int d) {
        SparseOp m(d);
        for (int i = 0; i < d; ++i) m.rows[i][i] = S(1);
        return m;
    }
    void add(int r, int c, const S& x) {
        if (sprod::is_zero(x)) return;
        auto& row = rows[r];
        auto it = row.find(c);
        if (it == row.end()) {
            row.emplace(c, x);
            return;
        }
        it->second += x;
        if (sprod::is_zero(it->second)) row.erase(it);
    }
    S get(int r, int c) const {
        auto it = rows[r].find(c);
        return it == rows[r].end() ? S(0) : it->second;
    }
    bool is_zero() const {
        for (const auto& r : rows)
            if (!r.empty()) return false;
        return true;
    }
    size_t nnz() const {
        size_t n = 0;
        for (const auto& r : rows) n += r.size();
        return n;
    }
};

template <class S>
SparseOp<S> operator*(const SparseOp<S>& a, const SparseOp<S>& b) {
    if (a.dim != b.dim) throw Error(ErrorKind::SizeMismatch, "operator product");
    SparseOp<S> c(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (const auto& [k, x] : a.rows[i])
            for (const auto& [j, y] : b.rows[k]) c.add(i, j, x * y);
    return c;
}

template <class S>
SparseOp<S> operator+(SparseOp<S> a, const SparseOp<S>& b) {
    if (a.dim != b.dim) throw Error(ErrorKind::SizeMismatch, "operator sum");
    for (int i = 0; i < b.dim; ++i)
        for (const auto& [j, y] : b.rows[i]) a.add(i, j, y);
    return a;
}

template <class S>
SparseOp<S> operator*(const S& s, SparseOp<S> a) {
    if (is_zero(s)) return SparseOp<S>(a.dim);
    for (auto& r : a.rows)
        for (auto& kv : r) kv.second *= s;
    return a;
}

template <class S>
SparseOp<S> operator-(const SparseOp<S>& a, const SparseOp<S>& b) {
    return a + S(-1) * b;
}

template <class S>
SparseOp<S> kron(const SparseOp<S>& a, const SparseOp<S>& b) {
    SparseOp<S> c(a.dim * b.dim);
    for (int i = 0; i < a.dim; ++i)
        for (const auto& [j, x] : a.rows[i])
            for (int k = 0; k < b.dim; ++k)
                for (const auto& [l, y] : b.rows[k]) c.add(i * b.dim + k, j * b.dim + l, x * y);
    return c;
}

template <class S>
SparseVec<S> kron(const SparseVec<S>& a, const SparseVec<S>& b) {
    SparseVec<S> c(a.dim * b.dim);
    for (const auto& [i, x] : a.entries)
        for (const auto& [k, y] : b.entries) c.add(i * b.dim + k, x * y);
    return c;
}

// a * v
template <class S>
SparseVec<S> act(const SparseOp<S>& a, const SparseVec<S>& v) {
    if (a.dim != v.dim) throw Error(ErrorKind::SizeMismatch, "operator on vector");
    SparseVec<S> out(a.dim);
    for (int i = 0; i < a.dim; ++i) {
        S acc(0);
        bool any = false;
        for (const auto& [j, x] : a.rows[i]) {
            auto it = v.entries.find(j);
            if (it == v.entries.end()) continue;
            acc += x * it->second;
            any = true;
        }
        if (any) out.add(i, acc);
    }
    return out;
}

// v^T * a, for dual states
template <class S>
SparseVec<S> act_left(const SparseVec<S>& v, const SparseOp<S>& a) {
    if (a.dim != v.dim) throw Error(ErrorKind::SizeMismatch, "dual vector on operator");
    SparseVec<S> out(a.dim);
    for (const auto& [i, x] : v.entries)
        for (const auto& [j, y] : a.rows[i]) out.add(j, x * y);
    return out;
}

template <class S>
SparseVec<S> operator+(SparseVec<S> a, const SparseVec<S>& b) {
    for (const auto& [i, x] : b.entries) a.add(i, x);
    return a;
}

template <class S>
SparseVec<S> operator*(const S& s, SparseVec<S> a) {
    if (is_zero(s)) return SparseVec<S>(a.dim);
    for (auto& kv : a.entries) kv.second *= s;
    return a;
}

template <class S>
SparseVec<S> operator-(SparseVec<S> a, const SparseVec<S>& b) {
    for (const auto& [i, x] : b.entries) a.add(i, -x);
    return a;
}

// Bilinear pairing, no conjugation.
template <class S>
S dot(const SparseVec<S>& a, const SparseVec<S>& b) {
    S r(0);
    for (const auto& [i, x] : a.entries) {
        auto it = b.entries.find(i);
        if (it != b.entries.end()) r += x * it->second;
    }
    return r;
}

inline double abs_value(const Rat& x) { return std::fabs(x.to_double()); }
inline double abs_value(const Complex& x) { return std::abs(x); }

template <class S>
double norm_inf(const SparseVec<S>& v) {
    double m = 0;
    for (const auto& kv : v.entries) m = std::max(m, abs_value(kv.second));
    return m;
}

// The value an exact quantity takes in the complex numeric path.
inline Complex to_complex(const Rat& x) { return Complex(x.to_double(), 0.0); }

using Operator = SparseOp<Rat>;
using StateVec = SparseVec<Rat>;

/*
 * Monodromy of a chain: T(x) = R_1(x, y_1) ... R_n(x, y_n), returned as the
 * d*d auxiliary blocks T[i*d + j] = t_{i+1, j+1}. Site operators act with
 * <out| L_{ij} |in> = R[d*i + out][d*j + in]; the first site is the most
 * significant digit of the basis index.
 */
template <class S>
std::vector<SparseOp<S>> chain_monodromy(const S& x, const std::vector<VertexKind>& kinds, const std::vector<S>& ys) {
    const int d = kinds.empty() ? 2 : vertex_dim(kinds.front());
    std::vector<SparseOp<S>> t(static_cast<size_t>(d * d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) t[i * d + j] = i == j ? SparseOp<S>::identity(1) : SparseOp<S>(1);
    for (size_t s = 0; s < kinds.size(); ++s) {
        if (vertex_dim(kinds[s]) != d) throw Error(ErrorKind::MalformedSpec, "mixed auxiliary dimensions");
        std::vector<S> r = rmatrix_entries<S>(kinds[s], x, ys[s]);
        const int n = d * d;
        std::vector<SparseOp<S>> site(static_cast<size_t>(n), SparseOp<S>(d));
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j)
                for (int o = 0; o < d; ++o)
                    for (int in = 0; in < d; ++in) site[k * d + j].add(o, in, r[static_cast<size_t>(d * k + o) * n + d * j + in]);
        std::vector<SparseOp<S>> next(static_cast<size_t>(n));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                SparseOp<S> acc(t[0].dim * d);
                for (int k = 0; k < d; ++k) acc = acc + kron(t[i * d + k], site[k * d + j]);
                next[i * d + j] = std::move(acc);
            }
        t = std::move(next);
    }
    return t;
}

} // namespace sprod
