#include "sprod/exactnum.hpp"

#include <algorithm>
#include <cctype>

namespace sprod {

const char* error_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::DivergentLimit: return "DivergentLimit";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::SizeError: return "SizeError";
    case ErrorKind::DuplicateRapidity: return "DuplicateRapidity";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    }
    return "Error";
}

// ---- Rat ----

Rat::Rat(long p, long q) {
    if (q == 0) throw Error(ErrorKind::PoleAtPoint, "zero denominator");
    v_ = mpq_class(p, q);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error(ErrorKind::PoleAtPoint, "division by zero");
    v_ /= o.v_;
    return *this;
}

static bool valid_int(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    std::string p = s.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q)) throw Error(ErrorKind::SchemaError, "not a rational: \"" + s + "\"");
    if (p[0] == '+') p = p.substr(1);
    if (q[0] == '+') q = q.substr(1);
    mpz_class zp(p), zq(q);
    if (zq == 0) throw Error(ErrorKind::SchemaError, "zero denominator in \"" + s + "\"");
    return Rat(mpq_class(zp, zq));
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ---- polynomials ----

static void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly poly_scale(const Poly& a, const Rat& c) {
    if (c.is_zero()) return {};
    Poly r(a);
    for (auto& x : r) x *= c;
    return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw Error(ErrorKind::PoleAtPoint, "polynomial division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    const Rat lead = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        size_t shift = r.size() - b.size();
        Rat c = r.back() / lead;
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        r.pop_back(); // leading term cancels exactly
        trim(r);
    }
    trim(q);
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly q, r;
        poly_divmod(x, y, q, r);
        x = std::move(y);
        // keep remainders monic so coefficients stay small
        if (!r.empty()) r = poly_scale(r, Rat(1) / r.back());
        y = std::move(r);
    }
    if (x.empty()) return {};
    return poly_scale(x, Rat(1) / x.back());
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

// ---- RatFunc ----

RatFunc::RatFunc(const Rat& c) : den_{Rat(1)} {
    if (!c.is_zero()) num_ = {c};
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    trim(num_);
    trim(den_);
    if (den_.empty()) throw Error(ErrorKind::PoleAtPoint, "rational function with zero denominator");
    normalize();
}

RatFunc RatFunc::var() { return RatFunc(Poly{Rat(0), Rat(1)}, Poly{Rat(1)}); }

void RatFunc::normalize() {
    if (num_.empty()) {
        den_ = {Rat(1)};
        return;
    }
    if (den_.size() > 1 && num_.size() > 1) {
        Poly g = poly_gcd(num_, den_);
        if (g.size() > 1) {
            Poly q, r;
            poly_divmod(num_, g, q, r);
            num_ = std::move(q);
            poly_divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    Rat lead = den_.back();
    if (lead != Rat(1)) {
        Rat inv = Rat(1) / lead;
        num_ = poly_scale(num_, inv);
        den_ = poly_scale(den_, inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    for (auto& c : r.num_) c = -c;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ = poly_add(num_, o.num_);
    } else {
        num_ = poly_add(poly_mul(num_, o.den_), poly_mul(o.num_, den_));
        den_ = poly_mul(den_, o.den_);
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) {
        *this = RatFunc();
        return *this;
    }
    num_ = poly_mul(num_, o.num_);
    den_ = poly_mul(den_, o.den_);
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw Error(ErrorKind::PoleAtPoint, "division by the zero rational function");
    Poly n = poly_mul(num_, o.den_);
    Poly d = poly_mul(den_, o.num_);
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

static std::string poly_str(const Poly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + p[i].str() + ")";
        if (i >= 1) s += "*x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

std::string RatFunc::str() const {
    if (poly_degree(den_) == 0) return poly_str(num_);
    return "[" + poly_str(num_) + "] / [" + poly_str(den_) + "]";
}

Rat ratfunc_eval(const RatFunc& f, const Rat& x) {
    Rat d = poly_eval(f.den(), x);
    if (d.is_zero()) throw Error(ErrorKind::PoleAtPoint, "pole at x = " + x.str());
    return poly_eval(f.num(), x) / d;
}

Rat ratfunc_limit(const RatFunc& f, int k) {
    if (f.is_zero()) return Rat(0);
    int dn = poly_degree(f.num()) + k;
    int dd = poly_degree(f.den());
    if (dn > dd)
        throw Error(ErrorKind::DivergentLimit, "degree " + std::to_string(dn) + " over " + std::to_string(dd));
    if (dn < dd) return Rat(0);
    return f.num().back() / f.den().back();
}

// ---- rational reconstruction ----

namespace {

// Right null vector of an r x c matrix (c = r or r - 1 typical), or empty.
std::vector<Rat> null_vector(Matrix<Rat> m) {
    int row = 0;
    std::vector<int> pivcol;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = row;
        while (p < m.rows && m(p, col).is_zero()) ++p;
        if (p == m.rows) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m(row, j), m(p, j));
        Rat inv = Rat(1) / m(row, col);
        for (int j = col; j < m.cols; ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rat c = m(i, col);
            for (int j = col; j < m.cols; ++j) m(i, j) -= c * m(row, j);
        }
        pivcol.push_back(col);
        ++row;
    }
    std::vector<bool> is_piv(m.cols, false);
    for (int c : pivcol) is_piv[c] = true;
    int freecol = -1;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) {
            freecol = c;
            break;
        }
    if (freecol < 0) return {};
    std::vector<Rat> v(m.cols, Rat(0));
    v[freecol] = Rat(1);
    for (size_t r = 0; r < pivcol.size(); ++r) v[pivcol[r]] = -m(static_cast<int>(r), freecol);
    return v;
}

Rat sample_point(int s) { return Rat(97L * s + 13, 29); }

} // namespace

RatFunc reconstruct_ratfunc(const std::function<std::optional<Rat>(const Rat&)>& sample, int max_degree) {
    std::vector<Rat> xs, ys;
    int next = 0;
    auto need = [&](size_t count) {
        int misses = 0;
        while (xs.size() < count) {
            Rat x = sample_point(next++);
            auto y = sample(x);
            if (!y) {
                if (++misses > 200) throw Error(ErrorKind::PoleAtPoint, "no evaluable sample points");
                continue;
            }
            xs.push_back(x);
            ys.push_back(*y);
        }
    };
    for (int d = 0; d <= max_degree; ++d) {
        const int unknowns = 2 * d + 2;
        need(static_cast<size_t>(unknowns + 1));
        Matrix<Rat> m(unknowns + 1, unknowns);
        for (int i = 0; i <= unknowns; ++i) {
            Rat t(1);
            for (int k = 0; k <= d; ++k) {
                m(i, k) = t;
                m(i, d + 1 + k) = -(ys[i] * t);
                t *= xs[i];
            }
        }
        auto v = null_vector(m);
        if (v.empty()) continue;
        Poly p(v.begin(), v.begin() + d + 1), q(v.begin() + d + 1, v.end());
        trim(p);
        trim(q);
        if (q.empty()) continue;
        RatFunc f(p, q);
        // confirm on the fitted points and two fresh ones
        need(static_cast<size_t>(unknowns + 3));
        bool ok = true;
        for (size_t i = 0; i < xs.size() && ok; ++i) {
            Rat den = poly_eval(f.den(), xs[i]);
            ok = !den.is_zero() && poly_eval(f.num(), xs[i]) / den == ys[i];
        }
        if (ok) return f;
    }
    throw Error(ErrorKind::DivergentLimit, "rational reconstruction exceeded degree " + std::to_string(max_degree));
}

static Rat limit_level(int j, std::vector<Rat>& outer, const std::vector<int>& powers,
                       const std::function<RatFunc(const std::vector<Rat>&)>& build) {
    // outer holds values of variables j..n-1
    if (j == 1) return ratfunc_limit(build(outer), powers[0]);
    RatFunc g = reconstruct_ratfunc([&](const Rat& y) -> std::optional<Rat> {
        std::vector<Rat> inner;
        inner.reserve(outer.size() + 1);
        inner.push_back(y);
        inner.insert(inner.end(), outer.begin(), outer.end());
        try {
            return limit_level(j - 1, inner, powers, build);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::PoleAtPoint || e.kind() == ErrorKind::DuplicateRapidity) return std::nullopt;
            throw;
        }
    });
    return ratfunc_limit(g, powers[j - 1]);
}

Rat sequential_limit(int n, const std::vector<int>& powers,
                     const std::function<RatFunc(const std::vector<Rat>&)>& build) {
    if (n == 0) {
        RatFunc f = build({});
        if (!f.is_constant()) throw Error(ErrorKind::MalformedSpec, "no limit variables but non-constant expression");
        return f.is_zero() ? Rat(0) : f.num()[0];
    }
    if (static_cast<int>(powers.size()) != n) throw Error(ErrorKind::SizeMismatch, "powers");
    std::vector<Rat> outer;
    return limit_level(n, outer, powers, build);
}

Rat factorial(int n) {
    Rat r(1);
    for (int i = 2; i <= n; ++i) r *= Rat(i);
    return r;
}

} // namespace sprod
