#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sprod/errors.hpp"

namespace sprod {

// Exact rational. gmp keeps mpq values canonical after every operation,
// so structural equality is value equality.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}
    Rat(long p, long q);
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rat parse(const std::string& s);
    std::string str() const;
    double to_double() const { return v_.get_d(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class v_;
};

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
using Poly = std::vector<Rat>;

int poly_degree(const Poly& p); // -1 for the zero polynomial
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& c);
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_gcd(const Poly& a, const Poly& b); // monic
Rat poly_eval(const Poly& p, const Rat& x);

// Reduced rational function num/den with monic den.
class RatFunc {
public:
    RatFunc() : num_(), den_{Rat(1)} {}
    RatFunc(long c) : RatFunc(Rat(c)) {}
    RatFunc(const Rat& c);
    RatFunc(Poly num, Poly den);

    static RatFunc var(); // the active variable x

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    bool is_constant() const { return poly_degree(num_) <= 0 && poly_degree(den_) == 0; }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

Rat ratfunc_eval(const RatFunc& f, const Rat& x);
// lim_{x->inf} x^k f(x)
Rat ratfunc_limit(const RatFunc& f, int k);

template <class S>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<S> a;
    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, S(0)) {}
    S& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const S& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

/*
 * Fraction-free (Bareiss) elimination. Every division is exact in the
 * integral case; over a field it keeps entries from growing as fast as plain
 * Gaussian elimination would.
 */
template <class S>
S det_exact(Matrix<S> m) {
    if (m.rows != m.cols) throw Error(ErrorKind::NotSquare, std::to_string(m.rows) + "x" + std::to_string(m.cols));
    const int n = m.rows;
    if (n == 0) return S(1);
    bool neg = false;
    S prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            int p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return S(0);
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = S(0);
        }
        prev = m(k, k);
    }
    return neg ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

template <class S>
S power(const S& x, int e) {
    S r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

// Rebuilds a univariate rational function from exact samples. sample()
// returns nullopt where the function cannot be evaluated (a pole of some
// intermediate); those abscissae are skipped.
RatFunc reconstruct_ratfunc(const std::function<std::optional<Rat>(const Rat&)>& sample, int max_degree = 40);

/*
 * Sequential limit over n variables. Variable 0 goes to infinity first, then
 * variable 1, and so on. build(outer) must return the expression as a RatFunc
 * in variable 0 with variables 1..n-1 fixed to outer[0..n-2]. Each outer level
 * is recovered exactly by rational reconstruction in that single variable.
 * powers[i] is the exponent k in lim x_i^k (...).
 */
Rat sequential_limit(int n, const std::vector<int>& powers,
                     const std::function<RatFunc(const std::vector<Rat>&)>& build);

Rat factorial(int n);

} // namespace sprod
