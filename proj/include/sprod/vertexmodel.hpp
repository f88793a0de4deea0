#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "sprod/exactnum.hpp"

namespace sprod {

inline bool is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0); }

template <class S>
S weight_f(const S& l, const S& m) {
    S d = l - m;
    if (is_zero(d)) throw Error(ErrorKind::PoleAtPoint, "f(l,m) with l = m");
    return (d + S(1)) / d;
}

template <class S>
S weight_g(const S& l, const S& m) {
    S d = l - m;
    if (is_zero(d)) throw Error(ErrorKind::PoleAtPoint, "g(l,m) with l = m");
    return S(1) / d;
}

// f over two sets: product of f(a, b) over all pairs; empty sets give 1.
template <class S>
S f_set(const std::vector<S>& a, const std::vector<S>& b) {
    S r(1);
    for (const auto& x : a)
        for (const auto& y : b) r *= weight_f(x, y);
    return r;
}

enum class VertexKind { SU2, SU3, SU3STAR, SU2NORMALIZED, PERM2 };

int vertex_dim(VertexKind k);
const char* vertex_kind_name(VertexKind k);

/*
 * Dense R-matrix entries, row index d*ia+ib, column index d*ja+jb, where
 * (ia, ja) are the left/right states of the horizontal line and (ib, jb)
 * the bottom/top states of the vertical line. Returned row-major, d^2 x d^2.
 */
template <class S>
std::vector<S> rmatrix_entries(VertexKind kind, const S& l, const S& m) {
    const int d = vertex_dim(kind);
    const int n = d * d;
    std::vector<S> r(static_cast<size_t>(n) * n, S(0));
    auto at = [&](int ia, int ib, int ja, int jb) -> S& { return r[static_cast<size_t>(d * ia + ib) * n + d * ja + jb]; };
    switch (kind) {
    case VertexKind::PERM2:
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) at(a, b, b, a) = S(1);
        break;
    case VertexKind::SU2:
    case VertexKind::SU3:
    case VertexKind::SU2NORMALIZED: {
        S f = weight_f(l, m), g = weight_g(l, m);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                if (a == b) {
                    at(a, a, a, a) = f;
                } else {
                    at(a, b, a, b) = S(1);
                    at(a, b, b, a) = g;
                }
            }
        if (kind == VertexKind::SU2NORMALIZED)
            for (auto& x : r) x /= f;
        break;
    }
    case VertexKind::SU3STAR: {
        // R(-l,-m) transposed on the vertical space
        S f = weight_f(-l, -m), g = weight_g(-l, -m);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                if (a == b) {
                    at(a, a, a, a) = f;
                } else {
                    at(a, b, a, b) = S(1);
                    at(a, a, b, b) = g;
                }
            }
        break;
    }
    }
    return r;
}

struct Tensor {
    std::vector<int> dims;
    std::vector<std::string> labels;
    std::vector<Rat> entries;

    Rat& at(const std::vector<int>& idx);
    const Rat& at(const std::vector<int>& idx) const;
    bool is_zero() const;
};

// Legs (in_row, out_row, in_col, out_col) = (ia, ja, ib, jb).
Tensor build_rmatrix(VertexKind kind, const Rat& l, const Rat& m);

enum class YBCombo { SU2, SU3, MIXED_STAR };

// LHS - RHS of the Yang-Baxter relation on V_a x V_b x V_c.
// Legs (a_out, b_out, c_out, a_in, b_in, c_in).
Tensor yang_baxter_residual(YBCombo combo, const Rat& l, const Rat& m, const Rat& n);

struct RowLine {
    Rat rapidity;
    int alphabet = 2;
};

struct ColLine {
    Rat rapidity;
    int alphabet = 2;
    bool dotted = false;
};

struct EdgeBoundary {
    bool summed = false;
    int state = 1; // 1-based
};

/*
 * Rows run top to bottom, columns left to right. Edge ids: "L<i>", "R<i>"
 * for row i and "T<j>", "B<j>" for column j, all 1-based.
 */
struct LatticeSpec {
    std::vector<RowLine> rows;
    std::vector<ColLine> cols;
    std::map<std::string, EdgeBoundary> boundary;
};

Rat contract_lattice(const LatticeSpec& spec);

// Domain wall lattice: rows enter with 1 on the left, leave with 2 on the
// right; columns carry 2 at the bottom and 1 at the top.
LatticeSpec dwpf_lattice(const std::vector<Rat>& lambdas, const std::vector<Rat>& ws);
// Same with fewer rows than columns and a summed lower boundary.
LatticeSpec pdwpf_lattice(const std::vector<Rat>& lambdas, const std::vector<Rat>& ws);
// The mixed lattice with lambda rows over mu rows, w columns then dotted v columns.
LatticeSpec su3_lattice(const std::vector<Rat>& lambdas, const std::vector<Rat>& mus, const std::vector<Rat>& ws,
                        const std::vector<Rat>& vs);

} // namespace sprod
