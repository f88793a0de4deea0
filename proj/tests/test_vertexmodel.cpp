#include "doctest.h"

#include "sprod/dwpf.hpp"
#include "sprod/parallel.hpp"
#include "sprod/vertexmodel.hpp"

using namespace sprod;

TEST_CASE("weights") {
    CHECK(weight_f(Rat(2), Rat(0)) == Rat(3, 2));
    CHECK(weight_g(Rat(2), Rat(0)) == Rat(1, 2));
    CHECK(weight_f(Rat(0), Rat(1)) == Rat(0));
    CHECK_THROWS_AS(weight_f(Rat(1), Rat(1)), Error);
    CHECK(f_set<Rat>({}, {Rat(1)}) == Rat(1));
}

TEST_CASE("rmatrix layout") {
    Tensor r = build_rmatrix(VertexKind::SU2, Rat(2), Rat(0));
    CHECK(r.dims == std::vector<int>{2, 2, 2, 2});
    // legs (ia, ja, ib, jb)
    CHECK(r.at({0, 0, 0, 0}) == Rat(3, 2));
    CHECK(r.at({0, 0, 1, 1}) == Rat(1));
    CHECK(r.at({0, 1, 1, 0}) == Rat(1, 2));
    CHECK(r.at({0, 1, 0, 1}) == Rat(0));
    Tensor p = build_rmatrix(VertexKind::PERM2, Rat(0), Rat(0));
    CHECK(p.at({0, 1, 1, 0}) == Rat(1));
    CHECK(p.at({0, 0, 0, 0}) == Rat(1));
    Tensor n = build_rmatrix(VertexKind::SU2NORMALIZED, Rat(2), Rat(0));
    CHECK(n.at({1, 1, 1, 1}) == Rat(1));
    CHECK(n.at({1, 1, 0, 0}) == Rat(2, 3));
    Tensor s = build_rmatrix(VertexKind::SU3STAR, Rat(2), Rat(0));
    CHECK(s.dims == std::vector<int>{3, 3, 3, 3});
    CHECK(s.at({0, 0, 0, 0}) == Rat(1, 2)); // f(-2, 0)
    CHECK(s.at({0, 1, 0, 1}) == Rat(-1, 2));
    CHECK(s.at({0, 0, 2, 2}) == Rat(1));
}

TEST_CASE("yang-baxter holds") {
    Rat l(7, 3), m(-2), n(5, 2);
    CHECK(yang_baxter_residual(YBCombo::SU2, l, m, n).is_zero());
    CHECK(yang_baxter_residual(YBCombo::SU3, l, m, n).is_zero());
    CHECK(yang_baxter_residual(YBCombo::MIXED_STAR, l, m, n).is_zero());
    CHECK(yang_baxter_residual(YBCombo::SU3, Rat(0), Rat(3), Rat(-1, 3)).is_zero());
}

TEST_CASE("lattice agrees with the determinant") {
    CHECK(contract_lattice(dwpf_lattice({Rat(2), Rat(4)}, {Rat(0), Rat(1)})) == Rat(2, 3));
    std::vector<Rat> lam{Rat(2), Rat(5), Rat(-3)}, w{Rat(0), Rat(1), Rat(9, 2)};
    CHECK(contract_lattice(dwpf_lattice(lam, w)) == Rat(-19, 25));
    set_threads(3);
    CHECK(contract_lattice(dwpf_lattice(lam, w)) == Rat(-19, 25));
    set_threads(1);
}

TEST_CASE("lattice validation") {
    LatticeSpec s = dwpf_lattice({Rat(2)}, {Rat(0)});
    s.boundary["X9"] = EdgeBoundary{};
    CHECK_THROWS_AS(contract_lattice(s), Error);
    LatticeSpec t = dwpf_lattice({Rat(2)}, {Rat(0)});
    t.boundary["L1"].state = 3;
    CHECK_THROWS_AS(contract_lattice(t), Error);
}

TEST_CASE("single vertex boundary values") {
    // one row, one column: the f vertex and the g vertex
    LatticeSpec s;
    s.rows = {RowLine{Rat(2), 2}};
    s.cols = {ColLine{Rat(0), 2, false}};
    s.boundary = {{"L1", {false, 1}}, {"R1", {false, 1}}, {"B1", {false, 1}}, {"T1", {false, 1}}};
    CHECK(contract_lattice(s) == Rat(3, 2));
    s.boundary["R1"].state = 2;
    s.boundary["B1"].state = 2;
    CHECK(contract_lattice(s) == Rat(1, 2));
    s.boundary["B1"].summed = true;
    CHECK(contract_lattice(s) == Rat(1, 2));
}

TEST_CASE("su3 lattice hand value") {
    CHECK(contract_lattice(su3_lattice({Rat(2)}, {Rat(0)}, {Rat(1)}, {Rat(3)})) == Rat(-1, 3));
}
