#include <doctest.h>

#include "proetale/exact.hpp"

using namespace proetale;

namespace {
IntMat mat(int r, int c, std::initializer_list<int> vals) {
    IntMat m(r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = *it++;
    return m;
}
}  // namespace

TEST_CASE("smith normal form puts diagonals in a divisibility chain") {
    IntMat m = mat(2, 2, {2, 4, 6, 8});
    auto s = smith_normal_form(m);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 4);  // det = -8, d1*d2 = 8
    CHECK(s.rank == 2);
    CHECK(s.U * s.D * s.V == m);
}

TEST_CASE("smith normal form of a zero and identity matrix") {
    IntMat z(3, 2);
    auto s = smith_normal_form(z);
    CHECK(s.rank == 0);
    auto id = IntMat::identity(3);
    auto si = smith_normal_form(id);
    CHECK(si.rank == 3);
    for (int i = 0; i < 3; ++i) CHECK(si.D.at(i, i) == 1);
}

TEST_CASE("solve_integer finds exact solutions and rejects impossible ones") {
    IntMat b = mat(2, 2, {2, 0, 0, 3});
    IntMat g = mat(2, 1, {4, 9});
    auto x = solve_integer(b, g);
    REQUIRE(x.has_value());
    CHECK(b * (*x) == g);
    IntMat bad = mat(2, 1, {1, 1});
    CHECK(!solve_integer(b, bad).has_value());
}

TEST_CASE("cokernel structures") {
    // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 = Z/6 in invariant factors: 1 | 6
    IntMat m = mat(2, 2, {2, 0, 0, 3});
    auto g = cokernel(m);
    CHECK(g.free_rank == 0);
    REQUIRE(g.torsion.size() == 1);
    CHECK(g.torsion[0] == 6);

    // Z^3 / <(1,0,0)> = Z^2
    IntMat m2 = mat(3, 1, {1, 0, 0});
    auto g2 = cokernel(m2);
    CHECK(g2.free_rank == 2);
    CHECK(g2.torsion.empty());
}

TEST_CASE("kernel basis spans the kernel") {
    IntMat m = mat(1, 3, {1, 1, 1});
    auto k = kernel_basis(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
}

TEST_CASE("subquotient presentation and induced maps") {
    // L = Z^2, K = <(2,0),(0,2)>: group Z/2 + Z/2
    IntMat basis = IntMat::identity(2);
    IntMat sub = mat(2, 2, {2, 0, 0, 2});
    Subquotient q(basis, sub);
    CHECK(q.group().free_rank == 0);
    REQUIRE(q.group().torsion.size() == 2);
    CHECK(q.group().torsion[0] == 2);
    CHECK(q.group().torsion[1] == 2);

    // identity ambient map induces an isomorphism
    auto im = induced_map(q, q, IntMat::identity(2));
    CHECK(induced_map_is_isomorphism(q, q, im));
    // doubling kills everything: not surjective
    IntMat twice = mat(2, 2, {2, 0, 0, 2});
    auto im2 = induced_map(q, q, twice);
    CHECK(!induced_map_surjective(q, im2));
}

TEST_CASE("abelian group formatting") {
    AbelianGroup a;
    CHECK(a.str() == "0");
    a.torsion = {Int(2), Int(6)};
    a.free_rank = 1;
    CHECK(a.str() == "Z/2 + Z/6 + Z");
    CHECK(a.order() == 0);
}
