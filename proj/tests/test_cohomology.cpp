#include <doctest.h>

#include "proetale/cohomology.hpp"

using namespace proetale;

namespace {
AbelianGroup zmod(long long n) {
    AbelianGroup g;
    if (n > 1) g.torsion = {Int(n)};
    return g;
}
AbelianGroup zfree() {
    AbelianGroup g;
    g.free_rank = 1;
    return g;
}
}  // namespace

TEST_CASE("coefficient parsing and table decomposition") {
    CHECK(Coefficient::parse("Z").moduli == std::vector<Int>{Int(0)});
    CHECK(Coefficient::parse("Z/6").moduli == std::vector<Int>{Int(6)});
    CHECK(Coefficient::parse("0").moduli.empty());
    CHECK_THROWS_AS(Coefficient::parse("GL2"), ParseError);
    // Z/2 x Z/4 from its addition table
    auto g = direct_product(cyclic_group(2), cyclic_group(4));
    auto c = Coefficient::from_addition_table(g.mul);
    REQUIRE(c.moduli.size() == 2);
    CHECK(c.moduli[0] == 2);
    CHECK(c.moduli[1] == 4);
    // Klein four
    auto v = Coefficient::from_addition_table(klein_four().mul);
    REQUIRE(v.moduli.size() == 2);
    CHECK(v.moduli[0] == 2);
    CHECK(v.moduli[1] == 2);
}

TEST_CASE("constant-point complex has H^0 = Z and nothing above") {
    GSetSite site(trivial_group());
    auto w = constant_terminal_hypercovering(site, 4);
    auto c = cochain_complex(site, w, PiSheaf{Coefficient::integers()}, 3);
    CHECK(cohomology(c, 0) == zfree());
    for (int p = 1; p <= 3; ++p) CHECK(cohomology(c, p).is_trivial());
    // alternating identity/zero differentials
    CHECK(c.d[0].is_zero());
    CHECK(c.d[1].at(0, 0) == 1);
}

TEST_CASE("zero coefficients give the zero complex") {
    GSetSite site(trivial_group());
    auto w = constant_terminal_hypercovering(site, 3);
    auto c = cochain_complex(site, w, PiSheaf{Coefficient::zero()}, 2);
    for (int p = 0; p <= 2; ++p) CHECK(cohomology(c, p).is_trivial());
}

TEST_CASE("cochain complex of the regular tower has ranks 2^n over Z/2") {
    GSetSite site(cyclic_group(2));
    auto w = cech_hypercovering(site, SiteObj(site.regular()), {0, 0}, 4);
    auto c = cochain_complex(site, w, PiSheaf{Coefficient::cyclic(2)}, 3);
    for (int n = 0; n <= 4; ++n) CHECK(c.ranks[n] == (1 << n));
}

TEST_CASE("insufficient truncation is rejected with the required dimension") {
    GSetSite site(cyclic_group(2));
    auto w = cech_hypercovering(site, SiteObj(site.regular()), {0, 0}, 2);
    try {
        cochain_complex(site, w, PiSheaf{Coefficient::integers()}, 3);
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("4") != std::string::npos);
    }
}

TEST_CASE("oracle: invariants in degree zero and trivial groups above") {
    for (const auto& g : {cyclic_group(2), symmetric_3()}) {
        CHECK(group_cohomology_oracle(g, Coefficient::cyclic(6), 0) == zmod(6));
        CHECK(group_cohomology_oracle(g, Coefficient::integers(), 0) == zfree());
    }
    CHECK(group_cohomology_oracle(cyclic_group(3), Coefficient::cyclic(3), 0) == zmod(3));
    for (int p = 1; p <= 4; ++p)
        CHECK(group_cohomology_oracle(trivial_group(), Coefficient::cyclic(4), p).is_trivial());
}

TEST_CASE("oracle reproduces the classical cohomology of Z/2 and Z/3") {
    // frozen values, computed with the bar resolution
    for (int p = 1; p <= 4; ++p)
        CHECK(group_cohomology_oracle(cyclic_group(2), Coefficient::cyclic(2), p) == zmod(2));
    std::vector<AbelianGroup> expected = {zfree(), AbelianGroup{}, zmod(3), AbelianGroup{}, zmod(3)};
    for (int p = 0; p <= 4; ++p)
        CHECK(group_cohomology_oracle(cyclic_group(3), Coefficient::integers(), p) == expected[p]);
}

TEST_CASE("complex route equals the oracle route for the acceptance groups (spot)") {
    // full 12-pair sweep lives in the acceptance suite; here two spot checks
    auto bz4 = classifying_space(cyclic_group(4), 3);
    auto c = cochain_complex_of_shape(bz4.space.shape, Coefficient::cyclic(6), 2);
    for (int p = 0; p <= 2; ++p)
        CHECK(cohomology(c, p) == group_cohomology_oracle(cyclic_group(4), Coefficient::cyclic(6), p));
    auto bs3 = classifying_space(symmetric_3(), 3);
    auto cs = cochain_complex_of_shape(bs3.space.shape, Coefficient::cyclic(2), 2);
    for (int p = 0; p <= 2; ++p)
        CHECK(cohomology(cs, p) == group_cohomology_oracle(symmetric_3(), Coefficient::cyclic(2), p));
}

TEST_CASE("H^0 counts the components of the terminal object") {
    SliceSite site(3);
    auto w = constant_terminal_hypercovering(site, 2);
    auto c = cochain_complex(site, w, PiSheaf{Coefficient::integers()}, 1);
    auto h0 = cohomology(c, 0);
    CHECK(h0.free_rank == 3);
    CHECK(h0.torsion.empty());
}

TEST_CASE("verdier colimit on a single node stabilizes trivially") {
    auto sys = GaloisSystem::single(cyclic_group(2), "Z2");
    auto r = verdier_colimit(sys, Coefficient::cyclic(2), 1);
    CHECK(r.colimit == zmod(2));
    CHECK(r.stabilized);
    CHECK(r.stages.size() == 1);
}

TEST_CASE("verdier colimit of Z/2 <- Z/4 in degree 1 with Z/2 coefficients stabilizes") {
    GaloisSystem sys;
    sys.names = {"Z4", "Z2"};
    sys.groups = {cyclic_group(4), cyclic_group(2)};
    sys.leq = {{true, true}, {false, true}};
    sys.maps[{0, 1}] = cyclic_quotient(4, 2);
    auto r = verdier_colimit(sys, Coefficient::cyclic(2), 1);
    CHECK(r.colimit == zmod(2));
    for (const auto& st : r.stages) CHECK(st.group == zmod(2));
    CHECK(r.stabilized);
    REQUIRE(r.checked_transitions.size() == 1);
}

TEST_CASE("verdier colimit flags non-stabilized systems") {
    // H^1(-, Z/4): Z/2 gives Z/2 but Z/4 gives Z/4; inflation is not onto
    GaloisSystem sys;
    sys.names = {"Z4", "Z2"};
    sys.groups = {cyclic_group(4), cyclic_group(2)};
    sys.leq = {{true, true}, {false, true}};
    sys.maps[{0, 1}] = cyclic_quotient(4, 2);
    auto r = verdier_colimit(sys, Coefficient::cyclic(4), 1);
    CHECK(!r.stabilized);
    CHECK(r.colimit == zmod(4));
}

TEST_CASE("verdier colimit with zero coefficients vanishes") {
    auto sys = GaloisSystem::single(cyclic_group(3));
    auto r = verdier_colimit(sys, Coefficient::zero(), 2);
    CHECK(r.colimit.is_trivial());
    CHECK(r.stabilized);
}

TEST_CASE("component sheaf restriction along morphisms") {
    GSetSite site(cyclic_group(2));
    SiteObj g = SiteObj(site.regular());
    // identity
    CHECK(pi_sheaf_check(site, g, g, {0, 1}));
    // the regular G-set twisted by inversion is again one orbit
    CHECK(pi_sheaf_check(site, g, g, {1, 0}));
    // collapse of two orbits onto one is not invertible
    SiteObj gg = SiteObj(site.free_orbits(2));
    auto m = pi_sheaf_restriction(site, gg, g, {0, 1, 0, 1});
    CHECK(!restriction_matrix_invertible(m));
    // injected fault: a restriction that ignores components
    IntMat faulty(1, 1);
    faulty.at(0, 0) = 2;
    CHECK(!restriction_matrix_invertible(faulty));
}

TEST_CASE("smith self check runs on every invocation") {
    // indirectly exercised everywhere; a direct catch of a known shape here
    IntMat m(3, 2);
    m.at(0, 0) = 4;
    m.at(1, 1) = 6;
    m.at(2, 0) = 2;
    auto s = smith_normal_form(m);
    CHECK(s.U * s.D * s.V == m);
    CHECK(s.D.at(0, 0) == 2);
}

TEST_CASE("cohomology is independent of the chosen split wc hypercovering") {
    GSetSite site(cyclic_group(2));
    auto w1 = cech_hypercovering(site, SiteObj(site.regular()), {0, 0}, 4);
    auto w2 = cech_hypercovering(site, SiteObj(site.free_orbits(2)), {0, 0, 0, 0}, 4);
    REQUIRE(is_split_wc(site, w1));
    REQUIRE(is_split_wc(site, w2));
    PiSheaf f{Coefficient::cyclic(2)};
    auto c1 = cochain_complex(site, w1, f, 3);
    auto c2 = cochain_complex(site, w2, f, 3);
    for (int p = 0; p <= 3; ++p) CHECK(cohomology(c1, p) == cohomology(c2, p));
}

TEST_CASE("restriction along component bijections is an isomorphism, enumerated") {
    GSetSite site(cyclic_group(2));
    std::vector<SiteObj> objs = {SiteObj(site.regular()), SiteObj(site.trivial(2)),
                                 SiteObj(site.free_orbits(2))};
    int bijective = 0, other = 0;
    for (const auto& x : objs)
        for (const auto& y : objs)
            for (const auto& f : site.enumerate_morphisms(x, y)) {
                auto cx = site.component_map(x);
                auto cy = site.component_map(y);
                std::vector<int> induced(site.component_count(x), -1);
                for (int e = 0; e < obj_size(x); ++e) induced[cx[e]] = cy[f[e]];
                std::vector<bool> hit(site.component_count(y), false);
                bool bij = site.component_count(x) == site.component_count(y);
                for (int v : induced) {
                    if (v < 0 || hit[v]) bij = false;
                    else hit[v] = true;
                }
                if (bij) {
                    CHECK(pi_sheaf_check(site, x, y, f));
                    ++bijective;
                } else {
                    CHECK(!pi_sheaf_check(site, x, y, f));
                    ++other;
                }
            }
    CHECK(bijective > 0);
    CHECK(other > 0);
}
