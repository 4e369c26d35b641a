#include <doctest.h>

#include "proetale/simplicial.hpp"

using namespace proetale;

TEST_CASE("delta map algebra: factorization and words") {
    // all monotone maps [2] -> [3] factor as mono o epi
    for (const auto& f : all_monotone(2, 3)) {
        auto em = delta_factor(f);
        CHECK(em.epi.is_surjective());
        CHECK(em.mono.is_injective());
        CHECK(delta_compose(em.epi, em.mono) == f);
    }
    CHECK(injections(1, 2).size() == 3);
    CHECK(surjections(2, 1).size() == 2);
    CHECK(all_monotone(1, 1).size() == 3);
}

TEST_CASE("validate accepts the constant point and truncated simplices") {
    CHECK(validate(constant_object(1, 3)).ok);
    CHECK(validate(standard_simplex(1, 2)).ok);  // Delta[1] truncated at dim 2
    CHECK(validate(standard_simplex(2, 3)).ok);
}

TEST_CASE("validate reports a corrupted face with a diagnostic") {
    auto x = standard_simplex(1, 2);
    x.face(1, 0)[0] = x.face(1, 0)[0] == 0 ? 1 : 0;
    auto rep = validate(x);
    CHECK(!rep.ok);
    CHECK(!rep.diagnostic.empty());
}

TEST_CASE("coskeleton at base 0: levels are powers") {
    TruncSimp pts(0);
    pts.set_level_size(0, 2);
    auto ck = coskeleton(pts, 0, 3);
    CHECK(ck.object.level_size(1) == 4);
    CHECK(ck.object.level_size(2) == 8);
    CHECK(ck.object.level_size(3) == 16);
    CHECK(validate(ck.object).ok);
    CHECK(ck.object.coskeletal_above == 0);
}

TEST_CASE("coskeleton of an n-coskeletal object is isomorphic to it") {
    TruncSimp pts(0);
    pts.set_level_size(0, 2);
    auto x = coskeleton(pts, 0, 2).object;
    auto y = coskeleton(x, 1, 2).object;  // 0-coskeletal implies 1-coskeletal
    auto iso = find_simp_iso(x, y);
    CHECK(iso.has_value());
}

TEST_CASE("coskeleton rejects a base level above the truncation") {
    CHECK_THROWS_AS(coskeleton(constant_object(1, 1), 2, 3), ValidationError);
}

TEST_CASE("skeleton truncates and the unit of sk -| cosk is simplicial") {
    auto x = standard_simplex(2, 2);
    auto sk1 = skeleton(x, 1);
    CHECK(sk1.dim() == 1);
    CHECK(sk1.level_size(1) == x.level_size(1));
    auto ck = coskeleton(sk1, 1, 2);
    // canonical map x -> cosk_1(sk_1 x) on shared levels
    auto unit = ck.unit;
    CHECK(int(unit.level.size()) == 2);  // sk1 has dim 1
    // recompute the unit against the full object
    auto ck_full = coskeleton(x, 1, 2);
    CHECK(validate_map(x, ck_full.object, ck_full.unit).ok);
}

TEST_CASE("nondegenerate decomposition of the standard 1-simplex") {
    auto x = standard_simplex(1, 1);
    auto items = nondegenerate_decomposition(x, 1);
    int nondeg = 0, deg = 0;
    for (const auto& it : items) (it.nondegenerate ? nondeg : deg)++;
    CHECK(nondeg == 1);
    CHECK(deg == 2);
}

TEST_CASE("nondegenerate decomposition of a constant object") {
    auto x = constant_object(3, 2);
    for (int n = 1; n <= 2; ++n) {
        auto items = nondegenerate_decomposition(x, n);
        for (const auto& it : items) CHECK(!it.nondegenerate);
    }
}

TEST_CASE("product with the interval has the expected level sizes") {
    auto x = standard_simplex(1, 2);
    auto p = product_with_interval(x);
    CHECK(validate(p.object).ok);
    for (int n = 0; n <= 2; ++n) CHECK(p.object.level_size(n) == x.level_size(n) * (n + 2));
    CHECK(validate_map(x, p.object, p.include_f).ok);
    CHECK(validate_map(x, p.object, p.include_g).ok);
    CHECK(validate_map(p.object, x, p.project).ok);
    // the two inclusions compose with the projection to the identity
    CHECK(compose(p.include_f, p.project) == identity_map(x));
    CHECK(compose(p.include_g, p.project) == identity_map(x));
}

TEST_CASE("point x interval is the interval") {
    auto pt = constant_object(1, 2);
    auto p = product_with_interval(pt);
    auto iso = find_simp_iso(p.object, standard_simplex(1, 2));
    CHECK(iso.has_value());
}

TEST_CASE("sk -| cosk adjunction by explicit transpose on small pairs") {
    // pairs (X, Y) with X d-truncated and Y n-truncated; maps sk_n X -> Y
    // biject with maps X -> cosk_n Y
    std::vector<TruncSimp> xs = {standard_simplex(1, 2), constant_object(2, 2),
                                 standard_simplex(2, 2)};
    std::vector<TruncSimp> ys = {constant_object(1, 1), standard_simplex(1, 1), constant_object(2, 1)};
    const int n = 1;
    for (const auto& x : xs)
        for (const auto& y : ys) {
            if (x.total_size() + y.total_size() > 24) continue;
            auto lhs = enumerate_simp_maps(skeleton(x, n), y);
            auto ck = coskeleton(y, n, x.dim());
            auto rhs = enumerate_simp_maps(x, ck.object);
            CHECK(lhs.size() == rhs.size());
            // explicit transpose: truncate a map into the coskeleton
            std::vector<SimpMap> transposed;
            for (const auto& m : rhs) {
                SimpMap t;
                for (int k = 0; k <= n; ++k) t.level.push_back(m.level[k]);
                transposed.push_back(t);
            }
            std::sort(transposed.begin(), transposed.end(),
                      [](const SimpMap& a, const SimpMap& b) { return a.level < b.level; });
            std::sort(lhs.begin(), lhs.end(),
                      [](const SimpMap& a, const SimpMap& b) { return a.level < b.level; });
            for (size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i].level == transposed[i].level);
        }
}

TEST_CASE("Eilenberg-Zilber uniqueness is asserted internally") {
    // exercised on an instance with ~30 simplices per level
    TruncSimp pts(0);
    pts.set_level_size(0, 3);
    auto x = coskeleton(pts, 0, 2).object;  // level 2 has 27 elements
    CHECK_NOTHROW(nondegenerate_decomposition(x, 2));
}

TEST_CASE("the coskeletal flag is asserted against the canonical map") {
    TruncSimp pts(0);
    pts.set_level_size(0, 2);
    auto x = coskeleton(pts, 0, 2).object;
    CHECK(check_coskeletal(x).ok);
    // a full simplex is not 0-coskeletal above level 0
    auto bad = standard_simplex(2, 2);
    bad.coskeletal_above = 0;
    CHECK(!check_coskeletal(bad).ok);
    // objects without the flag pass trivially
    CHECK(check_coskeletal(standard_simplex(2, 2)).ok);
}

TEST_CASE("delta composition is associative on enumerated triples") {
    for (const auto& f : all_monotone(1, 2))
        for (const auto& g : all_monotone(2, 3))
            for (const auto& h : all_monotone(3, 2))
                CHECK(delta_compose(delta_compose(f, g), h) ==
                      delta_compose(f, delta_compose(g, h)));
}
