#include <doctest.h>

#include <functional>

#include "proetale/finspace.hpp"

using namespace proetale;

namespace {

// Independent oracle: connected components by brute-force graph search over
// the comparability relation.
int brute_component_count(const FiniteSpace& x) {
    std::vector<int> color(x.size(), -1);
    int next = 0;
    std::function<void(int)> dfs = [&](int v) {
        color[v] = next;
        for (int w = 0; w < x.size(); ++w)
            if (color[w] < 0 && (x.leq(v, w) || x.leq(w, v))) dfs(w);
    };
    for (int v = 0; v < x.size(); ++v)
        if (color[v] < 0) { dfs(v); ++next; }
    return next;
}

FiniteSpace space_of(std::vector<std::string> pts, std::vector<std::pair<int, int>> leq) {
    return FiniteSpace(std::move(pts), leq);
}

}  // namespace

TEST_CASE("components: two-point discrete space stays discrete") {
    auto x = FiniteSpace::discrete(2);
    auto c = components(x);
    CHECK(c.space.size() == 2);
    CHECK(c.space.is_discrete());
    CHECK(is_surjective(c.quotient));
}

TEST_CASE("components: Sierpinski space collapses to a point") {
    auto c = components(FiniteSpace::sierpinski());
    CHECK(c.space.size() == 1);
}

TEST_CASE("components: Sierpinski plus a point gives the two-point discrete space") {
    auto x = FiniteSpace::sierpinski().disjoint_union(FiniteSpace::discrete(1));
    CHECK(brute_component_count(x) == 2);  // derived oracle
    auto c = components(x);
    CHECK(c.space.size() == 2);
    CHECK(c.space.is_discrete());
}

TEST_CASE("components agrees with the brute-force oracle on all spaces with <= 4 points") {
    // enumerate all labeled preorders on up to 4 points
    long long seen = 0;
    for (int n = 0; n <= 4; ++n) {
        // generate relation candidates pair by pair; the constructor closes up
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b) pairs.emplace_back(a, b);
        for (uint64_t mask = 0; mask < (uint64_t(1) << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> rel;
            for (size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1) rel.push_back(pairs[i]);
            FiniteSpace x(FiniteSpace::discrete(n).points(), rel);
            // closure may add pairs; only count each distinct space once is not
            // required here, duplicates just repeat the check
            CHECK(components(x).space.size() == brute_component_count(x));
            ++seen;
            if (seen > 300000) return;  // n = 4 gives 4096 masks; cap is generous
        }
    }
}

TEST_CASE("is_totally_disconnected basics") {
    CHECK(is_totally_disconnected(FiniteSpace::discrete(1)));
    CHECK(!is_totally_disconnected(FiniteSpace::sierpinski()));
    CHECK(is_totally_disconnected(FiniteSpace::discrete(3)));
}

TEST_CASE("is_extremally_disconnected basics") {
    CHECK(is_extremally_disconnected(FiniteSpace::discrete(5)));
    CHECK(!is_extremally_disconnected(FiniteSpace::sierpinski()));
    CHECK(is_extremally_disconnected(FiniteSpace::discrete(4)));
}

TEST_CASE("hom_space_count examples") {
    CHECK(hom_space_count(FiniteSpace::discrete(1), FiniteSpace::discrete(3)) == 3);
    // maps Sierpinski -> 2-point discrete: only the constants (derived by
    // enumerating the four assignments)
    CHECK(hom_space_count(FiniteSpace::sierpinski(), FiniteSpace::discrete(2)) == 2);
    CHECK(hom_space_count(FiniteSpace::discrete(2), FiniteSpace::discrete(2)) == 4);
}

TEST_CASE("fibre product over components: pullback along the identity recovers S") {
    auto s = space_of({"a", "b", "c"}, {{0, 1}});
    auto c = components(s);
    SpaceMap id{c.space, c.space, {0, 1}};
    auto fp = fibre_product_over_components(c.space, id, s);
    CHECK(homeomorphic(fp.space, s));
}

TEST_CASE("fibre product over components: two copies of Sierpinski") {
    auto s = FiniteSpace::sierpinski();
    auto c = components(s);
    REQUIRE(c.space.size() == 1);
    auto p = FiniteSpace::discrete(2);
    SpaceMap f{p, c.space, {0, 0}};
    auto fp = fibre_product_over_components(p, f, s);
    CHECK(fp.space.size() == 4);
    CHECK(homeomorphic(fp.space, s.disjoint_union(s)));
}

TEST_CASE("fibre product over components: empty P gives the empty space") {
    auto s = FiniteSpace::sierpinski();
    auto c = components(s);
    auto p = FiniteSpace::empty();
    SpaceMap f{p, c.space, {}};
    auto fp = fibre_product_over_components(p, f, s);
    CHECK(fp.space.size() == 0);
}

TEST_CASE("fibre product rejects a wrong target") {
    auto s = FiniteSpace::sierpinski();
    auto p = FiniteSpace::discrete(1);
    SpaceMap f{p, FiniteSpace::discrete(2), {0}};
    CHECK_THROWS_AS(fibre_product_over_components(p, f, s), ValidationError);
}

TEST_CASE("components is idempotent up to homeomorphism") {
    auto x = space_of({"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
    auto c = components(x);
    auto cc = components(c.space);
    CHECK(homeomorphic(c.space, cc.space));
}

TEST_CASE("components preserves surjections") {
    auto x = space_of({"a", "b", "c"}, {{0, 1}});
    auto y = FiniteSpace::sierpinski();
    SpaceMap f{x, y, {0, 1, 1}};
    REQUIRE(is_continuous(f));
    REQUIRE(is_surjective(f));
    auto pf = components_functor(f);
    CHECK(is_surjective(pf));
}

TEST_CASE("homeomorphism search respects the cap") {
    CHECK_THROWS_AS(homeomorphic(FiniteSpace::discrete(13), FiniteSpace::discrete(13)), SizeCapError);
}

TEST_CASE("quotient topology of a coequalizer-style partition") {
    // collapsing the two ends of a 3-chain a <= b <= c by {a, c} keeps the
    // quotient topology non-discrete
    auto x = space_of({"a", "b", "c"}, {{0, 1}, {1, 2}});
    auto q = quotient_space(x, {0, 1, 0}, 2);
    CHECK(q.size() == 2);
    CHECK(!q.is_discrete());
}

TEST_CASE("the open family is closed under union and intersection") {
    // exhaustively on small spaces, sampled on a 12-point space
    auto check_closure = [](const FiniteSpace& x) {
        std::vector<PointSet> opens;
        if (x.size() > 12) return true;
        for (uint64_t s = 0; s < (uint64_t(1) << x.size()); ++s) {
            PointSet sub = x.make_set();
            if (!sub.empty()) sub[0] = s;
            if (x.is_open(sub)) opens.push_back(sub);
        }
        for (const auto& a : opens)
            for (const auto& b : opens) {
                PointSet u = a, i = a;
                for (size_t k = 0; k < u.size(); ++k) {
                    u[k] |= b[k];
                    i[k] &= b[k];
                }
                if (!x.is_open(u) || !x.is_open(i)) return false;
            }
        return true;
    };
    CHECK(check_closure(FiniteSpace::sierpinski()));
    CHECK(check_closure(FiniteSpace({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {3, 1}})));
    CHECK(check_closure(FiniteSpace::discrete(6)));
    auto chain = FiniteSpace({"a", "b", "c"}, {{0, 1}, {1, 2}});
    CHECK(check_closure(chain.disjoint_union(chain).disjoint_union(chain)));
}
