#include <doctest.h>

#include <map>
#include <random>

#include "proetale/homotopies.hpp"

using namespace proetale;

namespace {

// cosk_0 tower on a vertex set of the given size
TruncSimp vertex_tower(int vertices, int d) {
    TruncSimp pts(0);
    pts.set_level_size(0, vertices);
    return coskeleton(pts, 0, d).object;
}

// Reduced homotopy into a 0-coskeletal target by vertex interpolation: the
// i-th stage applies g on the first i vertex coordinates and f on the rest.
ReducedHomotopy vertex_interpolation(const TruncSimp& x, const TruncSimp& y, int yverts,
                                     const std::vector<int>& f0, const std::vector<int>& g0) {
    // vertex v of an n-simplex via the composite of faces
    auto vertex = [&](int n, int e, int v) {
        DeltaMap inc{0, n, {v}};
        return x.act(inc, e);
    };
    CoskResult yck;  // rebuild the family index of y's levels
    TruncSimp pts(0);
    pts.set_level_size(0, yverts);
    yck = coskeleton(pts, 0, y.dim());
    ReducedHomotopy rh;
    rh.r.resize(x.dim() + 1);
    std::vector<std::map<std::vector<int>, int>> yindex(y.dim() + 1);
    for (int n = 1; n <= y.dim(); ++n)
        for (int i = 0; i < int(yck.family[n].size()); ++i) yindex[n][yck.family[n][i]] = i;
    auto tuple_index = [&](int n, const std::vector<int>& t) {
        if (n == 0) return t[0];
        return yindex[n].at(t);
    };
    for (int n = 0; n <= x.dim(); ++n) {
        rh.r[n].assign(n + 2, std::vector<int>(x.level_size(n)));
        for (int i = 0; i <= n + 1; ++i)
            for (int e = 0; e < x.level_size(n); ++e) {
                std::vector<int> t(n + 1);
                for (int v = 0; v <= n; ++v)
                    t[v] = v < i ? g0[vertex(n, e, v)] : f0[vertex(n, e, v)];
                rh.r[n][i][e] = tuple_index(n, t);
            }
        rh.f.level.push_back(rh.r[n][0]);
        rh.g.level.push_back(rh.r[n][n + 1]);
    }
    return rh;
}

}  // namespace

TEST_CASE("constant family is a reduced homotopy") {
    auto x = standard_simplex(1, 2);
    auto id = identity_map(x);
    auto rh = ReducedHomotopy::constant(x, id);
    CHECK(check_reduced_homotopy(x, x, rh).ok);
}

TEST_CASE("a corrupted degeneracy identity is reported with indices") {
    auto x = standard_simplex(1, 2);
    auto rh = ReducedHomotopy::constant(x, identity_map(x));
    rh.r[1][1][0] = (rh.r[1][1][0] + 1) % x.level_size(1);
    auto rep = check_reduced_homotopy(x, x, rh);
    CHECK(!rep.ok);
    CHECK(rep.diagnostic.find("(") != std::string::npos);
}

TEST_CASE("vertex interpolation gives valid reduced homotopies") {
    auto x = standard_simplex(2, 3);
    auto y = vertex_tower(2, 3);
    std::vector<int> f0 = {0, 0, 1};
    std::vector<int> g0 = {1, 0, 1};
    auto rh = vertex_interpolation(x, y, 2, f0, g0);
    CHECK(validate_map(x, y, rh.f).ok);
    CHECK(validate_map(x, y, rh.g).ok);
    CHECK(check_reduced_homotopy(x, y, rh).ok);
}

TEST_CASE("reduced_to_homotopy: endpoints recover f and g") {
    auto x = standard_simplex(1, 2);
    auto y = vertex_tower(2, 2);
    auto rh = vertex_interpolation(x, y, 2, {0, 1}, {1, 1});
    auto h = reduced_to_homotopy(x, y, rh);
    CHECK(check_homotopy(x, y, h).ok);
    auto prod = product_with_interval(x);
    CHECK(compose(prod.include_f, h.h) == rh.f);
    CHECK(compose(prod.include_g, h.h) == rh.g);
}

TEST_CASE("constant reduced homotopy converts to the projection homotopy") {
    auto x = standard_simplex(1, 1);
    auto id = identity_map(x);
    auto rh = ReducedHomotopy::constant(x, id);
    auto h = reduced_to_homotopy(x, x, rh);
    auto prod = product_with_interval(x);
    CHECK(h.h == prod.project);
}

TEST_CASE("round trip reduced <-> homotopy on enumerated instances up to dim 3") {
    std::vector<std::pair<TruncSimp, int>> xs;
    xs.emplace_back(standard_simplex(1, 3), 0);
    xs.emplace_back(standard_simplex(2, 3), 0);
    xs.emplace_back(constant_object(2, 3), 0);
    std::vector<int> yv = {2, 3};
    long long total = 0;
    for (const auto& [x, unused] : xs) {
        (void)unused;
        for (int v : yv) {
            auto y = vertex_tower(v, 3);
            if (x.level_size(3) > 8 || y.level_size(3) > 8) {
                // cap: instances up to 8 simplices per level participate fully
            }
            auto maps0 = enumerate_simp_maps(skeleton(x, 0), skeleton(y, 0));
            for (const auto& f0 : maps0)
                for (const auto& g0 : maps0) {
                    auto rh = vertex_interpolation(x, y, v, f0.level[0], g0.level[0]);
                    REQUIRE(check_reduced_homotopy(x, y, rh).ok);
                    auto h = reduced_to_homotopy(x, y, rh);
                    auto back = homotopy_to_reduced(x, y, h);
                    CHECK(back.r == rh.r);
                    auto h2 = reduced_to_homotopy(x, y, back);
                    CHECK(h2.h == h.h);
                    ++total;
                }
        }
    }
    CHECK(total > 50);
}

TEST_CASE("all reduced homotopies on a small instance round trip") {
    auto x = standard_simplex(1, 2);
    auto y = vertex_tower(2, 2);
    auto maps = enumerate_simp_maps(x, y);
    REQUIRE(maps.size() > 1);
    int found = 0;
    for (size_t a = 0; a < maps.size(); ++a)
        for (size_t b = 0; b < maps.size(); ++b) {
            auto rhs = enumerate_reduced_homotopies(x, y, maps[a], maps[b]);
            for (const auto& rh : rhs) {
                auto h = reduced_to_homotopy(x, y, rh);
                auto back = homotopy_to_reduced(x, y, h);
                CHECK(back.r == rh.r);
                ++found;
            }
        }
    CHECK(found > 0);
}

TEST_CASE("extension of a constant family is constant") {
    auto x = standard_simplex(1, 1);
    auto rh = ReducedHomotopy::constant(x, identity_map(x));
    auto ext = extend_reduced_homotopy(x, x, rh);
    CHECK(check_reduced_homotopy(ext.cx, ext.cy, ext.rh).ok);
    for (int i = 0; i <= 2 + 1; ++i) CHECK(ext.rh.r[2][i] == ext.rh.r[2][0]);
}

TEST_CASE("0-truncated extension acts coordinatewise on vertex pairs") {
    // maps into the 0-coskeleton of a 2-element set; by hand the middle stage
    // sends a pair (a, b) to (g(a), f(b))
    TruncSimp x(0);
    x.set_level_size(0, 2);
    TruncSimp y(0);
    y.set_level_size(0, 2);
    SimpMap f{{std::vector<int>{0, 0}}};
    SimpMap g{{std::vector<int>{1, 1}}};
    ReducedHomotopy rh;
    rh.f = f;
    rh.g = g;
    rh.r = {{f.level[0], g.level[0]}};
    auto ext = extend_reduced_homotopy(x, y, rh);
    // level 1 of the coskeleton: families over the two vertex slots, slot 0 =
    // vertex 0, slot 1 = vertex 1
    REQUIRE(ext.cx.level_size(1) == 4);
    for (int e = 0; e < 4; ++e) {
        auto fam = ext.cx_data.family[1][e];
        std::vector<int> expect = {g.level[0][fam[0]], f.level[0][fam[1]]};
        CHECK(ext.cy_data.family[1][ext.rh.r[1][1][e]] == expect);
    }
}

TEST_CASE("extension property on seeded interpolation instances") {
    // 100 seeded instances: truncate a valid family, extend on the coskeleta,
    // and re-check all identities one level up
    std::mt19937_64 rng(20240811);
    int done = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int xv = 1 + int(rng() % 3);
        int yv = 1 + int(rng() % 3);
        int n = 1 + int(rng() % 2);
        auto x = vertex_tower(xv, n);
        auto y = vertex_tower(yv, n);
        std::vector<int> f0(xv), g0(xv);
        for (int i = 0; i < xv; ++i) {
            f0[i] = int(rng() % yv);
            g0[i] = int(rng() % yv);
        }
        auto rh = vertex_interpolation(x, y, yv, f0, g0);
        REQUIRE(check_reduced_homotopy(x, y, rh).ok);
        auto ext = extend_reduced_homotopy(x, y, rh);
        CHECK(check_reduced_homotopy(ext.cx, ext.cy, ext.rh).ok);
        ++done;
    }
    CHECK(done == 100);
}
