#include <doctest.h>

#include "proetale/hypercover.hpp"
#include "proetale/space_simp.hpp"

using namespace proetale;

namespace {
Hypercovering cech_regular(const GSetSite& site, int d, int orbits = 1) {
    SiteObj v = SiteObj(site.free_orbits(orbits));
    std::vector<int> aug(obj_size(v), 0);
    return cech_hypercovering(site, v, aug, d);
}
}  // namespace

TEST_CASE("cech tower of a covering is a hypercovering") {
    GSetSite site(cyclic_group(2));
    auto h = cech_regular(site, 3);
    CHECK(check_hypercovering(site, h).ok);
    CHECK(h.shape.level_size(0) == 2);
    CHECK(h.shape.level_size(1) == 4);
    CHECK(h.shape.level_size(2) == 8);
    CHECK(h.shape.level_size(3) == 16);
    CHECK(is_split_wc(site, h));
}

TEST_CASE("cech tower over a slice site keeps fibres separate") {
    SliceSite site(2);
    SliceObj v;
    v.over = {0, 0, 1};
    auto h = cech_hypercovering(site, SiteObj(v), {0, 0, 1}, 2);
    CHECK(check_hypercovering(site, h).ok);
    CHECK(h.shape.level_size(1) == 5);  // 2^2 over b0 plus 1 over b1
    CHECK(is_split_wc(site, h));
}

TEST_CASE("constant object on a non-covering fails the hypercovering check") {
    SliceSite site(2);
    SliceObj v;
    v.over = {0};  // misses the second base point
    Hypercovering h;
    h.shape = constant_object(1, 2);
    h.level_obj.assign(3, SiteObj(v));
    h.augmentation = {0};
    auto rep = check_hypercovering(site, h);
    CHECK(!rep.ok);
    CHECK(rep.diagnostic.find("augmentation") != std::string::npos);
}

TEST_CASE("a level replaced by a proper subobject fails with a level diagnostic") {
    GSetSite site(cyclic_group(2));
    auto h = cech_regular(site, 2);
    // keep only the degenerate part of level 2 (a proper subobject)
    auto sl = split_levels(h.shape);
    std::vector<int> keep;
    for (int e = 0; e < h.shape.level_size(2); ++e)
        if (sl[2].nondeg_pos[e] < 0) keep.push_back(e);
    std::vector<int> pos(h.shape.level_size(2), -1);
    for (int i = 0; i < int(keep.size()); ++i) pos[keep[i]] = i;
    Hypercovering bad = h;
    bad.level_obj[2] = site.sub_object(h.level_obj[2], keep);
    bad.shape.set_level_size(2, int(keep.size()));
    for (int j = 0; j <= 2; ++j) {
        std::vector<int> nf;
        for (int k : keep) nf.push_back(h.shape.face(2, j)[k]);
        bad.shape.face(2, j) = nf;
    }
    for (int j = 0; j <= 1; ++j) {
        std::vector<int> nd;
        for (int e = 0; e < h.shape.level_size(1); ++e) {
            int img = pos[h.shape.degen(1, j)[e]];
            REQUIRE(img >= 0);  // degenerate simplices survive
            nd.push_back(img);
        }
        bad.shape.degen(1, j) = nd;
    }
    auto rep = check_hypercovering(site, bad);
    CHECK(!rep.ok);
    CHECK(rep.diagnostic.find("level 2") != std::string::npos);
}

TEST_CASE("refine_to_split_wc on the constant terminal tower over Z/2") {
    GSetSite site(cyclic_group(2));
    auto h = constant_terminal_hypercovering(site, 2);
    auto ref = refine_to_split_wc(site, h, 2);
    CHECK(ref.w.shape.level_size(0) == 2);  // level 0 forced to the canonical cover G
    CHECK(check_hypercovering(site, ref.w).ok);
    CHECK(is_split_wc(site, ref.w));
    for (int n = 0; n <= 2; ++n) CHECK(site.is_weakly_contractible(ref.w.level_obj[n]));
    CHECK(validate_map(ref.w.shape, h.shape, ref.to_input).ok);
}

TEST_CASE("refine_to_split_wc of an already split wc tower still maps onto it") {
    GSetSite site(cyclic_group(2));
    auto h = cech_regular(site, 1);
    auto ref = refine_to_split_wc(site, h, 1);
    CHECK(check_hypercovering(site, ref.w).ok);
    CHECK(is_split_wc(site, ref.w));
    // augmentation-compatible surjection onto the input at level 0
    std::vector<bool> hit(h.shape.level_size(0), false);
    for (int e = 0; e < ref.w.shape.level_size(0); ++e) hit[ref.to_input.level[0][e]] = true;
    for (bool b : hit) CHECK(b);
}

TEST_CASE("refine over a slice site uses identity-like covers") {
    SliceSite site(3);
    auto h = constant_terminal_hypercovering(site, 2);
    auto ref = refine_to_split_wc(site, h, 2);
    CHECK(check_hypercovering(site, ref.w).ok);
    CHECK(is_split_wc(site, ref.w));
    CHECK(ref.w.shape.level_size(0) == 3);
}

TEST_CASE("refine propagates the basepoint when a preimage exists") {
    GSetSite site(cyclic_group(2));
    auto h = constant_terminal_hypercovering(site, 1);
    h.basepoint = 0;
    auto ref = refine_to_split_wc(site, h, 1);
    REQUIRE(ref.w.basepoint.has_value());
    CHECK(ref.to_input.level[0][*ref.w.basepoint] == 0);
}

TEST_CASE("map_from_split_wc onto the constant terminal tower collapses everything") {
    GSetSite site(cyclic_group(2));
    auto w = cech_regular(site, 2);
    auto u = constant_terminal_hypercovering(site, 2);
    auto f = map_from_split_wc(site, w, u);
    for (int n = 0; n <= 2; ++n)
        for (int v : f.level[n]) CHECK(v == 0);
}

TEST_CASE("map_from_split_wc to itself gives a valid endomorphism") {
    GSetSite site(cyclic_group(2));
    auto w = cech_regular(site, 2);
    auto f = map_from_split_wc(site, w, w);
    CHECK(validate_map(w.shape, w.shape, f).ok);
}

TEST_CASE("map_from_split_wc between different towers exists and validates") {
    GSetSite site(cyclic_group(2));
    auto w = cech_regular(site, 2);
    auto u = cech_regular(site, 2, 2);  // free on two generators
    auto f = map_from_split_wc(site, w, u);
    CHECK(validate_map(w.shape, u.shape, f).ok);
    auto g = map_from_split_wc(site, u, w);
    CHECK(validate_map(u.shape, w.shape, g).ok);
}

TEST_CASE("homotopy_between accepts equal maps with a constant-looking family") {
    GSetSite site(cyclic_group(2));
    auto w = cech_regular(site, 2);
    auto f = map_from_split_wc(site, w, w);
    auto rh = homotopy_between(site, w, w, f, f);
    CHECK(check_reduced_homotopy(w.shape, w.shape, rh).ok);
}

TEST_CASE("maps from different tie-break orders are reduced-homotopic") {
    GSetSite site(cyclic_group(2));
    auto w = cech_regular(site, 3);
    auto u = cech_regular(site, 3, 2);
    auto f = map_from_split_wc(site, w, u, TieBreak::Least());
    auto g = map_from_split_wc(site, w, u, TieBreak::Greatest());
    CHECK(f.level != g.level);
    auto rh = homotopy_between(site, w, u, f, g);
    CHECK(check_reduced_homotopy(w.shape, u.shape, rh).ok);
}

TEST_CASE("endomorphisms of the constant tower on a wc cover are the identity") {
    // over a slice site the terminal tower is split wc; all self-maps built by
    // lifting are the identity
    SliceSite site(2);
    auto w = constant_terminal_hypercovering(site, 2);
    REQUIRE(is_split_wc(site, w));
    auto f = map_from_split_wc(site, w, w, TieBreak::Least());
    auto g = map_from_split_wc(site, w, w, TieBreak::Greatest());
    CHECK(f == identity_map(w.shape));
    CHECK(g == identity_map(w.shape));
}

TEST_CASE("random hypercoverings are valid hypercoverings") {
    GSetSite gsite(cyclic_group(2));
    SliceSite ssite(3);
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto hg = random_hypercovering(gsite, 2, seed);
        CHECK(check_hypercovering(gsite, hg).ok);
        auto hs = random_hypercovering(ssite, 2, seed);
        CHECK(check_hypercovering(ssite, hs).ok);
    }
}

TEST_CASE("certify_equivalence bundles maps and homotopies both ways") {
    GSetSite site(cyclic_group(2));
    auto w = cech_regular(site, 2);
    auto v = cech_regular(site, 2, 2);
    auto cert = certify_equivalence(site, w, v);
    CHECK(validate_map(w.shape, v.shape, cert.forward).ok);
    CHECK(validate_map(v.shape, w.shape, cert.backward).ok);
    CHECK(check_reduced_homotopy(w.shape, w.shape, cert.on_w).ok);
    CHECK(check_reduced_homotopy(v.shape, v.shape, cert.on_v).ok);
}

TEST_CASE("equivalence certificates descend to the component level") {
    // two split wc hypercoverings of the same site have simplicially
    // homotopy equivalent component objects, certified
    GSetSite site(cyclic_group(2));
    auto w = cech_regular(site, 2);
    auto v = cech_regular(site, 2, 2);
    auto cert = certify_equivalence(site, w, v);
    auto pw = pi_of_hypercovering(site, w);
    auto pv = pi_of_hypercovering(site, v);
    auto descend_map = [&](const Hypercovering& a, const TruncSimp& pa, const Hypercovering& b,
                           const TruncSimp& pb, const SimpMap& f) {
        SimpMap out;
        for (int n = 0; n <= a.dim(); ++n) {
            auto ca = site.component_map(a.level_obj[n]);
            auto cb = site.component_map(b.level_obj[n]);
            std::vector<int> lvl(pa.level_size(n), -1);
            for (int e = 0; e < a.shape.level_size(n); ++e) lvl[ca[e]] = cb[f.level[n][e]];
            out.level.push_back(std::move(lvl));
        }
        (void)pb;
        return out;
    };
    auto pf = descend_map(w, pw.shape, v, pv.shape, cert.forward);
    auto pb = descend_map(v, pv.shape, w, pw.shape, cert.backward);
    CHECK(validate_map(pw.shape, pv.shape, pf).ok);
    CHECK(validate_map(pv.shape, pw.shape, pb).ok);
    // the reduced homotopies descend family-wise
    ReducedHomotopy on_w;
    on_w.f = compose(pf, pb);
    on_w.g = identity_map(pw.shape);
    on_w.r.resize(w.dim() + 1);
    for (int n = 0; n <= w.dim(); ++n) {
        auto ca = site.component_map(w.level_obj[n]);
        on_w.r[n].assign(n + 2, std::vector<int>(pw.shape.level_size(n), -1));
        for (int i = 0; i <= n + 1; ++i)
            for (int e = 0; e < w.shape.level_size(n); ++e)
                on_w.r[n][i][ca[e]] = ca[cert.on_w.r[n][i][e]];
    }
    CHECK(check_reduced_homotopy(pw.shape, pw.shape, on_w).ok);
}
