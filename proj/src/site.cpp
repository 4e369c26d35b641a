#include "proetale/site.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "proetale/errors.hpp"

namespace proetale {

int obj_size(const SiteObj& o) {
    return std::visit([](const auto& v) { return v.size(); }, o);
}

bool FiniteSite::is_covering(const SiteObj& u, const SiteObj& x, const std::vector<int>& p) const {
    if (!is_morphism(u, x, p)) return false;
    std::vector<bool> hit(obj_size(x), false);
    for (int v : p) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

int FiniteSite::component_count(const SiteObj& x) const {
    auto m = component_map(x);
    return m.empty() ? 0 : 1 + *std::max_element(m.begin(), m.end());
}

std::vector<int> FiniteSite::lift(const SiteObj& w, const std::vector<int>& f, const SiteObj& u,
                                  const SiteObj& x, const std::vector<int>& p,
                                  const TieBreak& tb) const {
    if (!is_weakly_contractible(w)) throw ValidationError("lift: source is not weakly contractible");
    if (!is_covering(u, x, p)) throw ValidationError("lift: p is not a covering");
    if (!is_morphism(w, x, f)) throw ValidationError("lift: f is not a morphism");
    auto g = lift_impl(w, f, u, p, tb);
    for (int e = 0; e < obj_size(w); ++e)
        if (p[g[e]] != f[e]) throw ValidationError("lift: construction failed to commute");
    if (!is_morphism(w, u, g)) throw ValidationError("lift: construction not a morphism");
    return g;
}

namespace {
// candidate order under a tie-break policy
std::vector<int> ordered_candidates(std::vector<int> cand, const TieBreak& tb, uint64_t salt) {
    switch (tb.kind) {
        case TieBreak::least: break;
        case TieBreak::greatest: std::reverse(cand.begin(), cand.end()); break;
        case TieBreak::seeded: {
            std::mt19937_64 rng(tb.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
            std::shuffle(cand.begin(), cand.end(), rng);
            break;
        }
    }
    return cand;
}
}  // namespace

// ---------------------------------------------------------------------------
// GSetSite

SiteObj GSetSite::terminal() const {
    GSetObj o;
    o.act.assign(group_.order, std::vector<int>(1, 0));
    return o;
}

bool GSetSite::is_object(const SiteObj& x) const {
    const auto* g = std::get_if<GSetObj>(&x);
    if (!g) return false;
    if (int(g->act.size()) != group_.order) return false;
    const int n = g->size();
    for (const auto& row : g->act) {
        if (int(row.size()) != n) return false;
        std::vector<bool> seen(n, false);
        for (int v : row) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = true;
        }
    }
    // identity acts trivially, action is compatible with multiplication
    for (int e = 0; e < n; ++e)
        if (g->act[group_.identity][e] != e) return false;
    for (int a = 0; a < group_.order; ++a)
        for (int b = 0; b < group_.order; ++b)
            for (int e = 0; e < n; ++e)
                if (g->act[group_.op(a, b)][e] != g->act[a][g->act[b][e]]) return false;
    return true;
}

bool GSetSite::is_morphism(const SiteObj& x, const SiteObj& y, const std::vector<int>& f) const {
    const auto& gx = std::get<GSetObj>(x);
    const auto& gy = std::get<GSetObj>(y);
    if (int(f.size()) != gx.size()) return false;
    for (int v : f)
        if (v < 0 || v >= gy.size()) return false;
    for (int a = 0; a < group_.order; ++a)
        for (int e = 0; e < gx.size(); ++e)
            if (f[gx.act[a][e]] != gy.act[a][f[e]]) return false;
    return true;
}

bool GSetSite::is_weakly_contractible(const SiteObj& w) const {
    const auto& g = std::get<GSetObj>(w);
    for (int e = 0; e < g.size(); ++e)
        for (int a = 0; a < group_.order; ++a)
            if (a != group_.identity && g.act[a][e] == e) return false;
    return true;
}

std::vector<int> GSetSite::component_map(const SiteObj& x) const {
    const auto& g = std::get<GSetObj>(x);
    std::vector<int> id(g.size(), -1);
    int next = 0;
    for (int e = 0; e < g.size(); ++e) {
        if (id[e] >= 0) continue;
        for (int a = 0; a < group_.order; ++a) id[g.act[a][e]] = next;
        ++next;
    }
    return id;
}

CoverData GSetSite::canonical_wc_cover(const SiteObj& x) const {
    const auto& g = std::get<GSetObj>(x);
    // G x X with action on the left factor; (h, e) -> h . e
    GSetObj total;
    const int n = g.size();
    total.act.assign(group_.order, std::vector<int>(group_.order * n));
    auto enc = [&](int h, int e) { return h * n + e; };
    for (int a = 0; a < group_.order; ++a)
        for (int h = 0; h < group_.order; ++h)
            for (int e = 0; e < n; ++e) total.act[a][enc(h, e)] = enc(group_.op(a, h), e);
    std::vector<int> to_base(group_.order * n);
    for (int h = 0; h < group_.order; ++h)
        for (int e = 0; e < n; ++e) to_base[enc(h, e)] = g.act[h][e];
    return CoverData{SiteObj(std::move(total)), std::move(to_base)};
}

SiteObj GSetSite::coproduct(const std::vector<SiteObj>& parts) const {
    GSetObj out;
    out.act.assign(group_.order, {});
    int offset = 0;
    for (const auto& part : parts) {
        const auto& g = std::get<GSetObj>(part);
        for (int a = 0; a < group_.order; ++a)
            for (int e = 0; e < g.size(); ++e) out.act[a].push_back(g.act[a][e] + offset);
        offset += g.size();
    }
    return out;
}

SiteObj GSetSite::sub_object(const SiteObj& x, const std::vector<int>& keep) const {
    const auto& g = std::get<GSetObj>(x);
    std::vector<int> pos(g.size(), -1);
    for (int k = 0; k < int(keep.size()); ++k) pos[keep[k]] = k;
    GSetObj out;
    out.act.assign(group_.order, std::vector<int>(keep.size()));
    for (int a = 0; a < group_.order; ++a)
        for (int k = 0; k < int(keep.size()); ++k) {
            int img = g.act[a][keep[k]];
            if (pos[img] < 0) throw ValidationError("sub_object: subset is not action-closed");
            out.act[a][k] = pos[img];
        }
    return out;
}

SiteObj GSetSite::tuple_object(const std::vector<const SiteObj*>& slots,
                               const std::vector<std::vector<int>>& tuples) const {
    GSetObj out;
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < int(tuples.size()); ++i) index[tuples[i]] = i;
    out.act.assign(group_.order, std::vector<int>(tuples.size()));
    for (int a = 0; a < group_.order; ++a)
        for (int i = 0; i < int(tuples.size()); ++i) {
            std::vector<int> img(tuples[i].size());
            for (size_t s = 0; s < tuples[i].size(); ++s)
                img[s] = std::get<GSetObj>(*slots[s]).act[a][tuples[i][s]];
            auto it = index.find(img);
            if (it == index.end())
                throw ValidationError("tuple_object: tuple set not closed under the action");
            out.act[a][i] = it->second;
        }
    return out;
}

bool GSetSite::tuple_compatible(const std::vector<const SiteObj*>&, const std::vector<int>&) const {
    return true;  // limits of G-sets are computed on underlying sets
}

std::vector<std::vector<int>> GSetSite::enumerate_morphisms(const SiteObj& x,
                                                            const SiteObj& y) const {
    const auto& gx = std::get<GSetObj>(x);
    const auto& gy = std::get<GSetObj>(y);
    // choose images orbitwise: a representative may map to any element whose
    // stabilizer contains its own
    auto comp = component_map(x);
    int norb = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<int> rep(norb, -1);
    for (int e = gx.size() - 1; e >= 0; --e) rep[comp[e]] = e;
    auto stab = [&](const GSetObj& g, int e) {
        std::vector<bool> s(group_.order, false);
        for (int a = 0; a < group_.order; ++a) s[a] = (g.act[a][e] == e);
        return s;
    };
    std::vector<std::vector<int>> out;
    std::vector<int> cur(gx.size(), -1);
    std::function<void(int)> rec = [&](int orb) {
        if (orb == norb) {
            out.push_back(cur);
            return;
        }
        int r = rep[orb];
        auto sr = stab(gx, r);
        for (int t = 0; t < gy.size(); ++t) {
            auto st = stab(gy, t);
            bool ok = true;
            for (int a = 0; a < group_.order && ok; ++a)
                if (sr[a] && !st[a]) ok = false;
            if (!ok) continue;
            // extend equivariantly over the orbit
            bool consistent = true;
            std::vector<std::pair<int, int>> writes;
            for (int a = 0; a < group_.order; ++a) {
                int src = gx.act[a][r];
                int dst = gy.act[a][t];
                if (cur[src] >= 0 && cur[src] != dst) { consistent = false; break; }
                writes.emplace_back(src, dst);
            }
            if (!consistent) continue;
            for (auto [s, d] : writes) cur[s] = d;
            rec(orb + 1);
            for (auto [s, d] : writes) cur[s] = -1;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> GSetSite::lift_impl(const SiteObj& w, const std::vector<int>& f, const SiteObj& u,
                                     const std::vector<int>& p, const TieBreak& tb) const {
    const auto& gw = std::get<GSetObj>(w);
    const auto& gu = std::get<GSetObj>(u);
    auto comp = component_map(w);
    int norb = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<int> rep(norb, -1);
    for (int e = gw.size() - 1; e >= 0; --e) rep[comp[e]] = e;
    std::vector<int> g(gw.size(), -1);
    for (int orb = 0; orb < norb; ++orb) {
        int r = rep[orb];
        std::vector<int> cand;
        for (int t = 0; t < gu.size(); ++t)
            if (p[t] == f[r]) cand.push_back(t);
        if (cand.empty()) throw ValidationError("lift: covering misses a required fibre");
        int t = ordered_candidates(cand, tb, uint64_t(orb) + 1)[0];
        // free orbit: extension is well defined
        for (int a = 0; a < group_.order; ++a) g[gw.act[a][r]] = gu.act[a][t];
    }
    return g;
}

GSetObj GSetSite::regular() const {
    GSetObj o;
    o.act.assign(group_.order, std::vector<int>(group_.order));
    for (int a = 0; a < group_.order; ++a)
        for (int e = 0; e < group_.order; ++e) o.act[a][e] = group_.op(a, e);
    return o;
}

GSetObj GSetSite::free_orbits(int k) const {
    std::vector<SiteObj> parts(k, SiteObj(regular()));
    return std::get<GSetObj>(coproduct(parts));
}

GSetObj GSetSite::trivial(int k) const {
    GSetObj o;
    o.act.assign(group_.order, std::vector<int>(k));
    for (int a = 0; a < group_.order; ++a)
        for (int e = 0; e < k; ++e) o.act[a][e] = e;
    return o;
}

// ---------------------------------------------------------------------------
// SliceSite

SliceSite::SliceSite(int base_size) {
    for (int i = 0; i < base_size; ++i) base_.push_back("b" + std::to_string(i));
}

SiteObj SliceSite::terminal() const {
    SliceObj o;
    o.over.resize(base_.size());
    std::iota(o.over.begin(), o.over.end(), 0);
    return o;
}

bool SliceSite::is_object(const SiteObj& x) const {
    const auto* s = std::get_if<SliceObj>(&x);
    if (!s) return false;
    for (int b : s->over)
        if (b < 0 || b >= base_size()) return false;
    return true;
}

bool SliceSite::is_morphism(const SiteObj& x, const SiteObj& y, const std::vector<int>& f) const {
    const auto& sx = std::get<SliceObj>(x);
    const auto& sy = std::get<SliceObj>(y);
    if (int(f.size()) != sx.size()) return false;
    for (int e = 0; e < sx.size(); ++e) {
        if (f[e] < 0 || f[e] >= sy.size()) return false;
        if (sy.over[f[e]] != sx.over[e]) return false;
    }
    return true;
}

std::vector<int> SliceSite::component_map(const SiteObj& x) const {
    std::vector<int> id(obj_size(x));
    std::iota(id.begin(), id.end(), 0);
    return id;
}

CoverData SliceSite::canonical_wc_cover(const SiteObj& x) const {
    std::vector<int> id(obj_size(x));
    std::iota(id.begin(), id.end(), 0);
    return CoverData{x, id};
}

SiteObj SliceSite::coproduct(const std::vector<SiteObj>& parts) const {
    SliceObj out;
    for (const auto& part : parts) {
        const auto& s = std::get<SliceObj>(part);
        for (int b : s.over) out.over.push_back(b);
    }
    return out;
}

SiteObj SliceSite::sub_object(const SiteObj& x, const std::vector<int>& keep) const {
    const auto& s = std::get<SliceObj>(x);
    SliceObj out;
    for (int k : keep) out.over.push_back(s.over[k]);
    return out;
}

SiteObj SliceSite::tuple_object(const std::vector<const SiteObj*>& slots,
                                const std::vector<std::vector<int>>& tuples) const {
    SliceObj out;
    for (const auto& t : tuples) {
        if (t.empty()) throw ValidationError("tuple_object: empty slot list over a slice site");
        int b = std::get<SliceObj>(*slots[0]).over[t[0]];
        for (size_t s = 1; s < t.size(); ++s)
            if (std::get<SliceObj>(*slots[s]).over[t[s]] != b)
                throw ValidationError("tuple_object: tuple crosses base fibres");
        out.over.push_back(b);
    }
    return out;
}

bool SliceSite::tuple_compatible(const std::vector<const SiteObj*>& slots,
                                 const std::vector<int>& partial) const {
    if (partial.size() <= 1) return true;
    int b = std::get<SliceObj>(*slots[0]).over[partial[0]];
    int last = int(partial.size()) - 1;
    return std::get<SliceObj>(*slots[last]).over[partial[last]] == b;
}

std::vector<std::vector<int>> SliceSite::enumerate_morphisms(const SiteObj& x,
                                                             const SiteObj& y) const {
    const auto& sx = std::get<SliceObj>(x);
    const auto& sy = std::get<SliceObj>(y);
    std::vector<std::vector<int>> fibre(base_size());
    for (int e = 0; e < sy.size(); ++e) fibre[sy.over[e]].push_back(e);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(sx.size());
    std::function<void(int)> rec = [&](int e) {
        if (e == sx.size()) {
            out.push_back(cur);
            return;
        }
        for (int t : fibre[sx.over[e]]) {
            cur[e] = t;
            rec(e + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<int> SliceSite::lift_impl(const SiteObj& w, const std::vector<int>& f, const SiteObj&,
                                      const std::vector<int>& p, const TieBreak& tb) const {
    const auto& sw = std::get<SliceObj>(w);
    std::vector<int> g(sw.size());
    for (int e = 0; e < sw.size(); ++e) {
        std::vector<int> cand;
        for (int t = 0; t < int(p.size()); ++t)
            if (p[t] == f[e]) cand.push_back(t);
        if (cand.empty()) throw ValidationError("lift: covering misses a required fibre");
        g[e] = ordered_candidates(cand, tb, uint64_t(e) + 1)[0];
    }
    return g;
}

// ---------------------------------------------------------------------------

CoverData normalize_covering_family(const FiniteSite& site, const CoveringFamily& family,
                                    const SiteObj& target) {
    if (family.parts.size() != family.maps.size())
        throw ValidationError("normalize_covering_family: shape mismatch");
    CoverData out;
    out.total = site.coproduct(family.parts);
    for (size_t i = 0; i < family.parts.size(); ++i) {
        if (!site.is_morphism(family.parts[i], target, family.maps[i]))
            throw ValidationError("normalize_covering_family: member is not a morphism");
        for (int v : family.maps[i]) out.map.push_back(v);
    }
    return out;
}

FibreProductData site_fibre_product(const FiniteSite& site, const SiteObj& x, const SiteObj& y,
                                    const SiteObj& z, const std::vector<int>& f,
                                    const std::vector<int>& g) {
    if (!site.is_morphism(x, z, f) || !site.is_morphism(y, z, g))
        throw ValidationError("site_fibre_product: legs are not morphisms");
    FibreProductData out;
    std::vector<std::vector<int>> tuples;
    for (int a = 0; a < obj_size(x); ++a)
        for (int b = 0; b < obj_size(y); ++b)
            if (f[a] == g[b]) tuples.push_back({a, b});
    std::vector<const SiteObj*> slots{&x, &y};
    out.total = site.tuple_object(slots, tuples);
    for (const auto& t : tuples) {
        out.pairs.emplace_back(t[0], t[1]);
        out.to_x.push_back(t[0]);
        out.to_y.push_back(t[1]);
    }
    return out;
}

}  // namespace proetale
