#include "proetale/hypercover.hpp"

#include <algorithm>
#include <map>

namespace proetale {

namespace {

std::vector<const SiteObj*> cosk_slots(const SiteObj& level_obj, int n, int m) {
    return std::vector<const SiteObj*>(injections(n, m).size(), &level_obj);
}

std::function<bool(int, const std::vector<int>&)> site_constraint(
    const FiniteSite& site, std::vector<const SiteObj*> slots) {
    return [&site, slots = std::move(slots)](int, const std::vector<int>& partial) {
        return site.tuple_compatible(slots, partial);
    };
}

std::map<std::vector<int>, int> family_index(const std::vector<std::vector<int>>& fams) {
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < int(fams.size()); ++i) idx[fams[i]] = i;
    return idx;
}

// per-slot missing vertex for injections(m-1, m)
std::vector<int> missing_vertices(int m) {
    auto slots = injections(m - 1, m);
    std::vector<int> missing(slots.size());
    for (size_t s = 0; s < slots.size(); ++s) {
        std::vector<bool> hit(m + 1, false);
        for (int v : slots[s].assignment) hit[v] = true;
        for (int v = 0; v <= m; ++v)
            if (!hit[v]) missing[s] = v;
    }
    return missing;
}

TruncSimp extend_dim(const TruncSimp& x, int newdim) {
    TruncSimp y(newdim);
    for (int n = 0; n <= x.dim(); ++n) y.set_level_size(n, x.level_size(n));
    for (int n = 1; n <= x.dim(); ++n)
        for (int j = 0; j <= n; ++j) y.face(n, j) = x.face(n, j);
    for (int n = 0; n < x.dim(); ++n)
        for (int j = 0; j <= n; ++j) y.degen(n, j) = x.degen(n, j);
    return y;
}

}  // namespace

SiteCosk site_coskeleton_level(const FiniteSite& site, const Hypercovering& h, int n,
                               long long family_cap) {
    SiteCosk out;
    auto slots = cosk_slots(h.level_obj[n], n, n + 1);
    out.data = coskeleton(h.shape, n, n + 1, site_constraint(site, slots), family_cap);
    out.level_object = site.tuple_object(slots, out.data.family[n + 1]);
    if (h.dim() >= n + 1) out.comparison = out.data.unit.level[n + 1];
    return out;
}

ValidationReport check_hypercovering(const FiniteSite& site, const Hypercovering& h) {
    if (auto v = validate(h.shape); !v.ok) return {false, "shape: " + v.diagnostic};
    if (int(h.level_obj.size()) != h.dim() + 1) return {false, "level structure count mismatch"};
    for (int n = 0; n <= h.dim(); ++n) {
        if (!site.is_object(h.level_obj[n]))
            return {false, "level " + std::to_string(n) + " is not a site object"};
        if (obj_size(h.level_obj[n]) != h.shape.level_size(n))
            return {false, "level " + std::to_string(n) + " size mismatch with structure"};
    }
    for (int n = 1; n <= h.dim(); ++n)
        for (int j = 0; j <= n; ++j)
            if (!site.is_morphism(h.level_obj[n], h.level_obj[n - 1], h.shape.face(n, j)))
                return {false, "face " + std::to_string(j) + " at level " + std::to_string(n) +
                                   " is not a site morphism"};
    for (int n = 0; n < h.dim(); ++n)
        for (int j = 0; j <= n; ++j)
            if (!site.is_morphism(h.level_obj[n], h.level_obj[n + 1], h.shape.degen(n, j)))
                return {false, "degeneracy " + std::to_string(j) + " at level " + std::to_string(n) +
                                   " is not a site morphism"};
    if (!site.is_covering(h.level_obj[0], site.terminal(), h.augmentation))
        return {false, "augmentation is not a covering"};
    for (int n = 0; n < h.dim(); ++n) {
        SiteCosk ck = site_coskeleton_level(site, h, n);
        if (!site.is_covering(h.level_obj[n + 1], ck.level_object, ck.comparison))
            return {false, "comparison map at level " + std::to_string(n + 1) +
                               " is not a covering"};
    }
    if (h.basepoint && (h.shape.level_size(0) == 0 || *h.basepoint < 0 ||
                        *h.basepoint >= h.shape.level_size(0)))
        return {false, "basepoint out of range"};
    return {};
}

std::vector<SplitLevel> split_levels(const TruncSimp& shape) {
    std::vector<SplitLevel> out(shape.dim() + 1);
    for (int n = 0; n <= shape.dim(); ++n) {
        auto items = nondegenerate_decomposition(shape, n);
        SplitLevel& sl = out[n];
        sl.nondeg_pos.assign(shape.level_size(n), -1);
        for (int e = 0; e < shape.level_size(n); ++e) {
            if (items[e].nondegenerate) {
                sl.nondeg_pos[e] = int(sl.nondeg.size());
                sl.nondeg.push_back(e);
            }
            sl.pres.emplace_back(items[e].epi, items[e].base_index);
        }
    }
    return out;
}

bool is_split_wc(const FiniteSite& site, const Hypercovering& h) {
    auto sl = split_levels(h.shape);
    for (int n = 0; n <= h.dim(); ++n) {
        SiteObj nd = site.sub_object(h.level_obj[n], sl[n].nondeg);
        if (!site.is_weakly_contractible(nd)) return false;
    }
    return true;
}

Refinement refine_to_split_wc(const FiniteSite& site, const Hypercovering& h, int d,
                              int level_cap) {
    if (d > h.dim()) throw ValidationError("refine_to_split_wc: requested dimension above input");
    Refinement out;
    // level 0
    CoverData c0 = site.canonical_wc_cover(h.level_obj[0]);
    TruncSimp wshape(0);
    wshape.set_level_size(0, obj_size(c0.total));
    std::vector<SiteObj> level_obj{c0.total};
    SimpMap phi;
    phi.level.push_back(c0.map);
    // presentations: level 0 is entirely nondegenerate
    std::vector<std::vector<std::pair<DeltaMap, int>>> pres(1);
    std::vector<std::vector<int>> nondeg(1);
    std::vector<SiteObj> ndobj{c0.total};
    for (int e = 0; e < wshape.level_size(0); ++e) {
        pres[0].emplace_back(delta_identity(0), e);
        nondeg[0].push_back(e);
    }
    if (wshape.level_size(0) > level_cap) throw SizeCapError("refine: level 0 exceeds cap");

    for (int m = 1; m <= d; ++m) {
        Hypercovering wpartial{wshape, level_obj, {}, std::nullopt};
        SiteCosk ck_w = site_coskeleton_level(site, wpartial, m - 1);
        SiteCosk ck_h = site_coskeleton_level(site, h, m - 1);
        auto idx_h = family_index(ck_h.data.family[m]);
        // cosk_{m-1}(phi) at level m
        std::vector<int> cosk_phi(ck_w.data.family[m].size());
        for (size_t i = 0; i < ck_w.data.family[m].size(); ++i) {
            std::vector<int> img(ck_w.data.family[m][i].size());
            for (size_t s = 0; s < img.size(); ++s)
                img[s] = phi.level[m - 1][ck_w.data.family[m][i][s]];
            auto it = idx_h.find(img);
            if (it == idx_h.end())
                throw ValidationError("refine: image family incompatible (broken input?)");
            cosk_phi[i] = it->second;
        }
        // F = H_m x_{cosk H} cosk W, then its canonical wc cover
        FibreProductData f = site_fibre_product(site, h.level_obj[m], ck_w.level_object,
                                                ck_h.level_object, ck_h.comparison, cosk_phi);
        CoverData nc = site.canonical_wc_cover(f.total);
        const int nsize = obj_size(nc.total);
        std::vector<int> att(nsize), to_h(nsize);
        for (int e = 0; e < nsize; ++e) {
            att[e] = f.to_y[nc.map[e]];
            to_h[e] = f.to_x[nc.map[e]];
        }

        // assemble the split level: degenerate blocks (k asc, epi lex) then N
        struct Block {
            DeltaMap epi;
            int k;
        };
        std::vector<Block> blocks;
        for (int k = 0; k < m; ++k)
            for (const auto& epi : surjections(m, k)) blocks.push_back({epi, k});
        std::map<std::pair<std::vector<int>, int>, int> elem_index;
        std::vector<std::pair<DeltaMap, int>> mpres;
        std::vector<SiteObj> parts;
        for (const auto& b : blocks) {
            parts.push_back(ndobj[b.k]);
            for (int z : nondeg[b.k]) {
                elem_index[{b.epi.assignment, z}] = int(mpres.size());
                mpres.emplace_back(b.epi, z);
            }
        }
        parts.push_back(nc.total);
        const int n_offset = int(mpres.size());
        for (int z = 0; z < nsize; ++z) {
            elem_index[{delta_identity(m).assignment, n_offset + z}] = int(mpres.size());
            mpres.emplace_back(delta_identity(m), n_offset + z);
        }
        const int msize = int(mpres.size());
        if (msize > level_cap)
            throw SizeCapError("refine: level " + std::to_string(m) + " exceeds cap (" +
                               std::to_string(msize) + " > " + std::to_string(level_cap) + ")");

        TruncSimp next = extend_dim(wshape, m);
        next.set_level_size(m, msize);
        // degeneracies into level m
        for (int j = 0; j <= m - 1; ++j) {
            auto& t = next.degen(m - 1, j);
            t.resize(wshape.level_size(m - 1));
            for (int e = 0; e < wshape.level_size(m - 1); ++e) {
                const auto& [tau, z] = pres[m - 1][e];
                DeltaMap comp = delta_compose(delta_degeneracy(m - 1, j), tau);
                auto it = elem_index.find({comp.assignment, z});
                if (it == elem_index.end()) throw ValidationError("refine: degeneracy lookup failed");
                t[e] = it->second;
            }
        }
        // faces out of level m
        auto slots_w = injections(m - 1, m);
        auto missing = missing_vertices(m);
        std::vector<int> slot_of_face(m + 1);
        for (size_t s = 0; s < slots_w.size(); ++s) slot_of_face[missing[s]] = int(s);
        std::map<std::pair<std::vector<int>, int>, int> prev_index;
        for (int e = 0; e < wshape.level_size(m - 1); ++e)
            prev_index[{pres[m - 1][e].first.assignment, pres[m - 1][e].second}] = e;
        for (int j = 0; j <= m; ++j) {
            auto& t = next.face(m, j);
            t.resize(msize);
            for (int e = 0; e < msize; ++e) {
                const auto& [sigma, z] = mpres[e];
                if (sigma.is_identity()) {
                    // nondegenerate: faces come from the attaching family
                    int fam = att[z - n_offset];
                    t[e] = ck_w.data.family[m][fam][slot_of_face[j]];
                } else {
                    DeltaMap beta = delta_compose(delta_face(m, j), sigma);
                    auto em = delta_factor(beta);
                    int val = wshape.act(em.mono, z);
                    const auto& [tau2, z2] = pres[em.mono.src][val];
                    DeltaMap whole = delta_compose(em.epi, tau2);
                    auto it = prev_index.find({whole.assignment, z2});
                    if (it == prev_index.end()) throw ValidationError("refine: face lookup failed");
                    t[e] = it->second;
                }
            }
        }

        // morphism to the input at level m
        std::vector<int> phim(msize);
        for (int e = 0; e < msize; ++e) {
            const auto& [sigma, z] = mpres[e];
            if (sigma.is_identity()) phim[e] = to_h[z - n_offset];
            else phim[e] = h.shape.act(sigma, phi.level[sigma.dst][z]);
        }
        phi.level.push_back(std::move(phim));

        // bookkeeping for the next round
        wshape = std::move(next);
        level_obj.push_back(site.coproduct(parts));
        pres.push_back(mpres);
        std::vector<int> nd;
        for (int e = 0; e < msize; ++e)
            if (mpres[e].first.is_identity()) nd.push_back(e);
        nondeg.push_back(nd);
        ndobj.push_back(nc.total);
    }

    out.w.shape = std::move(wshape);
    out.w.level_obj = std::move(level_obj);
    out.w.augmentation.resize(out.w.shape.level_size(0));
    for (int e = 0; e < out.w.shape.level_size(0); ++e)
        out.w.augmentation[e] = h.augmentation[phi.level[0][e]];
    if (h.basepoint) {
        for (int e = 0; e < out.w.shape.level_size(0); ++e)
            if (phi.level[0][e] == *h.basepoint) {
                out.w.basepoint = e;
                break;
            }
    }
    out.to_input = std::move(phi);

    if (auto v = validate(out.w.shape); !v.ok)
        throw ValidationError("refine: produced shape invalid: " + v.diagnostic);
    Hypercovering htr = h;
    if (h.dim() > d) {
        htr.shape = skeleton(h.shape, d);
        htr.level_obj.assign(h.level_obj.begin(), h.level_obj.begin() + d + 1);
    }
    if (auto v = validate_map(out.w.shape, htr.shape, out.to_input); !v.ok)
        throw ValidationError("refine: morphism to input invalid: " + v.diagnostic);
    return out;
}

namespace {

// Shared helper: lift a target family assignment on the nondegenerate summand
// along the comparison map of U at level m.
std::vector<int> lift_nondeg(const FiniteSite& site, const SiteObj& ndobj,
                             const Hypercovering& u, const SiteCosk& ck_u, int m,
                             const std::vector<std::vector<int>>& target_tuples,
                             const TieBreak& tb) {
    auto idx = family_index(ck_u.data.family[m]);
    std::vector<int> target(target_tuples.size());
    for (size_t i = 0; i < target_tuples.size(); ++i) {
        auto it = idx.find(target_tuples[i]);
        if (it == idx.end())
            throw ValidationError("lift_nondeg: target family incompatible at level " +
                                  std::to_string(m));
        target[i] = it->second;
    }
    return site.lift(ndobj, target, u.level_obj[m], ck_u.level_object, ck_u.comparison, tb);
}

}  // namespace

SimpMap map_from_split_wc(const FiniteSite& site, const Hypercovering& w, const Hypercovering& u,
                          const TieBreak& tb) {
    if (w.dim() != u.dim()) throw ValidationError("map_from_split_wc: dimension mismatch");
    auto sl = split_levels(w.shape);
    SimpMap phi;
    phi.level.push_back(site.lift(w.level_obj[0], w.augmentation, u.level_obj[0], site.terminal(),
                                  u.augmentation, tb));
    for (int m = 1; m <= w.dim(); ++m) {
        SiteCosk ck_u = site_coskeleton_level(site, u, m - 1);
        auto slots = injections(m - 1, m);
        SiteObj ndobj = site.sub_object(w.level_obj[m], sl[m].nondeg);
        std::vector<std::vector<int>> tuples(sl[m].nondeg.size());
        for (size_t i = 0; i < sl[m].nondeg.size(); ++i) {
            int wg = sl[m].nondeg[i];
            std::vector<int> t(slots.size());
            for (size_t s = 0; s < slots.size(); ++s)
                t[s] = phi.level[m - 1][w.shape.act(slots[s], wg)];
            tuples[i] = std::move(t);
        }
        std::vector<int> lifted = lift_nondeg(site, ndobj, u, ck_u, m, tuples, tb);
        std::vector<int> phim(w.shape.level_size(m));
        for (int e = 0; e < w.shape.level_size(m); ++e) {
            if (sl[m].nondeg_pos[e] >= 0) {
                phim[e] = lifted[sl[m].nondeg_pos[e]];
            } else {
                const auto& [sigma, z] = sl[m].pres[e];
                phim[e] = u.shape.act(sigma, phi.level[sigma.dst][z]);
            }
        }
        phi.level.push_back(std::move(phim));
    }
    if (auto v = validate_map(w.shape, u.shape, phi); !v.ok)
        throw ValidationError("map_from_split_wc: construction invalid: " + v.diagnostic);
    return phi;
}

ReducedHomotopy homotopy_between(const FiniteSite& site, const Hypercovering& w,
                                 const Hypercovering& u, const SimpMap& f, const SimpMap& g,
                                 const TieBreak& tb) {
    if (auto v = validate_map(w.shape, u.shape, f); !v.ok)
        throw ValidationError("homotopy_between: f invalid: " + v.diagnostic);
    if (auto v = validate_map(w.shape, u.shape, g); !v.ok)
        throw ValidationError("homotopy_between: g invalid: " + v.diagnostic);
    auto sl = split_levels(w.shape);
    ReducedHomotopy rh;
    rh.f = f;
    rh.g = g;
    rh.r.resize(w.dim() + 1);
    rh.r[0] = {f.level[0], g.level[0]};
    for (int m = 1; m <= w.dim(); ++m) {
        SiteCosk ck_u = site_coskeleton_level(site, u, m - 1);
        auto missing = missing_vertices(m);
        // presentation lookup one level down, for the degeneracy case formula
        std::map<std::pair<std::vector<int>, int>, int> prev_index;
        for (int e = 0; e < w.shape.level_size(m - 1); ++e)
            prev_index[{sl[m - 1].pres[e].first.assignment, sl[m - 1].pres[e].second}] = e;
        // one-step degeneracy presentations of each element of level m
        std::vector<std::vector<std::pair<int, int>>> present(w.shape.level_size(m));
        for (int e = 0; e < w.shape.level_size(m); ++e) {
            const auto& [sigma, z] = sl[m].pres[e];
            for (int j = 0; j <= m - 1; ++j) {
                if (sigma.assignment[j] != sigma.assignment[j + 1]) continue;
                DeltaMap tau{m - 1, sigma.dst, {}};
                for (int q = 0; q <= m; ++q)
                    if (q != j) tau.assignment.push_back(sigma.assignment[q]);
                auto it = prev_index.find({tau.assignment, z});
                if (it == prev_index.end())
                    throw ValidationError("homotopy_between: degeneracy presentation lookup failed");
                present[e].emplace_back(j, it->second);
            }
        }

        rh.r[m].assign(m + 2, {});
        rh.r[m][0] = f.level[m];
        rh.r[m][m + 1] = g.level[m];
        for (int i = 1; i <= m; ++i) {
            // Degeneracy identities force the value on a degenerate element
            // through any presentation s_j(y) with j != i-1.  The stratum
            // presented only through s_{i-1} is left free by them and gets
            // lifted along the comparison map, exactly as the nondegenerate
            // summand does.
            std::vector<int> to_lift;
            for (int e = 0; e < w.shape.level_size(m); ++e) {
                if (sl[m].nondeg_pos[e] >= 0) {
                    to_lift.push_back(e);
                    continue;
                }
                bool pinned = false;
                for (auto [j, y] : present[e])
                    if (j != i - 1) pinned = true;
                if (!pinned) to_lift.push_back(e);
            }
            SiteObj lift_obj = site.sub_object(w.level_obj[m], to_lift);
            std::vector<std::vector<int>> tuples(to_lift.size());
            for (size_t t = 0; t < to_lift.size(); ++t) {
                int wg = to_lift[t];
                std::vector<int> tup(missing.size());
                for (size_t s = 0; s < missing.size(); ++s) {
                    int j = missing[s];
                    int fe = w.shape.face(m, j)[wg];
                    tup[s] = (i > j) ? rh.r[m - 1][i - 1][fe] : rh.r[m - 1][i][fe];
                }
                tuples[t] = std::move(tup);
            }
            std::vector<int> lifted = lift_nondeg(site, lift_obj, u, ck_u, m, tuples, tb);
            std::vector<int> lift_pos(w.shape.level_size(m), -1);
            for (size_t t = 0; t < to_lift.size(); ++t) lift_pos[to_lift[t]] = int(t);
            std::vector<int> row(w.shape.level_size(m));
            for (int e = 0; e < w.shape.level_size(m); ++e) {
                if (lift_pos[e] >= 0) {
                    row[e] = lifted[lift_pos[e]];
                    continue;
                }
                int pj = -1, py = -1;
                for (auto [j, y] : present[e])
                    if (j != i - 1) { pj = j; py = y; break; }
                row[e] = u.shape.degen(m - 1, pj)[rh.r[m - 1][i - (i > pj ? 1 : 0)][py]];
            }
            rh.r[m][i] = std::move(row);
        }
    }
    if (auto v = check_reduced_homotopy(w.shape, u.shape, rh); !v.ok)
        throw ValidationError("homotopy_between: constructed family invalid: " + v.diagnostic);
    return rh;
}

EquivalenceCertificate certify_equivalence(const FiniteSite& site, const Hypercovering& w,
                                           const Hypercovering& v, const TieBreak& tb) {
    EquivalenceCertificate cert;
    cert.forward = map_from_split_wc(site, w, v, tb);
    cert.backward = map_from_split_wc(site, v, w, tb);
    cert.on_w = homotopy_between(site, w, w, compose(cert.forward, cert.backward),
                                 identity_map(w.shape), tb);
    cert.on_v = homotopy_between(site, v, v, compose(cert.backward, cert.forward),
                                 identity_map(v.shape), tb);
    return cert;
}

Hypercovering cech_hypercovering(const FiniteSite& site, const SiteObj& v,
                                 const std::vector<int>& augmentation, int d) {
    if (!site.is_covering(v, site.terminal(), augmentation))
        throw ValidationError("cech_hypercovering: augmentation is not a covering");
    Hypercovering h;
    TruncSimp base(0);
    base.set_level_size(0, obj_size(v));
    if (d == 0) {
        h.shape = base;
        h.level_obj = {v};
    } else {
        auto slots_for = [&](int m) { return cosk_slots(v, 0, m); };
        auto slots_max = cosk_slots(v, 0, d);
        CoskResult ck = coskeleton(base, 0, d, site_constraint(site, slots_max));
        h.shape = ck.object;
        h.level_obj.push_back(v);
        for (int m = 1; m <= d; ++m)
            h.level_obj.push_back(site.tuple_object(slots_for(m), ck.family[m]));
    }
    h.augmentation = augmentation;
    return h;
}

Hypercovering constant_terminal_hypercovering(const FiniteSite& site, int d) {
    Hypercovering h;
    SiteObj t = site.terminal();
    h.shape = constant_object(obj_size(t), d);
    h.level_obj.assign(d + 1, t);
    h.augmentation.resize(obj_size(t));
    for (int e = 0; e < obj_size(t); ++e) h.augmentation[e] = e;
    return h;
}

Hypercovering random_hypercovering(const FiniteSite& site, int d, uint64_t seed,
                                   int max_extra_per_level) {
    std::mt19937_64 rng(seed);
    Hypercovering h;
    if (site.kind() == "gset") {
        const auto& gs = dynamic_cast<const GSetSite&>(site);
        int frees = 1 + int(rng() % 2);
        std::vector<SiteObj> parts;
        for (int i = 0; i < frees; ++i) parts.push_back(SiteObj(gs.regular()));
        if (rng() % 2) parts.push_back(SiteObj(gs.trivial(1)));
        SiteObj v = site.coproduct(parts);
        h.shape = TruncSimp(0);
        h.shape.set_level_size(0, obj_size(v));
        h.level_obj = {v};
        h.augmentation.assign(obj_size(v), 0);
    } else {
        const auto& ss = dynamic_cast<const SliceSite&>(site);
        SliceObj v;
        for (int b = 0; b < ss.base_size(); ++b) v.over.push_back(b);
        int extra = int(rng() % 3);
        for (int i = 0; i < extra && ss.base_size() > 0; ++i)
            v.over.push_back(int(rng() % ss.base_size()));
        std::sort(v.over.begin(), v.over.end());
        h.shape = TruncSimp(0);
        h.shape.set_level_size(0, int(v.over.size()));
        h.augmentation = v.over;
        h.level_obj = {SiteObj(std::move(v))};
    }

    for (int m = 1; m <= d; ++m) {
        SiteCosk ck = site_coskeleton_level(site, h, m - 1);
        const int csize = int(ck.data.family[m].size());
        // glue extra simplices onto random targets in the coskeleton
        struct Extra {
            SiteObj obj;
            std::vector<int> target;  // element -> C index
        };
        std::vector<Extra> extras;
        int count = csize > 0 ? int(rng() % (max_extra_per_level + 1)) : 0;
        for (int i = 0; i < count; ++i) {
            int c = int(rng() % csize);
            if (site.kind() == "gset") {
                const auto& gs = dynamic_cast<const GSetSite&>(site);
                const auto& cobj = std::get<GSetObj>(ck.level_object);
                Extra ex;
                ex.obj = SiteObj(gs.regular());
                ex.target.resize(gs.group().order);
                for (int g = 0; g < gs.group().order; ++g) ex.target[g] = cobj.act[g][c];
                extras.push_back(std::move(ex));
            } else {
                const auto& cobj = std::get<SliceObj>(ck.level_object);
                Extra ex;
                SliceObj o;
                o.over.push_back(cobj.over[c]);
                ex.obj = SiteObj(std::move(o));
                ex.target = {c};
                extras.push_back(std::move(ex));
            }
        }
        // canonical map: identity on the coskeleton part, chosen targets elsewhere
        std::vector<int> canon;
        for (int c = 0; c < csize; ++c) canon.push_back(c);
        for (const auto& ex : extras)
            for (int t : ex.target) canon.push_back(t);

        TruncSimp next = extend_dim(h.shape, m);
        next.set_level_size(m, int(canon.size()));
        for (int j = 0; j <= m; ++j) {
            auto& t = next.face(m, j);
            t.resize(canon.size());
            for (size_t e = 0; e < canon.size(); ++e)
                t[e] = ck.data.object.face(m, j)[canon[e]];
        }
        for (int j = 0; j <= m - 1; ++j)
            next.degen(m - 1, j) = ck.data.object.degen(m - 1, j);

        std::vector<SiteObj> parts{ck.level_object};
        for (auto& ex : extras) parts.push_back(ex.obj);
        h.level_obj.push_back(site.coproduct(parts));
        h.shape = std::move(next);
    }
    return h;
}

}  // namespace proetale
