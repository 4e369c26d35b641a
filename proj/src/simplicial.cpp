#include "proetale/simplicial.hpp"

#include <algorithm>
#include <sstream>

namespace proetale {

int TruncSimp::total_size() const {
    int t = 0;
    for (int n = 0; n <= dim_; ++n) t += sizes_[n];
    return t;
}

int TruncSimp::act(const DeltaMap& f, int element) const {
    if (f.dst > dim_ || f.src > dim_) throw ValidationError("TruncSimp::act: level out of range");
    auto em = delta_factor(f);
    int cur = element;
    int level = f.dst;
    for (int j : mono_word(em.mono)) {
        cur = face(level, j)[cur];
        --level;
    }
    for (int j : epi_word(em.epi)) {
        cur = degen(level, j)[cur];
        ++level;
    }
    return cur;
}

namespace {
std::string idx3(const char* what, int n, int i, int j) {
    std::ostringstream os;
    os << what << " identity fails at level " << n << " with (i, j) = (" << i << ", " << j << ")";
    return os.str();
}

bool table_ok(const std::vector<int>& t, int src_size, int dst_size) {
    if (int(t.size()) != src_size) return false;
    for (int v : t)
        if (v < 0 || v >= dst_size) return false;
    return true;
}
}  // namespace

ValidationReport validate(const TruncSimp& x) {
    const int d = x.dim();
    for (int n = 1; n <= d; ++n)
        for (int j = 0; j <= n; ++j)
            if (!table_ok(x.face(n, j), x.level_size(n), x.level_size(n - 1)))
                return {false, "malformed face table at level " + std::to_string(n)};
    for (int n = 0; n < d; ++n)
        for (int j = 0; j <= n; ++j)
            if (!table_ok(x.degen(n, j), x.level_size(n), x.level_size(n + 1)))
                return {false, "malformed degeneracy table at level " + std::to_string(n)};

    // d_i d_j = d_{j-1} d_i  (i < j)
    for (int n = 2; n <= d; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (int e = 0; e < x.level_size(n); ++e)
                    if (x.face(n - 1, i)[x.face(n, j)[e]] != x.face(n - 1, j - 1)[x.face(n, i)[e]])
                        return {false, idx3("face-face", n, i, j)};
    // s_i s_j = s_{j+1} s_i  (i <= j)
    for (int n = 0; n + 1 < d; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (int e = 0; e < x.level_size(n); ++e)
                    if (x.degen(n + 1, i)[x.degen(n, j)[e]] !=
                        x.degen(n + 1, j + 1)[x.degen(n, i)[e]])
                        return {false, idx3("degeneracy-degeneracy", n, i, j)};
    // d_i s_j mixed identities
    for (int n = 0; n < d; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (int e = 0; e < x.level_size(n); ++e) {
                    int lhs = x.face(n + 1, i)[x.degen(n, j)[e]];
                    int rhs;
                    if (i == j || i == j + 1) rhs = e;
                    else if (i < j) rhs = x.degen(n - 1, j - 1)[x.face(n, i)[e]];
                    else rhs = x.degen(n - 1, j)[x.face(n, i - 1)[e]];
                    if (lhs != rhs) return {false, idx3("face-degeneracy", n, i, j)};
                }
    return {};
}

ValidationReport check_coskeletal(const TruncSimp& x) {
    if (!x.coskeletal_above) return {};
    const int n = *x.coskeletal_above;
    if (n > x.dim()) return {false, "coskeletal_above exceeds the truncation"};
    CoskResult ck = coskeleton(x, n, x.dim());
    for (int m = n + 1; m <= x.dim(); ++m) {
        if (ck.object.level_size(m) != x.level_size(m))
            return {false, "canonical map not bijective at level " + std::to_string(m)};
        const auto& unit = ck.unit.level[m];
        std::vector<bool> hit(ck.object.level_size(m), false);
        for (int e = 0; e < x.level_size(m); ++e) {
            if (hit[unit[e]])
                return {false, "canonical map not injective at level " + std::to_string(m)};
            hit[unit[e]] = true;
        }
    }
    return {};
}

ValidationReport validate_map(const TruncSimp& x, const TruncSimp& y, const SimpMap& f) {
    if (x.dim() != y.dim()) return {false, "dimension mismatch"};
    if (int(f.level.size()) != x.dim() + 1) return {false, "level count mismatch"};
    for (int n = 0; n <= x.dim(); ++n)
        if (!table_ok(f.level[n], x.level_size(n), y.level_size(n)))
            return {false, "malformed assignment at level " + std::to_string(n)};
    for (int n = 1; n <= x.dim(); ++n)
        for (int j = 0; j <= n; ++j)
            for (int e = 0; e < x.level_size(n); ++e)
                if (f.level[n - 1][x.face(n, j)[e]] != y.face(n, j)[f.level[n][e]])
                    return {false, idx3("map-face", n, j, e)};
    for (int n = 0; n < x.dim(); ++n)
        for (int j = 0; j <= n; ++j)
            for (int e = 0; e < x.level_size(n); ++e)
                if (f.level[n + 1][x.degen(n, j)[e]] != y.degen(n, j)[f.level[n][e]])
                    return {false, idx3("map-degeneracy", n, j, e)};
    return {};
}

SimpMap identity_map(const TruncSimp& x) {
    SimpMap f;
    for (int n = 0; n <= x.dim(); ++n) {
        std::vector<int> id(x.level_size(n));
        for (int e = 0; e < x.level_size(n); ++e) id[e] = e;
        f.level.push_back(std::move(id));
    }
    return f;
}

SimpMap compose(const SimpMap& f, const SimpMap& g) {
    SimpMap h;
    for (size_t n = 0; n < f.level.size(); ++n) {
        std::vector<int> lv(f.level[n].size());
        for (size_t e = 0; e < f.level[n].size(); ++e) lv[e] = g.level[n][f.level[n][e]];
        h.level.push_back(std::move(lv));
    }
    return h;
}

TruncSimp skeleton(const TruncSimp& x, int n) {
    if (n > x.dim()) throw ValidationError("skeleton: level above truncation");
    TruncSimp y(n);
    for (int m = 0; m <= n; ++m) y.set_level_size(m, x.level_size(m));
    for (int m = 1; m <= n; ++m)
        for (int j = 0; j <= m; ++j) y.face(m, j) = x.face(m, j);
    for (int m = 0; m < n; ++m)
        for (int j = 0; j <= m; ++j) y.degen(m, j) = x.degen(m, j);
    if (x.coskeletal_above && *x.coskeletal_above <= n) y.coskeletal_above = x.coskeletal_above;
    if (!x.labels.empty()) {
        y.labels.assign(x.labels.begin(), x.labels.begin() + std::min<size_t>(n + 1, x.labels.size()));
    }
    return y;
}

namespace {

// canonical top extension used when reading a family component below the base level
DeltaMap least_top_extension(const DeltaMap& inj, int n) {
    // smallest (lex) injective [n] -> [m] whose image contains im(inj)
    std::vector<bool> in_img(inj.dst + 1, false);
    for (int v : inj.assignment) in_img[v] = true;
    std::vector<int> img(inj.assignment);
    for (int v = 0; int(img.size()) < n + 1 && v <= inj.dst; ++v)
        if (!in_img[v]) img.push_back(v);
    std::sort(img.begin(), img.end());
    return DeltaMap{n, inj.dst, img};
}

int slot_of(const std::vector<DeltaMap>& slots, const DeltaMap& inj) {
    for (int s = 0; s < int(slots.size()); ++s)
        if (slots[s] == inj) return s;
    throw ValidationError("coskeleton: slot lookup failed");
}

}  // namespace

int family_component(const TruncSimp& x, const CoskResult& ck, int m, int family_index,
                     const DeltaMap& inj) {
    const int n = ck.n;
    auto slots = injections(n, m);
    const auto& tuple = ck.family[m][family_index];
    if (inj.src == n) return tuple[slot_of(slots, inj)];
    if (inj.src > n) throw ValidationError("family_component: index above base level");
    DeltaMap top = least_top_extension(inj, n);
    // gamma with top o gamma = inj
    DeltaMap gamma{inj.src, n, {}};
    for (int v : inj.assignment) {
        int pos = int(std::lower_bound(top.assignment.begin(), top.assignment.end(), v) -
                      top.assignment.begin());
        gamma.assignment.push_back(pos);
    }
    return x.act(gamma, tuple[slot_of(slots, top)]);
}

CoskResult coskeleton(const TruncSimp& x, int n, int d,
                      const std::function<bool(int, const std::vector<int>&)>& extra_constraint,
                      long long family_cap) {
    if (n > x.dim()) throw ValidationError("coskeleton: base level above truncation");
    CoskResult ck;
    ck.n = n;
    ck.family.resize(d + 1);
    TruncSimp y(d);
    // levels <= min(n, d) copied from x
    const int ncopy = std::min(n, d);
    for (int m = 0; m <= ncopy; ++m) y.set_level_size(m, x.level_size(m));
    for (int m = 1; m <= ncopy; ++m)
        for (int j = 0; j <= m; ++j) y.face(m, j) = x.face(m, j);
    for (int m = 0; m < ncopy; ++m)
        for (int j = 0; j <= m; ++j) y.degen(m, j) = x.degen(m, j);

    std::vector<std::map<std::vector<int>, int>> index(d + 1);

    for (int m = n + 1; m <= d; ++m) {
        auto slots = injections(n, m);
        const int S = int(slots.size());
        // pairwise compatibility data: for s > t with nonempty common image,
        // action tables on level n via the maximal common face
        struct PairCon {
            int t;
            std::vector<int> act_s, act_t;  // X_n -> X_k tables
        };
        std::vector<std::vector<PairCon>> cons(S);
        for (int s = 0; s < S; ++s)
            for (int t = 0; t < s; ++t) {
                std::vector<int> common;
                std::set_intersection(slots[s].assignment.begin(), slots[s].assignment.end(),
                                      slots[t].assignment.begin(), slots[t].assignment.end(),
                                      std::back_inserter(common));
                if (common.empty()) continue;
                DeltaMap gs{int(common.size()) - 1, n, {}}, gt = gs;
                for (int v : common) {
                    gs.assignment.push_back(int(std::lower_bound(slots[s].assignment.begin(),
                                                                 slots[s].assignment.end(), v) -
                                                slots[s].assignment.begin()));
                    gt.assignment.push_back(int(std::lower_bound(slots[t].assignment.begin(),
                                                                 slots[t].assignment.end(), v) -
                                                slots[t].assignment.begin()));
                }
                PairCon pc;
                pc.t = t;
                pc.act_s.resize(x.level_size(n));
                pc.act_t.resize(x.level_size(n));
                for (int e = 0; e < x.level_size(n); ++e) {
                    pc.act_s[e] = x.act(gs, e);
                    pc.act_t[e] = x.act(gt, e);
                }
                cons[s].push_back(std::move(pc));
            }

        std::vector<std::vector<int>>& fams = ck.family[m];
        std::vector<int> tuple(S, -1);
        std::vector<int> partial;
        std::function<void(int)> dfs = [&](int s) {
            if (s == S) {
                fams.push_back(tuple);
                if (static_cast<long long>(fams.size()) > family_cap)
                    throw SizeCapError("coskeleton: family enumeration exceeded cap at level " +
                                       std::to_string(m));
                return;
            }
            for (int e = 0; e < x.level_size(n); ++e) {
                bool ok = true;
                for (const auto& pc : cons[s])
                    if (pc.act_s[e] != pc.act_t[tuple[pc.t]]) { ok = false; break; }
                if (!ok) continue;
                tuple[s] = e;
                if (extra_constraint) {
                    partial.assign(tuple.begin(), tuple.begin() + s + 1);
                    if (!extra_constraint(m, partial)) { tuple[s] = -1; continue; }
                }
                dfs(s + 1);
                tuple[s] = -1;
            }
        };
        if (x.level_size(n) > 0 || S == 0) dfs(0);
        y.set_level_size(m, int(fams.size()));
        auto& idx = index[m];
        for (int i = 0; i < int(fams.size()); ++i) idx[fams[i]] = i;
    }

    // faces and degeneracies touching family levels
    for (int m = n + 1; m <= d; ++m) {
        auto slots = injections(n, m);
        auto prev_slots = injections(n, m - 1);
        // faces m -> m-1
        for (int j = 0; j <= m; ++j) {
            auto& table = y.face(m, j);
            table.resize(y.level_size(m));
            DeltaMap dj = delta_face(m, j);
            for (int fi = 0; fi < y.level_size(m); ++fi) {
                if (m - 1 == n) {
                    // component at the injection missing j... the face itself
                    table[fi] = ck.family[m][fi][slot_of(slots, dj)];
                } else if (m - 1 < n) {
                    throw ValidationError("coskeleton: unreachable face case");
                } else {
                    std::vector<int> nt(prev_slots.size());
                    for (int s = 0; s < int(prev_slots.size()); ++s) {
                        DeltaMap comp = delta_compose(prev_slots[s], dj);
                        nt[s] = ck.family[m][fi][slot_of(slots, comp)];
                    }
                    auto it = index[m - 1].find(nt);
                    if (it == index[m - 1].end())
                        throw ValidationError("coskeleton: face left the family set");
                    table[fi] = it->second;
                }
            }
        }
        // degeneracies m-1 -> m
        for (int j = 0; j <= m - 1; ++j) {
            auto& table = y.degen(m - 1, j);
            table.resize(y.level_size(m - 1));
            DeltaMap sj = delta_degeneracy(m - 1, j);
            for (int e = 0; e < y.level_size(m - 1); ++e) {
                std::vector<int> nt(slots.size());
                for (int s = 0; s < int(slots.size()); ++s) {
                    DeltaMap comp = delta_compose(slots[s], sj);  // [n] -> [m-1]
                    if (m - 1 == n) {
                        nt[s] = x.act(comp, e);
                    } else {
                        auto em = delta_factor(comp);
                        int base = family_component(x, ck, m - 1, e, em.mono);
                        nt[s] = x.act(DeltaMap{em.epi.src, em.epi.dst, em.epi.assignment}, base);
                    }
                }
                auto it = index[m].find(nt);
                if (it == index[m].end())
                    throw ValidationError("coskeleton: degeneracy left the family set");
                table[e] = it->second;
            }
        }
    }
    y.coskeletal_above = n;
    ck.object = std::move(y);

    // unit X -> cosk on shared levels
    const int udim = std::min(x.dim(), d);
    ck.unit.level.resize(udim + 1);
    for (int m = 0; m <= std::min(ncopy, udim); ++m) {
        ck.unit.level[m].resize(x.level_size(m));
        for (int e = 0; e < x.level_size(m); ++e) ck.unit.level[m][e] = e;
    }
    for (int m = n + 1; m <= udim; ++m) {
        auto slots = injections(n, m);
        ck.unit.level[m].resize(x.level_size(m));
        for (int e = 0; e < x.level_size(m); ++e) {
            std::vector<int> nt(slots.size());
            for (int s = 0; s < int(slots.size()); ++s) nt[s] = x.act(slots[s], e);
            auto it = index[m].find(nt);
            if (it == index[m].end())
                throw ValidationError("coskeleton: unit hits no family (constraint too strict?)");
            ck.unit.level[m][e] = it->second;
        }
    }
    return ck;
}

std::vector<int> cosk_unit_level(const TruncSimp& x, const CoskResult& ck, int m) {
    if (m <= ck.n) {
        std::vector<int> id(x.level_size(m));
        for (int e = 0; e < x.level_size(m); ++e) id[e] = e;
        return id;
    }
    return ck.unit.level[m];
}

std::vector<EZItem> nondegenerate_decomposition(const TruncSimp& x, int n) {
    if (n > x.dim()) throw ValidationError("nondegenerate_decomposition: level above truncation");
    // classify levels 0..n bottom-up
    std::vector<std::vector<EZItem>> items(n + 1);
    for (int m = 0; m <= n; ++m) {
        items[m].resize(x.level_size(m));
        for (int e = 0; e < x.level_size(m); ++e) {
            EZItem it;
            it.epi = delta_identity(m);
            it.base_level = m;
            it.base_index = e;
            if (m > 0) {
                for (int j = 0; j <= m - 1; ++j) {
                    const auto& sj = x.degen(m - 1, j);
                    // s_j is injective, so search for the unique preimage
                    for (int y = 0; y < x.level_size(m - 1); ++y)
                        if (sj[y] == e) {
                            const EZItem& below = items[m - 1][y];
                            it.nondegenerate = false;
                            it.epi = delta_compose(delta_degeneracy(m - 1, j), below.epi);
                            it.base_level = below.base_level;
                            it.base_index = below.base_index;
                            break;
                        }
                    if (!it.nondegenerate) break;
                }
            }
            it.nondegenerate = it.nondegenerate && it.epi.is_identity();
            items[m][e] = it;
        }
    }
    // Eilenberg-Zilber self-check on small levels: the presentation by a
    // surjection and a nondegenerate base is unique.
    if (x.level_size(n) <= 64) {
        for (int e = 0; e < x.level_size(n); ++e) {
            int count = 0;
            for (int k = 0; k <= n; ++k)
                for (const auto& epi : surjections(n, k))
                    for (int z = 0; z < x.level_size(k); ++z)
                        if (items[k][z].nondegenerate && x.act(epi, z) == e) ++count;
            if (count != 1)
                throw ValidationError("nondegenerate_decomposition: presentation not unique");
        }
    }
    return items[n];
}

IntervalProduct product_with_interval(const TruncSimp& x) {
    const int d = x.dim();
    IntervalProduct out;
    TruncSimp y(d);
    auto enc = [&](int n, int e, int c) { return e * (n + 2) + c; };
    for (int n = 0; n <= d; ++n) y.set_level_size(n, x.level_size(n) * (n + 2));
    for (int n = 1; n <= d; ++n)
        for (int j = 0; j <= n; ++j) {
            auto& t = y.face(n, j);
            t.resize(y.level_size(n));
            for (int e = 0; e < x.level_size(n); ++e)
                for (int c = 0; c <= n + 1; ++c)
                    t[enc(n, e, c)] = enc(n - 1, x.face(n, j)[e], c - (j < c ? 1 : 0));
        }
    for (int n = 0; n < d; ++n)
        for (int j = 0; j <= n; ++j) {
            auto& t = y.degen(n, j);
            t.resize(y.level_size(n));
            for (int e = 0; e < x.level_size(n); ++e)
                for (int c = 0; c <= n + 1; ++c)
                    t[enc(n, e, c)] = enc(n + 1, x.degen(n, j)[e], c + (j < c ? 1 : 0));
        }
    out.object = y;
    out.include_f.level.resize(d + 1);
    out.include_g.level.resize(d + 1);
    out.project.level.resize(d + 1);
    for (int n = 0; n <= d; ++n) {
        out.include_f.level[n].resize(x.level_size(n));
        out.include_g.level[n].resize(x.level_size(n));
        out.project.level[n].resize(y.level_size(n));
        for (int e = 0; e < x.level_size(n); ++e) {
            out.include_f.level[n][e] = enc(n, e, 0);
            out.include_g.level[n][e] = enc(n, e, n + 1);
        }
        for (int e = 0; e < x.level_size(n); ++e)
            for (int c = 0; c <= n + 1; ++c) out.project.level[n][enc(n, e, c)] = e;
    }
    return out;
}

TruncSimp product(const TruncSimp& x, const TruncSimp& y) {
    if (x.dim() != y.dim()) throw ValidationError("product: dimension mismatch");
    const int d = x.dim();
    TruncSimp p(d);
    auto enc = [&](int n, int a, int b) { return a * y.level_size(n) + b; };
    for (int n = 0; n <= d; ++n) p.set_level_size(n, x.level_size(n) * y.level_size(n));
    for (int n = 1; n <= d; ++n)
        for (int j = 0; j <= n; ++j) {
            auto& t = p.face(n, j);
            t.resize(p.level_size(n));
            for (int a = 0; a < x.level_size(n); ++a)
                for (int b = 0; b < y.level_size(n); ++b)
                    t[enc(n, a, b)] = enc(n - 1, x.face(n, j)[a], y.face(n, j)[b]);
        }
    for (int n = 0; n < d; ++n)
        for (int j = 0; j <= n; ++j) {
            auto& t = p.degen(n, j);
            t.resize(p.level_size(n));
            for (int a = 0; a < x.level_size(n); ++a)
                for (int b = 0; b < y.level_size(n); ++b)
                    t[enc(n, a, b)] = enc(n + 1, x.degen(n, j)[a], y.degen(n, j)[b]);
        }
    return p;
}

namespace {

struct MapSearch {
    const TruncSimp& x;
    const TruncSimp& y;
    // reverse degeneracy index: at level n, list of (j, source element) with s_j(src) = e
    std::vector<std::vector<std::vector<std::pair<int, int>>>> degen_preimages;
    SimpMap current;
    long long steps = 0;
    long long cap;
    bool find_iso;
    std::vector<std::vector<bool>> used;
    std::function<void(const SimpMap&)> emit;
    bool stop = false;

    MapSearch(const TruncSimp& x_, const TruncSimp& y_, long long cap_, bool iso)
        : x(x_), y(y_), cap(cap_), find_iso(iso) {
        degen_preimages.resize(x.dim() + 1);
        degen_preimages[0].resize(x.level_size(0));
        for (int n = 1; n <= x.dim(); ++n) {
            degen_preimages[n].resize(x.level_size(n));
            for (int j = 0; j <= n - 1; ++j)
                for (int e = 0; e < x.level_size(n - 1); ++e)
                    degen_preimages[n][x.degen(n - 1, j)[e]].emplace_back(j, e);
        }
        current.level.resize(x.dim() + 1);
        for (int n = 0; n <= x.dim(); ++n) current.level[n].assign(x.level_size(n), -1);
        if (find_iso) {
            used.resize(x.dim() + 1);
            for (int n = 0; n <= x.dim(); ++n) used[n].assign(y.level_size(n), false);
        }
    }

    bool face_consistent(int n, int e, int img) const {
        if (n == 0) return true;
        for (int j = 0; j <= n; ++j)
            if (current.level[n - 1][x.face(n, j)[e]] != y.face(n, j)[img]) return false;
        return true;
    }

    // forced image from a degeneracy presentation, if any
    std::optional<int> forced(int n, int e) const {
        for (auto [j, src] : degen_preimages[n][e])
            return y.degen(n - 1, j)[current.level[n - 1][src]];
        return std::nullopt;
    }

    bool all_presentations_agree(int n, int e, int img) const {
        for (auto [j, src] : degen_preimages[n][e])
            if (y.degen(n - 1, j)[current.level[n - 1][src]] != img) return false;
        return true;
    }

    void rec(int n, int e) {
        if (stop) return;
        if (++steps > cap) throw SizeCapError("simplicial map enumeration exceeded cap");
        if (n > x.dim()) {
            emit(current);
            return;
        }
        if (e == x.level_size(n)) {
            rec(n + 1, 0);
            return;
        }
        auto f = forced(n, e);
        if (f) {
            int img = *f;
            if (!all_presentations_agree(n, e, img) || !face_consistent(n, e, img)) return;
            if (find_iso && used[n][img]) return;
            current.level[n][e] = img;
            if (find_iso) used[n][img] = true;
            rec(n, e + 1);
            if (find_iso) used[n][img] = false;
            current.level[n][e] = -1;
            return;
        }
        for (int img = 0; img < y.level_size(n); ++img) {
            if (stop) return;
            if (find_iso && used[n][img]) continue;
            if (!face_consistent(n, e, img)) continue;
            current.level[n][e] = img;
            if (find_iso) used[n][img] = true;
            rec(n, e + 1);
            if (find_iso) used[n][img] = false;
            current.level[n][e] = -1;
        }
    }
};

}  // namespace

std::vector<SimpMap> enumerate_simp_maps(const TruncSimp& x, const TruncSimp& y, long long cap) {
    if (x.dim() != y.dim()) throw ValidationError("enumerate_simp_maps: dimension mismatch");
    std::vector<SimpMap> out;
    MapSearch search(x, y, cap, false);
    search.emit = [&](const SimpMap& m) { out.push_back(m); };
    search.rec(0, 0);
    return out;
}

std::optional<SimpMap> find_simp_iso(const TruncSimp& x, const TruncSimp& y) {
    if (x.dim() != y.dim()) return std::nullopt;
    for (int n = 0; n <= x.dim(); ++n)
        if (x.level_size(n) != y.level_size(n)) return std::nullopt;
    std::optional<SimpMap> out;
    MapSearch search(x, y, 50000000, true);
    search.emit = [&](const SimpMap& m) {
        out = m;
        search.stop = true;
    };
    search.rec(0, 0);
    return out;
}

TruncSimp standard_simplex(int k, int d) {
    TruncSimp x(d);
    std::vector<std::vector<DeltaMap>> lv(d + 1);
    std::vector<std::map<std::vector<int>, int>> idx(d + 1);
    for (int n = 0; n <= d; ++n) {
        lv[n] = all_monotone(n, k);
        x.set_level_size(n, int(lv[n].size()));
        for (int i = 0; i < int(lv[n].size()); ++i) idx[n][lv[n][i].assignment] = i;
    }
    for (int n = 1; n <= d; ++n)
        for (int j = 0; j <= n; ++j) {
            auto& t = x.face(n, j);
            t.resize(x.level_size(n));
            for (int e = 0; e < x.level_size(n); ++e)
                t[e] = idx[n - 1][delta_compose(delta_face(n, j), lv[n][e]).assignment];
        }
    for (int n = 0; n < d; ++n)
        for (int j = 0; j <= n; ++j) {
            auto& t = x.degen(n, j);
            t.resize(x.level_size(n));
            for (int e = 0; e < x.level_size(n); ++e)
                t[e] = idx[n + 1][delta_compose(delta_degeneracy(n, j), lv[n][e]).assignment];
        }
    x.labels.resize(d + 1);
    for (int n = 0; n <= d; ++n)
        for (const auto& m : lv[n]) {
            std::string s;
            for (int v : m.assignment) s += std::to_string(v);
            x.labels[n].push_back(s);
        }
    return x;
}

TruncSimp constant_object(int size, int d) {
    TruncSimp x(d);
    std::vector<int> id(size);
    for (int i = 0; i < size; ++i) id[i] = i;
    for (int n = 0; n <= d; ++n) x.set_level_size(n, size);
    for (int n = 1; n <= d; ++n)
        for (int j = 0; j <= n; ++j) x.face(n, j) = id;
    for (int n = 0; n < d; ++n)
        for (int j = 0; j <= n; ++j) x.degen(n, j) = id;
    return x;
}

}  // namespace proetale
