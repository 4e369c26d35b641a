#include "proetale/pro.hpp"

namespace proetale {

GaloisSystem GaloisSystem::single(const Group& g, const std::string& name) {
    GaloisSystem sys;
    sys.names = {name};
    sys.groups = {g};
    sys.leq = {{true}};
    return sys;
}

ValidationReport validate_galois_system(const GaloisSystem& sys) {
    const int n = sys.size();
    if (int(sys.names.size()) != n || int(sys.leq.size()) != n)
        return {false, "system shape mismatch"};
    for (int i = 0; i < n; ++i) {
        if (int(sys.leq[i].size()) != n) return {false, "leq row size mismatch"};
        if (!sys.leq[i][i]) return {false, "leq not reflexive"};
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (sys.leq[i][j] && sys.leq[j][k] && !sys.leq[i][k])
                    return {false, "leq not transitive"};
    // codirected: every pair has a lower bound
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool found = false;
            for (int k = 0; k < n && !found; ++k)
                if (sys.leq[k][i] && sys.leq[k][j]) found = true;
            if (!found) return {false, "index poset is not codirected"};
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!sys.leq[i][j] || i == j) continue;
            auto it = sys.maps.find({i, j});
            if (it == sys.maps.end()) return {false, "missing transition map"};
            if (!is_homomorphism(sys.groups[i], sys.groups[j], it->second))
                return {false, "transition is not a homomorphism"};
            if (!is_surjective_map(it->second, sys.groups[j].order))
                return {false, "transition is not surjective"};
        }
    // functoriality of composites
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (!(sys.leq[i][j] && sys.leq[j][k])) continue;
                const auto& f = sys.maps.at({i, j});
                const auto& g = sys.maps.at({j, k});
                const auto& h = sys.maps.at({i, k});
                for (int e = 0; e < sys.groups[i].order; ++e)
                    if (g[f[e]] != h[e]) return {false, "transitions fail to compose"};
            }
    return {};
}

int minimum_node(const GaloisSystem& sys) {
    for (int i = 0; i < sys.size(); ++i) {
        bool min = true;
        for (int j = 0; j < sys.size() && min; ++j)
            if (!sys.leq[i][j]) min = false;
        if (min) return i;
    }
    throw ValidationError("minimum_node: no minimum (system not codirected?)");
}

std::vector<int> covers_of_minimum(const GaloisSystem& sys) {
    int m = minimum_node(sys);
    std::vector<int> covers;
    for (int j = 0; j < sys.size(); ++j) {
        if (j == m) continue;
        bool immediate = true;
        for (int k = 0; k < sys.size() && immediate; ++k)
            if (k != m && k != j && sys.leq[k][j] && sys.leq[m][k]) immediate = false;
        if (immediate) covers.push_back(j);
    }
    return covers;
}

HomotopyType pro_homotopy_type(const GaloisSystem& sys, int d) {
    if (auto v = validate_galois_system(sys); !v.ok)
        throw ValidationError("pro_homotopy_type: invalid system: " + v.diagnostic);
    HomotopyType out;
    out.system = sys;
    out.dim = d;
    for (int i = 0; i < sys.size(); ++i) {
        out.values.push_back(classifying_space(sys.groups[i], d));
        out.provenance.push_back("cech tower of the regular covering of " + sys.names[i] +
                                 " (order " + std::to_string(sys.groups[i].order) + ")");
    }
    for (int i = 0; i < sys.size(); ++i)
        for (int j = 0; j < sys.size(); ++j) {
            if (!sys.leq[i][j] || i == j) continue;
            const auto& q = sys.maps.at({i, j});
            GSetSite si(sys.groups[i]);
            GSetSite sj(sys.groups[j]);
            SimpMap t;
            for (int n = 0; n <= d; ++n) {
                auto ci = si.component_map(out.values[i].tower.level_obj[n]);
                auto cj = sj.component_map(out.values[j].tower.level_obj[n]);
                std::vector<int> lvl(out.values[i].space.shape.level_size(n), -1);
                // orbit of a vertex tuple maps to the orbit of its image tuple
                for (int e = 0; e < out.values[i].tower.shape.level_size(n); ++e) {
                    std::vector<int> verts(n + 1);
                    for (int vv = 0; vv <= n; ++vv) {
                        DeltaMap inc{0, n, {vv}};
                        verts[vv] = out.values[i].tower.shape.act(inc, e);
                    }
                    // image element in the target Cech tower: tuple of q(vertices)
                    long long code = 0;
                    // target level n elements are vertex tuples in lexicographic
                    // DFS order, which for a full product is base-|G_j| encoding
                    for (int vv = 0; vv <= n; ++vv) code = code * sys.groups[j].order + q[verts[vv]];
                    int target_orbit = cj[int(code)];
                    if (lvl[ci[e]] >= 0 && lvl[ci[e]] != target_orbit)
                        throw ValidationError("pro_homotopy_type: transition not orbit-invariant");
                    lvl[ci[e]] = target_orbit;
                }
                t.level.push_back(std::move(lvl));
            }
            if (auto v = validate_map(out.values[i].space.shape, out.values[j].space.shape, t); !v.ok)
                throw ValidationError("pro_homotopy_type: transition invalid: " + v.diagnostic);
            out.transitions[{i, j}] = std::move(t);
        }
    // functoriality on the orbit models
    for (int i = 0; i < sys.size(); ++i)
        for (int j = 0; j < sys.size(); ++j)
            for (int k = 0; k < sys.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                if (!(sys.leq[i][j] && sys.leq[j][k])) continue;
                auto comp = compose(out.transitions.at({i, j}), out.transitions.at({j, k}));
                if (!(comp == out.transitions.at({i, k})))
                    throw ValidationError("pro_homotopy_type: transitions fail functoriality");
            }
    return out;
}

}  // namespace proetale
