#include "proetale/space_simp.hpp"

#include <numeric>

namespace proetale {

ValidationReport validate_space_simp(const SpaceSimp& x) {
    if (auto v = validate(x.shape); !v.ok) return v;
    if (int(x.spaces.size()) != x.dim() + 1) return {false, "space count mismatch"};
    for (int n = 0; n <= x.dim(); ++n)
        if (x.spaces[n].size() != x.shape.level_size(n))
            return {false, "space size mismatch at level " + std::to_string(n)};
    for (int n = 1; n <= x.dim(); ++n)
        for (int j = 0; j <= n; ++j)
            if (!is_continuous(SpaceMap{x.spaces[n], x.spaces[n - 1], x.shape.face(n, j)}))
                return {false, "face not continuous at level " + std::to_string(n)};
    for (int n = 0; n < x.dim(); ++n)
        for (int j = 0; j <= n; ++j)
            if (!is_continuous(SpaceMap{x.spaces[n], x.spaces[n + 1], x.shape.degen(n, j)}))
                return {false, "degeneracy not continuous at level " + std::to_string(n)};
    return {};
}

SpaceSimp pi_of_hypercovering(const FiniteSite& site, const Hypercovering& w) {
    if (auto v = check_hypercovering(site, w); !v.ok)
        throw ValidationError("pi_of_hypercovering: not a hypercovering: " + v.diagnostic);
    if (!is_split_wc(site, w))
        throw ValidationError("pi_of_hypercovering: input is not split weakly contractible");
    SpaceSimp out;
    out.shape = TruncSimp(w.dim());
    std::vector<std::vector<int>> cls(w.dim() + 1);
    for (int n = 0; n <= w.dim(); ++n) {
        cls[n] = site.component_map(w.level_obj[n]);
        out.shape.set_level_size(n, site.component_count(w.level_obj[n]));
        out.spaces.push_back(FiniteSpace::discrete(out.shape.level_size(n), "c"));
    }
    auto descend = [&](int n_from, int n_to, const std::vector<int>& table) {
        std::vector<int> t(out.shape.level_size(n_from), -1);
        for (int e = 0; e < int(table.size()); ++e) {
            int from = cls[n_from][e];
            int to = cls[n_to][table[e]];
            if (t[from] >= 0 && t[from] != to)
                throw ValidationError("pi_of_hypercovering: structure map does not descend");
            t[from] = to;
        }
        return t;
    };
    for (int n = 1; n <= w.dim(); ++n)
        for (int j = 0; j <= n; ++j) out.shape.face(n, j) = descend(n, n - 1, w.shape.face(n, j));
    for (int n = 0; n < w.dim(); ++n)
        for (int j = 0; j <= n; ++j) out.shape.degen(n, j) = descend(n, n + 1, w.shape.degen(n, j));
    if (auto v = validate_space_simp(out); !v.ok)
        throw ValidationError("pi_of_hypercovering: produced object invalid: " + v.diagnostic);
    return out;
}

std::vector<int> pi0_classes(const SpaceSimp& x) {
    if (x.dim() < 1) throw ValidationError("pi0: needs dimension >= 1");
    const int n0 = x.shape.level_size(0);
    std::vector<int> parent(n0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int e = 0; e < x.shape.level_size(1); ++e) {
        int a = find(x.shape.face(1, 0)[e]);
        int b = find(x.shape.face(1, 1)[e]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> ids(n0, -1);
    int next = 0;
    for (int i = 0; i < n0; ++i) {
        int r = find(i);
        if (ids[r] < 0) ids[r] = next++;
        ids[i] = ids[r];
    }
    return ids;
}

FiniteSpace pi0(const SpaceSimp& x) {
    auto ids = pi0_classes(x);
    int k = ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
    return quotient_space(x.spaces[0], ids, k);
}

SpaceMap pi0_map(const SpaceSimp& x, const SpaceSimp& y, const SimpMap& f) {
    auto cx = pi0_classes(x);
    auto cy = pi0_classes(y);
    FiniteSpace px = pi0(x), py = pi0(y);
    std::vector<int> m(px.size(), -1);
    for (int e = 0; e < x.shape.level_size(0); ++e) {
        int from = cx[e], to = cy[f.level[0][e]];
        if (m[from] >= 0 && m[from] != to)
            throw ValidationError("pi0_map: map does not descend to components");
        m[from] = to;
    }
    return SpaceMap{px, py, m};
}

SpaceSimp constant_simplicial_space(const FiniteSpace& y, int d) {
    SpaceSimp out;
    out.shape = constant_object(y.size(), d);
    out.spaces.assign(d + 1, y);
    return out;
}

SpaceSimp product_space_simp(const SpaceSimp& x, const SpaceSimp& y) {
    SpaceSimp out;
    out.shape = product(x.shape, y.shape);
    for (int n = 0; n <= x.dim(); ++n) out.spaces.push_back(x.spaces[n].product(y.spaces[n]));
    return out;
}

bool pi0_product_check(const SpaceSimp& x_full, const SpaceSimp& y_full) {
    // pi0 only sees the 1-truncation and only the level-0 topology, so the
    // product is assembled there without materializing higher level spaces
    SpaceSimp x, y;
    x.shape = skeleton(x_full.shape, std::min(x_full.dim(), 1));
    y.shape = skeleton(y_full.shape, std::min(y_full.dim(), 1));
    x.spaces = {x_full.spaces[0], FiniteSpace::empty()};
    y.spaces = {y_full.spaces[0], FiniteSpace::empty()};
    SpaceSimp p;
    p.shape = product(x.shape, y.shape);
    p.spaces = {x.spaces[0].product(y.spaces[0]), FiniteSpace::empty()};
    auto cp = pi0_classes(p);
    FiniteSpace pp = pi0(p);
    FiniteSpace px = pi0(x), py = pi0(y);
    auto cx = pi0_classes(x), cy = pi0_classes(y);
    FiniteSpace target = px.product(py);
    // canonical comparison induced by the two projections
    std::vector<int> cmp(pp.size(), -1);
    const int ny0 = y.shape.level_size(0);
    for (int a = 0; a < x.shape.level_size(0); ++a)
        for (int b = 0; b < ny0; ++b) {
            int from = cp[a * ny0 + b];
            int to = cx[a] * py.size() + cy[b];
            if (cmp[from] >= 0 && cmp[from] != to) return false;
            cmp[from] = to;
        }
    if (pp.size() != target.size()) return false;
    std::vector<bool> hit(target.size(), false);
    for (int v : cmp) {
        if (v < 0 || hit[v]) return false;
        hit[v] = true;
    }
    SpaceMap fwd{pp, target, cmp};
    if (!is_continuous(fwd)) return false;
    std::vector<int> inv(target.size());
    for (int i = 0; i < pp.size(); ++i) inv[cmp[i]] = i;
    return is_continuous(SpaceMap{target, pp, inv});
}

std::vector<SimpMap> enumerate_space_simp_maps(const SpaceSimp& x, const SpaceSimp& y,
                                               long long cap) {
    auto raw = enumerate_simp_maps(x.shape, y.shape, cap);
    std::vector<SimpMap> out;
    for (auto& m : raw) {
        bool ok = true;
        for (int n = 0; n <= x.dim() && ok; ++n)
            if (!is_continuous(SpaceMap{x.spaces[n], y.spaces[n], m.level[n]})) ok = false;
        if (ok) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace proetale
