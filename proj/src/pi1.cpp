#include "proetale/pi1.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace proetale {

Presentation edge_path_presentation(const TruncSimp& x, int basepoint) {
    if (x.dim() < 2) throw ValidationError("edge_path_presentation: needs dimension >= 2");
    if (basepoint < 0 || basepoint >= x.level_size(0))
        throw ValidationError("edge_path_presentation: basepoint out of range");
    const int nv = x.level_size(0);
    const int ne = x.level_size(1);
    auto src = [&](int e) { return x.face(1, 1)[e]; };
    auto dst = [&](int e) { return x.face(1, 0)[e]; };

    // component of the basepoint and a spanning tree (BFS)
    std::vector<bool> in_comp(nv, false);
    std::vector<bool> tree_edge(ne, false);
    std::deque<int> queue{basepoint};
    in_comp[basepoint] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e = 0; e < ne; ++e) {
            int a = src(e), b = dst(e);
            int other = -1;
            if (a == v && !in_comp[b]) other = b;
            else if (b == v && !in_comp[a]) other = a;
            if (other >= 0) {
                in_comp[other] = true;
                tree_edge[e] = true;
                queue.push_back(other);
            }
        }
    }

    Presentation p;
    std::vector<int> gen_of(ne, -1);
    for (int e = 0; e < ne; ++e)
        if (in_comp[src(e)] && in_comp[dst(e)]) gen_of[e] = p.generators++;
    // degenerate edges and tree edges are trivial
    for (int v = 0; v < nv; ++v)
        if (in_comp[v]) p.relators.push_back({gen_of[x.degen(0, 0)[v]] + 1});
    for (int e = 0; e < ne; ++e)
        if (tree_edge[e]) p.relators.push_back({gen_of[e] + 1});
    // one relation per 2-simplex: d1 = d2 . d0
    for (int s = 0; s < x.level_size(2); ++s) {
        int e0 = x.face(2, 0)[s], e1 = x.face(2, 1)[s], e2 = x.face(2, 2)[s];
        if (gen_of[e0] < 0 || gen_of[e1] < 0 || gen_of[e2] < 0) continue;
        p.relators.push_back({gen_of[e2] + 1, gen_of[e0] + 1, -(gen_of[e1] + 1)});
    }
    return p;
}

namespace {

struct CosetTable {
    int ngens;
    int ncols;
    std::vector<std::vector<int>> table;  // table[coset][col], -1 empty
    std::vector<int> parent;
    long long defined = 1;

    explicit CosetTable(int g) : ngens(g), ncols(2 * g) {
        table.emplace_back(ncols, -1);
        parent.push_back(0);
    }
    int col(int signed_gen) const {
        return signed_gen > 0 ? (signed_gen - 1) : (ngens + (-signed_gen - 1));
    }
    int inv_col(int c) const { return c < ngens ? c + ngens : c - ngens; }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    bool live(int a) { return find(a) == a; }
    int get(int a, int c) {
        int t = table[a][c];
        if (t < 0) return -1;
        t = find(t);
        table[a][c] = t;
        return t;
    }
    void set(int a, int c, int b) {
        table[a][c] = b;
        table[b][inv_col(c)] = a;
    }
    int define(int a, int c) {
        table.emplace_back(ncols, -1);
        parent.push_back(int(parent.size()));
        int d = int(parent.size()) - 1;
        set(a, c, d);
        ++defined;
        return d;
    }
    void coincide(int a, int b) {
        std::deque<std::pair<int, int>> q{{a, b}};
        while (!q.empty()) {
            auto [x, y] = q.front();
            q.pop_front();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            parent[y] = x;
            for (int c = 0; c < ncols; ++c) {
                int ty = table[y][c] < 0 ? -1 : find(table[y][c]);
                if (ty < 0) continue;
                int tx = table[x][c] < 0 ? -1 : find(table[x][c]);
                if (tx < 0) set(x, c, ty);
                else if (tx != ty) q.emplace_back(tx, ty);
            }
        }
    }
    // scan relator at coset a, filling gaps (HLT style)
    void scan_and_fill(int a, const std::vector<int>& word) {
        int f = a, i = 0;
        int b = a, j = int(word.size()) - 1;
        for (;;) {
            while (i <= j) {
                int t = get(f, col(word[i]));
                if (t < 0) break;
                f = t;
                ++i;
            }
            if (i > j) {
                if (f != b) coincide(f, b);
                return;
            }
            while (j >= i) {
                int t = get(b, inv_col(col(word[j])));
                if (t < 0) break;
                b = t;
                --j;
            }
            if (j < i) {
                coincide(f, b);
                return;
            }
            if (j == i) {
                set(f, col(word[i]), b);
                return;
            }
            define(f, col(word[i]));
        }
    }
    int live_count() {
        int n = 0;
        for (int a = 0; a < int(parent.size()); ++a)
            if (live(a)) ++n;
        return n;
    }
};

}  // namespace

std::optional<Group> coset_enumeration(const Presentation& p, int coset_cap, long long work_cap) {
    if (p.generators == 0) return trivial_group();
    CosetTable ct(p.generators);
    long long budget = std::max<long long>(work_cap, 20LL * coset_cap);
    for (int a = 0; a < int(ct.parent.size()); ++a) {
        if (!ct.live(a)) continue;
        for (const auto& w : p.relators) {
            ct.scan_and_fill(ct.find(a), w);
            if (ct.defined > budget) return std::nullopt;
            if (!ct.live(a)) break;
        }
        if (!ct.live(a)) continue;
        for (int c = 0; c < ct.ncols; ++c)
            if (ct.live(a) && ct.get(ct.find(a), c) < 0) ct.define(ct.find(a), c);
        if (ct.defined > budget) return std::nullopt;
    }
    int order = ct.live_count();
    if (order > coset_cap) return std::nullopt;
    // canonical numbering with the identity coset first
    std::vector<int> live;
    for (int a = 0; a < int(ct.parent.size()); ++a)
        if (ct.live(a)) live.push_back(a);
    std::vector<int> pos(ct.parent.size(), -1);
    for (int i = 0; i < order; ++i) pos[live[i]] = i;
    // representative words by BFS over generator edges from the identity
    std::vector<std::vector<int>> word(order);
    std::vector<bool> seen(order, false);
    std::deque<int> q{ct.find(0)};
    seen[pos[ct.find(0)]] = true;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (int c = 0; c < ct.ncols; ++c) {
            int t = ct.get(a, c);
            if (t < 0 || seen[pos[t]]) continue;
            seen[pos[t]] = true;
            word[pos[t]] = word[pos[a]];
            word[pos[t]].push_back(c);
            q.push_back(t);
        }
    }
    std::vector<std::vector<int>> mul(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            int c = live[a];
            for (int step : word[b]) c = ct.get(c, step);
            mul[a][b] = pos[c];
        }
    return group_from_table(mul);
}

Pi1Result pi1_edge_path(const TruncSimp& x, int basepoint, int coset_cap) {
    Pi1Result out;
    out.presentation = edge_path_presentation(x, basepoint);
    auto g = coset_enumeration(out.presentation, coset_cap);
    if (g) {
        out.decided = true;
        out.group = *g;
    }
    return out;
}

}  // namespace proetale
