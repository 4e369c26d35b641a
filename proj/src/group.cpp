#include "proetale/group.hpp"

#include <algorithm>
#include <array>

namespace proetale {

Group group_from_table(const std::vector<std::vector<int>>& mul) {
    const int n = int(mul.size());
    if (n == 0) throw ParseError("group table: empty");
    for (int r = 0; r < n; ++r) {
        if (int(mul[r].size()) != n)
            throw ParseError("group table: row " + std::to_string(r) + " has wrong length");
        for (int c = 0; c < n; ++c)
            if (mul[r][c] < 0 || mul[r][c] >= n)
                throw ParseError("group table: entry out of range at row " + std::to_string(r) +
                                 ", col " + std::to_string(c));
    }
    // Latin square
    for (int r = 0; r < n; ++r) {
        std::vector<bool> seen(n, false);
        for (int c = 0; c < n; ++c) {
            if (seen[mul[r][c]])
                throw ParseError("group table: duplicate in row " + std::to_string(r) + ", col " +
                                 std::to_string(c));
            seen[mul[r][c]] = true;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::vector<bool> seen(n, false);
        for (int r = 0; r < n; ++r) {
            if (seen[mul[r][c]])
                throw ParseError("group table: duplicate in col " + std::to_string(c) + ", row " +
                                 std::to_string(r));
            seen[mul[r][c]] = true;
        }
    }
    Group g;
    g.order = n;
    g.mul = mul;
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (mul[cand][x] != x || mul[x][cand] != x) ok = false;
        if (ok) { e = cand; break; }
    }
    if (e < 0) throw ParseError("group table: no identity element");
    g.identity = e;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw ParseError("group table: associativity fails at row " + std::to_string(a) +
                                     ", col " + std::to_string(b));
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == e) g.inverse[a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inverse[a] < 0) throw ParseError("group table: element without inverse");
    return g;
}

Group cyclic_group(int n) {
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return group_from_table(mul);
}

Group trivial_group() { return cyclic_group(1); }

Group direct_product(const Group& a, const Group& b) {
    const int n = a.order * b.order;
    auto enc = [&](int x, int y) { return x * b.order + y; };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    mul[enc(x1, y1)][enc(x2, y2)] = enc(a.op(x1, x2), b.op(y1, y2));
    return group_from_table(mul);
}

Group symmetric_3() {
    // permutations of {0,1,2} listed in lexicographic one-line order
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int n = 6;
    auto index_of = [&](const std::array<int, 3>& q) {
        for (int i = 0; i < n; ++i)
            if (perms[i] == q) return i;
        return -1;
    };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::array<int, 3> q;
            for (int i = 0; i < 3; ++i) q[i] = perms[a][perms[b][i]];  // a after b
            mul[a][b] = index_of(q);
        }
    return group_from_table(mul);
}

Group klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

std::vector<int> cyclic_quotient(int m, int n) {
    if (n <= 0 || m % n != 0) throw ValidationError("cyclic_quotient: target order must divide");
    std::vector<int> f(m);
    for (int i = 0; i < m; ++i) f[i] = i % n;
    return f;
}

bool is_homomorphism(const Group& a, const Group& b, const std::vector<int>& f) {
    if (int(f.size()) != a.order) return false;
    for (int v : f)
        if (v < 0 || v >= b.order) return false;
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < a.order; ++y)
            if (f[a.op(x, y)] != b.op(f[x], f[y])) return false;
    return true;
}

bool is_surjective_map(const std::vector<int>& f, int target_size) {
    std::vector<bool> hit(target_size, false);
    for (int v : f) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

namespace {
int element_order(const Group& g, int x) {
    int n = 1, cur = x;
    while (cur != g.identity) { cur = g.op(cur, x); ++n; }
    return n;
}

bool iso_backtrack(const Group& a, const Group& b, std::vector<int>& img, std::vector<bool>& used,
                   int i) {
    if (i == a.order) return is_homomorphism(a, b, img);
    for (int v = 0; v < b.order; ++v) {
        if (used[v]) continue;
        if (element_order(a, i) != element_order(b, v)) continue;
        // prune with products whose operands and result are already assigned
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
            int p = a.op(j, i);
            if (p < i && b.op(img[j], v) != img[p]) ok = false;
            if (p == i && b.op(img[j], v) != v) ok = false;
            int q = a.op(i, j);
            if (q < i && b.op(v, img[j]) != img[q]) ok = false;
            if (q == i && b.op(v, img[j]) != v) ok = false;
        }
        if (!ok) continue;
        img[i] = v;
        used[v] = true;
        if (iso_backtrack(a, b, img, used, i + 1)) return true;
        used[v] = false;
        img[i] = -1;
    }
    return false;
}
}  // namespace

bool groups_isomorphic(const Group& a, const Group& b) {
    if (a.order != b.order) return false;
    std::vector<int> img(a.order, -1);
    std::vector<bool> used(b.order, false);
    return iso_backtrack(a, b, img, used, 0);
}

}  // namespace proetale
