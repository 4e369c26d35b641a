#include "proetale/delta.hpp"

#include <algorithm>
#include <functional>

namespace proetale {

bool DeltaMap::is_valid() const {
    if (int(assignment.size()) != src + 1) return false;
    for (int i = 0; i <= src; ++i) {
        if (assignment[i] < 0 || assignment[i] > dst) return false;
        if (i > 0 && assignment[i] < assignment[i - 1]) return false;
    }
    return true;
}

bool DeltaMap::is_injective() const {
    for (int i = 1; i <= src; ++i)
        if (assignment[i] == assignment[i - 1]) return false;
    return true;
}

bool DeltaMap::is_surjective() const {
    std::vector<bool> hit(dst + 1, false);
    for (int v : assignment) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool DeltaMap::is_identity() const {
    if (src != dst) return false;
    for (int i = 0; i <= src; ++i)
        if (assignment[i] != i) return false;
    return true;
}

DeltaMap delta_identity(int n) {
    DeltaMap d{n, n, {}};
    for (int i = 0; i <= n; ++i) d.assignment.push_back(i);
    return d;
}

DeltaMap delta_face(int n, int j) {
    DeltaMap d{n - 1, n, {}};
    for (int i = 0; i <= n - 1; ++i) d.assignment.push_back(i < j ? i : i + 1);
    return d;
}

DeltaMap delta_degeneracy(int n, int j) {
    DeltaMap d{n + 1, n, {}};
    for (int i = 0; i <= n + 1; ++i) d.assignment.push_back(i <= j ? i : i - 1);
    return d;
}

DeltaMap delta_compose(const DeltaMap& f, const DeltaMap& g) {
    if (f.dst != g.src) throw ValidationError("delta_compose: shape mismatch");
    DeltaMap d{f.src, g.dst, {}};
    for (int i = 0; i <= f.src; ++i) d.assignment.push_back(g.assignment[f.assignment[i]]);
    return d;
}

EpiMono delta_factor(const DeltaMap& f) {
    std::vector<int> image;
    for (int v : f.assignment)
        if (image.empty() || image.back() != v) image.push_back(v);
    int k = int(image.size()) - 1;
    DeltaMap mono{k, f.dst, image};
    DeltaMap epi{f.src, k, {}};
    for (int v : f.assignment)
        epi.assignment.push_back(int(std::lower_bound(image.begin(), image.end(), v) - image.begin()));
    return EpiMono{epi, mono};
}

std::vector<int> epi_word(const DeltaMap& epi) {
    // Returns the degeneracy word in contravariant application order: acting
    // on a simplicial object, X(epi) = s_{w_last} o ... o s_{w_0} with s_{w_t}
    // raising level dst+t -> dst+t+1.
    std::vector<int> word;
    DeltaMap cur = epi;
    while (cur.src > cur.dst) {
        int j = 0;
        while (cur.assignment[j] != cur.assignment[j + 1]) ++j;
        // cur = cur' o sigma^{j} with cur' defined on [src-1]
        word.push_back(j);
        DeltaMap next{cur.src - 1, cur.dst, {}};
        for (int i = 0; i <= cur.src; ++i)
            if (i != j) next.assignment.push_back(cur.assignment[i]);
        cur = next;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<int> mono_word(const DeltaMap& mono) {
    // Returns the face word in contravariant application order: X(mono) =
    // d_{w_last} o ... o d_{w_0} with d_{w_0} acting at level dst.
    std::vector<int> word;
    DeltaMap cur = mono;
    while (cur.src < cur.dst) {
        std::vector<bool> hit(cur.dst + 1, false);
        for (int v : cur.assignment) hit[v] = true;
        int j = 0;
        while (hit[j]) ++j;  // cur = delta^{j} o cur'
        word.push_back(j);
        DeltaMap next{cur.src, cur.dst - 1, {}};
        for (int v : cur.assignment) next.assignment.push_back(v < j ? v : v - 1);
        cur = next;
    }
    return word;
}

std::vector<DeltaMap> injections(int k, int m) {
    std::vector<DeltaMap> out;
    if (k > m) return out;
    std::vector<int> pick(k + 1);
    // lexicographic combinations of k+1 values out of 0..m
    std::function<void(int, int)> rec = [&](int idx, int from) {
        if (idx == k + 1) {
            out.push_back(DeltaMap{k, m, pick});
            return;
        }
        for (int v = from; v <= m - (k - idx); ++v) {
            pick[idx] = v;
            rec(idx + 1, v + 1);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<DeltaMap> surjections(int m, int k) {
    std::vector<DeltaMap> out;
    if (k > m) return out;
    std::vector<int> a(m + 1);
    std::function<void(int, int)> rec = [&](int idx, int cur) {
        if (idx == m + 1) {
            if (cur == k) out.push_back(DeltaMap{m, k, a});
            return;
        }
        // next value is cur or cur+1 (monotone surjection onto 0..k)
        a[idx] = cur;
        rec(idx + 1, cur);
        if (cur + 1 <= k && (m - idx) >= (k - cur - 1)) {
            a[idx] = cur + 1;
            rec(idx + 1, cur + 1);
        }
    };
    a[0] = 0;
    rec(1, 0);
    return out;
}

std::vector<DeltaMap> all_monotone(int a, int b) {
    std::vector<DeltaMap> out;
    std::vector<int> v(a + 1);
    std::function<void(int, int)> rec = [&](int idx, int from) {
        if (idx == a + 1) {
            out.push_back(DeltaMap{a, b, v});
            return;
        }
        for (int val = from; val <= b; ++val) {
            v[idx] = val;
            rec(idx + 1, val);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace proetale
