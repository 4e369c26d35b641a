#include "proetale/finspace.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>

namespace proetale {

namespace {
constexpr int kMaxPoints = 4096;

int blocks_for(int n) { return (n + 63) >> 6; }

bool set_get(const PointSet& s, int i) { return (s[i >> 6] >> (i & 63)) & 1u; }
void set_put(PointSet& s, int i) { s[i >> 6] |= uint64_t(1) << (i & 63); }

}  // namespace

void FiniteSpace::init_bits(int n) {
    if (n > kMaxPoints) throw SizeCapError("FiniteSpace: too many points");
    blocks_ = blocks_for(n);
    bits_.assign(size_t(n) * blocks_, 0);
    for (int i = 0; i < n; ++i) add_leq(i, i);
}

FiniteSpace::FiniteSpace(std::vector<std::string> points,
                         const std::vector<std::pair<int, int>>& leq_pairs)
    : points_(std::move(points)) {
    const int n = int(points_.size());
    init_bits(n);
    for (auto [a, b] : leq_pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw ValidationError("FiniteSpace: leq index out of range");
        add_leq(a, b);
    }
    // transitive closure on the flat rows
    for (bool changed = true; changed;) {
        changed = false;
        for (int b = 0; b < n; ++b) {
            uint64_t* row = &bits_[size_t(b) * blocks_];
            for (int a = 0; a < n; ++a) {
                if (!((row[a >> 6] >> (a & 63)) & 1u)) continue;
                const uint64_t* arow = &bits_[size_t(a) * blocks_];
                for (int k = 0; k < blocks_; ++k) {
                    uint64_t merged = row[k] | arow[k];
                    if (merged != row[k]) {
                        row[k] = merged;
                        changed = true;
                    }
                }
            }
        }
    }
}

FiniteSpace FiniteSpace::from_relation(std::vector<std::string> points,
                                       const std::function<bool(int, int)>& leq) {
    FiniteSpace out;
    out.points_ = std::move(points);
    const int n = int(out.points_.size());
    out.init_bits(n);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            if (a != b && leq(a, b)) out.add_leq(a, b);
    return out;
}

int FiniteSpace::below_count(int i) const {
    int c = 0;
    for (int k = 0; k < blocks_; ++k) c += std::popcount(bits_[size_t(i) * blocks_ + k]);
    return c;
}

FiniteSpace FiniteSpace::discrete(int n, const std::string& prefix) {
    std::vector<std::string> pts;
    for (int i = 0; i < n; ++i) pts.push_back(prefix + std::to_string(i));
    return FiniteSpace(std::move(pts), {});
}

FiniteSpace FiniteSpace::sierpinski() { return FiniteSpace({"closed", "open"}, {{0, 1}}); }

PointSet FiniteSpace::make_set() const { return PointSet(blocks_for(size()), 0); }

bool FiniteSpace::is_discrete() const {
    for (int i = 0; i < size(); ++i)
        if (below_count(i) != 1) return false;
    return true;
}

bool FiniteSpace::is_open(const PointSet& subset) const {
    for (int i = 0; i < size(); ++i) {
        if (!set_get(subset, i)) continue;
        for (int k = 0; k < blocks_; ++k)
            if (bits_[size_t(i) * blocks_ + k] & ~subset[k]) return false;
    }
    return true;
}

PointSet FiniteSpace::closure(const PointSet& subset) const {
    // cl(S) = upward closure = { x : some s in S with s <= x }
    PointSet out = make_set();
    for (int i = 0; i < size(); ++i) {
        bool meet = false;
        for (int k = 0; k < blocks_ && !meet; ++k)
            if (bits_[size_t(i) * blocks_ + k] & subset[k]) meet = true;
        if (meet) set_put(out, i);
    }
    return out;
}

std::vector<int> FiniteSpace::component_ids() const {
    const int n = size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            if (leq(a, b)) {
                int ra = find(a), rb = find(b);
                if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
            }
    std::vector<int> ids(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (ids[r] < 0) ids[r] = next++;
        ids[i] = ids[r];
    }
    return ids;
}

int FiniteSpace::component_count() const {
    auto ids = component_ids();
    return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

FiniteSpace FiniteSpace::disjoint_union(const FiniteSpace& other) const {
    const int n = size(), m = other.size();
    FiniteSpace out;
    out.points_ = points_;
    for (const auto& p : other.points_) out.points_.push_back(p + "'");
    out.init_bits(n + m);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            if (leq(a, i)) out.add_leq(a, i);
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < m; ++a)
            if (other.leq(a, i)) out.add_leq(n + a, n + i);
    return out;
}

FiniteSpace FiniteSpace::product(const FiniteSpace& other) const {
    const int n = size(), m = other.size();
    if (int64_t(n) * m > kMaxPoints) throw SizeCapError("product too large");
    FiniteSpace out;
    out.points_.reserve(size_t(n) * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) out.points_.push_back("(" + points_[i] + "," + other.points_[j] + ")");
    out.init_bits(n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < m; ++b)
                    if (leq(a, i) && other.leq(b, j)) out.add_leq(a * m + b, i * m + j);
    return out;
}

FiniteSpace FiniteSpace::subspace(const std::vector<int>& keep) const {
    FiniteSpace out;
    out.points_.reserve(keep.size());
    for (int k : keep) out.points_.push_back(points_[k]);
    out.init_bits(int(keep.size()));
    for (int k = 0; k < int(keep.size()); ++k)
        for (int l = 0; l < int(keep.size()); ++l)
            if (leq(keep[l], keep[k])) out.add_leq(l, k);
    return out;
}

bool is_continuous(const SpaceMap& f) {
    const auto& x = f.source;
    const auto& y = f.target;
    if (int(f.map.size()) != x.size()) return false;
    for (int v : f.map)
        if (v < 0 || v >= y.size()) return false;
    for (int b = 0; b < x.size(); ++b)
        for (int a = 0; a < x.size(); ++a)
            if (x.leq(a, b) && !y.leq(f.map[a], f.map[b])) return false;
    return true;
}

bool is_surjective(const SpaceMap& f) {
    std::vector<bool> hit(f.target.size(), false);
    for (int v : f.map) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FiniteSpace quotient_space(const FiniteSpace& x, const std::vector<int>& class_of, int num_classes) {
    if (num_classes > 15) throw SizeCapError("quotient_space: more than 2^15 candidate opens");
    std::array<uint32_t, 15> min_open;
    min_open.fill(~uint32_t(0));
    if (x.size() <= 64) {
        // single-word fast path over all candidate opens
        std::array<uint64_t, 15> preimage{};
        std::array<uint64_t, 64> below{};
        for (int i = 0; i < x.size(); ++i) {
            preimage[class_of[i]] |= uint64_t(1) << i;
            for (int a = 0; a < x.size(); ++a)
                if (x.leq(a, i)) below[i] |= uint64_t(1) << a;
        }
        for (uint32_t v = 0; v < (uint32_t(1) << num_classes); ++v) {
            uint64_t pre = 0;
            for (int c = 0; c < num_classes; ++c)
                if ((v >> c) & 1u) pre |= preimage[c];
            bool open = true;
            uint64_t rest = pre;
            while (rest && open) {
                int i = std::countr_zero(rest);
                rest &= rest - 1;
                if (below[i] & ~pre) open = false;
            }
            if (!open) continue;
            for (int b = 0; b < num_classes; ++b)
                if ((v >> b) & 1u) min_open[b] &= v;
        }
    } else {
        std::vector<PointSet> preimage(num_classes, x.make_set());
        for (int i = 0; i < x.size(); ++i) set_put(preimage[class_of[i]], i);
        for (uint32_t v = 0; v < (uint32_t(1) << num_classes); ++v) {
            PointSet pre = x.make_set();
            for (int c = 0; c < num_classes; ++c)
                if ((v >> c) & 1u)
                    for (size_t k = 0; k < pre.size(); ++k) pre[k] |= preimage[c][k];
            if (!x.is_open(pre)) continue;
            for (int b = 0; b < num_classes; ++b)
                if ((v >> b) & 1u) min_open[b] &= v;
        }
    }
    // specialization preorder of the quotient topology: a <= b iff a lies in
    // every open containing b
    std::vector<std::string> labels(num_classes);
    std::vector<int> least(num_classes, -1);
    for (int i = x.size() - 1; i >= 0; --i) least[class_of[i]] = i;
    for (int c = 0; c < num_classes; ++c)
        labels[c] = least[c] >= 0 ? x.label(least[c]) : ("q" + std::to_string(c));
    return FiniteSpace::from_relation(std::move(labels), [&](int a, int b) {
        return (min_open[b] >> a) & 1u;
    });
}

ComponentsResult components(const FiniteSpace& x) {
    auto ids = x.component_ids();
    int k = ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
    FiniteSpace q = quotient_space(x, ids, k);
    // post-conditions, checked without building temporaries: the quotient is
    // totally disconnected and the class map is continuous
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && (q.leq(a, b) || q.leq(b, a)))
                throw ValidationError("components: quotient not totally disconnected");
    for (int b = 0; b < x.size(); ++b)
        for (int a = 0; a < x.size(); ++a)
            if (x.leq(a, b) && !q.leq(ids[a], ids[b]))
                throw ValidationError("components: quotient map not continuous");
    SpaceMap quot{x, std::move(q), std::move(ids)};
    FiniteSpace space = quot.target;
    return ComponentsResult{std::move(space), std::move(quot)};
}

bool is_totally_disconnected(const FiniteSpace& x) {
    auto ids = x.component_ids();
    std::vector<int> count(x.component_count(), 0);
    for (int c : ids) count[c]++;
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

bool is_extremally_disconnected(const FiniteSpace& x) {
    // finite profinite = finite Hausdorff = discrete
    if (!x.is_discrete()) return false;
    if (x.size() <= 16) {
        for (uint64_t s = 0; s < (uint64_t(1) << x.size()); ++s) {
            PointSet sub = x.make_set();
            sub[0] = s;
            if (x.is_open(sub) && !x.is_open(x.closure(sub))) return false;
        }
    }
    return true;
}

namespace {
void extend_monotone(const FiniteSpace& x, const FiniteSpace& t, std::vector<int>& partial, int i,
                     const std::function<void(const std::vector<int>&)>& emit) {
    if (i == x.size()) {
        emit(partial);
        return;
    }
    for (int v = 0; v < t.size(); ++v) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
            if (x.leq(j, i) && !t.leq(partial[j], v)) ok = false;
            if (x.leq(i, j) && !t.leq(v, partial[j])) ok = false;
        }
        if (!ok) continue;
        partial[i] = v;
        extend_monotone(x, t, partial, i + 1, emit);
    }
}
}  // namespace

std::vector<std::vector<int>> enumerate_continuous_maps(const FiniteSpace& x, const FiniteSpace& t) {
    std::vector<std::vector<int>> out;
    if (x.size() == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> partial(x.size(), 0);
    extend_monotone(x, t, partial, 0, [&](const std::vector<int>& m) { out.push_back(m); });
    return out;
}

long long hom_space_count(const FiniteSpace& x, const FiniteSpace& t) {
    if (x.size() == 0) return 1;
    long long n = 0;
    std::vector<int> partial(x.size(), 0);
    extend_monotone(x, t, partial, 0, [&](const std::vector<int>&) { ++n; });
    return n;
}

FibreProductResult fibre_product_over_components(const FiniteSpace& p, const SpaceMap& f,
                                                 const FiniteSpace& s) {
    if (!is_totally_disconnected(p)) throw ValidationError("fibre product: P is not totally disconnected");
    auto comp = components(s);
    if (!(f.target == comp.space))
        throw ValidationError("fibre product: target of f is not the component space of S");
    if (!(f.source == p) || !is_continuous(f))
        throw ValidationError("fibre product: f is not a continuous map from P");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < s.size(); ++b)
            if (f.map[a] == comp.quotient.map[b]) pairs.emplace_back(a, b);
    std::vector<std::string> pts;
    pts.reserve(pairs.size());
    for (auto [a, b] : pairs) pts.push_back("(" + p.label(a) + "," + s.label(b) + ")");
    // the restriction of a product preorder is already transitive
    FiniteSpace fp = FiniteSpace::from_relation(std::move(pts), [&](int i, int j) {
        return p.leq(pairs[i].first, pairs[j].first) && s.leq(pairs[i].second, pairs[j].second);
    });
    std::vector<int> prp(pairs.size()), prs(pairs.size());
    for (int i = 0; i < int(pairs.size()); ++i) {
        prp[i] = pairs[i].first;
        prs[i] = pairs[i].second;
    }
    return FibreProductResult{fp, SpaceMap{fp, p, prp}, SpaceMap{fp, s, prs}};
}

namespace {
bool homeo_backtrack(const FiniteSpace& a, const FiniteSpace& b, std::vector<int>& img,
                     std::vector<bool>& used, int i) {
    if (i == a.size()) return true;
    for (int v = 0; v < b.size(); ++v) {
        if (used[v]) continue;
        bool ok = a.below_count(i) == b.below_count(v);
        for (int j = 0; j < i && ok; ++j) {
            if (a.leq(j, i) != b.leq(img[j], v)) ok = false;
            if (a.leq(i, j) != b.leq(v, img[j])) ok = false;
        }
        if (!ok) continue;
        img[i] = v;
        used[v] = true;
        if (homeo_backtrack(a, b, img, used, i + 1)) return true;
        used[v] = false;
    }
    return false;
}
}  // namespace

std::optional<std::vector<int>> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.size() > 12 || b.size() > 12) throw SizeCapError("find_homeomorphism: capped at 12 points");
    if (a.size() != b.size()) return std::nullopt;
    std::vector<int> img(a.size(), -1);
    std::vector<bool> used(b.size(), false);
    if (homeo_backtrack(a, b, img, used, 0)) return img;
    return std::nullopt;
}

bool homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
    return find_homeomorphism(a, b).has_value();
}

SpaceMap components_functor(const SpaceMap& f) {
    auto cx = components(f.source);
    auto cy = components(f.target);
    std::vector<int> m(cx.space.size(), -1);
    for (int i = 0; i < f.source.size(); ++i) {
        int from = cx.quotient.map[i];
        int to = cy.quotient.map[f.map[i]];
        if (m[from] >= 0 && m[from] != to)
            throw ValidationError("components_functor: map does not descend");
        m[from] = to;
    }
    return SpaceMap{cx.space, cy.space, m};
}

}  // namespace proetale
