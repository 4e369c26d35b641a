#include "proetale/classifying.hpp"

#include <cmath>

namespace proetale {

namespace {
long long ipow(int b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}
}  // namespace

TruncSimp nerve(const Group& g, int d) {
    TruncSimp x(d);
    const int o = g.order;
    for (int n = 0; n <= d; ++n) x.set_level_size(n, int(ipow(o, n)));
    auto digits = [&](int n, long long code) {
        std::vector<int> t(n);
        for (int i = n - 1; i >= 0; --i) {
            t[i] = int(code % o);
            code /= o;
        }
        return t;
    };
    auto encode = [&](const std::vector<int>& t) {
        long long code = 0;
        for (int v : t) code = code * o + v;
        return int(code);
    };
    for (int n = 1; n <= d; ++n)
        for (int j = 0; j <= n; ++j) {
            auto& table = x.face(n, j);
            table.resize(x.level_size(n));
            for (int e = 0; e < x.level_size(n); ++e) {
                auto t = digits(n, e);
                std::vector<int> r;
                if (j == 0) r.assign(t.begin() + 1, t.end());
                else if (j == n) r.assign(t.begin(), t.end() - 1);
                else {
                    r = t;
                    r[j - 1] = g.op(t[j - 1], t[j]);
                    r.erase(r.begin() + j);
                }
                table[e] = encode(r);
            }
        }
    for (int n = 0; n < d; ++n)
        for (int j = 0; j <= n; ++j) {
            auto& table = x.degen(n, j);
            table.resize(x.level_size(n));
            for (int e = 0; e < x.level_size(n); ++e) {
                auto t = digits(n, e);
                t.insert(t.begin() + j, g.identity);
                table[e] = encode(t);
            }
        }
    return x;
}

ClassifyingSpace classifying_space(const Group& g, int d) {
    if (d < 0) throw ValidationError("classifying_space: negative dimension");
    ClassifyingSpace out;
    out.group = g;
    GSetSite site(g);
    SiteObj reg = SiteObj(site.regular());
    out.tower = cech_hypercovering(site, reg, std::vector<int>(g.order, 0), d);
    out.space = pi_of_hypercovering(site, out.tower);
    out.nerve_shape = nerve(g, d);

    // canonical isomorphism: the orbit of a vertex tuple goes to its sequence
    // of successive quotients
    out.iso.level.resize(d + 1);
    for (int n = 0; n <= d; ++n) {
        auto cls = site.component_map(out.tower.level_obj[n]);
        out.iso.level[n].assign(out.space.shape.level_size(n), -1);
        for (int e = 0; e < out.tower.shape.level_size(n); ++e) {
            // vertex tuple of the Cech element via iterated faces
            std::vector<int> verts(n + 1);
            for (int v = 0; v <= n; ++v) {
                DeltaMap inc{0, n, {v}};
                verts[v] = out.tower.shape.act(inc, e);
            }
            long long code = 0;
            for (int v = 1; v <= n; ++v) code = code * g.order + g.op(g.inv(verts[v - 1]), verts[v]);
            int orbit = cls[e];
            int target = int(code);
            if (out.iso.level[n][orbit] >= 0 && out.iso.level[n][orbit] != target)
                throw ValidationError("classifying_space: quotient sequence not orbit-invariant");
            out.iso.level[n][orbit] = target;
        }
    }
    if (auto v = validate_map(out.space.shape, out.nerve_shape, out.iso); !v.ok)
        throw ValidationError("classifying_space: certificate map invalid: " + v.diagnostic);
    for (int n = 0; n <= d; ++n) {
        if (out.space.shape.level_size(n) != out.nerve_shape.level_size(n))
            throw ValidationError("classifying_space: level size mismatch with the nerve");
        std::vector<bool> hit(out.nerve_shape.level_size(n), false);
        for (int v : out.iso.level[n]) {
            if (v < 0 || hit[v]) throw ValidationError("classifying_space: certificate not bijective");
            hit[v] = true;
        }
    }
    return out;
}

}  // namespace proetale
