#include "proetale/homotopies.hpp"

#include <sstream>

namespace proetale {

namespace {
std::string at_nij(const char* what, int n, int i, int j) {
    std::ostringstream os;
    os << what << " at (n, i, j) = (" << n << ", " << i << ", " << j << ")";
    return os.str();
}
}  // namespace

ReducedHomotopy ReducedHomotopy::constant(const TruncSimp& x, const SimpMap& f) {
    ReducedHomotopy rh;
    rh.f = f;
    rh.g = f;
    rh.r.resize(x.dim() + 1);
    for (int n = 0; n <= x.dim(); ++n) rh.r[n].assign(n + 2, f.level[n]);
    return rh;
}

ValidationReport check_reduced_homotopy(const TruncSimp& x, const TruncSimp& y,
                                        const ReducedHomotopy& rh) {
    const int d = x.dim();
    if (auto v = validate_map(x, y, rh.f); !v.ok) return {false, "f: " + v.diagnostic};
    if (auto v = validate_map(x, y, rh.g); !v.ok) return {false, "g: " + v.diagnostic};
    if (int(rh.r.size()) != d + 1) return {false, "family has wrong number of levels"};
    for (int n = 0; n <= d; ++n) {
        if (int(rh.r[n].size()) != n + 2)
            return {false, "family at level " + std::to_string(n) + " has wrong index range"};
        for (int i = 0; i <= n + 1; ++i)
            if (int(rh.r[n][i].size()) != x.level_size(n))
                return {false, "family entry has wrong size at level " + std::to_string(n)};
        if (rh.r[n][0] != rh.f.level[n]) return {false, at_nij("boundary r^0 != f", n, 0, -1)};
        if (rh.r[n][n + 1] != rh.g.level[n]) return {false, at_nij("boundary r^top != g", n, n + 1, -1)};
    }
    for (int n = 1; n <= d; ++n)
        for (int i = 0; i <= n + 1; ++i)
            for (int j = 0; j <= n; ++j)
                for (int e = 0; e < x.level_size(n); ++e) {
                    int lhs = y.face(n, j)[rh.r[n][i][e]];
                    int rhs = (i > j) ? rh.r[n - 1][i - 1][x.face(n, j)[e]]
                                      : rh.r[n - 1][i][x.face(n, j)[e]];
                    if (lhs != rhs) return {false, at_nij("face identity violated", n, i, j)};
                }
    for (int n = 0; n < d; ++n)
        for (int i = 0; i <= n + 1; ++i)
            for (int j = 0; j <= n; ++j)
                for (int e = 0; e < x.level_size(n); ++e) {
                    int lhs = y.degen(n, j)[rh.r[n][i][e]];
                    int rhs = (i > j) ? rh.r[n + 1][i + 1][x.degen(n, j)[e]]
                                      : rh.r[n + 1][i][x.degen(n, j)[e]];
                    if (lhs != rhs) return {false, at_nij("degeneracy identity violated", n, i, j)};
                }
    return {};
}

ValidationReport check_homotopy(const TruncSimp& x, const TruncSimp& y, const Homotopy& h) {
    auto prod = product_with_interval(x);
    if (auto v = validate_map(prod.object, y, h.h); !v.ok) return {false, "h: " + v.diagnostic};
    if (compose(prod.include_f, h.h) != h.f) return {false, "restriction at the f end differs"};
    if (compose(prod.include_g, h.h) != h.g) return {false, "restriction at the g end differs"};
    return {};
}

Homotopy reduced_to_homotopy(const TruncSimp& x, const TruncSimp& y, const ReducedHomotopy& rh) {
    const int d = x.dim();
    Homotopy h;
    h.f = rh.f;
    h.g = rh.g;
    h.h.level.resize(d + 1);
    for (int n = 0; n <= d; ++n) {
        h.h.level[n].resize(x.level_size(n) * (n + 2));
        for (int e = 0; e < x.level_size(n); ++e)
            for (int c = 0; c <= n + 1; ++c) h.h.level[n][e * (n + 2) + c] = rh.r[n][c][e];
    }
    if (auto v = check_homotopy(x, y, h); !v.ok)
        throw ValidationError("reduced_to_homotopy produced an invalid homotopy: " + v.diagnostic);
    return h;
}

ReducedHomotopy homotopy_to_reduced(const TruncSimp& x, const TruncSimp& y, const Homotopy& h) {
    const int d = x.dim();
    ReducedHomotopy rh;
    rh.f = h.f;
    rh.g = h.g;
    rh.r.resize(d + 1);
    for (int n = 0; n <= d; ++n) {
        rh.r[n].assign(n + 2, std::vector<int>(x.level_size(n)));
        for (int e = 0; e < x.level_size(n); ++e)
            for (int c = 0; c <= n + 1; ++c) rh.r[n][c][e] = h.h.level[n][e * (n + 2) + c];
    }
    if (auto v = check_reduced_homotopy(x, y, rh); !v.ok)
        throw ValidationError("homotopy_to_reduced produced an invalid family: " + v.diagnostic);
    return rh;
}

ExtendedReducedHomotopy extend_reduced_homotopy(const TruncSimp& x, const TruncSimp& y,
                                                const ReducedHomotopy& rh) {
    const int n = x.dim();
    if (auto v = check_reduced_homotopy(x, y, rh); !v.ok)
        throw ValidationError("extend_reduced_homotopy: input invalid: " + v.diagnostic);
    ExtendedReducedHomotopy out;
    out.cx_data = coskeleton(x, n, n + 1);
    out.cy_data = coskeleton(y, n, n + 1);
    out.cx = out.cx_data.object;
    out.cy = out.cy_data.object;

    auto lift_level = [&](const SimpMap& base) {
        SimpMap m;
        m.level = base.level;
        std::vector<int> top(out.cx.level_size(n + 1));
        auto slots = injections(n, n + 1);
        std::map<std::vector<int>, int> yindex;
        for (int i = 0; i < out.cy.level_size(n + 1); ++i)
            yindex[out.cy_data.family[n + 1][i]] = i;
        for (int e = 0; e < out.cx.level_size(n + 1); ++e) {
            std::vector<int> img(slots.size());
            for (size_t s = 0; s < slots.size(); ++s)
                img[s] = base.level[n][out.cx_data.family[n + 1][e][s]];
            auto it = yindex.find(img);
            if (it == yindex.end())
                throw ValidationError("extend_reduced_homotopy: image family incompatible");
            top[e] = it->second;
        }
        m.level.push_back(std::move(top));
        return m;
    };
    out.rh.f = lift_level(rh.f);
    out.rh.g = lift_level(rh.g);

    out.rh.r = rh.r;
    out.rh.r.resize(n + 2);
    out.rh.r[n + 1].assign(n + 3, std::vector<int>(out.cx.level_size(n + 1)));
    std::map<std::vector<int>, int> yindex;
    for (int i = 0; i < out.cy.level_size(n + 1); ++i) yindex[out.cy_data.family[n + 1][i]] = i;
    auto slots = injections(n, n + 1);
    // slot s corresponds to the face delta^{j(s)}; j = the missing vertex
    std::vector<int> missing(slots.size());
    for (size_t s = 0; s < slots.size(); ++s) {
        std::vector<bool> hit(n + 2, false);
        for (int v : slots[s].assignment) hit[v] = true;
        for (int v = 0; v <= n + 1; ++v)
            if (!hit[v]) missing[s] = v;
    }
    for (int i = 0; i <= n + 2; ++i) {
        for (int e = 0; e < out.cx.level_size(n + 1); ++e) {
            std::vector<int> img(slots.size());
            for (size_t s = 0; s < slots.size(); ++s) {
                int j = missing[s];
                int comp = out.cx_data.family[n + 1][e][s];
                img[s] = (i > j) ? rh.r[n][i - 1][comp] : rh.r[n][i][comp];
            }
            auto it = yindex.find(img);
            if (it == yindex.end())
                throw ValidationError("extend_reduced_homotopy: produced family is incompatible");
            out.rh.r[n + 1][i][e] = it->second;
        }
    }
    if (auto v = check_reduced_homotopy(out.cx, out.cy, out.rh); !v.ok)
        throw ValidationError("extend_reduced_homotopy: extension fails identities: " + v.diagnostic);
    return out;
}

std::vector<ReducedHomotopy> enumerate_reduced_homotopies(const TruncSimp& x, const TruncSimp& y,
                                                          const SimpMap& f, const SimpMap& g,
                                                          long long cap) {
    const int d = x.dim();
    std::vector<ReducedHomotopy> out;
    ReducedHomotopy rh;
    rh.f = f;
    rh.g = g;
    rh.r.resize(d + 1);
    for (int n = 0; n <= d; ++n) {
        rh.r[n].assign(n + 2, {});
        rh.r[n][0] = f.level[n];
        rh.r[n][n + 1] = g.level[n];
        for (int i = 1; i <= n; ++i) rh.r[n][i].assign(x.level_size(n), -1);
    }
    long long steps = 0;
    // assign r[n][i][e] in order (levels ascending, then i, then e) and check
    // all identities whose participants are already assigned
    auto assigned = [&](int n, int i) { return i == 0 || i == n + 1 || n <= d; };
    (void)assigned;

    std::function<bool(int, int, int, int)> consistent = [&](int n, int i, int e, int val) -> bool {
        // face identities at level n involving r[n][i][e]
        if (n >= 1) {
            for (int j = 0; j <= n; ++j) {
                int rhs_idx = (i > j) ? i - 1 : i;
                const auto& lower = rh.r[n - 1][rhs_idx];
                if (lower.empty()) continue;
                if (y.face(n, j)[val] != lower[x.face(n, j)[e]]) return false;
            }
        }
        // degeneracy identities from level n-1 into level n: s_j r_i' = ...
        if (n >= 1) {
            for (int j = 0; j <= n - 1; ++j)
                for (int e2 = 0; e2 < x.level_size(n - 1); ++e2) {
                    if (x.degen(n - 1, j)[e2] != e) continue;
                    // r at (n-1, i') maps into our value via s_j; i relates as
                    // i = i'+1 (i' > j) or i = i' (i' <= j)
                    for (int ip = 0; ip <= n; ++ip) {
                        int target = (ip > j) ? ip + 1 : ip;
                        if (target != i) continue;
                        const auto& lower = rh.r[n - 1][ip];
                        if (lower.empty() || lower[e2] < 0) continue;
                        if (y.degen(n - 1, j)[lower[e2]] != val) return false;
                    }
                }
        }
        return true;
    };

    std::function<void(int, int, int)> rec = [&](int n, int i, int e) {
        if (++steps > cap) throw SizeCapError("reduced homotopy enumeration exceeded cap");
        if (n > d) {
            if (auto v = check_reduced_homotopy(x, y, rh); v.ok) out.push_back(rh);
            return;
        }
        if (i > n + 1) {
            rec(n + 1, 0, 0);
            return;
        }
        if (i == 0 || i == n + 1) {
            // boundary rows are fixed; still verify their identities hold
            rec(n, i + 1, 0);
            return;
        }
        if (e == x.level_size(n)) {
            rec(n, i + 1, 0);
            return;
        }
        for (int val = 0; val < y.level_size(n); ++val) {
            if (!consistent(n, i, e, val)) continue;
            rh.r[n][i][e] = val;
            rec(n, i, e + 1);
            rh.r[n][i][e] = -1;
        }
    };
    rec(0, 0, 0);
    return out;
}

}  // namespace proetale
