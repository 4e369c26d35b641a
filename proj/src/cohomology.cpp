#include "proetale/cohomology.hpp"

#include <algorithm>
#include <numeric>

namespace proetale {

Coefficient Coefficient::integers() { return Coefficient{{Int(0)}, "Z"}; }

Coefficient Coefficient::cyclic(long long n) {
    if (n <= 0) throw ParseError("cyclic coefficient needs a positive modulus");
    if (n == 1) return zero();
    return Coefficient{{Int(n)}, "Z/" + std::to_string(n)};
}

Coefficient Coefficient::zero() { return Coefficient{{}, "0"}; }

Coefficient Coefficient::from_addition_table(const std::vector<std::vector<int>>& add) {
    Group g = group_from_table(add);  // validates; abelian checked below
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.op(a, b) != g.op(b, a)) throw ParseError("coefficient table is not abelian");
    // recover the invariant factors from the order statistics
    auto count_killed = [&](long long d) {
        int c = 0;
        for (int x = 0; x < g.order; ++x) {
            int cur = g.identity;
            for (long long i = 0; i < d; ++i) cur = g.op(cur, x);
            if (cur == g.identity) ++c;
        }
        return (long long)c;
    };
    std::vector<Int> factors;
    long long remaining = g.order;
    // exponent = largest element order
    auto element_order = [&](int x) {
        long long n = 1;
        int cur = x;
        while (cur != g.identity) { cur = g.op(cur, x); ++n; }
        return n;
    };
    long long expo = 1;
    for (int x = 0; x < g.order; ++x) expo = std::lcm(expo, element_order(x));
    // peel invariant factors from the top: counts divide out gcd(a_top, d)
    std::vector<long long> counts(expo + 1, 0);
    for (long long d = 1; d <= expo; ++d)
        if (expo % d == 0) counts[d] = count_killed(d);
    while (remaining > 1) {
        factors.push_back(Int(expo));
        remaining /= expo;
        for (long long d = 1; d <= expo; ++d)
            if (expo % d == 0) counts[d] /= std::gcd(expo, d);
        // exponent of the remaining group: least d killing everything
        long long next_expo = 0;
        for (long long d = 1; d <= expo && next_expo == 0; ++d)
            if (expo % d == 0 && counts[d] == remaining) next_expo = d;
        expo = next_expo;
        if (expo <= 1 && remaining > 1)
            throw ParseError("coefficient table decomposition failed");
    }
    std::reverse(factors.begin(), factors.end());  // ascending divisibility chain
    Coefficient out;
    out.moduli = factors;
    out.name = "table(" + std::to_string(g.order) + ")";
    return out;
}

Coefficient Coefficient::parse(const std::string& text) {
    if (text == "Z") return integers();
    if (text == "0") return zero();
    if (text.rfind("Z/", 0) == 0) {
        long long n = std::stoll(text.substr(2));
        return cyclic(n);
    }
    throw ParseError("cannot parse coefficient '" + text + "' (expected Z, Z/n or 0)");
}

namespace {

// levelwise component shape of a hypercovering (no wc requirement here; the
// callers enforce their own hypotheses)
TruncSimp component_shape(const FiniteSite& site, const Hypercovering& w) {
    TruncSimp out(w.dim());
    std::vector<std::vector<int>> cls(w.dim() + 1);
    for (int n = 0; n <= w.dim(); ++n) {
        cls[n] = site.component_map(w.level_obj[n]);
        out.set_level_size(n, site.component_count(w.level_obj[n]));
    }
    auto descend = [&](int from, int to, const std::vector<int>& t) {
        std::vector<int> r(out.level_size(from), -1);
        for (int e = 0; e < int(t.size()); ++e) r[cls[from][e]] = cls[to][t[e]];
        return r;
    };
    for (int n = 1; n <= w.dim(); ++n)
        for (int j = 0; j <= n; ++j) out.face(n, j) = descend(n, n - 1, w.shape.face(n, j));
    for (int n = 0; n < w.dim(); ++n)
        for (int j = 0; j <= n; ++j) out.degen(n, j) = descend(n, n + 1, w.shape.degen(n, j));
    return out;
}

}  // namespace

CochainComplex cochain_complex_of_shape(const TruncSimp& shape, const Coefficient& a, int p_max) {
    if (shape.dim() < p_max + 1)
        throw ValidationError("cochain_complex: requires truncation to dimension >= " +
                              std::to_string(p_max + 1) + ", have " + std::to_string(shape.dim()));
    CochainComplex c;
    c.coeff = a;
    for (int n = 0; n <= p_max + 1; ++n) c.ranks.push_back(shape.level_size(n));
    for (int n = 0; n <= p_max; ++n) {
        IntMat m(c.ranks[n + 1], c.ranks[n]);
        for (int e = 0; e < c.ranks[n + 1]; ++e)
            for (int j = 0; j <= n + 1; ++j) {
                int t = shape.face(n + 1, j)[e];
                m.at(e, t) += (j % 2 == 0) ? 1 : -1;
            }
        c.d.push_back(std::move(m));
    }
    for (int n = 0; n + 1 <= p_max; ++n)
        if (!(c.d[n + 1] * c.d[n]).is_zero())
            throw ValidationError("cochain_complex: d o d != 0 at degree " + std::to_string(n));
    return c;
}

CochainComplex cochain_complex(const FiniteSite& site, const Hypercovering& w, const PiSheaf& f,
                               int p_max) {
    if (w.dim() < p_max + 1)
        throw ValidationError("cochain_complex: requires truncation to dimension >= " +
                              std::to_string(p_max + 1) + ", have " + std::to_string(w.dim()));
    if (auto v = check_hypercovering(site, w); !v.ok)
        throw ValidationError("cochain_complex: not a hypercovering: " + v.diagnostic);
    if (!is_split_wc(site, w))
        throw ValidationError("cochain_complex: input is not split weakly contractible");
    return cochain_complex_of_shape(component_shape(site, w), f.coeff, p_max);
}

namespace {

// Cocycles mod q presented through one shared Smith form of the outgoing
// differential.  Lattice L = { x : dcur x = 0 mod q }, subgroup spanned by
// the incoming differential (plus q-multiples when q > 0).
Subquotient cocycle_subquotient(const IntMat& dprev, const SmithForm& s, const Int& q) {
    const int k = s.V.cols();
    if (q == 0) {
        // kernel basis: columns of Vinv beyond the rank; left inverse: the
        // matching rows of V
        IntMat basis = s.Vinv.cols_slice(s.rank, k);
        IntMat pre = s.V.rows_slice(s.rank, k);
        std::vector<Int> ones(k - s.rank, Int(1));
        return Subquotient::with_inverse(std::move(basis), std::move(pre), std::move(ones), dprev);
    }
    std::vector<Int> t(k, Int(1));
    for (int i = 0; i < s.rank; ++i) {
        Int g = boost::multiprecision::gcd(q, s.D.at(i, i));
        t[i] = q / g;
    }
    IntMat basis = s.Vinv.scaled_columns(t);
    IntMat qid(k, k);
    for (int i = 0; i < k; ++i) qid.at(i, i) = q;
    return Subquotient::with_inverse(std::move(basis), s.V, t, dprev.hconcat(qid));
}

std::vector<Subquotient> cocycle_factors(const IntMat& dprev, const IntMat& dcur,
                                         const std::vector<Int>& moduli) {
    std::vector<Subquotient> out;
    if (moduli.empty()) return out;
    SmithForm s = smith_normal_form(dcur);
    for (const Int& q : moduli) {
        if (q < 0) throw ValidationError("cohomology: negative modulus");
        out.push_back(cocycle_subquotient(dprev, s, q));
    }
    return out;
}

AbelianGroup combine(const std::vector<AbelianGroup>& parts) {
    // canonical invariant factors of the direct sum via a diagonal relation
    std::vector<Int> torsion;
    int free_rank = 0;
    for (const auto& p : parts) {
        torsion.insert(torsion.end(), p.torsion.begin(), p.torsion.end());
        free_rank += p.free_rank;
    }
    IntMat diag(int(torsion.size()), int(torsion.size()));
    for (int i = 0; i < int(torsion.size()); ++i) diag.at(i, i) = torsion[i];
    AbelianGroup out = cokernel(diag);
    out.free_rank += free_rank;
    return out;
}

}  // namespace

CohomologyAt cohomology_at(const CochainComplex& c, int p) {
    if (p < 0 || p >= int(c.d.size()) || p >= int(c.ranks.size()))
        throw ValidationError("cohomology: degree out of range");
    IntMat dprev = (p > 0) ? c.d[p - 1] : IntMat(c.ranks[p], 0);
    CohomologyAt out;
    out.factors = cocycle_factors(dprev, c.d[p], c.coeff.moduli);
    std::vector<AbelianGroup> parts;
    for (const auto& f : out.factors) parts.push_back(f.group());
    out.group = combine(parts);
    return out;
}

AbelianGroup cohomology(const CochainComplex& c, int p) { return cohomology_at(c, p).group; }

namespace {

// inhomogeneous cochain differentials built straight from the multiplication
// table; the independent route never touches the simplicial machinery
struct BarData {
    IntMat dprev, dcur;
};

BarData bar_differentials(const Group& g, int p, long long cap) {
    if (p < 0) throw ValidationError("group_cohomology_oracle: negative degree");
    long long size = 1;
    for (int i = 0; i <= p; ++i) {
        size *= g.order;
        if (size > cap) throw SizeCapError("group_cohomology_oracle: |G|^(p+1) exceeds cap");
    }
    auto rank = [&](int n) {
        long long r = 1;
        for (int i = 0; i < n; ++i) r *= g.order;
        return int(r);
    };
    auto digits = [&](int n, long long code) {
        std::vector<int> t(n);
        for (int i = n - 1; i >= 0; --i) {
            t[i] = int(code % g.order);
            code /= g.order;
        }
        return t;
    };
    auto encode = [&](const std::vector<int>& t) {
        long long code = 0;
        for (int v : t) code = code * g.order + v;
        return int(code);
    };
    auto differential = [&](int n) {
        IntMat m(rank(n + 1), rank(n));
        for (int e = 0; e < rank(n + 1); ++e) {
            auto t = digits(n + 1, e);
            {  // drop the first entry
                std::vector<int> r(t.begin() + 1, t.end());
                m.at(e, encode(r)) += 1;
            }
            for (int i = 1; i <= n; ++i) {
                auto r = t;
                r[i - 1] = g.op(t[i - 1], t[i]);
                r.erase(r.begin() + i);
                m.at(e, encode(r)) += (i % 2 == 0) ? 1 : -1;
            }
            {  // drop the last entry
                std::vector<int> r(t.begin(), t.end() - 1);
                m.at(e, encode(r)) += ((n + 1) % 2 == 0) ? 1 : -1;
            }
        }
        return m;
    };
    BarData out;
    out.dcur = differential(p);
    out.dprev = (p > 0) ? differential(p - 1) : IntMat(rank(p), 0);
    if (p > 0 && !(out.dcur * out.dprev).is_zero())
        throw ValidationError("group_cohomology_oracle: d o d != 0");
    return out;
}

}  // namespace

std::vector<AbelianGroup> group_cohomology_oracle_multi(const Group& g,
                                                        const std::vector<Int>& moduli, int p,
                                                        long long cap) {
    BarData bar = bar_differentials(g, p, cap);
    std::vector<AbelianGroup> out;
    for (const auto& f : cocycle_factors(bar.dprev, bar.dcur, moduli)) out.push_back(f.group());
    return out;
}

AbelianGroup group_cohomology_oracle(const Group& g, const Coefficient& a, int p, long long cap) {
    return combine(group_cohomology_oracle_multi(g, a.moduli, p, cap));
}

VerdierResult verdier_colimit(const GaloisSystem& sys, const Coefficient& a, int p) {
    if (auto v = validate_galois_system(sys); !v.ok)
        throw ValidationError("verdier_colimit: invalid system: " + v.diagnostic);
    auto ht = pro_homotopy_type(sys, p + 1);
    VerdierResult out;
    std::vector<CochainComplex> complexes;
    std::vector<CohomologyAt> groups;
    for (int i = 0; i < sys.size(); ++i) {
        complexes.push_back(cochain_complex_of_shape(ht.values[i].space.shape, a, p));
        groups.push_back(cohomology_at(complexes[i], p));
        out.stages.push_back({sys.names[i], groups[i].group});
    }
    int m = minimum_node(sys);
    out.colimit = groups[m].group;
    // inflation from each cover of the minimum down to the minimum
    for (int c : covers_of_minimum(sys)) {
        out.checked_transitions.emplace_back(c, m);
        // chain-map matrix in degree p: precomposition with the simplicial
        // transition B(G_m) -> B(G_c)
        const SimpMap& t = ht.transitions.at({m, c});
        IntMat big(complexes[m].ranks[p], complexes[c].ranks[p]);
        for (int e = 0; e < complexes[m].ranks[p]; ++e) big.at(e, t.level[p][e]) = 1;
        // chain-map property in the relevant degrees
        IntMat big1(complexes[m].ranks[p + 1], complexes[c].ranks[p + 1]);
        for (int e = 0; e < complexes[m].ranks[p + 1]; ++e) big1.at(e, t.level[p + 1][e]) = 1;
        if (!((complexes[m].d[p] * big == big1 * complexes[c].d[p])))
            throw ValidationError("verdier_colimit: transition is not a chain map");
        bool iso = true;
        for (size_t f = 0; f < groups[m].factors.size() && iso; ++f) {
            auto im = induced_map(groups[c].factors[f], groups[m].factors[f], big);
            if (!induced_map_is_isomorphism(groups[c].factors[f], groups[m].factors[f], im))
                iso = false;
        }
        if (!iso) out.stabilized = false;
    }
    return out;
}

IntMat pi_sheaf_restriction(const FiniteSite& site, const SiteObj& x, const SiteObj& y,
                            const std::vector<int>& f) {
    if (!site.is_morphism(x, y, f)) throw ValidationError("pi_sheaf_restriction: not a morphism");
    auto cx = site.component_map(x);
    auto cy = site.component_map(y);
    int nx = site.component_count(x), ny = site.component_count(y);
    std::vector<int> induced(nx, -1);
    for (int e = 0; e < obj_size(x); ++e) induced[cx[e]] = cy[f[e]];
    IntMat m(nx, ny);
    for (int i = 0; i < nx; ++i) m.at(i, induced[i]) = 1;
    return m;
}

bool restriction_matrix_invertible(const IntMat& m) {
    if (m.rows() != m.cols()) return false;
    auto s = smith_normal_form(m);
    if (s.rank != m.rows()) return false;
    for (int i = 0; i < s.rank; ++i)
        if (s.D.at(i, i) != 1) return false;
    return true;
}

bool pi_sheaf_check(const FiniteSite& site, const SiteObj& x, const SiteObj& y,
                    const std::vector<int>& f) {
    return restriction_matrix_invertible(pi_sheaf_restriction(site, x, y, f));
}

}  // namespace proetale
