#pragma once

// Cohomology of the homotopy type with constant coefficient sheaves that
// factor through components, an independent bar-resolution oracle for group
// cohomology, and stabilization over systems of finite quotients.

#include "proetale/exact.hpp"
#include "proetale/pro.hpp"
#include "proetale/space_simp.hpp"

namespace proetale {

// Finitely generated abelian coefficient group as a list of cyclic moduli
// (0 stands for a free factor); cohomology is computed factorwise.
struct Coefficient {
    std::vector<Int> moduli;
    std::string name;

    static Coefficient integers();
    static Coefficient cyclic(long long n);
    static Coefficient zero();
    static Coefficient from_addition_table(const std::vector<std::vector<int>>& add);
    static Coefficient parse(const std::string& text);  // "Z", "Z/6", "0"
};

// A constant sheaf valued A^{components(X)}; restriction along a morphism is
// precomposition with the induced map on components.
struct PiSheaf {
    Coefficient coeff;
};

struct CochainComplex {
    Coefficient coeff;
    std::vector<int> ranks;  // rank of C^n over A
    std::vector<IntMat> d;   // d[n] : C^n -> C^{n+1}
};

// C^n = A^{components(W_n)} with the alternating-sum differential; requires
// w.dim() >= p_max + 1 and verifies d o d = 0.
CochainComplex cochain_complex(const FiniteSite& site, const Hypercovering& w, const PiSheaf& f,
                               int p_max);

// The same complex built directly from a simplicial-space shape (levels are
// already component sets).
CochainComplex cochain_complex_of_shape(const TruncSimp& shape, const Coefficient& a, int p_max);

// Cohomology with per-cyclic-factor lattice presentations (kept for induced
// maps along chain maps).
struct CohomologyAt {
    AbelianGroup group;
    std::vector<Subquotient> factors;  // one per coefficient modulus
};
CohomologyAt cohomology_at(const CochainComplex& c, int p);
AbelianGroup cohomology(const CochainComplex& c, int p);

// H^p(G, A) for the trivial action through the inhomogeneous (bar) cochain
// complex; an independent code path from the simplicial machinery.
AbelianGroup group_cohomology_oracle(const Group& g, const Coefficient& a, int p,
                                     long long cap = 4000000);
// Factorwise variant sharing one Smith form across several cyclic moduli.
std::vector<AbelianGroup> group_cohomology_oracle_multi(const Group& g,
                                                        const std::vector<Int>& moduli, int p,
                                                        long long cap = 4000000);

// Directed-system cohomology over a system of finite quotients: per-stage
// groups, inflation transition matrices computed from the simplicial
// transition maps, the colimit (the value at the minimum index), and a
// stabilization flag (covers of the minimum map isomorphically onto it).
struct VerdierStage {
    std::string name;
    AbelianGroup group;
};
struct VerdierResult {
    AbelianGroup colimit;
    std::vector<VerdierStage> stages;
    bool stabilized = true;
    std::vector<std::pair<int, int>> checked_transitions;  // (from cover, to minimum)
};
VerdierResult verdier_colimit(const GaloisSystem& sys, const Coefficient& a, int p);

// Restriction matrix of the constant component sheaf along f : X -> Y, as an
// integer matrix A^{pi(Y)} -> A^{pi(X)}.
IntMat pi_sheaf_restriction(const FiniteSite& site, const SiteObj& x, const SiteObj& y,
                            const std::vector<int>& f);
// Invertibility (unimodularity) of a square restriction matrix.
bool restriction_matrix_invertible(const IntMat& m);
// Checks the defining property along a morphism with bijective component map.
bool pi_sheaf_check(const FiniteSite& site, const SiteObj& x, const SiteObj& y,
                    const std::vector<int>& f);

}  // namespace proetale
