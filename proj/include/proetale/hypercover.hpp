#pragma once

// Hypercoverings over a finite site: validity checks, split weakly
// contractible refinement, maps out of split wc hypercoverings and the
// inductive construction of reduced homotopies between two such maps.

#include <optional>
#include <random>

#include "proetale/homotopies.hpp"
#include "proetale/simplicial.hpp"
#include "proetale/site.hpp"

namespace proetale {

struct Hypercovering {
    TruncSimp shape;
    std::vector<SiteObj> level_obj;  // structure per level, size dim+1
    std::vector<int> augmentation;   // level 0 -> terminal
    std::optional<int> basepoint;    // pointed data, no uniqueness claims

    int dim() const { return shape.dim(); }
};

// Site-aware coskeleton of the n-truncation evaluated at level n+1, bundled
// with the canonical comparison map.
struct SiteCosk {
    CoskResult data;
    SiteObj level_object;          // structure on the family carrier at level n+1
    std::vector<int> comparison;   // H_{n+1} -> families (when H has that level)
};
SiteCosk site_coskeleton_level(const FiniteSite& site, const Hypercovering& h, int n,
                               long long family_cap = 2000000);

ValidationReport check_hypercovering(const FiniteSite& site, const Hypercovering& h);

// Split decomposition bookkeeping (Eilenberg-Zilber presentations per level).
struct SplitLevel {
    std::vector<int> nondeg;                         // global indices, ascending
    std::vector<int> nondeg_pos;                     // global -> position in nondeg, or -1
    std::vector<std::pair<DeltaMap, int>> pres;      // per element: (epi, global base index)
};
std::vector<SplitLevel> split_levels(const TruncSimp& shape);

// True when each level's nondegenerate summand is weakly contractible.
bool is_split_wc(const FiniteSite& site, const Hypercovering& h);

struct Refinement {
    Hypercovering w;
    SimpMap to_input;
};

// Inductive split wc refinement: level 0 is the canonical wc cover of H_0;
// above, the covering H_{n+1} x_{cosk_n H} cosk_n W -> cosk_n W is refined by
// a canonical wc cover which becomes the nondegenerate summand.
Refinement refine_to_split_wc(const FiniteSite& site, const Hypercovering& h, int d,
                              int level_cap = 512);

// Morphism from a split wc hypercovering to an arbitrary hypercovering,
// built by lifting level by level; deterministic given the tie-break.
SimpMap map_from_split_wc(const FiniteSite& site, const Hypercovering& w, const Hypercovering& u,
                          const TieBreak& tb = TieBreak::Least());

// Reduced homotopy between two maps from a split wc hypercovering, built by
// lifting the coskeletal extension on nondegenerate summands and by the
// degeneracy case formula elsewhere.  The result passes
// check_reduced_homotopy by construction (asserted).
ReducedHomotopy homotopy_between(const FiniteSite& site, const Hypercovering& w,
                                 const Hypercovering& u, const SimpMap& f, const SimpMap& g,
                                 const TieBreak& tb = TieBreak::Least());

// Certified homotopy equivalence bundle between two split wc hypercoverings:
// maps both ways plus reduced homotopies from the round trips to identities.
struct EquivalenceCertificate {
    SimpMap forward, backward;
    ReducedHomotopy on_w;  // backward o forward ~ id_W
    ReducedHomotopy on_v;  // forward o backward ~ id_V
};
EquivalenceCertificate certify_equivalence(const FiniteSite& site, const Hypercovering& w,
                                           const Hypercovering& v,
                                           const TieBreak& tb = TieBreak::Least());

// Cech tower of a covering V -> terminal, truncated at dimension d.
Hypercovering cech_hypercovering(const FiniteSite& site, const SiteObj& v,
                                 const std::vector<int>& augmentation, int d);

// Seeded random hypercovering: a Cech-style tower with extra simplices glued
// on at each level.
Hypercovering random_hypercovering(const FiniteSite& site, int d, uint64_t seed,
                                   int max_extra_per_level = 2);

// Constant hypercovering on the terminal object.
Hypercovering constant_terminal_hypercovering(const FiniteSite& site, int d);

}  // namespace proetale
