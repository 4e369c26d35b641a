#pragma once

// Edge-path group of a 2-truncated simplicial set at a basepoint: generators
// are the 1-simplices of the basepoint component, relations trivialize
// degenerate edges and spanning-tree edges and impose
// d^1(sigma) = d^2(sigma) . d^0(sigma) for every 2-simplex.  Evaluated by
// coset enumeration over the trivial subgroup, capped.

#include <optional>
#include <vector>

#include "proetale/group.hpp"
#include "proetale/simplicial.hpp"

namespace proetale {

struct Presentation {
    int generators = 0;
    // relator words over generators; g encoded as g+1, inverse as -(g+1)
    std::vector<std::vector<int>> relators;
};

struct Pi1Result {
    bool decided = false;  // false: undecided at the coset cap
    Presentation presentation;
    Group group;  // filled when decided
};

// Edge-path presentation of the component of the basepoint.
Presentation edge_path_presentation(const TruncSimp& x, int basepoint);

// Todd-Coxeter coset enumeration over the trivial subgroup; decided when the
// live coset count stays within the cap.
std::optional<Group> coset_enumeration(const Presentation& p, int coset_cap,
                                       long long work_cap = 2000000);

Pi1Result pi1_edge_path(const TruncSimp& x, int basepoint, int coset_cap = 5000);

}  // namespace proetale
