#pragma once

// Classifying space of a finite group: the orbit simplicial set of the Cech
// tower of the regular covering, with a certified isomorphism to the nerve.

#include "proetale/group.hpp"
#include "proetale/space_simp.hpp"

namespace proetale {

// Nerve of G truncated at dimension d: level n is G^n with the usual
// deletion/multiplication faces and identity-insertion degeneracies.
TruncSimp nerve(const Group& g, int d);

struct ClassifyingSpace {
    Group group;
    Hypercovering tower;     // cosk_0 of the regular covering in the G-set site
    SpaceSimp space;         // orbitwise component functor of the tower
    TruncSimp nerve_shape;
    SimpMap iso;             // space.shape -> nerve_shape, bijective levelwise
};

// Builds the orbit model and certifies the isomorphism to the nerve (the
// certificate is the explicit map; it is validated and checked bijective).
ClassifyingSpace classifying_space(const Group& g, int d);

}  // namespace proetale
