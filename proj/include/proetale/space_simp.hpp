#pragma once

// Truncated simplicial objects whose levels carry finite spaces, the
// levelwise component functor on hypercoverings, and the space of simplicial
// components pi0 = CoEq(X_1 => X_0).

#include "proetale/finspace.hpp"
#include "proetale/hypercover.hpp"
#include "proetale/simplicial.hpp"

namespace proetale {

struct SpaceSimp {
    TruncSimp shape;
    std::vector<FiniteSpace> spaces;  // per level

    int dim() const { return shape.dim(); }
};

ValidationReport validate_space_simp(const SpaceSimp& x);

// Levelwise component functor of the site; rejects inputs that are not
// split weakly contractible hypercoverings.
SpaceSimp pi_of_hypercovering(const FiniteSite& site, const Hypercovering& w);

// Coequalizer of the two face maps X_1 => X_0 with the quotient topology;
// rejects dimension 0.
FiniteSpace pi0(const SpaceSimp& x);
// class of each level-0 point in pi0
std::vector<int> pi0_classes(const SpaceSimp& x);
// induced map on pi0 of a simplicial map
SpaceMap pi0_map(const SpaceSimp& x, const SpaceSimp& y, const SimpMap& f);

SpaceSimp constant_simplicial_space(const FiniteSpace& y, int d);
SpaceSimp product_space_simp(const SpaceSimp& x, const SpaceSimp& y);

// pi0(X x Y) compared with pi0(X) x pi0(Y) through the canonical map.
bool pi0_product_check(const SpaceSimp& x, const SpaceSimp& y);

// Simplicial maps whose level components are continuous.
std::vector<SimpMap> enumerate_space_simp_maps(const SpaceSimp& x, const SpaceSimp& y,
                                               long long cap = 5000000);

}  // namespace proetale
