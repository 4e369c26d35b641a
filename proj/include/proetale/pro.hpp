#pragma once

// Pro-diagrams over finite codirected posets, systems of finite quotient
// groups, and the homotopy type they classify: one split wc hypercovering
// representative per index with transition maps induced by the quotients.

#include <map>
#include <string>
#include <vector>

#include "proetale/classifying.hpp"

namespace proetale {

// System of finite groups over a codirected poset; i <= j carries a
// surjective homomorphism G_i -> G_j (deeper indices are bigger quotients).
struct GaloisSystem {
    std::vector<std::string> names;
    std::vector<Group> groups;
    std::vector<std::vector<bool>> leq;
    std::map<std::pair<int, int>, std::vector<int>> maps;  // (i, j) for i <= j, i != j

    int size() const { return int(groups.size()); }
    static GaloisSystem single(const Group& g, const std::string& name = "G");
};

// codirected index poset, surjective homomorphisms, functorial composites
ValidationReport validate_galois_system(const GaloisSystem& sys);
int minimum_node(const GaloisSystem& sys);
// nodes covering the minimum (its immediate predecessors in depth)
std::vector<int> covers_of_minimum(const GaloisSystem& sys);

struct HomotopyType {
    GaloisSystem system;
    int dim = 0;
    std::vector<ClassifyingSpace> values;            // per node
    std::map<std::pair<int, int>, SimpMap> transitions;  // orbit models, (i, j) for i <= j
    std::vector<std::string> provenance;             // which hypercovering produced each index
};

// Classifying space per index with transition maps induced by the quotient
// homomorphisms on the orbit models; functoriality asserted.
HomotopyType pro_homotopy_type(const GaloisSystem& sys, int d);

}  // namespace proetale
