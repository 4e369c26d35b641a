#pragma once

// Monotone maps [a] -> [b] between finite ordinals, with composition,
// epi-mono factorization and the face/degeneracy generators.

#include <vector>

#include "proetale/errors.hpp"

namespace proetale {

struct DeltaMap {
    int src = 0, dst = 0;           // dimensions: map [src] -> [dst]
    std::vector<int> assignment;    // size src+1, weakly increasing, values in [0, dst]

    bool operator==(const DeltaMap& other) const = default;
    bool is_valid() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_identity() const;
    int operator()(int i) const { return assignment[i]; }
};

DeltaMap delta_identity(int n);
// coface [n-1] -> [n] skipping j
DeltaMap delta_face(int n, int j);
// codegeneracy [n+1] -> [n] hitting j twice
DeltaMap delta_degeneracy(int n, int j);
// g after f
DeltaMap delta_compose(const DeltaMap& f, const DeltaMap& g);
// unique factorization f = mono . epi
struct EpiMono {
    DeltaMap epi;   // [src] ->> [k]
    DeltaMap mono;  // [k] '-> [dst]
};
EpiMono delta_factor(const DeltaMap& f);

// epi as a composition of codegeneracies: sigma^{j_1} then sigma^{j_2} ...
// applied left to right, i.e. epi = sigma^{j_last} o ... o sigma^{j_first}.
std::vector<int> epi_word(const DeltaMap& epi);
// mono as cofaces delta^{j}, outermost last.
std::vector<int> mono_word(const DeltaMap& mono);

// All injective monotone maps [k] -> [m], ordered lexicographically by image.
std::vector<DeltaMap> injections(int k, int m);
// All surjective monotone maps [m] -> [k].
std::vector<DeltaMap> surjections(int m, int k);
// All monotone maps [a] -> [b].
std::vector<DeltaMap> all_monotone(int a, int b);

}  // namespace proetale
