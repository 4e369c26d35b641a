#pragma once

// Finite topological spaces as specialization preorders (Alexandrov duality).
// Convention used throughout: the open sets are the downward-closed sets of
// the preorder, so the minimal open neighbourhood of x is { y : y <= x } and
// the closure of {x} is { y : x <= y }.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "proetale/errors.hpp"

namespace proetale {

// subset of points as packed 64-bit blocks
using PointSet = std::vector<uint64_t>;

class FiniteSpace {
  public:
    FiniteSpace() = default;
    // leq_pairs: (a, b) meaning a <= b; reflexive-transitive closure is taken.
    FiniteSpace(std::vector<std::string> points, const std::vector<std::pair<int, int>>& leq_pairs);

    // Direct construction from an already transitive reflexive relation; the
    // predicate receives (a, b) and answers a <= b.
    static FiniteSpace from_relation(std::vector<std::string> points,
                                     const std::function<bool(int, int)>& leq);

    static FiniteSpace discrete(int n, const std::string& prefix = "p");
    static FiniteSpace sierpinski();  // two points, 0 <= 1
    static FiniteSpace empty() { return FiniteSpace(); }

    int size() const { return int(points_.size()); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& label(int i) const { return points_[i]; }
    bool leq(int a, int b) const {
        return (bits_[size_t(b) * blocks_ + (a >> 6)] >> (a & 63)) & 1u;
    }
    int below_count(int i) const;

    bool operator==(const FiniteSpace& other) const = default;

    bool is_discrete() const;
    bool is_open(const PointSet& subset) const;      // downward closed?
    PointSet closure(const PointSet& subset) const;  // upward closure
    PointSet make_set() const;                       // empty set of the right width

    // Connected components of the comparability graph; canonical indexing by
    // least member.
    std::vector<int> component_ids() const;
    int component_count() const;

    FiniteSpace disjoint_union(const FiniteSpace& other) const;
    FiniteSpace product(const FiniteSpace& other) const;   // product preorder
    FiniteSpace subspace(const std::vector<int>& keep) const;

  private:
    friend FiniteSpace quotient_space(const FiniteSpace&, const std::vector<int>&, int);
    void init_bits(int n);
    void add_leq(int a, int b) { bits_[size_t(b) * blocks_ + (a >> 6)] |= uint64_t(1) << (a & 63); }
    std::vector<std::string> points_;
    int blocks_ = 0;
    std::vector<uint64_t> bits_;  // row b = { a : a <= b }, flat with stride blocks_
};

struct SpaceMap {
    FiniteSpace source, target;
    std::vector<int> map;
};

bool is_continuous(const SpaceMap& f);
bool is_surjective(const SpaceMap& f);

// Quotient of X by a partition (class ids 0..k-1); the topology is computed
// by the preimage-open criterion over all subsets of the quotient, which caps
// the number of classes at 15.
FiniteSpace quotient_space(const FiniteSpace& x, const std::vector<int>& class_of, int num_classes);

// Space of components with its quotient map.
struct ComponentsResult {
    FiniteSpace space;
    SpaceMap quotient;
};
ComponentsResult components(const FiniteSpace& x);

bool is_totally_disconnected(const FiniteSpace& x);
bool is_extremally_disconnected(const FiniteSpace& x);

// Number of continuous maps X -> T by enumeration of monotone assignments.
long long hom_space_count(const FiniteSpace& x, const FiniteSpace& t);
std::vector<std::vector<int>> enumerate_continuous_maps(const FiniteSpace& x, const FiniteSpace& t);

// Topological fibre product P x_{pi(S)} S for totally disconnected P and a
// continuous f : P -> components(S).space.  Rejects f whose target differs
// from the computed component space of S.
struct FibreProductResult {
    FiniteSpace space;
    SpaceMap to_p;
    SpaceMap to_s;
};
FibreProductResult fibre_product_over_components(const FiniteSpace& p, const SpaceMap& f,
                                                 const FiniteSpace& s);

// Backtracking homeomorphism search, capped at 12 points.
std::optional<std::vector<int>> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b);
bool homeomorphic(const FiniteSpace& a, const FiniteSpace& b);

// Map induced on component spaces by a continuous map.
SpaceMap components_functor(const SpaceMap& f);

}  // namespace proetale
