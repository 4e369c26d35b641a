#pragma once

// Truncated simplicial objects with explicit face/degeneracy tables over
// plain finite sets.  Structured variants (site objects, finite spaces) keep
// a parallel vector of level structures and reuse this engine for the
// set-level bookkeeping.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proetale/delta.hpp"
#include "proetale/errors.hpp"

namespace proetale {

class TruncSimp {
  public:
    TruncSimp() = default;
    explicit TruncSimp(int dim) : dim_(dim), sizes_(dim + 1, 0), face_(dim + 1), degen_(dim + 1) {
        for (int n = 1; n <= dim; ++n) face_[n].assign(n + 1, {});
        for (int n = 0; n < dim; ++n) degen_[n].assign(n + 1, {});
    }

    int dim() const { return dim_; }
    int level_size(int n) const { return sizes_[n]; }
    int total_size() const;
    void set_level_size(int n, int s) { sizes_[n] = s; }

    // face(n, j): assignment level n -> level n-1
    std::vector<int>& face(int n, int j) { return face_[n][j]; }
    const std::vector<int>& face(int n, int j) const { return face_[n][j]; }
    // degen(n, j): assignment level n -> level n+1
    std::vector<int>& degen(int n, int j) { return degen_[n][j]; }
    const std::vector<int>& degen(int n, int j) const { return degen_[n][j]; }

    std::optional<int> coskeletal_above;
    // optional per-level element labels (kept for IO round trips)
    std::vector<std::vector<std::string>> labels;

    bool operator==(const TruncSimp& other) const {
        return dim_ == other.dim_ && sizes_ == other.sizes_ && face_ == other.face_ &&
               degen_ == other.degen_;
    }

    // action of an arbitrary DeltaMap f : [a] -> [b] (b <= dim) on an element
    // of level b, computed through the epi-mono factorization
    int act(const DeltaMap& f, int element) const;

  private:
    int dim_ = 0;
    std::vector<int> sizes_;
    std::vector<std::vector<std::vector<int>>> face_;
    std::vector<std::vector<std::vector<int>>> degen_;
};

struct ValidationReport {
    bool ok = true;
    std::string diagnostic;
};

// Checks table shapes and all simplicial identities on generators; reports
// the first violation with indices.
ValidationReport validate(const TruncSimp& x);

// Asserts the coskeletal_above flag: above that level the canonical map into
// the coskeleton of the truncation must be an isomorphism.  Objects without
// the flag pass trivially.
ValidationReport check_coskeletal(const TruncSimp& x);

struct SimpMap {
    std::vector<std::vector<int>> level;  // level[n] : X_n -> Y_n

    bool operator==(const SimpMap& other) const = default;
};

ValidationReport validate_map(const TruncSimp& x, const TruncSimp& y, const SimpMap& f);
SimpMap identity_map(const TruncSimp& x);
SimpMap compose(const SimpMap& f, const SimpMap& g);  // g after f

// n-truncation.
TruncSimp skeleton(const TruncSimp& x, int n);

// Coskeleton data: level m > n elements are compatible families, stored as
// tuples of their components over the injective maps [n] -> [m] in
// lexicographic image order.
struct CoskResult {
    TruncSimp object;                                   // levels 0..d, coskeletal_above = n
    int n = 0;                                          // base truncation level
    std::vector<std::vector<std::vector<int>>> family;  // family[m] lists tuples for m > n
    SimpMap unit;  // canonical map X -> cosk on levels 0..min(x.dim, d)
};

// Right adjoint of n-truncation evaluated through dimension d.
CoskResult coskeleton(const TruncSimp& x, int n, int d,
                      const std::function<bool(int /*m*/, const std::vector<int>& /*tuple*/)>&
                          extra_constraint = nullptr,
                      long long family_cap = 2000000);

// Canonical map X_m -> cosk_n(X)_m for one level m (indices into the family
// list); requires the cosk computed with the same constraint.
std::vector<int> cosk_unit_level(const TruncSimp& x, const CoskResult& ck, int m);

// component of a stored family at an arbitrary injective map [k] -> [m]
int family_component(const TruncSimp& x, const CoskResult& ck, int m, int family_index,
                     const DeltaMap& inj);

// Eilenberg-Zilber decomposition of one level.
struct EZItem {
    bool nondegenerate = true;
    DeltaMap epi;   // [n] ->> [k]; identity when nondegenerate
    int base_level = 0;
    int base_index = 0;  // index of the nondegenerate base in level base_level
};
std::vector<EZItem> nondegenerate_decomposition(const TruncSimp& x, int n);

// Levelwise product with the 1-simplex; level n elements are pairs
// (x, c) with c in 0..n+1 counting the zeros of a monotone map [n] -> [1],
// encoded as index x * (n+2) + c.
struct IntervalProduct {
    TruncSimp object;
    SimpMap include_f;  // x -> (x, 0); restriction along it recovers f
    SimpMap include_g;  // x -> (x, n+1)
    SimpMap project;    // (x, c) -> x
};
IntervalProduct product_with_interval(const TruncSimp& x);

// Levelwise product of two objects; element encoding a * |Y_n| + b.
TruncSimp product(const TruncSimp& x, const TruncSimp& y);

// Backtracking enumeration of all simplicial maps X -> Y (small instances).
std::vector<SimpMap> enumerate_simp_maps(const TruncSimp& x, const TruncSimp& y, long long cap = 5000000);

// Backtracking isomorphism search compatible with faces and degeneracies.
std::optional<SimpMap> find_simp_iso(const TruncSimp& x, const TruncSimp& y);

// Standard d-truncated simplex Delta[k]: level n = monotone maps [n] -> [k].
TruncSimp standard_simplex(int k, int d);
// Constant simplicial object on a set of the given size.
TruncSimp constant_object(int size, int d);

}  // namespace proetale
