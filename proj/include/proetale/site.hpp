#pragma once

// Finite site models: finite G-sets for a fixed finite group (coverings =
// equivariant surjections, weakly contractible = free), and finite sets over
// a fixed base (coverings = surjections over the base, everything weakly
// contractible).  Families of coverings are normalized to a single morphism
// from the coproduct before any processing.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "proetale/group.hpp"

namespace proetale {

struct GSetObj {
    // act[g][x]; the carrier is 0..size-1
    std::vector<std::vector<int>> act;
    std::vector<std::string> labels;  // optional
    int size() const { return act.empty() ? 0 : int(act[0].size()); }
};

struct SliceObj {
    std::vector<int> over;  // element -> base point
    std::vector<std::string> labels;
    int size() const { return int(over.size()); }
};

using SiteObj = std::variant<GSetObj, SliceObj>;

int obj_size(const SiteObj& o);

struct CoverData {
    SiteObj total;
    std::vector<int> map;  // total -> base object
};

// Deterministic choice policy for lifts.
struct TieBreak {
    enum Kind { least, greatest, seeded } kind = least;
    uint64_t seed = 0;
    static TieBreak Least() { return {least, 0}; }
    static TieBreak Greatest() { return {greatest, 0}; }
    static TieBreak Seeded(uint64_t s) { return {seeded, s}; }
};

class FiniteSite {
  public:
    virtual ~FiniteSite() = default;
    virtual std::string kind() const = 0;
    virtual SiteObj terminal() const = 0;
    virtual bool is_object(const SiteObj& x) const = 0;
    virtual bool is_morphism(const SiteObj& x, const SiteObj& y, const std::vector<int>& f) const = 0;
    // single-morphism form; families are normalized by coproduct first
    virtual bool is_covering(const SiteObj& u, const SiteObj& x, const std::vector<int>& p) const;
    virtual bool is_weakly_contractible(const SiteObj& w) const = 0;
    // element -> component id, canonically ordered by least member
    virtual std::vector<int> component_map(const SiteObj& x) const = 0;
    int component_count(const SiteObj& x) const;
    virtual CoverData canonical_wc_cover(const SiteObj& x) const = 0;
    virtual SiteObj coproduct(const std::vector<SiteObj>& parts) const = 0;
    // induced structure on a subset of elements; throws when not closed
    virtual SiteObj sub_object(const SiteObj& x, const std::vector<int>& keep) const = 0;
    // structure on a set of slot tuples (limit carriers); for slice sites all
    // slots of a tuple must sit over one base point
    virtual SiteObj tuple_object(const std::vector<const SiteObj*>& slots,
                                 const std::vector<std::vector<int>>& tuples) const = 0;
    // incremental admissibility of a partial tuple (site-level limit constraint)
    virtual bool tuple_compatible(const std::vector<const SiteObj*>& slots,
                                  const std::vector<int>& partial) const = 0;
    virtual std::vector<std::vector<int>> enumerate_morphisms(const SiteObj& x,
                                                              const SiteObj& y) const = 0;
    // lift of f : W -> X along a covering p : U -> X for weakly contractible W
    std::vector<int> lift(const SiteObj& w, const std::vector<int>& f, const SiteObj& u,
                          const SiteObj& x, const std::vector<int>& p,
                          const TieBreak& tb = TieBreak::Least()) const;

  protected:
    virtual std::vector<int> lift_impl(const SiteObj& w, const std::vector<int>& f, const SiteObj& u,
                                       const std::vector<int>& p, const TieBreak& tb) const = 0;
};

class GSetSite : public FiniteSite {
  public:
    explicit GSetSite(Group g) : group_(std::move(g)) {}
    const Group& group() const { return group_; }

    std::string kind() const override { return "gset"; }
    SiteObj terminal() const override;
    bool is_object(const SiteObj& x) const override;
    bool is_morphism(const SiteObj& x, const SiteObj& y, const std::vector<int>& f) const override;
    bool is_weakly_contractible(const SiteObj& w) const override;  // free action
    std::vector<int> component_map(const SiteObj& x) const override;  // orbits
    CoverData canonical_wc_cover(const SiteObj& x) const override;    // G x X -> X
    SiteObj coproduct(const std::vector<SiteObj>& parts) const override;
    SiteObj sub_object(const SiteObj& x, const std::vector<int>& keep) const override;
    SiteObj tuple_object(const std::vector<const SiteObj*>& slots,
                         const std::vector<std::vector<int>>& tuples) const override;
    bool tuple_compatible(const std::vector<const SiteObj*>& slots,
                          const std::vector<int>& partial) const override;
    std::vector<std::vector<int>> enumerate_morphisms(const SiteObj& x,
                                                      const SiteObj& y) const override;

    GSetObj regular() const;  // G acting on itself
    GSetObj free_orbits(int k) const;  // disjoint union of k regular orbits
    GSetObj trivial(int k) const;      // k fixed points

  protected:
    std::vector<int> lift_impl(const SiteObj& w, const std::vector<int>& f, const SiteObj& u,
                               const std::vector<int>& p, const TieBreak& tb) const override;

  private:
    Group group_;
};

class SliceSite : public FiniteSite {
  public:
    explicit SliceSite(std::vector<std::string> base_labels) : base_(std::move(base_labels)) {}
    explicit SliceSite(int base_size);
    int base_size() const { return int(base_.size()); }
    const std::vector<std::string>& base_labels() const { return base_; }

    std::string kind() const override { return "slice"; }
    SiteObj terminal() const override;
    bool is_object(const SiteObj& x) const override;
    bool is_morphism(const SiteObj& x, const SiteObj& y, const std::vector<int>& f) const override;
    bool is_weakly_contractible(const SiteObj&) const override { return true; }
    std::vector<int> component_map(const SiteObj& x) const override;  // identity partition
    CoverData canonical_wc_cover(const SiteObj& x) const override;    // identity
    SiteObj coproduct(const std::vector<SiteObj>& parts) const override;
    SiteObj sub_object(const SiteObj& x, const std::vector<int>& keep) const override;
    SiteObj tuple_object(const std::vector<const SiteObj*>& slots,
                         const std::vector<std::vector<int>>& tuples) const override;
    bool tuple_compatible(const std::vector<const SiteObj*>& slots,
                          const std::vector<int>& partial) const override;
    std::vector<std::vector<int>> enumerate_morphisms(const SiteObj& x,
                                                      const SiteObj& y) const override;

  protected:
    std::vector<int> lift_impl(const SiteObj& w, const std::vector<int>& f, const SiteObj& u,
                               const std::vector<int>& p, const TieBreak& tb) const override;

  private:
    std::vector<std::string> base_;
};

// A family of morphisms into a common target, normalized to the single
// morphism out of the coproduct before any covering processing.
struct CoveringFamily {
    std::vector<SiteObj> parts;
    std::vector<std::vector<int>> maps;  // per part, into the target
};
CoverData normalize_covering_family(const FiniteSite& site, const CoveringFamily& family,
                                    const SiteObj& target);

// Fibre product of a cospan f : X -> Z <- Y : g with its projections.
struct FibreProductData {
    SiteObj total;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> to_x, to_y;
};
FibreProductData site_fibre_product(const FiniteSite& site, const SiteObj& x, const SiteObj& y,
                                    const SiteObj& z, const std::vector<int>& f,
                                    const std::vector<int>& g);

}  // namespace proetale
