#pragma once

// JSON formats for every external surface: spaces, groups, site objects,
// sites, truncated simplicial objects, hypercoverings, simplicial maps,
// systems of quotient groups, and the machine-checkable certificates emitted
// by the CLI.  All emission goes through ordered JSON with canonical key
// order so identical inputs produce byte-identical output.

#include <memory>

// vendored single-header nlohmann/json
#include <json.hpp>

#include "proetale/cohomology.hpp"
#include "proetale/hypercover.hpp"
#include "proetale/pro.hpp"
#include "proetale/space_simp.hpp"

namespace proetale {

using OrderedJson = nlohmann::ordered_json;

// finite spaces: {"points": [...], "leq": [["a","b"], ...]}
OrderedJson space_to_json(const FiniteSpace& x);
FiniteSpace space_from_json(const OrderedJson& j);

// groups: {"order": n, "mul": [[...]]}
OrderedJson group_to_json(const Group& g);
Group group_from_json(const OrderedJson& j);

// sites: {"kind": "gset", "group": {...}} | {"kind": "slice", "base": [...]}
OrderedJson site_to_json(const FiniteSite& site);
std::unique_ptr<FiniteSite> site_from_json(const OrderedJson& j);

// site objects (relative to their site)
OrderedJson site_obj_to_json(const FiniteSite& site, const SiteObj& obj);
SiteObj site_obj_from_json(const FiniteSite& site, const OrderedJson& j, int expect_size = -1);

// truncated simplicial objects
OrderedJson trunc_simp_to_json(const TruncSimp& x);
TruncSimp trunc_simp_from_json(const OrderedJson& j);

// hypercoverings: truncation + per-level structures + augmentation
OrderedJson hypercovering_to_json(const FiniteSite& site, const Hypercovering& h);
Hypercovering hypercovering_from_json(const FiniteSite& site, const OrderedJson& j);

OrderedJson simp_map_to_json(const SimpMap& f);
SimpMap simp_map_from_json(const OrderedJson& j);

OrderedJson space_simp_to_json(const SpaceSimp& x);
SpaceSimp space_simp_from_json(const OrderedJson& j);

// quotient systems: {"nodes": [{"name", "group"}...], "maps": [{"from","to","map"}...]}
OrderedJson galois_system_to_json(const GaloisSystem& sys);
GaloisSystem galois_system_from_json(const OrderedJson& j);

OrderedJson abelian_group_to_json(const AbelianGroup& g);

OrderedJson reduced_homotopy_to_json(const ReducedHomotopy& rh);
ReducedHomotopy reduced_homotopy_from_json(const OrderedJson& j);

// file helpers (ParseError on malformed JSON)
OrderedJson load_json_file(const std::string& path);

}  // namespace proetale
