#include "proetale/json_io.hpp"

#include <fstream>
#include <map>

namespace proetale {

namespace {

int index_of_label(const std::vector<std::string>& labels, const std::string& s) {
    for (int i = 0; i < int(labels.size()); ++i)
        if (labels[i] == s) return i;
    throw ParseError("unknown label '" + s + "'");
}

std::vector<int> int_vector(const OrderedJson& j, int bound, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError(std::string(what) + ": expected integers");
        int x = v.get<int>();
        if (x < 0 || (bound >= 0 && x >= bound))
            throw ParseError(std::string(what) + ": index out of range");
        out.push_back(x);
    }
    return out;
}

}  // namespace

OrderedJson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    try {
        return OrderedJson::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

OrderedJson space_to_json(const FiniteSpace& x) {
    OrderedJson j;
    j["points"] = x.points();
    OrderedJson leq = OrderedJson::array();
    for (int b = 0; b < x.size(); ++b)
        for (int a = 0; a < x.size(); ++a)
            if (a != b && x.leq(a, b)) leq.push_back({x.label(a), x.label(b)});
    j["leq"] = leq;
    return j;
}

FiniteSpace space_from_json(const OrderedJson& j) {
    if (!j.contains("points")) throw ParseError("space: missing 'points'");
    auto points = j.at("points").get<std::vector<std::string>>();
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t k = i + 1; k < points.size(); ++k)
            if (points[i] == points[k]) throw ParseError("space: duplicate point label");
    std::vector<std::pair<int, int>> leq;
    if (j.contains("leq")) {
        for (const auto& pr : j.at("leq")) {
            if (!pr.is_array() || pr.size() != 2) throw ParseError("space: malformed leq pair");
            leq.emplace_back(index_of_label(points, pr[0].get<std::string>()),
                             index_of_label(points, pr[1].get<std::string>()));
        }
    }
    return FiniteSpace(points, leq);
}

OrderedJson group_to_json(const Group& g) {
    OrderedJson j;
    j["order"] = g.order;
    j["mul"] = g.mul;
    return j;
}

Group group_from_json(const OrderedJson& j) {
    if (!j.contains("mul")) throw ParseError("group: missing 'mul'");
    auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j.at("order").get<int>() != int(mul.size()))
        throw ParseError("group: declared order disagrees with the table");
    return group_from_table(mul);
}

OrderedJson site_to_json(const FiniteSite& site) {
    OrderedJson j;
    j["kind"] = site.kind();
    if (site.kind() == "gset") {
        j["group"] = group_to_json(dynamic_cast<const GSetSite&>(site).group());
    } else {
        j["base"] = dynamic_cast<const SliceSite&>(site).base_labels();
    }
    return j;
}

std::unique_ptr<FiniteSite> site_from_json(const OrderedJson& j) {
    if (!j.contains("kind")) throw ParseError("site: missing 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "gset") {
        if (!j.contains("group")) throw ParseError("site: gset site needs 'group'");
        return std::make_unique<GSetSite>(group_from_json(j.at("group")));
    }
    if (kind == "slice") {
        if (!j.contains("base")) throw ParseError("site: slice site needs 'base'");
        return std::make_unique<SliceSite>(j.at("base").get<std::vector<std::string>>());
    }
    throw ParseError("site: unknown kind '" + kind + "'");
}

OrderedJson site_obj_to_json(const FiniteSite& site, const SiteObj& obj) {
    OrderedJson j;
    if (site.kind() == "gset") {
        const auto& g = std::get<GSetObj>(obj);
        OrderedJson act = OrderedJson::object();
        for (size_t a = 0; a < g.act.size(); ++a) act[std::to_string(a)] = g.act[a];
        j["action"] = act;
    } else {
        const auto& s = std::get<SliceObj>(obj);
        const auto& labels = dynamic_cast<const SliceSite&>(site).base_labels();
        OrderedJson over = OrderedJson::array();
        for (int b : s.over) over.push_back(labels[b]);
        j["over"] = over;
    }
    return j;
}

SiteObj site_obj_from_json(const FiniteSite& site, const OrderedJson& j, int expect_size) {
    if (site.kind() == "gset") {
        const auto& gs = dynamic_cast<const GSetSite&>(site);
        if (!j.contains("action")) throw ParseError("site object: missing 'action'");
        GSetObj g;
        g.act.assign(gs.group().order, {});
        int size = -1;
        for (int a = 0; a < gs.group().order; ++a) {
            std::string key = std::to_string(a);
            if (!j.at("action").contains(key))
                throw ParseError("site object: action missing group element " + key);
            g.act[a] = int_vector(j.at("action").at(key), -1, "action");
            if (size < 0) size = int(g.act[a].size());
            if (int(g.act[a].size()) != size) throw ParseError("site object: ragged action table");
        }
        if (expect_size >= 0 && size != expect_size)
            throw ParseError("site object: size disagrees with the level");
        SiteObj obj(std::move(g));
        if (!site.is_object(obj)) throw ParseError("site object: not a valid G-set action");
        return obj;
    }
    const auto& ss = dynamic_cast<const SliceSite&>(site);
    if (!j.contains("over")) throw ParseError("site object: missing 'over'");
    SliceObj s;
    for (const auto& v : j.at("over")) s.over.push_back(index_of_label(ss.base_labels(), v.get<std::string>()));
    if (expect_size >= 0 && int(s.over.size()) != expect_size)
        throw ParseError("site object: size disagrees with the level");
    return SiteObj(std::move(s));
}

OrderedJson trunc_simp_to_json(const TruncSimp& x) {
    OrderedJson j;
    j["dim"] = x.dim();
    OrderedJson levels = OrderedJson::array();
    for (int n = 0; n <= x.dim(); ++n) {
        if (int(x.labels.size()) > n && int(x.labels[n].size()) == x.level_size(n)) {
            levels.push_back(x.labels[n]);
        } else {
            std::vector<std::string> lv;
            for (int e = 0; e < x.level_size(n); ++e)
                lv.push_back("n" + std::to_string(n) + "e" + std::to_string(e));
            levels.push_back(lv);
        }
    }
    j["levels"] = levels;
    OrderedJson faces = OrderedJson::array();
    for (int n = 1; n <= x.dim(); ++n) {
        OrderedJson per = OrderedJson::array();
        for (int jj = 0; jj <= n; ++jj) per.push_back(x.face(n, jj));
        faces.push_back(per);
    }
    j["faces"] = faces;
    OrderedJson degens = OrderedJson::array();
    for (int n = 0; n < x.dim(); ++n) {
        OrderedJson per = OrderedJson::array();
        for (int jj = 0; jj <= n; ++jj) per.push_back(x.degen(n, jj));
        degens.push_back(per);
    }
    j["degens"] = degens;
    if (x.coskeletal_above) j["coskeletal_above"] = *x.coskeletal_above;
    return j;
}

TruncSimp trunc_simp_from_json(const OrderedJson& j) {
    if (!j.contains("dim") || !j.contains("levels"))
        throw ParseError("simplicial object: missing 'dim' or 'levels'");
    int d = j.at("dim").get<int>();
    if (d < 0) throw ParseError("simplicial object: negative dimension");
    TruncSimp x(d);
    const auto& levels = j.at("levels");
    if (int(levels.size()) != d + 1) throw ParseError("simplicial object: wrong level count");
    x.labels.resize(d + 1);
    for (int n = 0; n <= d; ++n) {
        x.labels[n] = levels[n].get<std::vector<std::string>>();
        x.set_level_size(n, int(x.labels[n].size()));
    }
    if (d > 0) {
        if (!j.contains("faces") || !j.contains("degens"))
            throw ParseError("simplicial object: missing 'faces' or 'degens'");
        const auto& faces = j.at("faces");
        if (int(faces.size()) != d) throw ParseError("simplicial object: wrong face group count");
        for (int n = 1; n <= d; ++n) {
            if (int(faces[n - 1].size()) != n + 1)
                throw ParseError("simplicial object: wrong face count at level " + std::to_string(n));
            for (int jj = 0; jj <= n; ++jj)
                x.face(n, jj) = int_vector(faces[n - 1][jj], x.level_size(n - 1), "face table");
        }
        const auto& degens = j.at("degens");
        if (int(degens.size()) != d) throw ParseError("simplicial object: wrong degeneracy group count");
        for (int n = 0; n < d; ++n) {
            if (int(degens[n].size()) != n + 1)
                throw ParseError("simplicial object: wrong degeneracy count at level " +
                                 std::to_string(n));
            for (int jj = 0; jj <= n; ++jj)
                x.degen(n, jj) = int_vector(degens[n][jj], x.level_size(n + 1), "degeneracy table");
        }
    }
    if (j.contains("coskeletal_above")) x.coskeletal_above = j.at("coskeletal_above").get<int>();
    if (auto v = validate(x); !v.ok) throw ParseError("simplicial object: " + v.diagnostic);
    if (auto v = check_coskeletal(x); !v.ok) throw ParseError("simplicial object: " + v.diagnostic);
    return x;
}

OrderedJson hypercovering_to_json(const FiniteSite& site, const Hypercovering& h) {
    OrderedJson j;
    j["truncation"] = trunc_simp_to_json(h.shape);
    OrderedJson objs = OrderedJson::array();
    for (const auto& o : h.level_obj) objs.push_back(site_obj_to_json(site, o));
    j["objects"] = objs;
    j["augmentation"] = h.augmentation;
    if (h.basepoint) j["basepoint"] = *h.basepoint;
    return j;
}

Hypercovering hypercovering_from_json(const FiniteSite& site, const OrderedJson& j) {
    if (!j.contains("truncation") || !j.contains("objects") || !j.contains("augmentation"))
        throw ParseError("hypercovering: missing 'truncation', 'objects' or 'augmentation'");
    Hypercovering h;
    h.shape = trunc_simp_from_json(j.at("truncation"));
    const auto& objs = j.at("objects");
    if (int(objs.size()) != h.dim() + 1) throw ParseError("hypercovering: wrong structure count");
    for (int n = 0; n <= h.dim(); ++n)
        h.level_obj.push_back(site_obj_from_json(site, objs[n], h.shape.level_size(n)));
    h.augmentation = int_vector(j.at("augmentation"), obj_size(site.terminal()), "augmentation");
    if (int(h.augmentation.size()) != h.shape.level_size(0))
        throw ParseError("hypercovering: augmentation has wrong length");
    if (j.contains("basepoint")) h.basepoint = j.at("basepoint").get<int>();
    return h;
}

OrderedJson simp_map_to_json(const SimpMap& f) {
    OrderedJson j;
    j["levels"] = f.level;
    return j;
}

SimpMap simp_map_from_json(const OrderedJson& j) {
    if (!j.contains("levels")) throw ParseError("simplicial map: missing 'levels'");
    SimpMap f;
    for (const auto& lv : j.at("levels")) f.level.push_back(int_vector(lv, -1, "map level"));
    return f;
}

OrderedJson space_simp_to_json(const SpaceSimp& x) {
    OrderedJson j = trunc_simp_to_json(x.shape);
    OrderedJson spaces = OrderedJson::array();
    for (const auto& s : x.spaces) spaces.push_back(space_to_json(s));
    j["spaces"] = spaces;
    return j;
}

SpaceSimp space_simp_from_json(const OrderedJson& j) {
    SpaceSimp x;
    x.shape = trunc_simp_from_json(j);
    if (!j.contains("spaces")) {
        for (int n = 0; n <= x.dim(); ++n)
            x.spaces.push_back(FiniteSpace::discrete(x.shape.level_size(n)));
    } else {
        for (const auto& s : j.at("spaces")) x.spaces.push_back(space_from_json(s));
    }
    if (auto v = validate_space_simp(x); !v.ok) throw ParseError("simplicial space: " + v.diagnostic);
    return x;
}

OrderedJson galois_system_to_json(const GaloisSystem& sys) {
    OrderedJson j;
    OrderedJson nodes = OrderedJson::array();
    for (int i = 0; i < sys.size(); ++i) {
        OrderedJson n;
        n["name"] = sys.names[i];
        n["group"] = group_to_json(sys.groups[i]);
        nodes.push_back(n);
    }
    j["nodes"] = nodes;
    OrderedJson maps = OrderedJson::array();
    for (const auto& [key, m] : sys.maps) {
        OrderedJson e;
        e["from"] = sys.names[key.first];
        e["to"] = sys.names[key.second];
        e["map"] = m;
        maps.push_back(e);
    }
    j["maps"] = maps;
    return j;
}

GaloisSystem galois_system_from_json(const OrderedJson& j) {
    if (!j.contains("nodes")) throw ParseError("system: missing 'nodes'");
    GaloisSystem sys;
    for (const auto& n : j.at("nodes")) {
        sys.names.push_back(n.at("name").get<std::string>());
        sys.groups.push_back(group_from_json(n.at("group")));
    }
    const int k = sys.size();
    sys.leq.assign(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) sys.leq[i][i] = true;
    std::map<std::pair<int, int>, std::vector<int>> edges;
    if (j.contains("maps")) {
        for (const auto& e : j.at("maps")) {
            int from = index_of_label(sys.names, e.at("from").get<std::string>());
            int to = index_of_label(sys.names, e.at("to").get<std::string>());
            edges[{from, to}] = int_vector(e.at("map"), sys.groups[to].order, "transition map");
        }
    }
    // transitive closure with path composition; inconsistent composites rejected
    for (const auto& [key, m] : edges) {
        sys.leq[key.first][key.second] = true;
        sys.maps[key] = m;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < k; ++i)
            for (int jj = 0; jj < k; ++jj)
                for (int l = 0; l < k; ++l) {
                    if (i == jj || jj == l || i == l) continue;
                    if (!sys.leq[i][jj] || !sys.leq[jj][l]) continue;
                    std::vector<int> comp(sys.groups[i].order);
                    for (int e = 0; e < sys.groups[i].order; ++e)
                        comp[e] = sys.maps.at({jj, l})[sys.maps.at({i, jj})[e]];
                    if (!sys.leq[i][l]) {
                        sys.leq[i][l] = true;
                        sys.maps[{i, l}] = comp;
                        changed = true;
                    } else if (sys.maps.at({i, l}) != comp) {
                        throw ParseError("system: inconsistent composite transition maps");
                    }
                }
    }
    if (auto v = validate_galois_system(sys); !v.ok) throw ParseError("system: " + v.diagnostic);
    return sys;
}

OrderedJson abelian_group_to_json(const AbelianGroup& g) {
    OrderedJson j;
    OrderedJson factors = OrderedJson::array();
    for (const Int& t : g.torsion) factors.push_back(t.str());
    j["invariant_factors"] = factors;
    j["free_rank"] = g.free_rank;
    j["pretty"] = g.str();
    return j;
}

OrderedJson reduced_homotopy_to_json(const ReducedHomotopy& rh) {
    OrderedJson j;
    j["f"] = simp_map_to_json(rh.f);
    j["g"] = simp_map_to_json(rh.g);
    j["r"] = rh.r;
    return j;
}

ReducedHomotopy reduced_homotopy_from_json(const OrderedJson& j) {
    ReducedHomotopy rh;
    rh.f = simp_map_from_json(j.at("f"));
    rh.g = simp_map_from_json(j.at("g"));
    rh.r = j.at("r").get<std::vector<std::vector<std::vector<int>>>>();
    return rh;
}

}  // namespace proetale
