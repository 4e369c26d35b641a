#include "proetale/cli.hpp"

#include <CLI11.hpp>

#include "proetale/classifying.hpp"
#include "proetale/json_io.hpp"
#include "proetale/pi1.hpp"

namespace proetale::cli {

namespace {

constexpr int kOk = 0, kValidation = 2, kSizeCap = 3, kParse = 4;

std::string dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

// markdown tables are derived from the JSON, which stays the source of truth
std::string to_markdown(const OrderedJson& j) {
    std::string md;
    if (j.contains("levels") && j.contains("group_order")) {
        md += "| n | level size | nondegenerate |\n|---|---|---|\n";
        for (size_t n = 0; n < j["levels"].size(); ++n)
            md += "| " + std::to_string(n) + " | " + j["levels"][n].dump() + " | " +
                  j["nondegenerate"][n].dump() + " |\n";
        md += "\nnerve isomorphism: " + std::string(j["nerve_iso"]["valid"].get<bool>() ? "valid" : "INVALID") + "\n";
        return md;
    }
    if (j.contains("rows")) {
        md += "| p | invariant factors | free rank | oracle match |\n|---|---|---|---|\n";
        for (const auto& r : j["rows"]) {
            md += "| " + r["p"].dump() + " | " + r["invariant_factors"].dump() + " | " +
                  r["free_rank"].dump() + " | " +
                  (r.contains("oracle_match") ? r["oracle_match"].dump() : std::string("-")) + " |\n";
        }
        if (j.contains("truncated_at")) md += "\ntable truncated at p = " + j["truncated_at"].dump() + " (size cap)\n";
        return md;
    }
    if (j.contains("stages")) {
        md += "| stage | group |\n|---|---|\n";
        for (const auto& s : j["stages"])
            md += "| " + s["name"].get<std::string>() + " | " + s["group"]["pretty"].get<std::string>() + " |\n";
        md += "\ncolimit: " + j["colimit"]["pretty"].get<std::string>() +
              ", stabilized: " + j["stabilized"].dump() + "\n";
        return md;
    }
    return j.dump(2) + "\n";
}

void emit(const OrderedJson& j, const std::string& format, std::ostream& out) {
    out << (format == "markdown" ? to_markdown(j) : dump(j));
}

OrderedJson group_or_parse(const std::string& path) { return load_json_file(path); }

int cmd_bg(const std::string& group_file, int dim, const std::string& format, std::ostream& out) {
    Group g = group_from_json(group_or_parse(group_file));
    auto bg = classifying_space(g, dim);
    OrderedJson j;
    j["group_order"] = g.order;
    j["dim"] = dim;
    OrderedJson sizes = OrderedJson::array(), nondeg = OrderedJson::array();
    for (int n = 0; n <= dim; ++n) {
        sizes.push_back(bg.space.shape.level_size(n));
        auto items = nondegenerate_decomposition(bg.space.shape, n);
        int c = 0;
        for (const auto& it : items)
            if (it.nondegenerate) ++c;
        nondeg.push_back(c);
    }
    j["levels"] = sizes;
    j["nondegenerate"] = nondeg;
    OrderedJson iso;
    iso["levels"] = bg.iso.level;
    iso["valid"] = validate_map(bg.space.shape, bg.nerve_shape, bg.iso).ok;
    j["nerve_iso"] = iso;
    emit(j, format, out);
    return kOk;
}

int cmd_cohomology(const std::string& group_file, const std::string& system_file,
                   const std::string& coeff, int pmax, const std::string& format,
                   std::ostream& out) {
    Coefficient a = Coefficient::parse(coeff);
    if (!system_file.empty()) {
        GaloisSystem sys = galois_system_from_json(load_json_file(system_file));
        OrderedJson j;
        j["coefficients"] = a.name;
        OrderedJson degrees = OrderedJson::array();
        for (int p = 0; p <= pmax; ++p) {
            auto r = verdier_colimit(sys, a, p);
            OrderedJson row;
            row["p"] = p;
            OrderedJson stages = OrderedJson::array();
            for (const auto& st : r.stages) {
                OrderedJson s;
                s["name"] = st.name;
                s["group"] = abelian_group_to_json(st.group);
                stages.push_back(s);
            }
            row["stages"] = stages;
            row["colimit"] = abelian_group_to_json(r.colimit);
            row["stabilized"] = r.stabilized;
            degrees.push_back(row);
        }
        j["degrees"] = degrees;
        emit(j, format, out);
        return kOk;
    }
    Group g = group_from_json(group_or_parse(group_file));
    OrderedJson j;
    j["group_order"] = g.order;
    j["coefficients"] = a.name;
    OrderedJson rows = OrderedJson::array();
    bool truncated = false;
    int truncated_at = -1;
    std::optional<ClassifyingSpace> bg;
    try {
        bg = classifying_space(g, pmax + 1);
    } catch (const SizeCapError&) {
        truncated = true;
        truncated_at = 0;
    }
    if (bg) {
        auto c = cochain_complex_of_shape(bg->space.shape, a, pmax);
        for (int p = 0; p <= pmax; ++p) {
            OrderedJson row;
            row["p"] = p;
            AbelianGroup h = cohomology(c, p);
            OrderedJson hj = abelian_group_to_json(h);
            row["invariant_factors"] = hj["invariant_factors"];
            row["free_rank"] = hj["free_rank"];
            try {
                AbelianGroup oracle = group_cohomology_oracle(g, a, p);
                row["oracle_match"] = (oracle == h);
            } catch (const SizeCapError&) {
                row["oracle_match"] = nullptr;
            }
            rows.push_back(row);
        }
    }
    j["rows"] = rows;
    if (truncated) j["truncated_at"] = truncated_at;
    emit(j, format, out);
    return truncated ? kSizeCap : kOk;
}

int cmd_refine(const std::string& input, int dim, int cap, const std::string& format,
               std::ostream& out) {
    OrderedJson in = load_json_file(input);
    auto site = site_from_json(in.at("site"));
    Hypercovering h = hypercovering_from_json(*site, in.at("hypercovering"));
    if (auto v = check_hypercovering(*site, h); !v.ok)
        throw ValidationError("input is not a hypercovering: " + v.diagnostic);
    auto ref = refine_to_split_wc(*site, h, dim, cap);
    OrderedJson j;
    j["type"] = "refinement";
    j["site"] = site_to_json(*site);
    j["input"] = hypercovering_to_json(*site, h);
    j["dim"] = dim;
    j["output"] = hypercovering_to_json(*site, ref.w);
    j["map"] = simp_map_to_json(ref.to_input);
    OrderedJson verdicts;
    verdicts["output_is_hypercovering"] = check_hypercovering(*site, ref.w).ok;
    verdicts["output_is_split_wc"] = is_split_wc(*site, ref.w);
    Hypercovering htr = h;
    if (h.dim() > dim) {
        htr.shape = skeleton(h.shape, dim);
        htr.level_obj.assign(h.level_obj.begin(), h.level_obj.begin() + dim + 1);
    }
    verdicts["map_is_simplicial"] = validate_map(ref.w.shape, htr.shape, ref.to_input).ok;
    j["verdicts"] = verdicts;
    for (const auto& [k, v] : verdicts.items())
        if (!v.get<bool>()) throw ValidationError("refinement verdict failed: " + k);
    emit(j, format, out);
    return kOk;
}

int cmd_check(const std::string& input, std::ostream& out) {
    OrderedJson in = load_json_file(input);
    OrderedJson j;
    std::string type = in.contains("type") ? in.at("type").get<std::string>() : "hypercovering";
    j["type"] = type;
    bool ok = true;
    std::string diagnostic;
    if (type == "hypercovering") {
        auto site = site_from_json(in.at("site"));
        Hypercovering h = hypercovering_from_json(*site, in.at("hypercovering"));
        auto v = check_hypercovering(*site, h);
        ok = v.ok;
        diagnostic = v.diagnostic;
        j["split_wc"] = ok && is_split_wc(*site, h);
    } else if (type == "refinement") {
        auto site = site_from_json(in.at("site"));
        Hypercovering h = hypercovering_from_json(*site, in.at("input"));
        Hypercovering w = hypercovering_from_json(*site, in.at("output"));
        SimpMap m = simp_map_from_json(in.at("map"));
        auto v = check_hypercovering(*site, w);
        ok = v.ok;
        diagnostic = v.diagnostic;
        if (ok && !is_split_wc(*site, w)) { ok = false; diagnostic = "output not split wc"; }
        if (ok) {
            Hypercovering htr = h;
            int dim = w.dim();
            if (h.dim() > dim) {
                htr.shape = skeleton(h.shape, dim);
                htr.level_obj.assign(h.level_obj.begin(), h.level_obj.begin() + dim + 1);
            }
            auto vm = validate_map(w.shape, htr.shape, m);
            if (!vm.ok) { ok = false; diagnostic = "map: " + vm.diagnostic; }
        }
    } else if (type == "reduced_homotopy") {
        auto site = site_from_json(in.at("site"));
        Hypercovering w = hypercovering_from_json(*site, in.at("w"));
        Hypercovering u = hypercovering_from_json(*site, in.at("u"));
        ReducedHomotopy rh = reduced_homotopy_from_json(in.at("certificate"));
        auto v = check_reduced_homotopy(w.shape, u.shape, rh);
        ok = v.ok;
        diagnostic = v.diagnostic;
    } else if (type == "lift") {
        auto site = site_from_json(in.at("site"));
        SiteObj w = site_obj_from_json(*site, in.at("w"));
        SiteObj x = site_obj_from_json(*site, in.at("x"));
        SiteObj u = site_obj_from_json(*site, in.at("u"));
        auto f = in.at("f").get<std::vector<int>>();
        auto p = in.at("p").get<std::vector<int>>();
        auto lift = in.at("lift").get<std::vector<int>>();
        ok = site->is_morphism(w, u, lift);
        for (size_t e = 0; ok && e < lift.size(); ++e)
            if (p[lift[e]] != f[e]) ok = false;
        if (!ok) diagnostic = "lift does not commute or is not a morphism";
    } else {
        throw ParseError("check: unknown certificate type '" + type + "'");
    }
    j["ok"] = ok;
    if (!ok) j["diagnostic"] = diagnostic;
    out << dump(j);
    return ok ? kOk : kValidation;
}

int cmd_lift(const std::string& input, uint64_t seed, bool seeded, std::ostream& out) {
    OrderedJson in = load_json_file(input);
    auto site = site_from_json(in.at("site"));
    SiteObj w = site_obj_from_json(*site, in.at("w"));
    SiteObj x = site_obj_from_json(*site, in.at("x"));
    SiteObj u = site_obj_from_json(*site, in.at("u"));
    auto f = in.at("f").get<std::vector<int>>();
    auto p = in.at("p").get<std::vector<int>>();
    TieBreak tb = seeded ? TieBreak::Seeded(seed) : TieBreak::Least();
    auto g = site->lift(w, f, u, x, p, tb);
    OrderedJson j;
    j["type"] = "lift";
    j["site"] = in.at("site");
    j["w"] = in.at("w");
    j["x"] = in.at("x");
    j["u"] = in.at("u");
    j["f"] = f;
    j["p"] = p;
    j["lift"] = g;
    out << dump(j);
    return kOk;
}

int cmd_homotopy(const std::string& input, uint64_t seed, std::ostream& out) {
    OrderedJson in = load_json_file(input);
    auto site = site_from_json(in.at("site"));
    Hypercovering w = hypercovering_from_json(*site, in.at("w"));
    Hypercovering u = hypercovering_from_json(*site, in.at("u"));
    SimpMap f, g;
    if (in.contains("f") && in.contains("g")) {
        f = simp_map_from_json(in.at("f"));
        g = simp_map_from_json(in.at("g"));
    } else {
        // two lifts of the same diagram under different tie-break orders
        f = map_from_split_wc(*site, w, u, TieBreak::Least());
        g = map_from_split_wc(*site, w, u,
                              seed ? TieBreak::Seeded(seed) : TieBreak::Greatest());
    }
    auto rh = homotopy_between(*site, w, u, f, g, TieBreak::Least());
    OrderedJson j;
    j["type"] = "reduced_homotopy";
    j["site"] = in.at("site");
    j["w"] = in.at("w");
    j["u"] = in.at("u");
    j["certificate"] = reduced_homotopy_to_json(rh);
    j["valid"] = check_reduced_homotopy(w.shape, u.shape, rh).ok;
    out << dump(j);
    return j["valid"].get<bool>() ? kOk : kValidation;
}

int cmd_pi0(const std::string& input, std::ostream& out) {
    SpaceSimp x = space_simp_from_json(load_json_file(input));
    OrderedJson j;
    j["pi0"] = space_to_json(pi0(x));
    out << dump(j);
    return kOk;
}

int cmd_pi1(const std::string& input, const std::string& basepoint, int cap, std::ostream& out) {
    OrderedJson in = load_json_file(input);
    TruncSimp x = trunc_simp_from_json(in);
    int bp = 0;
    if (!basepoint.empty()) {
        bp = -1;
        for (int e = 0; e < x.level_size(0); ++e)
            if (!x.labels.empty() && x.labels[0][e] == basepoint) bp = e;
        if (bp < 0) throw ParseError("pi1: unknown basepoint label '" + basepoint + "'");
    }
    auto r = pi1_edge_path(x, bp, cap);
    OrderedJson j;
    j["generators"] = r.presentation.generators;
    j["relations"] = int(r.presentation.relators.size());
    if (r.decided) {
        OrderedJson pi1;
        pi1["order"] = r.group.order;
        pi1["table"] = r.group.mul;
        j["pi1"] = pi1;
    } else {
        j["pi1"] = nullptr;
        j["undecided_at_cap"] = cap;
    }
    out << dump(j);
    return kOk;
}

int cmd_components(const std::string& input, std::ostream& out) {
    FiniteSpace x = space_from_json(load_json_file(input));
    auto c = components(x);
    OrderedJson j;
    j["components"] = space_to_json(c.space);
    j["quotient"] = c.quotient.map;
    j["totally_disconnected"] = is_totally_disconnected(x);
    j["extremally_disconnected"] = is_extremally_disconnected(x);
    out << dump(j);
    return kOk;
}

int cmd_fibreproduct(const std::string& input, std::ostream& out) {
    OrderedJson in = load_json_file(input);
    FiniteSpace p = space_from_json(in.at("P"));
    FiniteSpace s = space_from_json(in.at("S"));
    auto comp = components(s);
    SpaceMap f{p, comp.space, in.at("f").get<std::vector<int>>()};
    auto fp = fibre_product_over_components(p, f, s);
    OrderedJson j;
    j["space"] = space_to_json(fp.space);
    j["to_p"] = fp.to_p.map;
    j["to_s"] = fp.to_s.map;
    out << dump(j);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-model engine for component spaces, hypercoverings and their cohomology"};
    app.require_subcommand(1);

    std::string group_file, system_file, input_file, coeff = "Z", format = "json", basepoint;
    int dim = 3, pmax = 3, cap = 512, pi1cap = 5000;
    uint64_t seed = 0;

    auto* bg = app.add_subcommand("bg", "classifying space of a finite group");
    bg->add_option("--group", group_file, "group JSON file")->required();
    bg->add_option("--dim", dim, "truncation dimension");
    bg->add_option("--format", format, "json | markdown");

    auto* coh = app.add_subcommand("cohomology", "cohomology with constant coefficients");
    coh->add_option("--group", group_file, "group JSON file");
    coh->add_option("--system", system_file, "quotient-system JSON file");
    coh->add_option("--coeff", coeff, "Z, Z/n or 0");
    coh->add_option("--pmax", pmax, "maximal degree");
    coh->add_option("--format", format, "json | markdown");

    auto* refine = app.add_subcommand("refine", "split weakly contractible refinement");
    refine->add_option("--input", input_file, "bundle {site, hypercovering}")->required();
    refine->add_option("--dim", dim, "refinement dimension");
    refine->add_option("--cap", cap, "level size cap");
    refine->add_option("--format", format, "json | markdown");

    auto* check = app.add_subcommand("check", "re-validate a certificate or hypercovering");
    check->add_option("--input", input_file, "certificate JSON")->required();

    auto* lift = app.add_subcommand("lift", "lift a morphism along a covering");
    lift->add_option("--input", input_file, "bundle {site, w, x, u, f, p}")->required();
    lift->add_option("--seed", seed, "seeded tie-break");

    auto* homotopy = app.add_subcommand("homotopy", "reduced homotopy between two lifts");
    homotopy->add_option("--input", input_file, "bundle {site, w, u[, f, g]}")->required();
    homotopy->add_option("--seed", seed, "seeded tie-break for the second lift");

    auto* pi0c = app.add_subcommand("pi0", "space of simplicial components");
    pi0c->add_option("--input", input_file, "simplicial space JSON")->required();

    auto* pi1c = app.add_subcommand("pi1", "edge-path group at a basepoint");
    pi1c->add_option("--input", input_file, "simplicial set JSON")->required();
    pi1c->add_option("--basepoint", basepoint, "basepoint label (default: first vertex)");
    pi1c->add_option("--cap", pi1cap, "coset enumeration cap");

    auto* compc = app.add_subcommand("components", "space of components of a finite space");
    compc->add_option("--input", input_file, "finite space JSON")->required();

    auto* fibre = app.add_subcommand("fibreproduct", "fibre product over the component space");
    fibre->add_option("--input", input_file, "bundle {P, S, f}")->required();

    std::vector<const char*> argv;
    argv.push_back("proetale");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return e.get_exit_code() == 0 ? kOk : kParse;
    }

    try {
        if (bg->parsed()) return cmd_bg(group_file, dim, format, out);
        if (coh->parsed()) {
            if (group_file.empty() == system_file.empty())
                throw ParseError("cohomology: provide exactly one of --group or --system");
            return cmd_cohomology(group_file, system_file, coeff, pmax, format, out);
        }
        if (refine->parsed()) return cmd_refine(input_file, dim, cap, format, out);
        if (check->parsed()) return cmd_check(input_file, out);
        if (lift->parsed()) return cmd_lift(input_file, seed, lift->count("--seed") > 0, out);
        if (homotopy->parsed()) return cmd_homotopy(input_file, seed, out);
        if (pi0c->parsed()) return cmd_pi0(input_file, out);
        if (pi1c->parsed()) return cmd_pi1(input_file, basepoint, pi1cap, out);
        if (compc->parsed()) return cmd_components(input_file, out);
        if (fibre->parsed()) return cmd_fibreproduct(input_file, out);
    } catch (const ParseError& e) {
        err << OrderedJson{{"error", {{"kind", "parse"}, {"what", e.what()}}}}.dump(2) << "\n";
        return kParse;
    } catch (const SizeCapError& e) {
        err << OrderedJson{{"error", {{"kind", "size_cap"}, {"what", e.what()}}}}.dump(2) << "\n";
        return kSizeCap;
    } catch (const ValidationError& e) {
        err << OrderedJson{{"error", {{"kind", "validation"}, {"what", e.what()}}}}.dump(2) << "\n";
        return kValidation;
    } catch (const nlohmann::json::exception& e) {
        err << OrderedJson{{"error", {{"kind", "parse"}, {"what", e.what()}}}}.dump(2) << "\n";
        return kParse;
    }
    return kParse;
}

}  // namespace proetale::cli
