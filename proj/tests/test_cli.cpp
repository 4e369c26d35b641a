#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "proetale/cli.hpp"
#include "proetale/json_io.hpp"

using namespace proetale;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content) {
        path = std::string("/tmp/proetale_test_") + name;
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kZ2 = R"({"order": 2, "mul": [[0,1],[1,0]]})";

std::string gset_site_bundle() {
    // site Z/2, hypercovering = Cech tower of the regular covering at dim 2
    GSetSite site(cyclic_group(2));
    auto h = cech_hypercovering(site, SiteObj(site.regular()), {0, 0}, 2);
    OrderedJson j;
    j["site"] = site_to_json(site);
    j["hypercovering"] = hypercovering_to_json(site, h);
    return j.dump();
}

}  // namespace

TEST_CASE("bg subcommand emits level sizes and a valid nerve certificate") {
    TempFile g("z2.json", kZ2);
    auto r = run_cli({"bg", "--group", g.path, "--dim", "3"});
    REQUIRE(r.code == 0);
    auto j = OrderedJson::parse(r.out);
    CHECK(j["levels"] == OrderedJson::array({1, 2, 4, 8}));
    CHECK(j["nerve_iso"]["valid"] == true);
}

TEST_CASE("bg on the trivial group") {
    TempFile g("triv.json", R"({"order": 1, "mul": [[0]]})");
    auto r = run_cli({"bg", "--group", g.path, "--dim", "3"});
    REQUIRE(r.code == 0);
    auto j = OrderedJson::parse(r.out);
    CHECK(j["levels"] == OrderedJson::array({1, 1, 1, 1}));
}

TEST_CASE("invalid group tables exit with the parse code and row/col info") {
    TempFile g("bad.json", R"({"order": 2, "mul": [[0,1],[1,1]]})");
    auto r = run_cli({"bg", "--group", g.path, "--dim", "2"});
    CHECK(r.code == 4);
    CHECK(r.err.find("col") != std::string::npos);
}

TEST_CASE("cohomology table for Z/3 with integer coefficients") {
    TempFile g("z3.json", R"({"order": 3, "mul": [[0,1,2],[1,2,0],[2,0,1]]})");
    auto r = run_cli({"cohomology", "--group", g.path, "--coeff", "Z", "--pmax", "4"});
    REQUIRE(r.code == 0);
    auto j = OrderedJson::parse(r.out);
    // [Z, 0, Z/3, 0, Z/3]
    CHECK(j["rows"][0]["free_rank"] == 1);
    CHECK(j["rows"][1]["invariant_factors"].empty());
    CHECK(j["rows"][2]["invariant_factors"] == OrderedJson::array({"3"}));
    CHECK(j["rows"][3]["invariant_factors"].empty());
    CHECK(j["rows"][4]["invariant_factors"] == OrderedJson::array({"3"}));
    for (const auto& row : j["rows"]) CHECK(row["oracle_match"] == true);
}

TEST_CASE("cohomology of a quotient system reports stabilization") {
    OrderedJson sys;
    sys["nodes"] = OrderedJson::array();
    sys["nodes"].push_back({{"name", "Z4"},
                            {"group", {{"order", 4}, {"mul", {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}}}}});
    sys["nodes"].push_back({{"name", "Z2"}, {"group", {{"order", 2}, {"mul", {{0, 1}, {1, 0}}}}}});
    sys["maps"] = OrderedJson::array();
    sys["maps"].push_back({{"from", "Z4"}, {"to", "Z2"}, {"map", {0, 1, 0, 1}}});
    TempFile f("sys.json", sys.dump());
    auto r = run_cli({"cohomology", "--system", f.path, "--coeff", "Z/2", "--pmax", "1"});
    REQUIRE(r.code == 0);
    auto j = OrderedJson::parse(r.out);
    CHECK(j["degrees"][1]["stabilized"] == true);
    CHECK(j["degrees"][1]["colimit"]["pretty"] == "Z/2");
}

TEST_CASE("refine emits a certificate that re-validates under check") {
    TempFile bundle("refine_in.json", gset_site_bundle());
    auto r = run_cli({"refine", "--input", bundle.path, "--dim", "1"});
    REQUIRE(r.code == 0);
    TempFile cert("refine_cert.json", r.out);
    auto c = run_cli({"check", "--input", cert.path});
    CHECK(c.code == 0);
    auto j = OrderedJson::parse(c.out);
    CHECK(j["ok"] == true);
}

TEST_CASE("homotopy between two tie-break lifts re-validates under check") {
    GSetSite site(cyclic_group(2));
    auto w = cech_hypercovering(site, SiteObj(site.regular()), {0, 0}, 2);
    auto u = cech_hypercovering(site, SiteObj(site.free_orbits(2)), {0, 0, 0, 0}, 2);
    OrderedJson in;
    in["site"] = site_to_json(site);
    in["w"] = hypercovering_to_json(site, w);
    in["u"] = hypercovering_to_json(site, u);
    TempFile f("homotopy_in.json", in.dump());
    auto r = run_cli({"homotopy", "--input", f.path});
    REQUIRE(r.code == 0);
    TempFile cert("homotopy_cert.json", r.out);
    auto c = run_cli({"check", "--input", cert.path});
    CHECK(c.code == 0);
}

TEST_CASE("lift certificates re-validate under check") {
    GSetSite site(cyclic_group(2));
    OrderedJson in;
    in["site"] = site_to_json(site);
    in["w"] = site_obj_to_json(site, SiteObj(site.regular()));
    in["x"] = site_obj_to_json(site, SiteObj(site.regular()));
    in["u"] = site_obj_to_json(site, SiteObj(site.free_orbits(2)));
    in["f"] = {0, 1};
    in["p"] = {0, 1, 0, 1};
    TempFile f("lift_in.json", in.dump());
    auto r = run_cli({"lift", "--input", f.path});
    REQUIRE(r.code == 0);
    TempFile cert("lift_cert.json", r.out);
    auto c = run_cli({"check", "--input", cert.path});
    CHECK(c.code == 0);
}

TEST_CASE("pi0 and pi1 subcommands") {
    auto bg = classifying_space(cyclic_group(2), 2);
    TempFile f("bg2.json", space_simp_to_json(bg.space).dump());
    auto r = run_cli({"pi0", "--input", f.path});
    REQUIRE(r.code == 0);
    CHECK(OrderedJson::parse(r.out)["pi0"]["points"].size() == 1);

    TempFile f2("bgshape.json", trunc_simp_to_json(bg.space.shape).dump());
    auto r2 = run_cli({"pi1", "--input", f2.path});
    REQUIRE(r2.code == 0);
    CHECK(OrderedJson::parse(r2.out)["pi1"]["order"] == 2);
}

TEST_CASE("components and fibreproduct subcommands") {
    TempFile f("sier.json", R"({"points": ["a", "b"], "leq": [["a", "b"]]})");
    auto r = run_cli({"components", "--input", f.path});
    REQUIRE(r.code == 0);
    auto j = OrderedJson::parse(r.out);
    CHECK(j["components"]["points"].size() == 1);
    CHECK(j["extremally_disconnected"] == false);

    OrderedJson in;
    in["P"] = OrderedJson::parse(R"({"points": ["x", "y"], "leq": []})");
    in["S"] = OrderedJson::parse(R"({"points": ["a", "b"], "leq": [["a", "b"]]})");
    in["f"] = {0, 0};
    TempFile f2("fp.json", in.dump());
    auto r2 = run_cli({"fibreproduct", "--input", f2.path});
    REQUIRE(r2.code == 0);
    CHECK(OrderedJson::parse(r2.out)["space"]["points"].size() == 4);
}

TEST_CASE("identical inputs produce byte-identical output") {
    TempFile g("z2d.json", kZ2);
    auto a = run_cli({"bg", "--group", g.path, "--dim", "3"});
    auto b = run_cli({"bg", "--group", g.path, "--dim", "3"});
    CHECK(a.out == b.out);
    TempFile bundle("refine_d.json", gset_site_bundle());
    auto c = run_cli({"refine", "--input", bundle.path, "--dim", "1"});
    auto d = run_cli({"refine", "--input", bundle.path, "--dim", "1"});
    CHECK(c.out == d.out);
}

TEST_CASE("size cap failures exit with code 3") {
    TempFile bundle("refine_cap.json", gset_site_bundle());
    auto r = run_cli({"refine", "--input", bundle.path, "--dim", "2", "--cap", "4"});
    CHECK(r.code == 3);
    CHECK(r.err.find("size_cap") != std::string::npos);
}

TEST_CASE("json round trips for the core formats") {
    GSetSite site(cyclic_group(2));
    auto h = cech_hypercovering(site, SiteObj(site.regular()), {0, 0}, 2);
    auto j = hypercovering_to_json(site, h);
    auto h2 = hypercovering_from_json(site, j);
    CHECK(h2.shape == h.shape);
    CHECK(h2.augmentation == h.augmentation);
    CHECK(hypercovering_to_json(site, h2) == j);

    auto sp = FiniteSpace({"a", "b", "c"}, {{0, 1}});
    CHECK(space_from_json(space_to_json(sp)) == sp);

    auto sys = GaloisSystem::single(cyclic_group(3), "Z3");
    auto sys2 = galois_system_from_json(galois_system_to_json(sys));
    CHECK(sys2.names == sys.names);
}

TEST_CASE("validation failures exit with code 2") {
    // constant tower over a gset site is not weakly contractible anywhere,
    // but it is a hypercovering; break the augmentation instead
    GSetSite site(cyclic_group(2));
    auto h = cech_hypercovering(site, SiteObj(site.regular()), {0, 0}, 1);
    OrderedJson j;
    j["site"] = site_to_json(site);
    j["hypercovering"] = hypercovering_to_json(site, h);
    // corrupt a face table so the shape fails validation
    j["hypercovering"]["truncation"]["faces"][0][0][0] = 1 - j["hypercovering"]["truncation"]["faces"][0][0][0].get<int>();
    TempFile f("bad_hc.json", j.dump());
    auto r = run_cli({"refine", "--input", f.path, "--dim", "1"});
    CHECK(r.code == 4);  // malformed simplicial data is a parse failure on load
    // a well-formed certificate whose verdict fails: tamper with a lift
    OrderedJson in;
    in["type"] = "lift";
    in["site"] = site_to_json(site);
    in["w"] = site_obj_to_json(site, SiteObj(site.regular()));
    in["x"] = site_obj_to_json(site, SiteObj(site.regular()));
    in["u"] = site_obj_to_json(site, SiteObj(site.free_orbits(2)));
    in["f"] = {0, 1};
    in["p"] = {0, 1, 0, 1};
    in["lift"] = {1, 0};  // does not commute with p against f
    TempFile c("bad_lift.json", in.dump());
    auto rc = run_cli({"check", "--input", c.path});
    CHECK(rc.code == 2);
}
