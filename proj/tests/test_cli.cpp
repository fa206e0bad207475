#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsh/cli.hpp"
#include "qsh/json_io.hpp"
#include "qsh/rep.hpp"

using namespace qsh;
namespace fs = std::filesystem;

namespace {

struct Sandbox {
    fs::path dir;

    Sandbox() {
        static int counter = 0;
        dir = fs::temp_directory_path() / ("qshuffle_test_" + std::to_string(::getpid()) + "_" +
                                           std::to_string(counter++));
        fs::create_directories(dir);
    }
    ~Sandbox() { std::error_code ec; fs::remove_all(dir, ec); }

    std::string write(const std::string& name, const std::string& contents) const {
        fs::path p = dir / name;
        std::ofstream out(p);
        out << contents;
        return p.string();
    }

    std::string write_json(const std::string& name, const Json& j) const {
        return write(name, j.dump(2));
    }

    std::string path(const std::string& name) const { return (dir / name).string(); }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = qsh::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string ainf_spec_json(int bound) {
    Json j;
    j["family"] = "ainfinity";
    j["support_bound"] = bound;
    j["monoid"] = {{"rule", "additive"}};
    j["action"] = {{"rule", "ainfinity"}};
    return j.dump();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construct then validate round trip") {
    Sandbox box;
    auto spec_path = box.path("kron2.json");
    RunResult construct = run_cli({"construct", "--builtin", "kronecker 2", "--identity", "e",
                                   "--zero", "z", "--output", spec_path});
    REQUIRE(construct.code == 0);

    RunResult validate = run_cli({"validate", "--spec", spec_path});
    CHECK(validate.code == 0);
    CHECK(validate.out == "ok\n");

    // emitted JSON reloads to an equal document
    Json emitted = load_json_file(spec_path);
    CHECK(spec_to_json(spec_from_json(emitted)) == emitted);
}

TEST_CASE("validate rejects a non-associative table with exit 1") {
    Sandbox box;
    Json j;
    j["vertices"] = {"e", "x", "y"};
    j["arrows"] = Json::array();
    Json table = Json::array();
    // x*x = x and x*y = e break associativity against the absorbing rule
    for (std::string g : {"e", "x", "y"})
        for (std::string h : {"e", "x", "y"}) {
            std::string prod = g == "e" ? h : (h == "e" ? g : "y");
            if (g == "x" && h == "x") prod = "x";
            if (g == "x" && h == "y") prod = "e";
            table.push_back(Json::array({g, h, prod}));
        }
    j["monoid"] = {{"identity", "e"}, {"table", table}};
    auto path = box.write_json("bad.json", j);

    RunResult r = run_cli({"validate", "--spec", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("associativity") != std::string::npos);
}

TEST_CASE("commands refuse a spec that fails validation") {
    Sandbox box;
    Json j;
    j["vertices"] = {"e", "z"};
    j["arrows"] = Json::array({Json{{"name", "a1"}, {"source", "e"}, {"target", "z"}}});
    Json table = Json::array();
    for (std::string g : {"e", "z"})
        for (std::string h : {"e", "z"})
            table.push_back(Json::array({g, h, g == "e" ? h : (h == "e" ? g : "z")}));
    j["monoid"] = {{"identity", "e"}, {"table", table}};
    // z.a1 = a1 has the wrong endpoints under the monoid translate
    j["action"] = {{"left", Json::array({Json{{"vertex", "z"},
                                              {"arrow", "a1"},
                                              {"result", Json::array({Json{{"arrow", "a1"},
                                                                           {"coeff", "1"}}})}}})}};
    auto path = box.write_json("bad_action.json", j);

    RunResult multiply = run_cli({"multiply", "--spec", path, "a1", "a1"});
    CHECK(multiply.code == 1);
    CHECK(multiply.err.find("failed validation") != std::string::npos);

    RunResult validate = run_cli({"validate", "--spec", path});
    CHECK(validate.code == 1);
    CHECK(validate.out.find("bicomodule map") != std::string::npos);
}

TEST_CASE("malformed JSON exits 2") {
    Sandbox box;
    auto path = box.write("broken.json", "{ not json ");
    RunResult r = run_cli({"validate", "--spec", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("input error") != std::string::npos);

    RunResult missing = run_cli({"validate", "--spec", box.path("nope.json")});
    CHECK(missing.code == 2);

    RunResult no_args = run_cli({});
    CHECK(no_args.code == 2);
}

TEST_CASE("multiply on the Kronecker structure") {
    Sandbox box;
    auto spec_path = box.path("kron2.json");
    REQUIRE(run_cli({"construct", "--builtin", "kronecker 2", "--identity", "e", "--zero", "z",
                     "--output", spec_path})
                .code == 0);
    RunResult r = run_cli({"multiply", "--spec", spec_path, "a1", "a2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("multiply on the quantum plane") {
    Sandbox box;
    auto spec_path = box.write("ainf.json", ainf_spec_json(10));
    RunResult r1 = run_cli({"multiply", "--spec", spec_path, "a0", "g1"});
    CHECK(r1.code == 0);
    CHECK(r1.out == "q*a1\n");
    RunResult r2 = run_cli({"multiply", "--spec", spec_path, "g1", "a0"});
    CHECK(r2.out == "a1\n");
    RunResult r3 = run_cli({"multiply", "--spec", spec_path, "a1a0", "a0", "--format", "json"});
    CHECK(r3.code == 0);
    Json j = Json::parse(r3.out);
    CHECK(j["terms"].size() == 1);
    CHECK(j["terms"][0]["path"] == "a2a1a0");
    CHECK(j["terms"][0]["coeff"] == "q^2 + q + 1");
}

TEST_CASE("delta of a path") {
    RunResult r = run_cli({"delta", "--builtin", "linearA 3", "a2*a1"});
    CHECK(r.code == 0);
    CHECK(r.out == "v3(x)a2a1 + a2(x)a1 + a2a1(x)v1\n");

    RunResult bad = run_cli({"delta", "--builtin", "linearA 3", "a1*a2"});
    CHECK(bad.code == 2);
}

TEST_CASE("verify reports and exit codes") {
    Sandbox box;
    auto spec_path = box.path("sub3.json");
    REQUIRE(run_cli({"construct", "--builtin", "subspace 3", "--identity", "e", "--zero", "f1",
                     "--output", spec_path})
                .code == 0);
    RunResult r = run_cli({"verify", "--spec", spec_path, "--max-len", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] Delta multiplicativity") != std::string::npos);

    RunResult json_run = run_cli({"verify", "--spec", spec_path, "--max-len", "3", "--format", "json"});
    Json report = Json::parse(json_run.out);
    CHECK(report["all_pass"] == true);
}

TEST_CASE("tensor with and without decomposition") {
    Sandbox box;
    auto spec_path = box.path("lin4.json");
    REQUIRE(run_cli({"construct", "--builtin", "linearA 4", "--identity", "v1", "--zero", "v2",
                     "--output", spec_path})
                .code == 0);
    Quiver a4 = make_linear_a(4);
    auto left = box.write_json("v12.json", rep_to_json(interval_module(a4, 1, 2)));
    auto right = box.write_json("v12b.json", rep_to_json(interval_module(a4, 1, 2)));

    RunResult decomposed = run_cli({"tensor", "--spec", spec_path, "--left", left, "--right", right,
                                    "--decompose"});
    CHECK(decomposed.code == 0);
    CHECK(decomposed.out == "V(1,2) (+) V(2,2)^2\n");

    RunResult as_json = run_cli({"tensor", "--spec", spec_path, "--left", left, "--right", right,
                                 "--decompose", "--format", "json"});
    Json j = Json::parse(as_json.out);
    CHECK(j["summands"].size() == 2);
    CHECK(j["total_dim"] == 4);

    RunResult full = run_cli({"tensor", "--spec", spec_path, "--left", left, "--right", right});
    CHECK(full.code == 0);
    Json rep = Json::parse(full.out);
    CHECK(rep["dims"]["v2"] == 3);
    // emitted representation JSON reloads and re-emits identically
    CHECK(rep_to_json(rep_from_json(rep, a4)) == rep);
}

TEST_CASE("cg-table lists the shifted-interval decomposition") {
    Sandbox box;
    auto spec_path = box.write("ainf.json", ainf_spec_json(10));
    RunResult r = run_cli({"cg-table", "--spec", spec_path, "--bound", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("V(0,1) (x) V(0,2)") != std::string::npos);
    CHECK(r.out.find("V(0,3) (+) V(1,2)") != std::string::npos);
}

TEST_CASE("rep-ring checks pass on the quantum plane structure") {
    Sandbox box;
    auto spec_path = box.write("ainf.json", ainf_spec_json(12));
    RunResult r = run_cli({"rep-ring", "--spec", spec_path, "--bound", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] class commutativity") != std::string::npos);
}

TEST_CASE("classify") {
    RunResult r = run_cli({"classify", "--builtin", "linearA 5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("A5") != std::string::npos);
    CHECK(r.out.find("finite representation type") != std::string::npos);

    RunResult kron = run_cli({"classify", "--builtin", "kronecker 3", "--format", "json"});
    Json j = Json::parse(kron.out);
    CHECK(j["finite_type"] == false);

    // identical inputs, identical bytes
    RunResult again = run_cli({"classify", "--builtin", "linearA 5"});
    CHECK(again.out == r.out);
}

TEST_CASE("attach emits the realized quiver") {
    Sandbox box;
    Json iso;
    iso["vertices"] = {"e", "z"};
    Json table = Json::array();
    for (std::string g : {"e", "z"})
        for (std::string h : {"e", "z"})
            table.push_back(Json::array({g, h, g == "e" ? h : (h == "e" ? g : "z")}));
    iso["monoid"] = {{"identity", "e"}, {"table", table}};
    iso["dims"] = Json::array({Json{{"target", "z"}, {"source", "e"}, {"dim", 2}}});
    auto path = box.write_json("iso.json", iso);

    RunResult r = run_cli({"attach", "--isotypic", path});
    CHECK(r.code == 0);
    Quiver q = quiver_from_json(Json::parse(r.out));
    CHECK(q == make_kronecker(2));

    // isotypic JSON round trip
    IsotypicMatrix parsed = isotypic_from_json(iso);
    CHECK(isotypic_from_json(isotypic_to_json(parsed)).dims == parsed.dims);
}

TEST_CASE("spec JSON for the A-infinity structure round trips") {
    BialgebraSpec spec = ainf_bialgebra(9);
    Json j = spec_to_json(spec);
    BialgebraSpec back = spec_from_json(j);
    CHECK(back.quiver == spec.quiver);
    CHECK(back.monoid == spec.monoid);
    CHECK(back.action.kind() == BimoduleAction::Kind::AInfinityRule);
    CHECK(spec_to_json(back) == j);
}

TEST_CASE("quiver JSON documents") {
    Json doc;
    doc["vertices"] = {"e", "z"};
    doc["arrows"] = Json::array({Json{{"name", "a1"}, {"source", "e"}, {"target", "z"}}});
    CHECK(quiver_from_json(doc) == make_kronecker(1));
    CHECK(quiver_from_json(quiver_to_json(make_subspace(3))) == make_subspace(3));
    CHECK(quiver_from_json(quiver_to_json(make_ainfinity(7))) == make_ainfinity(7));

    // dangling endpoints surface through validate, not the parser
    Json bad = doc;
    bad["arrows"][0]["target"] = "zz";
    Quiver q = quiver_from_json(bad);
    CHECK_FALSE(q.validate().ok());
}

}  // TEST_SUITE
