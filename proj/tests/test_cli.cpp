#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "reconf/cli.hpp"
#include "reconf/gadget.hpp"
#include "reconf/generators.hpp"
#include "reconf/report.hpp"

using namespace reconf;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const char* kP4 = "p isr 4 3 2\ne 1 2\ne 2 3\ne 3 4\ns 1 3\nt 2 4\n";
const char* kC4 = "p isr 4 4 2\ne 1 2\ne 2 3\ne 3 4\ne 1 4\ns 1 3\nt 2 4\n";

struct Run {
    int code;
    std::string out, err;
};

Run call(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("reconf_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& text) const {
        const fs::path p = path / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string read(const std::string& name) const {
        std::ifstream f(path / name);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
};

}  // namespace

TEST_CASE("solve P4") {
    const auto r = call({"solve"}, kP4);
    CHECK(r.code == cli::kExitOk);
    const json j = json::parse(r.out);
    CHECK(j["answer"] == "yes");
    CHECK(j["sequence"].size() == 5);
    CHECK(j["sequence"][0] == json::array({1, 3}));
    CHECK(j["kernel"]["n"] == 4);
    CHECK(j.contains("stats"));
}

TEST_CASE("solve C4 says no") {
    const auto r = call({"solve", "-"}, kC4);
    CHECK(r.code == cli::kExitNo);
    const json j = json::parse(r.out);
    CHECK(j["answer"] == "no");
    CHECK_FALSE(j.contains("sequence"));
}

TEST_CASE("tiny state budget gives unknown") {
    const auto r = call({"solve", "--strategy", "oracle", "--state-budget", "1"}, kC4);
    CHECK(r.code == cli::kExitUnknown);
    const json j = json::parse(r.out);
    CHECK(j["answer"] == "unknown");
    CHECK(j["reason"] == "state budget exceeded");
}

TEST_CASE("verify accepts solver output and flags tampering") {
    TempDir tmp;
    const std::string inst = tmp.file("p4.txt", kP4);
    const auto solved = call({"solve", inst});
    REQUIRE(solved.code == 0);
    const std::string good = tmp.file("good.json", solved.out);
    const auto ok = call({"verify", inst, good});
    CHECK(ok.code == cli::kExitOk);
    CHECK(ok.out == "ok\n");

    json bad = json::parse(solved.out);
    bad["sequence"][1] = json::array({1, 2, 3});
    const auto v = call({"verify", inst, tmp.file("bad.json", bad.dump())});
    CHECK(v.code == cli::kExitNo);
    CHECK(v.out.find("violation: condition") == 0);
    CHECK(v.out.find("at set 1") != std::string::npos);

    json wrong_start = json::parse(solved.out);
    wrong_start["sequence"][0] = json::array({2, 4});
    const auto w = call({"verify", inst, tmp.file("start.json", wrong_start.dump())});
    CHECK(w.code == cli::kExitNo);
    CHECK(w.out.find("at set 0") != std::string::npos);

    json forged = json::parse(solved.out);
    forged["rules"] = json::array({{{"rule", "twin"}, {"vertex", 2}, {"certificate", {{"survivor", 3}}}}});
    const auto f = call({"verify", inst, tmp.file("forged.json", forged.dump())});
    CHECK(f.code == cli::kExitNo);
    CHECK(f.out.find("rules:") == 0);
}

TEST_CASE("oracle and kernel strategies agree") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto inst = plant_isr_instance(gen_random_degenerate(8 + seed % 6, 1 + seed % 2, seed), 2 + seed % 2, seed);
        if (!inst) continue;
        const std::string text = serialize_instance(*inst);
        const auto a = call({"solve", "--strategy", "oracle"}, text);
        const auto b = call({"solve", "--strategy", "degenerate"}, text);
        const auto c = call({"solve", "--strategy", "quasiwide", "--class-threshold", "8", "--max-deletions", "1"}, text);
        CHECK(a.code == b.code);
        CHECK(a.code == c.code);
        CHECK(json::parse(a.out)["answer"] == json::parse(b.out)["answer"]);
    }
}

TEST_CASE("gen is deterministic") {
    const std::vector<std::string> args{"gen", "--n", "20", "--d", "2", "--k", "3", "--seed", "1"};
    const auto a = call(args), b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Instance inst = parse_instance(a.out);
    CHECK(inst.graph.num_vertices() == 20);
    CHECK(inst.k == 3);
    CHECK(degeneracy_order(inst.graph).d <= 2);
    CHECK(call({"gen", "--n", "20", "--d", "2", "--k", "3", "--seed", "2"}).out != a.out);

    const auto dsr = call({"gen", "--problem", "DSR", "--n", "10", "--k", "4", "--seed", "3"});
    REQUIRE(dsr.code == 0);
    const Instance d = parse_instance(dsr.out);
    CHECK(d.problem == Problem::dsr);
    CHECK(is_dominating(d.graph, d.source));
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == cli::kExitUsage);
    CHECK(call({"frobnicate"}).code == cli::kExitUsage);
    CHECK(call({"solve", "--strategy", "magic"}, kP4).code == cli::kExitUsage);
    CHECK(call({"solve", "--state-budget", "0"}, kP4).code == cli::kExitUsage);
    CHECK(call({"verify", "only-one"}).code == cli::kExitUsage);
    CHECK(call({"gen", "--problem", "vertex-cover"}).code == cli::kExitUsage);
    CHECK(call({"solve", "--strategy", "quasiwide", "--class-threshold", "3"}, kP4).code == cli::kExitUsage);
    const char* dsr = "p dsr 3 2 1\ne 1 2\ne 2 3\ns 2\nt 2\n";
    CHECK(call({"solve", "--strategy", "degenerate"}, dsr).code == cli::kExitUsage);
    CHECK(call({"solve", "--strategy", "quasiwide"}, dsr).code == cli::kExitUsage);
    CHECK(call({"kernelize", "--strategy", "degenerate"}, dsr).code == cli::kExitUsage);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("data errors") {
    CHECK(call({"solve"}, "p isr 3 1\n").code == cli::kExitData);
    CHECK(call({"solve"}, "p isr 3 1 1\ne 1 9\ns 1\nt 1\n").code == cli::kExitData);
    CHECK(call({"solve"}, "p isr 2 1 2\ne 1 2\ns 1 2\nt 1 2\n").code == cli::kExitData);
    CHECK(call({"solve", "/nonexistent/instance.txt"}).code == cli::kExitData);
    CHECK(call({"convert"}, "p dsr 3 2 1\ne 1 2\ne 2 3\ns 2\nt 2\n").code == cli::kExitData);
    TempDir tmp;
    const std::string inst = tmp.file("p4.txt", kP4);
    CHECK(call({"verify", inst, tmp.file("r.json", "{not json")}).code == cli::kExitData);
    CHECK(call({"gen", "--n", "3", "--k", "3", "--d", "2", "--seed", "0"}).code == cli::kExitData);
}

TEST_CASE("DSR solve reports diagnostics") {
    const auto r = call({"solve", "--d", "2"}, "p dsr 3 2 2\ne 1 2\ne 2 3\ns 1 3\nt 1 2\n");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["answer"] == "yes");
    CHECK(j["sequence"].size() == 3);
    CHECK(j["diagnostics"]["d"] == 2);
    CHECK(j["diagnostics"].contains("kernel_within_bound"));
}

TEST_CASE("kernelize output") {
    std::string text = "p isr 200 0 2\ns 1 2\nt 3 4\n";
    const auto r = call({"kernelize"}, text);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["kernel"]["n"] == 166);
    CHECK(j["rules"].size() == 34);
    CHECK(j["rules"][0]["rule"] == "sunflower-degenerate");
    CHECK(j["rules"][0]["vertex"] == 5);
    const Instance kernel = parse_instance(j["instance"].get<std::string>());
    CHECK(kernel.graph.num_vertices() == 166);
    CHECK(kernel.source == VertexSet{0, 1});

    const auto q = call({"kernelize", "--strategy", "quasiwide", "--class-threshold", "20", "--max-deletions", "0"},
                        "p isr 50 0 2\ns 1 2\nt 3 4\n");
    REQUIRE(q.code == 0);
    const json qj = json::parse(q.out);
    CHECK(qj["kernel"]["n"] == 24);
    CHECK(qj["rules"][0]["rule"] == "quasi-wide");
    CHECK(qj["rules"][0]["certificate"]["petal_centers"] == json::array({5, 6, 7, 8}));
}

TEST_CASE("convert writes instance and map") {
    TempDir tmp;
    const std::string inst = tmp.file("p3.txt", "p isr 3 2 2\ne 1 2\ne 2 3\ns 1 3\nt 1 3\n");
    const std::string out = (tmp.path / "g.txt").string();
    const auto r = call({"convert", inst, "--out", out});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const Instance dsr = parse_instance(tmp.read("g.txt"));
    CHECK(dsr.problem == Problem::dsr);
    CHECK(dsr.graph.num_vertices() == 42);
    const GadgetMap gm = gadget_from_json(json::parse(tmp.read("g.txt.gadget.json")));
    CHECK(gm.n == 3);
    CHECK(gm.k == 2);

    const std::string custom = (tmp.path / "custom.json").string();
    CHECK(call({"convert", inst, "--map", custom}).code == 0);
    CHECK(fs::exists(custom));
}

TEST_CASE("stats") {
    const auto r = call({"stats"}, kP4);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["m"] == 3);
    CHECK(j["degeneracy"] == 1);
    CHECK(j["max_degree"] == 2);
    CHECK(j["contains_biclique"]["1"] == true);
    CHECK(j["contains_biclique"]["2"] == false);
    CHECK(j["classes"].empty());

    const auto star = call({"stats"}, "p isr 5 4 1\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ns 1\nt 1\n");
    const json sj = json::parse(star.out);
    REQUIRE(sj["classes"].size() == 1);
    CHECK(sj["classes"][0]["anchor_neighborhood"] == json::array({1}));
    CHECK(sj["classes"][0]["size"] == 4);
}

TEST_CASE("output file option") {
    TempDir tmp;
    const std::string out = (tmp.path / "report.json").string();
    const auto r = call({"solve", "--out", out}, kP4);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(json::parse(tmp.read("report.json"))["answer"] == "yes");
}
