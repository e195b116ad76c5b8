#include <doctest.h>

#include "reconf/generators.hpp"
#include "reconf/report.hpp"
#include "support/oracles.hpp"

using namespace reconf;

namespace {

const char* kP4 = "p isr 4 3 2\ne 1 2\ne 2 3\ne 3 4\ns 1 3\nt 2 4\n";

std::string error_of(std::string_view text) {
    try {
        parse_instance(text);
    } catch (const DataError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse the P4 instance") {
    const Instance inst = parse_instance(kP4);
    CHECK(inst.problem == Problem::isr);
    CHECK(inst.k == 2);
    CHECK(inst.graph.num_vertices() == 4);
    CHECK(inst.graph.num_edges() == 3);
    CHECK(inst.source == VertexSet{0, 2});
    CHECK(inst.target == VertexSet{1, 3});
}

TEST_CASE("dependent source set is named") {
    CHECK(error_of("p isr 4 3 2\ne 1 2\ne 2 3\ne 3 4\ns 1 2\nt 2 4\n").find("source set is not independent") !=
          std::string::npos);
}

TEST_CASE("DSR instance on P3") {
    const Instance inst = parse_instance("p dsr 3 2 1\ne 1 2\ne 2 3\ns 2\nt 2\n");
    CHECK(inst.problem == Problem::dsr);
    CHECK(inst.source == VertexSet{1});
    CHECK(error_of("p dsr 3 2 1\ne 1 2\ne 2 3\ns 1\nt 2\n").find("source set is not dominating") !=
          std::string::npos);
}

TEST_CASE("syntax errors carry line numbers") {
    try {
        parse_instance("c comment\np isr 3 1 1\ne 1 x\ns 1\nt 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
    }
    CHECK_THROWS_AS(parse_instance("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p isr 3 1 1\ne 1 1\ns 1\nt 1\n"), DataError);
    CHECK_THROWS_AS(parse_instance("p isr 3 2 1\ne 1 2\ns 1\nt 1\n"), DataError);
    CHECK_THROWS_AS(parse_instance("p isr 3 0 1\ne 1 4\ns 1\nt 1\n"), DataError);
    CHECK_THROWS_AS(parse_instance("p isr 3 0 1\ns 1\nt 1\nt 2\n"), DataError);
    CHECK_THROWS_AS(parse_instance("p isr 3 0 1\ns 1\n"), DataError);
}

TEST_CASE("wrong endpoint size") {
    CHECK(error_of("p isr 4 0 2\ns 1\nt 2 4\n").find("source set has 1 vertices") != std::string::npos);
}

TEST_CASE("comments and blank lines are skipped") {
    const Instance inst = parse_instance("# header\n\np isr 2 0 1\nc note\ns 1\nt 2\n");
    CHECK(inst.graph.num_edges() == 0);
}

TEST_CASE("serialize and parse round-trip") {
    const Instance inst = parse_instance(kP4);
    const std::string text = serialize_instance(inst);
    const Instance back = parse_instance(text);
    CHECK(back.graph == inst.graph);
    CHECK(back.source == inst.source);
    CHECK(back.target == inst.target);
    CHECK(serialize_instance(back) == text);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto planted = plant_isr_instance(gen_random_degenerate(12, 2, seed), 3, seed);
        REQUIRE(planted);
        const Instance again = parse_instance(serialize_instance(*planted));
        CHECK(again.graph == planted->graph);
        CHECK(again.source == planted->source);
        CHECK(again.target == planted->target);
    }
}

TEST_CASE("serializing a reduced graph relabels compactly") {
    Instance inst = parse_instance("p isr 5 2 1\ne 1 2\ne 4 5\ns 1\nt 5\n");
    inst.graph = delete_vertex(inst.graph, 2);
    const std::string text = serialize_instance(inst);
    CHECK(text.find("c original-ids") != std::string::npos);
    const Instance back = parse_instance(text);
    CHECK(back.graph.num_vertices() == 4);
    CHECK(back.graph.num_edges() == 2);
    CHECK(back.target == VertexSet{3});
}

TEST_CASE("generator examples") {
    const Graph one = gen_random_degenerate(1, 3, 5);
    CHECK(one.num_vertices() == 1);
    CHECK(one.num_edges() == 0);

    const Graph forest = gen_random_degenerate(10, 1, 3);
    CHECK(degeneracy_order(forest).d <= 1);
    CHECK(forest.num_edges() == 9);

    const Graph g = gen_random_degenerate(50, 2, 7);
    CHECK(g.num_edges() <= 100);
}

TEST_CASE("generator invariants and determinism") {
    for (int d = 1; d <= 3; ++d)
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const int n = 1 + static_cast<int>(seed % 17);
            const Graph g = gen_random_degenerate(n, d, seed);
            CHECK(oracle::degeneracy(g) <= d);
            CHECK(g.num_edges() <= static_cast<std::size_t>(d * n));
            // exactly min(d, i) edges back from vertex i
            std::size_t expected = 0;
            for (int i = 0; i < n; ++i) expected += std::min(d, i);
            CHECK(g.num_edges() == expected);
            CHECK(gen_random_degenerate(n, d, seed) == g);
        }
    CHECK_FALSE(gen_random_degenerate(30, 2, 1) == gen_random_degenerate(30, 2, 2));
}

TEST_CASE("planting independent sets") {
    const std::vector<Edge> k2{{0, 1}};
    CHECK_FALSE(plant_isr_instance(Graph::from_edges(2, k2), 2, 1));
    CHECK(plant_isr_instance(Graph::from_edges(5, {}), 2, 1));

    const Instance p4 = parse_instance(kP4);
    const auto allowed = oracle::independent_sets(p4.graph, 2);
    CHECK(allowed == std::vector<VertexSet>{{0, 2}, {0, 3}, {1, 3}});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto inst = plant_isr_instance(p4.graph, 2, seed);
        REQUIRE(inst);
        CHECK(std::find(allowed.begin(), allowed.end(), inst->source) != allowed.end());
        CHECK(std::find(allowed.begin(), allowed.end(), inst->target) != allowed.end());
        CHECK_NOTHROW(validate_instance(*inst));
    }
}

TEST_CASE("planting dominating sets") {
    const Graph g = gen_random_degenerate(9, 2, 4);
    const auto all = oracle::dominating_sets(g, 3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto inst = plant_dsr_instance(g, 3, seed);
        REQUIRE(inst.has_value() == !all.empty());
        if (!inst) continue;
        CHECK(std::find(all.begin(), all.end(), inst->source) != all.end());
        CHECK_NOTHROW(validate_instance(*inst));
    }
    CHECK_FALSE(plant_dsr_instance(Graph::from_edges(4, {}), 2, 0));
}

TEST_CASE("report shapes") {
    SearchOutcome yes{Verdict::yes, ReconfSequence{{{0, 2}, {2}, {2, 3}, {3}, {1, 3}}}, 9};
    const Graph g = parse_instance(kP4).graph;
    Report r = make_report(yes, g, {}, 1.5);
    auto j = nlohmann::json::parse(serialize_report(r));
    CHECK(j["answer"] == "yes");
    CHECK(j["sequence"].size() == 5);
    CHECK(j["sequence"][0] == nlohmann::json::array({1, 3}));
    CHECK(j["kernel"]["n"] == 4);
    CHECK(j["stats"]["states_explored"] == 9);

    SearchOutcome no{Verdict::no, std::nullopt, 4};
    j = nlohmann::json::parse(serialize_report(make_report(no, g, {}, 0)));
    CHECK(j["answer"] == "no");
    CHECK_FALSE(j.contains("sequence"));

    SearchOutcome unknown{Verdict::exhausted, std::nullopt, 100};
    j = nlohmann::json::parse(serialize_report(make_report(unknown, g, {}, 0)));
    CHECK(j["answer"] == "unknown");
    CHECK(j["reason"] == "state budget exceeded");
}

TEST_CASE("report round-trip through the validating parser") {
    ReductionLog log;
    log.steps.push_back({Rule::twin, 4, TwinCertificate{3}});
    log.steps.push_back({Rule::sunflower_degenerate, 6, SunflowerCertificate{{1}, {6, 7, 8, 9}, {}}});
    log.steps.push_back({Rule::quasi_wide, 10, SunflowerCertificate{{0, 2}, {10, 11, 12, 13}, {2}}});
    log.steps.push_back({Rule::core_twin, 14, CoreTwinCertificate{14, 15, {0, 1}}});
    SearchOutcome yes{Verdict::yes, ReconfSequence{{{0, 2}, {2}, {1, 2}}}, 3};
    const Graph g = Graph::from_edges(16, {});
    Report r = make_report(yes, g.without(log.deleted()), log, 2.0);
    r.diagnostics = {{"d", 1}};
    const Report back = parse_report(serialize_report(r));
    CHECK(back.answer == Verdict::yes);
    CHECK(back.sequence == r.sequence);
    CHECK(back.log == log);
    CHECK(back.deleted == VertexSet{4, 6, 10, 14});
    CHECK(back.kernel_n == 12);
    CHECK(back.states_explored == 3);
    CHECK(back.diagnostics["d"] == 1);
    CHECK(serialize_report(back) == serialize_report(r));
}

TEST_CASE("parse_report rejects malformed reports") {
    CHECK_THROWS_AS(parse_report("not json"), DataError);
    CHECK_THROWS_AS(parse_report("[]"), DataError);
    const std::string base = R"("kernel":{"n":1,"m":0,"deleted":[]},"rules":[],"stats":{"states_explored":1,"ms":0})";
    CHECK_NOTHROW(parse_report("{\"answer\":\"no\"," + base + "}"));
    CHECK_THROWS_AS(parse_report("{\"answer\":\"maybe\"," + base + "}"), DataError);
    CHECK_THROWS_AS(parse_report("{\"answer\":\"yes\"," + base + "}"), DataError);
    CHECK_THROWS_AS(parse_report("{\"answer\":\"no\",\"sequence\":[[1]]," + base + "}"), DataError);
    CHECK_THROWS_AS(parse_report("{\"answer\":\"yes\",\"sequence\":[[0]]," + base + "}"), DataError);
    CHECK_THROWS_AS(parse_report(R"({"answer":"no","kernel":{"n":1,"m":0,"deleted":[]},"rules":[{"rule":"magic","vertex":1,"certificate":{}}],"stats":{"states_explored":1,"ms":0}})"),
                    DataError);
}
