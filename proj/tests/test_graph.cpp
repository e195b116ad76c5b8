#include <doctest.h>

#include <random>

#include "reconf/generators.hpp"
#include "support/oracles.hpp"

using namespace reconf;

namespace {

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("from_edges rejects malformed edge lists") {
    const std::vector<Edge> loop{{1, 1}}, twice{{0, 1}, {1, 0}}, out_of_range{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, twice), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, out_of_range), std::invalid_argument);
}

TEST_CASE("basic queries on a path") {
    const Graph g = path(4);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(0) == 1);
    CHECK(closed_neighborhood(g, 1) == VertexSet{0, 1, 2});
    const VertexSet s{0, 3};
    CHECK(closed_neighborhood(g, s) == VertexSet{0, 1, 2, 3});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.is_consistent());
    CHECK_THROWS_AS(g.neighbors(7), std::invalid_argument);
}

TEST_CASE("deletion keeps surviving ids") {
    const Graph g = path(5);
    const Graph h = delete_vertex(g, 2);
    CHECK_FALSE(h.contains(2));
    CHECK(h.contains(4));
    CHECK(h.id_bound() == 5);
    CHECK(h.vertices() == VertexSet{0, 1, 3, 4});
    CHECK(h.num_edges() == 2);
    CHECK(h.adjacent(3, 4));
    CHECK(h.is_consistent());
    const VertexSet dup{1, 1, 3};
    CHECK(g.without(dup).num_vertices() == 3);
    CHECK_THROWS(h.neighbors(2));
}

TEST_CASE("degeneracy of small named graphs") {
    CHECK(degeneracy_order(Graph::from_edges(1, {})).d == 0);
    CHECK(degeneracy_order(path(6)).d == 1);
    CHECK(degeneracy_order(complete(5)).d == 4);
    const std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    CHECK(degeneracy_order(Graph::from_edges(4, cycle)).d == 2);
}

TEST_CASE("degeneracy order matches brute force and is a valid peeling") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = random_graph(4 + seed % 9, 0.15 + 0.01 * (seed % 50), seed);
        const auto r = degeneracy_order(g);
        CHECK(r.d == oracle::degeneracy(g));
        REQUIRE(r.order.size() == g.num_vertices());
        std::vector<int> rank(g.id_bound());
        for (std::size_t i = 0; i < r.order.size(); ++i) rank[r.order[i]] = static_cast<int>(i);
        for (Vertex v : g.vertices()) {
            int later = 0;
            for (Vertex u : g.neighbors(v)) later += rank[u] > rank[v];
            CHECK(later <= r.d);
        }
    }
}

TEST_CASE("degeneracy is hereditary under deletion") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(12, 0.3, seed + 100);
        const int d = degeneracy_order(g).d;
        Graph h = g;
        for (Vertex v = 0; v < 12; v += 3) {
            h = delete_vertex(h, v);
            CHECK(degeneracy_order(h).d <= d);
        }
    }
}

TEST_CASE("biclique detection") {
    const std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    CHECK(contains_biclique(Graph::from_edges(4, c4), 2));
    CHECK_FALSE(contains_biclique(path(8), 2));
    CHECK(contains_biclique(path(2), 1));
    CHECK_FALSE(contains_biclique(Graph::from_edges(3, {}), 1));
    CHECK(contains_biclique(complete(6), 3));
    CHECK_FALSE(contains_biclique(complete(5), 3));
}

TEST_CASE("biclique detection agrees with exhaustive pair search") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_graph(9, 0.45, seed + 7);
        const oracle::Bits b(g);
        // K_{2,2}: two vertices with at least two common neighbors
        bool expected = false;
        for (int u = 0; u < b.n; ++u)
            for (int v = u + 1; v < b.n; ++v)
                if (std::popcount(b.open(u) & b.open(v)) >= 2) expected = true;
        CHECK(contains_biclique(g, 2) == expected);
    }
}

TEST_CASE("set helpers") {
    const VertexSet a{1, 3, 5}, b{3, 4};
    CHECK(set_union(a, b) == VertexSet{1, 3, 4, 5});
    CHECK(set_intersection(a, b) == VertexSet{3});
    CHECK(set_difference(a, b) == VertexSet{1, 5});
    CHECK(set_contains(a, 5));
    CHECK_FALSE(set_contains(a, 4));
    CHECK(make_set({4, 1, 4}) == VertexSet{1, 4});
}

TEST_CASE("named examples for degeneracy, neighborhoods and deletion") {
    const std::vector<Edge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    CHECK(degeneracy_order(path(4)).d == 1);
    CHECK(degeneracy_order(complete(4)).d == 3);
    CHECK(degeneracy_order(Graph::from_edges(5, c5)).d == 2);

    CHECK(closed_neighborhood(Graph::from_edges(2, {}), 1) == VertexSet{1});
    CHECK(closed_neighborhood(Graph::from_edges(4, star), 0) == VertexSet{0, 1, 2, 3});
    CHECK(closed_neighborhood(path(3), 1) == VertexSet{0, 1, 2});
    CHECK_THROWS_AS(closed_neighborhood(path(3), 5), std::invalid_argument);

    const Graph p2 = delete_vertex(path(3), 2);
    CHECK(p2.num_vertices() == 2);
    CHECK(p2.num_edges() == 1);
    const Graph leaves = delete_vertex(Graph::from_edges(4, star), 0);
    CHECK(leaves.num_vertices() == 3);
    CHECK(leaves.num_edges() == 0);
    const Graph k3 = delete_vertex(complete(4), 1);
    CHECK(k3.num_edges() == 3);
    CHECK_THROWS_AS(delete_vertex(k3, 1), std::invalid_argument);

    CHECK(contains_biclique(complete(4), 2));
}
