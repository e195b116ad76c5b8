#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace reconf {

/// Vertex identity. Ids are dense at construction and never recycled after
/// deletion, so a deleted id keeps naming the same vertex in logs.
using Vertex = std::int32_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with stable vertex ids.
///
/// Values are immutable once built; deletion produces a new graph. Neighbor
/// lists are kept sorted ascending so every query that returns vertices is
/// deterministic.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on ids 0..n-1. Throws std::invalid_argument on
    /// self-loops, repeated edges or endpoints outside the id range.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    /// One past the largest id ever assigned (deleted ids included).
    std::size_t id_bound() const { return adjacency_.size(); }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return num_edges_; }

    bool contains(Vertex v) const;
    /// Surviving ids, ascending.
    const VertexSet& vertices() const { return vertices_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges (u < v), lexicographic.
    std::vector<Edge> edges() const;

    /// Copy of this graph with `removed` (and incident edges) gone. Ids of
    /// surviving vertices are unchanged.
    Graph without(std::span<const Vertex> removed) const;

    /// Symmetry, loop-freedom and membership of every adjacency endpoint.
    bool is_consistent() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void require(Vertex v) const;

    std::vector<VertexSet> adjacency_;
    std::vector<char> alive_;
    VertexSet vertices_;
    std::size_t num_edges_ = 0;
};

VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// N[S] as a sorted set.
VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s);

Graph delete_vertex(const Graph& g, Vertex v);

struct DegeneracyResult {
    int d = 0;
    /// Min-degree peeling order; each vertex has at most d neighbors later
    /// in the order.
    VertexSet order;
};

DegeneracyResult degeneracy_order(const Graph& g);

/// True iff K_{d,d} is a (not necessarily induced) subgraph. Exhaustive;
/// meant for small diagnostic inputs.
bool contains_biclique(const Graph& g, int d);

/// Sorted-set helpers used throughout.
bool set_contains(std::span<const Vertex> s, Vertex v);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet make_set(std::vector<Vertex> v);

}  // namespace reconf
