#include "reconf/graph.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>

namespace reconf {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.resize(n);
    g.alive_.assign(n, 1);
    g.vertices_.resize(n);
    for (std::size_t v = 0; v < n; ++v) g.vertices_[v] = static_cast<Vertex>(v);

    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nb : g.adjacency_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("parallel edge");
    }
    g.num_edges_ = edges.size();
    return g;
}

bool Graph::contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < alive_.size() && alive_[v];
}

void Graph::require(Vertex v) const {
    if (!contains(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    require(v);
    return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    require(u);
    require(v);
    if (adjacency_[u].size() > adjacency_[v].size()) std::swap(u, v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u : vertices_)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::without(std::span<const Vertex> removed) const {
    Graph g = *this;
    const VertexSet doomed = make_set({removed.begin(), removed.end()});
    for (Vertex v : doomed) {
        g.require(v);
        g.alive_[v] = 0;
    }
    for (Vertex v : doomed) {
        if (g.adjacency_[v].empty()) continue;
        for (Vertex u : g.adjacency_[v]) {
            auto& nb = g.adjacency_[u];
            auto it = std::lower_bound(nb.begin(), nb.end(), v);
            if (it != nb.end() && *it == v) {
                nb.erase(it);
                --g.num_edges_;
            }
        }
        g.adjacency_[v].clear();
    }
    std::erase_if(g.vertices_, [&](Vertex v) { return !g.alive_[v]; });
    return g;
}

bool Graph::is_consistent() const {
    std::size_t half_degree_sum = 0;
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
        const auto& nb = adjacency_[v];
        if (!alive_[v] && !nb.empty()) return false;
        if (!std::is_sorted(nb.begin(), nb.end())) return false;
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
        for (Vertex u : nb) {
            if (u == static_cast<Vertex>(v) || !contains(u)) return false;
            if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), static_cast<Vertex>(v)))
                return false;
        }
        half_degree_sum += nb.size();
    }
    return half_degree_sum == 2 * num_edges_;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v);
    VertexSet out;
    out.reserve(nb.size() + 1);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    out.insert(out.end(), nb.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, nb.end());
    return out;
}

VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s) {
    VertexSet out;
    for (Vertex v : s) {
        auto nb = g.neighbors(v);
        out.insert(out.end(), nb.begin(), nb.end());
        out.push_back(v);
    }
    return make_set(std::move(out));
}

Graph delete_vertex(const Graph& g, Vertex v) {
    const Vertex one[] = {v};
    return g.without(one);
}

DegeneracyResult degeneracy_order(const Graph& g) {
    DegeneracyResult result;
    std::vector<std::size_t> degree(g.id_bound(), 0);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v : g.vertices()) {
        degree[v] = g.degree(v);
        queue.emplace(degree[v], v);
    }
    std::vector<char> removed(g.id_bound(), 0);
    result.order.reserve(g.num_vertices());
    while (!queue.empty()) {
        auto [deg, v] = *queue.begin();
        queue.erase(queue.begin());
        result.d = std::max(result.d, static_cast<int>(deg));
        result.order.push_back(v);
        removed[v] = 1;
        for (Vertex u : g.neighbors(v)) {
            if (removed[u]) continue;
            queue.erase({degree[u], u});
            queue.emplace(--degree[u], u);
        }
    }
    return result;
}

namespace {

// Extends `chosen` (one side of the biclique) while the common neighborhood
// can still host the other side.
bool extend_biclique(const Graph& g, const VertexSet& candidates, std::size_t next, int d,
                     int chosen, const VertexSet& common) {
    if (static_cast<int>(common.size()) < d) return false;
    if (chosen == d) return true;
    for (std::size_t i = next; i < candidates.size(); ++i) {
        if (candidates.size() - i < static_cast<std::size_t>(d - chosen)) break;
        Vertex v = candidates[i];
        VertexSet narrowed = set_intersection(common, g.neighbors(v));
        if (extend_biclique(g, candidates, i + 1, d, chosen + 1, narrowed)) return true;
    }
    return false;
}

}  // namespace

bool contains_biclique(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("biclique size must be positive");
    VertexSet candidates;
    for (Vertex v : g.vertices())
        if (g.degree(v) >= static_cast<std::size_t>(d)) candidates.push_back(v);
    // The common neighborhood of the chosen side never contains a chosen
    // vertex (no self-loops), so the two sides are disjoint automatically.
    return extend_biclique(g, candidates, 0, d, 0, g.vertices());
}

bool set_contains(std::span<const Vertex> s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet make_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace reconf
