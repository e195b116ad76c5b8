#include "reconf/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "reconf/engine.hpp"

namespace reconf {

namespace {

// std::uniform_int_distribution is implementation-defined; this keeps
// generated files identical across standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng(); while (x >= limit);
    return x % bound;
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / (n - r + i)) return std::numeric_limits<std::uint64_t>::max();
        out = out * (n - r + i) / i;
    }
    return out;
}

}  // namespace

Graph gen_random_degenerate(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 1) throw std::invalid_argument("gen_random_degenerate needs n >= 1 and d >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<Vertex> earlier;
    for (Vertex v = 0; v < n; ++v) {
        // partial Fisher-Yates over the predecessors
        const int take = std::min<int>(d, v);
        for (int j = 0; j < take; ++j) {
            const auto pick = j + below(rng, earlier.size() - j);
            std::swap(earlier[j], earlier[pick]);
            edges.emplace_back(earlier[j], v);
        }
        earlier.push_back(v);
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::optional<Instance> plant_isr_instance(const Graph& g, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::mt19937_64 rng(seed);
    const auto n = g.num_vertices();
    auto sample = [&]() -> std::optional<VertexSet> {
        VertexSet order = g.vertices();
        shuffle(order, rng);
        VertexSet picked;
        for (Vertex v : order) {
            if (static_cast<int>(picked.size()) == k) break;
            if (std::none_of(picked.begin(), picked.end(), [&](Vertex u) { return g.adjacent(u, v); }))
                picked.push_back(v);
        }
        if (static_cast<int>(picked.size()) < k) return std::nullopt;
        return make_set(std::move(picked));
    };
    std::optional<VertexSet> sets[2];
    const std::uint64_t attempts = 100 * std::max<std::uint64_t>(n, 1);
    for (std::uint64_t a = 0; a < attempts && !(sets[0] && sets[1]); ++a) {
        auto s = sample();
        if (!s) continue;
        if (!sets[0]) sets[0] = std::move(s);
        else sets[1] = std::move(s);
    }
    if (!sets[0] || !sets[1]) return std::nullopt;
    return Instance{Problem::isr, g, k, *sets[0], *sets[1]};
}

std::optional<Instance> plant_dsr_instance(const Graph& g, int k, std::uint64_t seed, std::uint64_t enumeration_cap) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const auto& vs = g.vertices();
    if (static_cast<std::size_t>(k) > vs.size() || binomial(vs.size(), k) > enumeration_cap) return std::nullopt;

    std::vector<VertexSet> dominating;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    VertexSet cur(k);
    while (true) {
        for (int i = 0; i < k; ++i) cur[i] = vs[idx[i]];
        if (is_dominating(g, cur)) dominating.push_back(cur);
        int i = k - 1;
        while (i >= 0 && idx[i] == vs.size() - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (dominating.empty()) return std::nullopt;
    std::mt19937_64 rng(seed);
    const auto a = below(rng, dominating.size());
    const auto b = below(rng, dominating.size());
    return Instance{Problem::dsr, g, k, dominating[a], dominating[b]};
}

}  // namespace reconf
