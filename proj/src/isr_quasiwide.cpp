#include "reconf/isr_quasiwide.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "reconf/isr_degenerate.hpp"
#include "reconf/sunflower.hpp"

namespace reconf {

void validate_params(const QuasiWideParams& params, int k) {
    if (params.class_threshold < 2 * k) throw std::invalid_argument("class_threshold must be at least 2k");
    if (params.max_deletions < 0) throw std::invalid_argument("max_deletions must be nonnegative");
    if (params.search_budget < 1) throw std::invalid_argument("search_budget must be positive");
}

std::vector<VertexClass> partition_by_solution_neighborhood(const Graph& g, const VertexSet& anchor_set) {
    std::map<VertexSet, VertexSet> classes;
    for (Vertex v : g.vertices()) {
        if (set_contains(anchor_set, v)) continue;
        classes[set_intersection(g.neighbors(v), anchor_set)].push_back(v);
    }
    std::vector<VertexClass> out;
    for (auto& [key, members] : classes) out.push_back({key, std::move(members)});
    return out;
}

VertexSet ball(const Graph& g, Vertex v, int radius, const VertexSet& removed) {
    if (set_contains(removed, v)) return {};
    std::map<Vertex, int> dist{{v, 0}};
    std::deque<Vertex> queue{v};
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        const int du = dist[u];
        if (du == radius) continue;
        for (Vertex x : g.neighbors(u)) {
            if (set_contains(removed, x) || dist.contains(x)) continue;
            dist[x] = du + 1;
            queue.push_back(x);
        }
    }
    VertexSet out;
    for (const auto& [x, _] : dist) out.push_back(x);
    return out;
}

bool is_scattered(const Graph& g, const ScatteredCertificate& cert) {
    if (!set_intersection(cert.deleted, cert.scattered).empty()) return false;
    VertexSet covered;
    for (Vertex a : cert.scattered) {
        if (!g.contains(a)) return false;
        const VertexSet b = ball(g, a, cert.radius, cert.deleted);
        if (!set_intersection(covered, b).empty()) return false;
        covered = set_union(covered, b);
    }
    return true;
}

namespace {

template <class Target>
std::optional<ScatteredCertificate> search(const Graph& g, const VertexSet& w, Target target_for,
                                           const QuasiWideParams& params, QuasiWideStats* stats) {
    VertexSet pool = g.vertices();
    std::stable_sort(pool.begin(), pool.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    std::uint64_t nodes = 0;
    auto finish = [&](bool exhausted) {
        if (stats) {
            stats->search_nodes += nodes;
            if (exhausted) ++stats->budget_events;
        }
    };

    const int max_size = std::min<int>(params.max_deletions, static_cast<int>(pool.size()));
    for (int size = 0; size <= max_size; ++size) {
        const auto target = static_cast<std::size_t>(target_for(size));
        // Lexicographic over degree-ranked positions, so the first candidate
        // of each size is the top-degree set.
        std::vector<std::size_t> pos(size);
        for (int i = 0; i < size; ++i) pos[i] = i;
        while (true) {
            if (nodes == params.search_budget) {
                finish(true);
                return std::nullopt;
            }
            ++nodes;
            VertexSet removed;
            for (auto p : pos) removed.push_back(pool[p]);
            removed = make_set(std::move(removed));

            ScatteredCertificate cert{removed, {}, 2};
            VertexSet covered;
            for (Vertex u : w) {
                if (set_contains(removed, u)) continue;
                VertexSet b = ball(g, u, 2, removed);
                if (!set_intersection(covered, b).empty()) continue;
                covered = set_union(covered, b);
                cert.scattered.push_back(u);
                if (cert.scattered.size() == target) break;
            }
            if (cert.scattered.size() >= target && is_scattered(g, cert)) {
                finish(false);
                return cert;
            }

            int i = size - 1;
            while (i >= 0 && pos[i] == pool.size() - size + i) --i;
            if (i < 0) break;
            ++pos[i];
            for (int j = i + 1; j < size; ++j) pos[j] = pos[j - 1] + 1;
        }
    }
    finish(false);
    return std::nullopt;
}

}  // namespace

std::optional<ScatteredCertificate> find_scattered_with_deletions(const Graph& g, const VertexSet& w, int target,
                                                                  const QuasiWideParams& params,
                                                                  QuasiWideStats* stats) {
    if (target < 1) throw std::invalid_argument("target must be positive");
    return search(g, w, [target](int) { return target; }, params, stats);
}

std::optional<std::pair<Instance, ReductionStep>> reduce_quasiwide_once(const Instance& inst,
                                                                        const QuasiWideParams& params,
                                                                        QuasiWideStats* stats) {
    if (inst.problem != Problem::isr) throw std::invalid_argument("expected an ISR instance");
    validate_params(params, inst.k);
    const VertexSet fixed = anchors(inst);
    const Graph rest = inst.graph.without(fixed);
    const int petals = 2 * inst.k;

    for (const auto& cls : partition_by_solution_neighborhood(inst.graph, fixed)) {
        if (cls.members.size() <= static_cast<std::size_t>(params.class_threshold)) continue;
        auto found = search(rest, cls.members, [petals](int b) { return petals << b; }, params, stats);
        if (!found) continue;

        std::map<VertexSet, VertexSet> by_separator;
        for (Vertex a : found->scattered)
            by_separator[set_intersection(inst.graph.neighbors(a), found->deleted)].push_back(a);
        for (const auto& [_, part] : by_separator) {
            if (part.size() < static_cast<std::size_t>(petals)) continue;

            std::vector<VertexSet> hoods;
            for (Vertex a : part) hoods.push_back(closed_neighborhood(inst.graph, a));
            VertexSet core = hoods[0];
            for (const auto& h : hoods) core = set_intersection(core, h);
            const VertexSet allowed = set_union(found->deleted, fixed);
            if (!std::includes(allowed.begin(), allowed.end(), core.begin(), core.end())) continue;
            std::vector<std::size_t> idx(part.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            const SetFamily family(hoods, static_cast<int>(inst.graph.num_vertices()));
            if (!is_sunflower(family, Sunflower{core, idx})) continue;

            SunflowerCertificate cert{core, part, found->deleted};
            const Vertex victim = part.front();
            Instance out = inst;
            out.graph = delete_vertex(inst.graph, victim);
            return std::make_pair(std::move(out), ReductionStep{Rule::quasi_wide, victim, std::move(cert)});
        }
    }
    return std::nullopt;
}

SolveResult solve_isr_quasiwide(const Instance& inst, const QuasiWideParams& params, std::uint64_t state_budget,
                                QuasiWideStats* stats) {
    if (inst.problem != Problem::isr) throw std::invalid_argument("expected an ISR instance");
    validate_params(params, inst.k);
    Instance kernel = inst;
    ReductionLog log;
    while (true) {
        auto [twin_free, twin_log] = remove_closed_twins(kernel);
        kernel = std::move(twin_free);
        log.append(twin_log);
        auto step = reduce_quasiwide_once(kernel, params, stats);
        if (!step) break;
        kernel = std::move(step->first);
        log.steps.push_back(std::move(step->second));
    }
    auto outcome = bfs_reconfig(kernel, state_budget);
    return {std::move(outcome), std::move(log), std::move(kernel)};
}

}  // namespace reconf
