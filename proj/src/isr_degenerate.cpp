#include "reconf/isr_degenerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "reconf/bounds.hpp"
#include "reconf/sunflower.hpp"

namespace reconf {

namespace {

void require_isr(const Instance& inst) {
    if (inst.problem != Problem::isr) throw std::invalid_argument("expected an ISR instance");
}

int effective_degeneracy(const Graph& g) { return std::max(1, degeneracy_order(g).d); }

}  // namespace

std::pair<Instance, ReductionLog> remove_closed_twins(const Instance& inst) {
    const VertexSet fixed = anchors(inst);
    Instance out = inst;
    ReductionLog log;
    // Deleting a vertex never separates two twins, so one pass per round
    // suffices; further rounds catch twins created by the deletions.
    while (true) {
        std::map<VertexSet, Vertex> first_with;
        VertexSet doomed;
        for (Vertex v : out.graph.vertices()) {
            if (set_contains(fixed, v)) continue;
            auto [it, fresh] = first_with.try_emplace(closed_neighborhood(out.graph, v), v);
            if (fresh) continue;
            doomed.push_back(v);
            log.steps.push_back({Rule::twin, v, TwinCertificate{it->second}});
        }
        if (doomed.empty()) break;
        out.graph = out.graph.without(doomed);
    }
    return {std::move(out), std::move(log)};
}

std::optional<std::pair<Instance, ReductionStep>> reduce_low_degree_once(
    const Instance& inst, int d, std::optional<std::uint64_t> threshold_override) {
    require_isr(inst);
    if (d < 1) throw std::invalid_argument("d must be positive");
    const VertexSet fixed = anchors(inst);
    VertexSet low;
    for (Vertex v : inst.graph.vertices())
        if (!set_contains(fixed, v) && inst.graph.degree(v) <= static_cast<std::size_t>(2 * d)) low.push_back(v);

    const std::uint64_t threshold = threshold_override ? *threshold_override : bounds::low_degree_threshold(d, inst.k);
    if (low.size() <= threshold) return std::nullopt;

    std::vector<VertexSet> hoods;
    hoods.reserve(low.size());
    for (Vertex v : low) hoods.push_back(closed_neighborhood(inst.graph, v));
    const SetFamily family(std::move(hoods), 2 * d + 1);
    auto flower = find_sunflower(family, 2 * inst.k);
    if (!flower) return std::nullopt;

    SunflowerCertificate cert;
    cert.core = flower->core;
    for (auto i : flower->petal_indices) cert.petal_centers.push_back(low[i]);
    const Vertex victim = cert.petal_centers.front();

    Instance out = inst;
    out.graph = delete_vertex(inst.graph, victim);
    return std::make_pair(std::move(out), ReductionStep{Rule::sunflower_degenerate, victim, std::move(cert)});
}

DegenerateKernel kernelize_degenerate(const Instance& inst, std::optional<std::uint64_t> threshold_override) {
    require_isr(inst);
    DegenerateKernel result;
    result.kernel = inst;
    while (true) {
        auto [twin_free, twin_log] = remove_closed_twins(result.kernel);
        result.kernel = std::move(twin_free);
        result.log.append(twin_log);
        auto step = reduce_low_degree_once(result.kernel, effective_degeneracy(result.kernel.graph), threshold_override);
        if (!step) break;
        result.kernel = std::move(step->first);
        result.log.steps.push_back(std::move(step->second));
    }

    result.d = effective_degeneracy(result.kernel.graph);
    result.low_degree_bound = bounds::low_degree_threshold(result.d, inst.k);
    result.kernel_bound = bounds::degenerate_kernel_total(result.d, inst.k);
    const auto outside = set_difference(result.kernel.graph.vertices(), anchors(inst)).size();
    if (outside > bounds::degenerate_kernel_outside(result.d, inst.k))
        throw std::logic_error("degenerate kernel exceeds its size bound");
    return result;
}

SolveResult solve_isr_degenerate(const Instance& inst, std::uint64_t state_budget,
                                 std::optional<std::uint64_t> threshold_override) {
    auto kernel = kernelize_degenerate(inst, threshold_override);
    auto outcome = bfs_reconfig(kernel.kernel, state_budget);
    return {std::move(outcome), std::move(kernel.log), std::move(kernel.kernel)};
}

}  // namespace reconf
