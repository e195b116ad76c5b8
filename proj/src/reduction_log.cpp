#include "reconf/reduction_log.hpp"

#include <algorithm>

namespace reconf {

std::string_view to_string(Rule r) {
    switch (r) {
        case Rule::twin: return "twin";
        case Rule::sunflower_degenerate: return "sunflower-degenerate";
        case Rule::quasi_wide: return "quasi-wide";
        case Rule::core_twin: return "core-twin";
    }
    return "unknown";
}

std::optional<Rule> rule_from_string(std::string_view s) {
    for (Rule r : {Rule::twin, Rule::sunflower_degenerate, Rule::quasi_wide, Rule::core_twin})
        if (to_string(r) == s) return r;
    return std::nullopt;
}

VertexSet ReductionLog::deleted() const {
    VertexSet out;
    for (const auto& s : steps) out.push_back(s.deleted);
    return make_set(std::move(out));
}

Graph replay(const Graph& original, const ReductionLog& log) {
    Graph g = original;
    for (const auto& s : log.steps) g = delete_vertex(g, s.deleted);
    return g;
}

namespace {

std::optional<std::string> check_step(const Graph& g, const VertexSet& fixed, int k, const ReductionStep& step) {
    const Vertex v = step.deleted;
    if (!g.contains(v)) return "deleted vertex is not in the graph";
    if (set_contains(fixed, v)) return "deleted vertex belongs to an endpoint set";

    if (const auto* twin = std::get_if<TwinCertificate>(&step.certificate)) {
        if (step.rule != Rule::twin) return "certificate does not match rule";
        if (!g.contains(twin->survivor) || twin->survivor == v) return "bad twin survivor";
        if (closed_neighborhood(g, v) != closed_neighborhood(g, twin->survivor))
            return "closed neighborhoods differ";
        return std::nullopt;
    }
    if (const auto* flower = std::get_if<SunflowerCertificate>(&step.certificate)) {
        if (step.rule != Rule::sunflower_degenerate && step.rule != Rule::quasi_wide)
            return "certificate does not match rule";
        const auto& centers = flower->petal_centers;
        if (static_cast<int>(centers.size()) < 2 * k) return "fewer than 2k petals";
        if (!set_contains(centers, v)) return "deleted vertex is not a petal center";
        std::vector<VertexSet> hoods;
        for (Vertex c : centers) {
            if (!g.contains(c) || set_contains(fixed, c)) return "petal center missing or in an endpoint set";
            hoods.push_back(closed_neighborhood(g, c));
        }
        for (std::size_t i = 0; i < hoods.size(); ++i) {
            if (hoods[i].size() <= flower->core.size()) return "empty petal";
            for (std::size_t j = 0; j < i; ++j)
                if (set_intersection(hoods[i], hoods[j]) != flower->core) return "petals overlap outside the core";
        }
        if (step.rule == Rule::quasi_wide) {
            const VertexSet allowed = set_union(flower->separator, fixed);
            if (!std::includes(allowed.begin(), allowed.end(), flower->core.begin(), flower->core.end()))
                return "core escapes separator and endpoint sets";
        }
        return std::nullopt;
    }
    const auto& core_twin = std::get<CoreTwinCertificate>(step.certificate);
    if (step.rule != Rule::core_twin) return "certificate does not match rule";
    if (core_twin.deleted != v) return "certificate names a different vertex";
    if (!g.contains(core_twin.survivor) || core_twin.survivor == v || set_contains(fixed, core_twin.survivor))
        return "bad core-twin survivor";
    const auto& shared = core_twin.shared_core_neighborhood;
    for (Vertex u : {v, core_twin.survivor}) {
        auto nb = g.neighbors(u);
        if (!std::includes(nb.begin(), nb.end(), shared.begin(), shared.end()))
            return "shared core neighborhood is not common";
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> audit_log(const Instance& original, const ReductionLog& log) {
    const VertexSet fixed = anchors(original);
    Graph g = original.graph;
    for (std::size_t i = 0; i < log.steps.size(); ++i) {
        if (auto problem = check_step(g, fixed, original.k, log.steps[i]))
            return "step " + std::to_string(i) + " (" + std::string(to_string(log.steps[i].rule)) + ", vertex " +
                   std::to_string(log.steps[i].deleted + 1) + "): " + *problem;
        g = delete_vertex(g, log.steps[i].deleted);
    }
    return std::nullopt;
}

}  // namespace reconf
