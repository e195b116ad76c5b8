#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reconf/instance.hpp"

namespace reconf {

enum class Rule { twin, sunflower_degenerate, quasi_wide, core_twin };

std::string_view to_string(Rule r);
std::optional<Rule> rule_from_string(std::string_view s);

/// Closed twin: N[deleted] = N[survivor].
struct TwinCertificate {
    Vertex survivor = -1;
    friend bool operator==(const TwinCertificate&, const TwinCertificate&) = default;
};

/// Closed neighborhoods of `petal_centers` form a sunflower with `core`.
/// `separator` is the deletion set of the scattered-set search (quasi-wide
/// rule only; empty otherwise).
struct SunflowerCertificate {
    VertexSet core;
    VertexSet petal_centers;
    VertexSet separator;
    friend bool operator==(const SunflowerCertificate&, const SunflowerCertificate&) = default;
};

/// N(deleted) ∩ C = N(survivor) ∩ C for the domination core C.
struct CoreTwinCertificate {
    Vertex deleted = -1;
    Vertex survivor = -1;
    VertexSet shared_core_neighborhood;
    friend bool operator==(const CoreTwinCertificate&, const CoreTwinCertificate&) = default;
};

using Certificate = std::variant<TwinCertificate, SunflowerCertificate, CoreTwinCertificate>;

struct ReductionStep {
    Rule rule = Rule::twin;
    Vertex deleted = -1;
    Certificate certificate;
    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionLog {
    std::vector<ReductionStep> steps;

    void append(const ReductionLog& other) { steps.insert(steps.end(), other.steps.begin(), other.steps.end()); }
    VertexSet deleted() const;
    bool empty() const { return steps.empty(); }
    friend bool operator==(const ReductionLog&, const ReductionLog&) = default;
};

/// Applies the log's deletions, in order, to `original`.
Graph replay(const Graph& original, const ReductionLog& log);

/// Replays `log` against `original` and re-checks every certificate on the
/// graph as it was when the step fired. Returns a description of the first
/// step that fails, or nothing.
std::optional<std::string> audit_log(const Instance& original, const ReductionLog& log);

}  // namespace reconf
