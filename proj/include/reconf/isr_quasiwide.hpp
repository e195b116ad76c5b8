#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "reconf/solve_result.hpp"

namespace reconf {

/// Search knobs for the quasi-wide rule. They steer when the rule is tried
/// and how hard it searches; a deletion always rests on a checked sunflower,
/// so no setting can make the rule unsound.
struct QuasiWideParams {
    /// Only anchor-neighborhood classes larger than this are searched.
    int class_threshold = 8;
    /// Largest deletion set B tried.
    int max_deletions = 1;
    /// Candidate deletion sets evaluated per search.
    std::uint64_t search_budget = 100'000;
};

/// Throws std::invalid_argument unless class_threshold >= 2k,
/// max_deletions >= 0 and search_budget >= 1.
void validate_params(const QuasiWideParams& params, int k);

/// A is 2-scattered in g - B: closed 2-balls of distinct members are disjoint.
struct ScatteredCertificate {
    VertexSet deleted;
    VertexSet scattered;
    int radius = 2;
};

struct QuasiWideStats {
    std::uint64_t search_nodes = 0;
    /// Searches abandoned because search_budget ran out.
    std::uint64_t budget_events = 0;
};

struct VertexClass {
    VertexSet anchor_neighborhood;
    VertexSet members;
};

/// Vertices outside `anchor_set`, grouped by N(v) ∩ anchor_set. Classes are
/// ordered by their key.
std::vector<VertexClass> partition_by_solution_neighborhood(const Graph& g, const VertexSet& anchor_set);

/// Closed r-ball of v in g - removed.
VertexSet ball(const Graph& g, Vertex v, int radius, const VertexSet& removed = {});

bool is_scattered(const Graph& g, const ScatteredCertificate& cert);

/// Deletion sets B (|B| <= max_deletions) are tried by increasing size: first
/// the |B| highest-degree vertices, then every |B|-subset in degree order.
/// For each B the members of W \ B are taken greedily by ascending id while
/// their 2-balls stay disjoint. Stops at the first A with |A| >= target.
std::optional<ScatteredCertificate> find_scattered_with_deletions(const Graph& g, const VertexSet& w, int target,
                                                                  const QuasiWideParams& params,
                                                                  QuasiWideStats* stats = nullptr);

/// One application of the quasi-wide rule: a large class is searched in the
/// graph minus the endpoints for a scattered set of size 2k * 2^|B|, which is
/// split by B-neighborhood; a part with 2k vertices has closed neighborhoods
/// forming a sunflower with core inside B ∪ endpoints. The first petal center
/// is deleted.
std::optional<std::pair<Instance, ReductionStep>> reduce_quasiwide_once(const Instance& inst,
                                                                        const QuasiWideParams& params,
                                                                        QuasiWideStats* stats = nullptr);

SolveResult solve_isr_quasiwide(const Instance& inst, const QuasiWideParams& params,
                                std::uint64_t state_budget = kDefaultStateBudget, QuasiWideStats* stats = nullptr);

}  // namespace reconf
