#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "reconf/solve_result.hpp"

namespace reconf {

/// C such that every D with |D| <= size_bound_cap dominates C iff it
/// dominates the whole graph.
struct DominationCore {
    VertexSet core;
    int size_bound_cap = 0;
    /// True when enumeration was too large and C = V(G) was returned as is.
    bool fallback = false;
};

inline constexpr std::uint64_t kDefaultCoreEnumerationCap = 2'000'000;

/// Starts from C = V(G) and drops vertices in ascending id order while the
/// bounded core property survives, checked against every vertex subset of
/// size <= k+1. Throws DataError if no dominating set of size <= k exists.
/// If there are more than `enumeration_cap` such subsets, returns V(G).
DominationCore compute_bounded_core(const Graph& g, int k,
                                    std::uint64_t enumeration_cap = kDefaultCoreEnumerationCap);

/// Exhaustive check of the core property for all D with |D| <= cap.
bool is_bounded_core(const Graph& g, const VertexSet& core, int cap);

/// Among vertices outside C ∪ D_s ∪ D_t, keeps the smallest id of each class
/// of equal N(v) ∩ C and deletes the rest.
std::pair<Instance, ReductionLog> remove_core_twins(const Instance& inst, const DominationCore& core);

/// |twin_side| <= 2(d-1)(|core_side| e/d)^(2d).
bool check_twinless_bound(const VertexSet& core_side, const VertexSet& twin_side, int d);

struct DsrDiagnostics {
    std::size_t core_size = 0;
    bool core_fallback = false;
    /// Soft: the greedy core is not minimum, so exceeding d*k^d is allowed.
    std::optional<bool> core_within_dkd;
    std::optional<int> d;
    std::optional<bool> biclique_free;
    std::optional<std::uint64_t> kernel_bound;
    std::optional<bool> kernel_within_bound;
    std::optional<bool> twinless_within_bound;
};

/// Core, core-twin removal, then search with sizes k..k+1 on the kernel.
/// Yes-sequences are shortest for the original instance. With `d` given, the
/// K_{d,d} check and the size bounds are recorded in `diagnostics`.
SolveResult solve_dsr(const Instance& inst, std::uint64_t state_budget = kDefaultStateBudget,
                      std::optional<int> d = std::nullopt, DsrDiagnostics* diagnostics = nullptr);

}  // namespace reconf
