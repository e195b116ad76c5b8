#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "reconf/solve_result.hpp"

namespace reconf {

struct DegenerateKernel {
    Instance kernel;
    ReductionLog log;
    /// Degeneracy (at least 1) of the kernel graph; thresholds use this value.
    int d = 1;
    std::uint64_t low_degree_bound = 0;
    std::uint64_t kernel_bound = 0;
};

/// Deletes all but the smallest-id vertex of every group of closed twins
/// outside the endpoint sets, repeated until no twins remain.
std::pair<Instance, ReductionLog> remove_closed_twins(const Instance& inst);

/// One application of the low-degree sunflower rule. Expects a twin-free
/// instance (outside the endpoints) and d >= degeneracy.
///
/// `threshold_override` replaces the rule's trigger |B| > (2d+1)!(2k-1)^(2d+1)
/// by |B| > override. Deletion still requires an explicit 2k-petal
/// sunflower, so the override only makes the rule fire more often.
std::optional<std::pair<Instance, ReductionStep>> reduce_low_degree_once(
    const Instance& inst, int d, std::optional<std::uint64_t> threshold_override = std::nullopt);

/// Twin removal and the sunflower rule, alternated to a fixpoint. Throws
/// std::logic_error if the result breaks the kernel size bound.
DegenerateKernel kernelize_degenerate(const Instance& inst,
                                      std::optional<std::uint64_t> threshold_override = std::nullopt);

SolveResult solve_isr_degenerate(const Instance& inst, std::uint64_t state_budget = kDefaultStateBudget,
                                 std::optional<std::uint64_t> threshold_override = std::nullopt);

}  // namespace reconf
