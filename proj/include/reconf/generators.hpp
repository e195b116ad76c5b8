#pragma once

#include <cstdint>
#include <optional>

#include "reconf/instance.hpp"

namespace reconf {

/// n vertices; vertex i attaches to min(d, i) distinct earlier vertices
/// chosen uniformly. Degeneracy is at most d and m <= d*n. Deterministic in
/// `seed`.
Graph gen_random_degenerate(int n, int d, std::uint64_t seed);

/// Two independent k-sets drawn by randomized greedy, at most 100*n
/// attempts. Nothing is promised about reconfigurability.
std::optional<Instance> plant_isr_instance(const Graph& g, int k, std::uint64_t seed);

/// Two dominating k-sets drawn uniformly from the full list of size-k
/// dominating sets. Absent if there are none or more than `enumeration_cap`
/// k-subsets to look at.
std::optional<Instance> plant_dsr_instance(const Graph& g, int k, std::uint64_t seed,
                                           std::uint64_t enumeration_cap = 5'000'000);

}  // namespace reconf
