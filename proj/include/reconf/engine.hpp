#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reconf/instance.hpp"

namespace reconf {

/// Walk in the reconfiguration graph: consecutive sets differ in one vertex.
struct ReconfSequence {
    std::vector<VertexSet> sets;

    /// Number of moves.
    std::size_t length() const { return sets.empty() ? 0 : sets.size() - 1; }
    friend bool operator==(const ReconfSequence&, const ReconfSequence&) = default;
};

enum class Verdict { yes, no, exhausted };

struct SearchOutcome {
    Verdict verdict = Verdict::no;
    /// Present iff verdict is yes; a shortest witness.
    std::optional<ReconfSequence> sequence;
    std::uint64_t states_explored = 0;
};

inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;

bool is_independent(const Graph& g, std::span<const Vertex> s);
bool is_dominating(const Graph& g, std::span<const Vertex> s);

/// ISR: no edge inside s. DSR: N[s] = V(g).
bool is_feasible(const Graph& g, Problem problem, std::span<const Vertex> s);

/// Breadth-first search over feasible sets whose sizes lie in
/// size_bounds(problem, k). Moves are single removals (ascending id) then
/// single additions (ascending id). Reports `exhausted` once more than
/// `state_budget` distinct states have been discovered without reaching the
/// target.
SearchOutcome bfs_reconfig(const Instance& inst, std::uint64_t state_budget = kDefaultStateBudget);

struct Violation {
    /// Index of the offending set in the sequence.
    std::size_t index = 0;
    /// 1: endpoints, 2: feasibility, 3: symmetric difference, 4: size bounds.
    int condition = 0;
    std::string message;
};

/// Returns the first violated condition, or nothing if `seq` is a valid
/// witness for `inst`.
std::optional<Violation> verify_sequence(const Instance& inst, const ReconfSequence& seq);

}  // namespace reconf
