#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reconf/isr_quasiwide.hpp"

namespace reconf::cli {

enum class Command { solve, kernelize, verify, gen, convert, stats };
enum class Strategy { automatic, degenerate, quasiwide, oracle };

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitInternal = 70;

struct RunConfig {
    Command command = Command::solve;
    Strategy strategy = Strategy::automatic;
    std::uint64_t state_budget = kDefaultStateBudget;
    QuasiWideParams quasiwide;
    std::uint64_t seed = 0;
    /// Positional inputs; "-" or none reads standard input.
    std::vector<std::string> inputs;
    std::optional<std::string> out_path;
    std::optional<std::string> map_path;
    /// gen
    int n = 20;
    int k = 2;
    Problem problem = Problem::isr;
    /// gen: degeneracy bound. solve (DSR): K_{d,d} diagnostics when set.
    std::optional<int> d;
};

/// Executes one command. Output goes to `out` unless out_path is set.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace reconf::cli
