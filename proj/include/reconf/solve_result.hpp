#pragma once

#include "reconf/engine.hpp"
#include "reconf/reduction_log.hpp"

namespace reconf {

/// Kernel followed by search. The verdict applies to the original instance;
/// the sequence (if any) is over the kernel graph, whose vertex ids are the
/// original ones.
struct SolveResult {
    SearchOutcome outcome;
    ReductionLog log;
    Instance kernel;
};

}  // namespace reconf
