#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "reconf/engine.hpp"
#include "reconf/reduction_log.hpp"

namespace reconf {

/// Solver output as written to stdout. Vertices are 1-indexed in JSON.
struct Report {
    Verdict answer = Verdict::no;
    /// Present iff answer is yes.
    std::optional<ReconfSequence> sequence;
    std::size_t kernel_n = 0;
    std::size_t kernel_m = 0;
    VertexSet deleted;
    ReductionLog log;
    std::uint64_t states_explored = 0;
    double ms = 0.0;
    /// Free-form extra fields (kernel bounds, budget events); null if none.
    nlohmann::json diagnostics;
};

Report make_report(const SearchOutcome& outcome, const Graph& kernel, const ReductionLog& log, double ms);

nlohmann::json log_to_json(const ReductionLog& log);
ReductionLog log_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);
std::string serialize_report(const Report& r);

/// Throws DataError on malformed JSON or fields that break the report shape.
Report parse_report(std::string_view text);

}  // namespace reconf
