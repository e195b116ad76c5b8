#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "reconf/graph.hpp"

namespace reconf {

enum class Problem { isr, dsr };

std::string_view to_string(Problem p);

/// A reconfiguration instance: both endpoints are feasible sets of size k.
struct Instance {
    Problem problem = Problem::isr;
    Graph graph;
    int k = 0;
    VertexSet source;
    VertexSet target;
};

/// Allowed set sizes [lower, upper]: ISR walks through k-1, DSR through k+1.
std::pair<int, int> size_bounds(Problem p, int k);

/// source ∪ target
VertexSet anchors(const Instance& inst);

/// Malformed or invalid input data (maps to the CLI data-error exit code).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Throws DataError naming the first violated instance invariant.
void validate_instance(const Instance& inst);

/// Reads the line-oriented instance format:
///
///     p <isr|dsr> <n> <m> <k>
///     e <u> <v>          (m lines, 1-indexed)
///     s <v1> ... <vk>
///     t <v1> ... <vk>
///
/// Lines starting with 'c' or '#' are comments. The result is validated.
Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);

/// Writes the format above. A graph with deleted vertices is relabeled
/// compactly in ascending id order and the original ids are recorded in a
/// `c original-ids` comment line.
std::string serialize_instance(const Instance& inst);

}  // namespace reconf
