#include "reconf/instance.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <vector>

#include "reconf/engine.hpp"

namespace reconf {

std::string_view to_string(Problem p) { return p == Problem::isr ? "isr" : "dsr"; }

std::pair<int, int> size_bounds(Problem p, int k) {
    return p == Problem::isr ? std::pair{k - 1, k} : std::pair{k, k + 1};
}

VertexSet anchors(const Instance& inst) { return set_union(inst.source, inst.target); }

namespace {

void validate_endpoint(const Instance& inst, const VertexSet& s, std::string_view name) {
    const std::string label(name);
    if (static_cast<int>(s.size()) != inst.k)
        throw DataError(label + " set has " + std::to_string(s.size()) + " vertices, expected k = " +
                        std::to_string(inst.k));
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
        throw DataError(label + " set lists a vertex twice");
    for (Vertex v : s)
        if (!inst.graph.contains(v)) throw DataError(label + " set names unknown vertex");
    if (inst.problem == Problem::isr && !is_independent(inst.graph, s))
        throw DataError(label + " set is not independent");
    if (inst.problem == Problem::dsr && !is_dominating(inst.graph, s))
        throw DataError(label + " set is not dominating");
}

std::vector<long long> read_numbers(std::istringstream& fields, std::size_t line) {
    std::vector<long long> out;
    std::string tok;
    while (fields >> tok) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
        out.push_back(value);
    }
    return out;
}

}  // namespace

void validate_instance(const Instance& inst) {
    if (inst.k < 1) throw DataError("k must be positive");
    validate_endpoint(inst, inst.source, "source");
    validate_endpoint(inst, inst.target, "target");
}

Instance parse_instance(std::istream& in) {
    Instance inst;
    std::size_t n = 0, m = 0;
    bool have_header = false, have_source = false, have_target = false;
    std::vector<Edge> edges;
    std::string raw;
    std::size_t line = 0;

    auto to_vertex = [&](long long v) {
        if (v < 1 || static_cast<std::size_t>(v) > n)
            throw ParseError(line, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        return static_cast<Vertex>(v - 1);
    };
    auto read_set = [&](const std::vector<long long>& nums) {
        VertexSet s;
        for (long long v : nums) s.push_back(to_vertex(v));
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ParseError(line, "vertex listed twice");
        return s;
    };

    while (std::getline(in, raw)) {
        ++line;
        std::istringstream fields(raw);
        std::string tag;
        if (!(fields >> tag) || tag[0] == 'c' || tag[0] == '#') continue;

        if (tag == "p") {
            if (have_header) throw ParseError(line, "duplicate problem line");
            std::string kind;
            fields >> kind;
            if (kind == "isr")
                inst.problem = Problem::isr;
            else if (kind == "dsr")
                inst.problem = Problem::dsr;
            else
                throw ParseError(line, "unknown problem '" + kind + "'");
            auto nums = read_numbers(fields, line);
            if (nums.size() != 3) throw ParseError(line, "expected 'p <isr|dsr> <n> <m> <k>'");
            if (nums[0] < 0 || nums[1] < 0) throw ParseError(line, "negative size");
            if (nums[2] < 1) throw ParseError(line, "k must be positive");
            n = static_cast<std::size_t>(nums[0]);
            m = static_cast<std::size_t>(nums[1]);
            inst.k = static_cast<int>(nums[2]);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line, "expected problem line before '" + tag + "'");

        if (tag == "e") {
            auto nums = read_numbers(fields, line);
            if (nums.size() != 2) throw ParseError(line, "expected 'e <u> <v>'");
            Vertex u = to_vertex(nums[0]), v = to_vertex(nums[1]);
            if (u == v) throw ParseError(line, "self-loop");
            edges.emplace_back(std::min(u, v), std::max(u, v));
        } else if (tag == "s" || tag == "t") {
            bool& seen = tag == "s" ? have_source : have_target;
            if (seen) throw ParseError(line, "duplicate '" + tag + "' line");
            seen = true;
            (tag == "s" ? inst.source : inst.target) = read_set(read_numbers(fields, line));
        } else {
            throw ParseError(line, "unknown line type '" + tag + "'");
        }
    }

    if (!have_header) throw ParseError(line, "missing problem line");
    if (edges.size() != m)
        throw ParseError(line, "header announces " + std::to_string(m) + " edges, found " +
                                   std::to_string(edges.size()));
    if (!have_source) throw ParseError(line, "missing source line");
    if (!have_target) throw ParseError(line, "missing target line");

    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw DataError("duplicate edge " + std::to_string(dup->first + 1) + " " +
                        std::to_string(dup->second + 1));
    inst.graph = Graph::from_edges(n, edges);
    validate_instance(inst);
    return inst;
}

Instance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
    const Graph& g = inst.graph;
    const bool compact = g.num_vertices() == g.id_bound();
    std::vector<long long> label(g.id_bound(), 0);
    for (std::size_t i = 0; i < g.vertices().size(); ++i) label[g.vertices()[i]] = static_cast<long long>(i) + 1;

    std::ostringstream out;
    if (!compact) {
        out << "c original-ids";
        for (Vertex v : g.vertices()) out << ' ' << v + 1;
        out << '\n';
    }
    auto edges = g.edges();
    out << "p " << to_string(inst.problem) << ' ' << g.num_vertices() << ' ' << edges.size() << ' ' << inst.k
        << '\n';
    for (auto [u, v] : edges) out << "e " << label[u] << ' ' << label[v] << '\n';
    out << 's';
    for (Vertex v : inst.source) out << ' ' << label[v];
    out << "\nt";
    for (Vertex v : inst.target) out << ' ' << label[v];
    out << '\n';
    return out.str();
}

}  // namespace reconf
