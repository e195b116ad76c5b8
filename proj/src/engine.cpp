#include "reconf/engine.hpp"

#include <algorithm>
#include <unordered_map>

namespace reconf {

bool is_independent(const Graph& g, std::span<const Vertex> s) {
    for (Vertex v : s)
        for (Vertex u : g.neighbors(v))
            if (set_contains(s, u)) return false;
    return true;
}

bool is_dominating(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> hit(g.id_bound(), 0);
    std::size_t covered = 0;
    auto mark = [&](Vertex u) {
        if (!hit[u]) hit[u] = 1, ++covered;
    };
    for (Vertex v : s) {
        mark(v);
        for (Vertex u : g.neighbors(v)) mark(u);
    }
    return covered == g.num_vertices();
}

bool is_feasible(const Graph& g, Problem problem, std::span<const Vertex> s) {
    return problem == Problem::isr ? is_independent(g, s) : is_dominating(g, s);
}

namespace {

struct SetHash {
    std::size_t operator()(const VertexSet& s) const noexcept {
        std::size_t h = s.size();
        for (Vertex v : s) h ^= std::hash<Vertex>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

class Successors {
public:
    explicit Successors(const Instance& inst)
        : g_(inst.graph), problem_(inst.problem), scratch_(inst.graph.id_bound(), 0) {
        std::tie(lower_, upper_) = size_bounds(inst.problem, inst.k);
    }

    // Calls emit(next) for every neighbor of `s` in the reconfiguration
    // graph: removals by ascending vertex, then additions by ascending vertex.
    template <class Emit>
    bool for_each(const VertexSet& s, Emit&& emit) {
        const int size = static_cast<int>(s.size());
        if (size - 1 >= lower_) {
            for (Vertex v : removals(s)) {
                VertexSet next;
                next.reserve(s.size() - 1);
                for (Vertex u : s)
                    if (u != v) next.push_back(u);
                if (emit(std::move(next))) return true;
            }
        }
        if (size + 1 <= upper_) {
            for (Vertex v : additions(s)) {
                VertexSet next;
                next.reserve(s.size() + 1);
                auto at = std::lower_bound(s.begin(), s.end(), v);
                next.insert(next.end(), s.begin(), at);
                next.push_back(v);
                next.insert(next.end(), at, s.end());
                if (emit(std::move(next))) return true;
            }
        }
        return false;
    }

private:
    VertexSet removals(const VertexSet& s) {
        if (problem_ == Problem::isr) return s;
        // v may leave a dominating set iff everything in N[v] stays dominated
        mark(s, +1);
        VertexSet out;
        for (Vertex v : s) {
            bool ok = scratch_[v] >= 2;
            for (Vertex u : g_.neighbors(v)) ok = ok && scratch_[u] >= 2;
            if (ok) out.push_back(v);
        }
        mark(s, -1);
        return out;
    }

    VertexSet additions(const VertexSet& s) {
        VertexSet out;
        if (problem_ == Problem::dsr) return set_difference(g_.vertices(), s);
        mark(s, +1);
        for (Vertex v : g_.vertices())
            if (scratch_[v] == 0) out.push_back(v);
        mark(s, -1);
        return out;
    }

    // Adds delta to the domination count of every vertex in N[s].
    void mark(const VertexSet& s, int delta) {
        for (Vertex v : s) {
            scratch_[v] += delta;
            for (Vertex u : g_.neighbors(v)) scratch_[u] += delta;
        }
    }

    const Graph& g_;
    Problem problem_;
    int lower_ = 0, upper_ = 0;
    std::vector<int> scratch_;
};

}  // namespace

SearchOutcome bfs_reconfig(const Instance& inst, std::uint64_t state_budget) {
    SearchOutcome out;
    if (inst.source == inst.target) {
        out.verdict = Verdict::yes;
        out.sequence = ReconfSequence{{inst.source}};
        out.states_explored = 1;
        return out;
    }

    std::vector<VertexSet> states{inst.source};
    std::vector<std::uint32_t> parent{0};
    std::unordered_map<VertexSet, std::uint32_t, SetHash> seen{{inst.source, 0}};
    Successors successors(inst);

    bool found = false, exhausted = false;
    for (std::size_t head = 0; head < states.size() && !found && !exhausted; ++head) {
        const VertexSet current = states[head];
        successors.for_each(current, [&](VertexSet next) {
            if (seen.contains(next)) return false;
            const auto id = static_cast<std::uint32_t>(states.size());
            seen.emplace(next, id);
            states.push_back(std::move(next));
            parent.push_back(static_cast<std::uint32_t>(head));
            if (states.back() == inst.target) return found = true;
            if (states.size() > state_budget) return exhausted = true;
            return false;
        });
    }

    out.states_explored = states.size();
    if (found) {
        out.verdict = Verdict::yes;
        ReconfSequence seq;
        for (auto at = static_cast<std::uint32_t>(states.size() - 1);; at = parent[at]) {
            seq.sets.push_back(states[at]);
            if (at == 0) break;
        }
        std::reverse(seq.sets.begin(), seq.sets.end());
        out.sequence = std::move(seq);
    } else {
        out.verdict = exhausted ? Verdict::exhausted : Verdict::no;
    }
    return out;
}

std::optional<Violation> verify_sequence(const Instance& inst, const ReconfSequence& seq) {
    if (seq.sets.empty()) return Violation{0, 1, "sequence is empty"};
    std::vector<VertexSet> sets;
    sets.reserve(seq.sets.size());
    for (const auto& s : seq.sets) sets.push_back(make_set(s));

    if (sets.front() != inst.source) return Violation{0, 1, "sequence does not start at the source set"};

    const auto [lower, upper] = size_bounds(inst.problem, inst.k);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& s = sets[i];
        if (s.size() != seq.sets[i].size())
            return Violation{i, 2, "set " + std::to_string(i) + " lists a vertex twice"};
        for (Vertex v : s)
            if (!inst.graph.contains(v))
                return Violation{i, 2, "set " + std::to_string(i) + " names a vertex outside the graph"};
        if (!is_feasible(inst.graph, inst.problem, s))
            return Violation{i, 2,
                             "set " + std::to_string(i) +
                                 (inst.problem == Problem::isr ? " is not independent" : " is not dominating")};
        const int size = static_cast<int>(s.size());
        if (size < lower || size > upper)
            return Violation{i, 4, "set " + std::to_string(i) + " has size " + std::to_string(size)};
        if (i > 0) {
            const auto& prev = sets[i - 1];
            const std::size_t diff = set_difference(prev, s).size() + set_difference(s, prev).size();
            if (diff != 1)
                return Violation{i, 3,
                                 "step " + std::to_string(i) + " changes " + std::to_string(diff) + " vertices"};
        }
    }
    if (sets.back() != inst.target)
        return Violation{sets.size() - 1, 1, "sequence does not end at the target set"};
    return std::nullopt;
}

}  // namespace reconf
