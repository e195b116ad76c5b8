#include "reconf/dsr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "reconf/bounds.hpp"

namespace reconf {

namespace {

using Mask = std::vector<std::uint64_t>;

std::uint64_t subsets_up_to(std::uint64_t n, int r, std::uint64_t cap) {
    std::uint64_t total = 0, term = 1;
    for (int i = 0; i <= r && static_cast<std::uint64_t>(i) <= n; ++i) {
        total = bounds::saturating_add(total, term);
        if (total > cap) return total;
        term = bounds::saturating_mul(term, n - i) / static_cast<std::uint64_t>(i + 1);
    }
    return total;
}

// Undominated vertices V \ N[D], as positions in g.vertices(), for every D
// with |D| <= cap.
struct MissingTable {
    std::vector<Mask> missing;
    std::vector<int> sizes;
    std::size_t words = 0;
};

MissingTable build_table(const Graph& g, int cap) {
    const auto& vs = g.vertices();
    const std::size_t n = vs.size();
    MissingTable t;
    t.words = (n + 63) / 64;
    std::vector<Mask> closed(n, Mask(t.words, 0));
    auto pos = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    for (std::size_t i = 0; i < n; ++i) {
        closed[i][i / 64] |= std::uint64_t{1} << (i % 64);
        for (Vertex u : g.neighbors(vs[i])) {
            const auto j = pos(u);
            closed[i][j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    Mask full(t.words, 0);
    for (std::size_t i = 0; i < n; ++i) full[i / 64] |= std::uint64_t{1} << (i % 64);

    // depth-first over increasing index sequences
    std::vector<Mask> covered_stack{Mask(t.words, 0)};
    std::vector<std::size_t> chosen;
    auto emit = [&](const Mask& covered, int size) {
        Mask m(t.words);
        for (std::size_t w = 0; w < t.words; ++w) m[w] = full[w] & ~covered[w];
        t.missing.push_back(std::move(m));
        t.sizes.push_back(size);
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        emit(covered_stack.back(), static_cast<int>(chosen.size()));
        if (static_cast<int>(chosen.size()) == cap) return;
        for (std::size_t i = from; i < n; ++i) {
            Mask next = covered_stack.back();
            for (std::size_t w = 0; w < t.words; ++w) next[w] |= closed[i][w];
            covered_stack.push_back(std::move(next));
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            covered_stack.pop_back();
        }
    };
    rec(rec, 0);
    return t;
}

Mask to_mask(const Graph& g, const VertexSet& s, std::size_t words) {
    const auto& vs = g.vertices();
    Mask m(words, 0);
    for (Vertex v : s) {
        auto it = std::lower_bound(vs.begin(), vs.end(), v);
        if (it == vs.end() || *it != v) throw std::invalid_argument("core vertex not in graph");
        const auto i = static_cast<std::size_t>(it - vs.begin());
        m[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return m;
}

}  // namespace

DominationCore compute_bounded_core(const Graph& g, int k, std::uint64_t enumeration_cap) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const auto& vs = g.vertices();
    const int cap = k + 1;
    if (subsets_up_to(vs.size(), cap, enumeration_cap) > enumeration_cap) return {vs, cap, true};

    const MissingTable t = build_table(g, cap);
    const auto empty = [&](const Mask& m) { return std::all_of(m.begin(), m.end(), [](auto w) { return w == 0; }); };
    bool feasible = false;
    for (std::size_t i = 0; i < t.missing.size() && !feasible; ++i)
        feasible = t.sizes[i] <= k && empty(t.missing[i]);
    if (!feasible) throw DataError("graph has no dominating set of size at most k");

    // w stays iff some D misses exactly w within C. Such a witness survives
    // later removals, so a single ascending pass reaches the fixpoint.
    Mask core(t.words, 0);
    for (std::size_t i = 0; i < vs.size(); ++i) core[i / 64] |= std::uint64_t{1} << (i % 64);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::size_t word = i / 64;
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        bool witnessed = false;
        for (const auto& m : t.missing) {
            if (!(m[word] & bit)) continue;
            bool only = true;
            for (std::size_t w = 0; w < t.words && only; ++w)
                only = (m[w] & core[w]) == (w == word ? bit : 0);
            if (only) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) core[word] &= ~bit;
    }
    DominationCore out{{}, cap, false};
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (core[i / 64] >> (i % 64) & 1) out.core.push_back(vs[i]);
    return out;
}

bool is_bounded_core(const Graph& g, const VertexSet& core, int cap) {
    const MissingTable t = build_table(g, cap);
    const Mask c = to_mask(g, core, t.words);
    for (const auto& m : t.missing) {
        bool dominates_core = true, dominates_all = true;
        for (std::size_t w = 0; w < t.words; ++w) {
            if (m[w] & c[w]) dominates_core = false;
            if (m[w]) dominates_all = false;
        }
        if (dominates_core != dominates_all) return false;
    }
    return true;
}

std::pair<Instance, ReductionLog> remove_core_twins(const Instance& inst, const DominationCore& core) {
    if (inst.problem != Problem::dsr) throw std::invalid_argument("expected a DSR instance");
    const VertexSet keep = set_union(core.core, anchors(inst));
    std::map<VertexSet, Vertex> first_with;
    ReductionLog log;
    VertexSet doomed;
    for (Vertex v : inst.graph.vertices()) {
        if (set_contains(keep, v)) continue;
        VertexSet shared = set_intersection(inst.graph.neighbors(v), core.core);
        auto [it, fresh] = first_with.try_emplace(shared, v);
        if (fresh) continue;
        doomed.push_back(v);
        log.steps.push_back({Rule::core_twin, v, CoreTwinCertificate{v, it->second, std::move(shared)}});
    }
    Instance out = inst;
    out.graph = inst.graph.without(doomed);
    return {std::move(out), std::move(log)};
}

bool check_twinless_bound(const VertexSet& core_side, const VertexSet& twin_side, int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    return static_cast<long double>(twin_side.size()) <= bounds::twinless_bound(core_side.size(), d);
}

SolveResult solve_dsr(const Instance& inst, std::uint64_t state_budget, std::optional<int> d,
                      DsrDiagnostics* diagnostics) {
    if (inst.problem != Problem::dsr) throw std::invalid_argument("expected a DSR instance");
    const DominationCore core = compute_bounded_core(inst.graph, inst.k);
    auto [kernel, log] = remove_core_twins(inst, core);

    if (diagnostics) {
        DsrDiagnostics diag;
        diag.core_size = core.core.size();
        diag.core_fallback = core.fallback;
        if (d) {
            if (*d < 1) throw std::invalid_argument("d must be positive");
            diag.d = *d;
            const std::uint64_t dkd = bounds::saturating_mul(
                static_cast<std::uint64_t>(*d), bounds::saturating_pow(static_cast<std::uint64_t>(inst.k), *d));
            diag.core_within_dkd = core.core.size() <= dkd;
            diag.biclique_free = !contains_biclique(inst.graph, *d);
            if (*diag.biclique_free) {
                diag.kernel_bound = bounds::dsr_kernel_bound(*d, inst.k);
                diag.kernel_within_bound = kernel.graph.num_vertices() <= *diag.kernel_bound;
                const VertexSet twin_side =
                    set_difference(kernel.graph.vertices(), set_union(core.core, anchors(inst)));
                diag.twinless_within_bound = check_twinless_bound(core.core, twin_side, *d);
            }
        }
        *diagnostics = diag;
    }

    auto outcome = bfs_reconfig(kernel, state_budget);
    return {std::move(outcome), std::move(log), std::move(kernel)};
}

}  // namespace reconf
