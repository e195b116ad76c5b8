#include "reconf/gadget.hpp"

#include <stdexcept>

using nlohmann::json;

namespace reconf {

std::optional<std::pair<int, int>> GadgetMap::clique_position(Vertex v) const {
    if (n <= 0 || v < 0 || v >= n * k) return std::nullopt;
    // cliques occupy the first k*n ids, row by row
    const int i = v / n, p = v % n;
    if (clique_vertex[i][p] != v) return std::nullopt;
    return std::make_pair(i, p);
}

std::pair<Instance, GadgetMap> isr_to_dsr(const Instance& isr) {
    if (isr.problem != Problem::isr) throw std::invalid_argument("expected an ISR instance");
    const Graph& g = isr.graph;
    if (g.num_vertices() != g.id_bound()) throw std::invalid_argument("gadget needs a graph without deleted vertices");
    const int n = static_cast<int>(g.num_vertices());
    const int k = isr.k;

    GadgetMap gm;
    gm.n = n;
    gm.k = k;
    std::vector<Edge> edges;
    Vertex next = 0;

    gm.clique_vertex.assign(k, std::vector<Vertex>(n));
    for (int i = 0; i < k; ++i) {
        for (int p = 0; p < n; ++p) gm.clique_vertex[i][p] = next++;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) edges.emplace_back(gm.clique_vertex[i][p], gm.clique_vertex[i][q]);
    }
    for (int i = 0; i < k; ++i) {
        VertexSet f;
        for (int r = 0; r < k + 2; ++r) {
            const Vertex x = next++;
            f.push_back(x);
            for (Vertex c : gm.clique_vertex[i]) edges.emplace_back(c, x);
        }
        gm.forcer_sets.push_back(std::move(f));
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    if (p != q && !g.adjacent(p, q)) continue;
                    GadgetMap::Guard guard{i, j, p, q, {}};
                    for (int r = 0; r < k + 2; ++r) {
                        const Vertex x = next++;
                        guard.vertices.push_back(x);
                        for (int s = 0; s < n; ++s) {
                            if (s != p) edges.emplace_back(gm.clique_vertex[i][s], x);
                            if (s != q) edges.emplace_back(gm.clique_vertex[j][s], x);
                        }
                    }
                    gm.guard_sets.push_back(std::move(guard));
                }

    auto place = [&](const VertexSet& s) {
        VertexSet out;
        for (std::size_t i = 0; i < s.size(); ++i) out.push_back(gm.clique_vertex[i][s[i]]);
        return out;
    };
    Instance dsr{Problem::dsr, Graph::from_edges(static_cast<std::size_t>(next), edges), k, place(isr.source),
                 place(isr.target)};
    return {std::move(dsr), std::move(gm)};
}

ReconfSequence map_sequence_back(const GadgetMap& gm, const ReconfSequence& seq) {
    auto project = [&](const VertexSet& d) {
        if (static_cast<int>(d.size()) != gm.k)
            throw std::invalid_argument("expected a set of size k in the gadget sequence");
        std::vector<int> picked(gm.k, -1);
        for (Vertex v : d) {
            auto pos = gm.clique_position(v);
            if (!pos || picked[pos->first] != -1)
                throw std::invalid_argument("set does not pick exactly one vertex per clique");
            picked[pos->first] = pos->second;
        }
        VertexSet out(picked.begin(), picked.end());
        out = make_set(std::move(out));
        if (static_cast<int>(out.size()) != gm.k) throw std::invalid_argument("two cliques pick the same vertex");
        return out;
    };

    ReconfSequence out;
    if (seq.sets.empty()) return out;
    VertexSet current = project(seq.sets.front());
    out.sets.push_back(current);
    for (std::size_t s = 1; s < seq.sets.size(); s += 2) {
        if (s + 1 >= seq.sets.size()) throw std::invalid_argument("gadget sequence ends on an intermediate set");
        const auto& before = seq.sets[s - 1];
        const auto& middle = seq.sets[s];
        const auto& after = seq.sets[s + 1];
        const VertexSet added = set_difference(middle, before);
        const VertexSet removed = set_difference(middle, after);
        if (added.size() != 1 || removed.size() != 1 || middle.size() != before.size() + 1)
            throw std::invalid_argument("gadget sequence does not alternate additions and removals");
        const VertexSet next = project(after);
        if (added == removed) continue;
        auto to = gm.clique_position(added[0]);
        auto from = gm.clique_position(removed[0]);
        if (!to || !from || to->first != from->first)
            throw std::invalid_argument("gadget step moves a token between cliques");
        out.sets.push_back(set_difference(current, VertexSet{from->second}));
        out.sets.push_back(next);
        current = next;
    }
    return out;
}

json gadget_to_json(const GadgetMap& gm) {
    auto ids = [](const VertexSet& s) {
        json a = json::array();
        for (Vertex v : s) a.push_back(v + 1);
        return a;
    };
    json cliques = json::array(), forcers = json::array(), guards = json::array();
    for (const auto& row : gm.clique_vertex) cliques.push_back(ids(row));
    for (const auto& f : gm.forcer_sets) forcers.push_back(ids(f));
    for (const auto& r : gm.guard_sets)
        guards.push_back({{"i", r.i + 1}, {"j", r.j + 1}, {"p", r.p + 1}, {"q", r.q + 1}, {"vertices", ids(r.vertices)}});
    return {{"n", gm.n}, {"k", gm.k}, {"cliques", cliques}, {"forcers", forcers}, {"guards", guards}};
}

GadgetMap gadget_from_json(const json& j) {
    auto ids = [](const json& a) {
        VertexSet out;
        for (const auto& x : a) out.push_back(x.get<Vertex>() - 1);
        return out;
    };
    try {
        GadgetMap gm;
        gm.n = j.at("n").get<int>();
        gm.k = j.at("k").get<int>();
        for (const auto& row : j.at("cliques")) gm.clique_vertex.push_back(ids(row));
        for (const auto& f : j.at("forcers")) gm.forcer_sets.push_back(ids(f));
        for (const auto& r : j.at("guards"))
            gm.guard_sets.push_back({r.at("i").get<int>() - 1, r.at("j").get<int>() - 1, r.at("p").get<int>() - 1,
                                     r.at("q").get<int>() - 1, ids(r.at("vertices"))});
        if (static_cast<int>(gm.clique_vertex.size()) != gm.k) throw std::invalid_argument("clique count differs from k");
        for (const auto& row : gm.clique_vertex)
            if (static_cast<int>(row.size()) != gm.n) throw std::invalid_argument("clique size differs from n");
        return gm;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed gadget map: ") + e.what());
    }
}

}  // namespace reconf
