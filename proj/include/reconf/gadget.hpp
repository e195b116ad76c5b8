#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "reconf/engine.hpp"

namespace reconf {

/// Vertex layout of the ISR -> DSR construction. Indices i, j (cliques) and
/// p, q (original vertices) are 0-based here and 1-based in JSON.
struct GadgetMap {
    struct Guard {
        int i = 0, j = 0, p = 0, q = 0;
        VertexSet vertices;
        friend bool operator==(const Guard&, const Guard&) = default;
    };

    int n = 0;
    int k = 0;
    /// clique_vertex[i][p] is c^i_p.
    std::vector<std::vector<Vertex>> clique_vertex;
    std::vector<VertexSet> forcer_sets;
    std::vector<Guard> guard_sets;

    /// (i, p) for a clique vertex, nothing otherwise.
    std::optional<std::pair<int, int>> clique_position(Vertex v) const;

    friend bool operator==(const GadgetMap&, const GadgetMap&) = default;
};

/// Builds the DSR instance: k cliques on copies of V(G), a forcer set of k+2
/// independent vertices joined to each clique, and for every clique pair
/// i < j and every (p, q) with p = q or v_p v_q ∈ E(G), k+2 independent
/// guards adjacent to C_i ∪ C_j minus c^i_p and c^j_q. Ids are assigned in
/// that order. The i-th smallest endpoint vertex goes into clique i.
/// Requires an ISR instance whose graph has no deleted ids.
std::pair<Instance, GadgetMap> isr_to_dsr(const Instance& isr);

/// Projects a DSR sequence over the gadget back to an ISR sequence over the
/// source graph. Add/remove pairs inside one clique become remove/add pairs;
/// an add immediately undone is dropped. Throws std::invalid_argument if a
/// size-k set does not pick exactly one vertex per clique or a step pair has
/// any other shape.
ReconfSequence map_sequence_back(const GadgetMap& gm, const ReconfSequence& seq);

nlohmann::json gadget_to_json(const GadgetMap& gm);
GadgetMap gadget_from_json(const nlohmann::json& j);

}  // namespace reconf
