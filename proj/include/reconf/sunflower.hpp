#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

/// Indexed family of distinct, nonempty sets of cardinality at most
/// `card_bound` over a shared universe.
class SetFamily {
public:
    /// Members are normalized to sorted sets. Throws std::invalid_argument on
    /// duplicates, empty members, oversize members or elements outside the
    /// universe. An empty `universe` means "union of the members".
    SetFamily(std::vector<VertexSet> members, int card_bound, VertexSet universe = {});

    const std::vector<VertexSet>& members() const { return members_; }
    const VertexSet& universe() const { return universe_; }
    int card_bound() const { return card_bound_; }
    std::size_t size() const { return members_.size(); }

private:
    std::vector<VertexSet> members_;
    int card_bound_;
    VertexSet universe_;
};

struct Sunflower {
    VertexSet core;
    /// Indices into the family's member list, ascending.
    std::vector<std::size_t> petal_indices;
};

/// card_bound! * (petals - 1)^card_bound, saturating at UINT64_MAX.
std::uint64_t sunflower_threshold(int card_bound, int petals);

/// Constructive sunflower extraction. When the family has more than
/// sunflower_threshold(card_bound, petals_wanted) members a sunflower with at
/// least `petals_wanted` petals is always returned.
///
/// Each round greedily collects pairwise-disjoint residual sets, smallest
/// residuals first. If that yields too few petals, the element occurring in
/// the most residuals of size >= 2 joins the core (ties: smallest element)
/// and the search restricts to those residuals with the element stripped.
std::optional<Sunflower> find_sunflower(const SetFamily& family, int petals_wanted);

/// Pairwise intersections equal the core, petals nonempty, indices distinct.
bool is_sunflower(const SetFamily& family, const Sunflower& flower);

}  // namespace reconf
