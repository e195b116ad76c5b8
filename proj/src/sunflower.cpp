#include "reconf/sunflower.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "reconf/bounds.hpp"

namespace reconf {

SetFamily::SetFamily(std::vector<VertexSet> members, int card_bound, VertexSet universe)
    : members_(std::move(members)), card_bound_(card_bound), universe_(make_set(std::move(universe))) {
    if (card_bound_ < 1) throw std::invalid_argument("card_bound must be positive");
    const bool derive_universe = universe_.empty();
    VertexSet seen_elements;
    for (auto& m : members_) {
        m = make_set(std::move(m));
        if (m.empty()) throw std::invalid_argument("set family member is empty");
        if (static_cast<int>(m.size()) > card_bound_)
            throw std::invalid_argument("set family member exceeds card_bound");
        if (derive_universe)
            seen_elements.insert(seen_elements.end(), m.begin(), m.end());
        else if (!std::includes(universe_.begin(), universe_.end(), m.begin(), m.end()))
            throw std::invalid_argument("set family member leaves the universe");
    }
    if (derive_universe) universe_ = make_set(std::move(seen_elements));
    std::vector<const VertexSet*> sorted;
    for (const auto& m : members_) sorted.push_back(&m);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (*sorted[i] == *sorted[i - 1]) throw std::invalid_argument("set family contains a duplicate member");
}

std::uint64_t sunflower_threshold(int card_bound, int petals) {
    return bounds::saturating_mul(
        bounds::saturating_factorial(static_cast<unsigned>(card_bound)),
        bounds::saturating_pow(static_cast<std::uint64_t>(petals - 1), static_cast<unsigned>(card_bound)));
}

namespace {

struct Residual {
    std::size_t index;
    VertexSet rest;
};

}  // namespace

std::optional<Sunflower> find_sunflower(const SetFamily& family, int petals_wanted) {
    if (petals_wanted < 1) throw std::invalid_argument("petals_wanted must be positive");
    if (family.size() == 0 || static_cast<std::size_t>(petals_wanted) > family.size()) return std::nullopt;

    std::vector<Residual> active;
    active.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) active.push_back({i, family.members()[i]});
    VertexSet core;

    // Every residual is nonempty. Taking the smallest residuals first puts all
    // singletons into the disjoint collection, which is what lets the
    // frequency step below ignore them.
    while (!active.empty()) {
        std::sort(active.begin(), active.end(), [](const Residual& a, const Residual& b) {
            return a.rest.size() != b.rest.size() ? a.rest.size() < b.rest.size() : a.index < b.index;
        });
        VertexSet used;
        std::vector<std::size_t> petals;
        for (const auto& r : active) {
            if (!set_intersection(used, r.rest).empty()) continue;
            petals.push_back(r.index);
            used = set_union(used, r.rest);
        }
        if (petals.size() >= static_cast<std::size_t>(petals_wanted)) {
            std::sort(petals.begin(), petals.end());
            return Sunflower{core, std::move(petals)};
        }

        std::map<Vertex, std::size_t> frequency;
        for (const auto& r : active)
            if (r.rest.size() >= 2)
                for (Vertex x : r.rest) ++frequency[x];
        if (frequency.empty()) return std::nullopt;
        auto best = frequency.begin();
        for (auto it = frequency.begin(); it != frequency.end(); ++it)
            if (it->second > best->second) best = it;
        const Vertex pivot = best->first;

        std::vector<Residual> next;
        for (auto& r : active) {
            if (r.rest.size() < 2 || !set_contains(r.rest, pivot)) continue;
            r.rest.erase(std::lower_bound(r.rest.begin(), r.rest.end(), pivot));
            next.push_back(std::move(r));
        }
        active = std::move(next);
        core.insert(std::lower_bound(core.begin(), core.end(), pivot), pivot);
    }
    return std::nullopt;
}

bool is_sunflower(const SetFamily& family, const Sunflower& flower) {
    const auto& idx = flower.petal_indices;
    if (idx.empty()) return false;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= family.size()) return false;
        const auto& a = family.members()[idx[i]];
        if (!std::includes(a.begin(), a.end(), flower.core.begin(), flower.core.end())) return false;
        if (a.size() == flower.core.size()) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (idx[i] == idx[j]) return false;
            if (set_intersection(a, family.members()[idx[j]]) != flower.core) return false;
        }
    }
    return true;
}

}  // namespace reconf
