#ifndef EVROUTE_PARETO_SET_HPP
#define EVROUTE_PARETO_SET_HPP

#include "evroute/weight.hpp"

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

namespace evroute {

namespace detail {

// Frontier kept sorted by time ascending, so energy is strictly descending.
// The member with the largest time <= p.time has the smallest energy among
// all members that could dominate p; one comparison decides rejection.
// Members dominated by p form a contiguous run starting at the first
// member with time >= p.time.
template <typename T, typename WeightOf>
bool frontier_insert(std::vector<T> &items, const T &item, WeightOf weight_of,
                     std::vector<T> *removed = nullptr) {
    const BiWeight p = weight_of(item);
    auto first_not_before = std::lower_bound(
        items.begin(), items.end(), p.time,
        [&](const T &member, Seconds t) { return weight_of(member).time < t; });

    // Candidate blocker: last member with time <= p.time.
    auto upper = first_not_before;
    while (upper != items.end() && weight_of(*upper).time == p.time) {
        ++upper;
    }
    if (upper != items.begin() && weight_of(*std::prev(upper)).energy <= p.energy) {
        return false;
    }

    auto erase_end = first_not_before;
    while (erase_end != items.end() && weight_of(*erase_end).energy >= p.energy) {
        ++erase_end;
    }
    if (removed != nullptr) {
        removed->insert(removed->end(), first_not_before, erase_end);
    }
    auto pos = items.erase(first_not_before, erase_end);
    items.insert(pos, item);
    return true;
}

} // namespace detail

/// Mutually non-dominated set of BiWeights, sorted by time ascending.
class ParetoSet {
  public:
    ParetoSet() = default;

    /// Returns false (set unchanged) when a member dominates or equals p.
    bool insert(const BiWeight &p) {
        return detail::frontier_insert(points_, p, [](const BiWeight &w) { return w; });
    }

    std::span<const BiWeight> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    bool contains(const BiWeight &p) const {
        return std::binary_search(points_.begin(), points_.end(), p);
    }

    friend bool operator==(const ParetoSet &, const ParetoSet &) = default;

  private:
    std::vector<BiWeight> points_;
};

struct InsertResult {
    ParetoSet set;
    bool inserted = false;
};

inline InsertResult pareto_insert(ParetoSet set, const BiWeight &p) {
    const bool inserted = set.insert(p);
    return {std::move(set), inserted};
}

template <typename Range> ParetoSet pareto_filter(const Range &weights) {
    ParetoSet set;
    for (const BiWeight &w : weights) {
        set.insert(w);
    }
    return set;
}

} // namespace evroute

#endif
