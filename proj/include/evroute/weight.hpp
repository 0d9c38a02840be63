#ifndef EVROUTE_WEIGHT_HPP
#define EVROUTE_WEIGHT_HPP

#include "evroute/errors.hpp"

#include <compare>
#include <cstdint>
#include <ostream>

namespace evroute {

using Seconds = std::int64_t;
using WattHours = std::int64_t;

/// (time, energy) cost of an edge or path. Energy may be negative
/// (charging, regeneration).
struct BiWeight {
    Seconds time = 0;
    WattHours energy = 0;

    friend constexpr bool operator==(const BiWeight &, const BiWeight &) = default;
    // Lexicographic (time, energy); matches the frontier sort order.
    friend constexpr auto operator<=>(const BiWeight &, const BiWeight &) = default;
};

inline std::ostream &operator<<(std::ostream &os, const BiWeight &w) {
    return os << '(' << w.time << ',' << w.energy << ')';
}

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("BiWeight component overflow");
    }
    return out;
}
} // namespace detail

inline BiWeight add_weights(const BiWeight &a, const BiWeight &b) {
    return {detail::checked_add(a.time, b.time), detail::checked_add(a.energy, b.energy)};
}

inline BiWeight operator+(const BiWeight &a, const BiWeight &b) { return add_weights(a, b); }

inline BiWeight &operator+=(BiWeight &a, const BiWeight &b) { return a = add_weights(a, b); }

/// Weak dominance that excludes equality: no worse in both, different somewhere.
constexpr bool dominates(const BiWeight &a, const BiWeight &b) {
    return a.time <= b.time && a.energy <= b.energy && a != b;
}

constexpr bool dominates_or_equal(const BiWeight &a, const BiWeight &b) {
    return a.time <= b.time && a.energy <= b.energy;
}

} // namespace evroute

#endif
