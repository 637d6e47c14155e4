#pragma once

#include <compare>
#include <cstdint>

namespace ringlab {

/// Opaque handle to a ring element: its canonical index in [0, |R|).
/// Index 0 is always the additive identity. Each ring family defines a
/// bijection between indices and its structured form (residue, coefficient
/// vector, pair, matrix).
struct Element {
    std::uint32_t id = 0;

    friend constexpr bool operator==(Element, Element) = default;
    friend constexpr auto operator<=>(Element, Element) = default;
};

} // namespace ringlab
