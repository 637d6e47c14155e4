#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/config.hpp"

namespace ringlab {

/// Canonical census catalog: every constructible family instance under the
/// size cap, in sorted spec order so census output is reproducible.
struct ZooOptions {
    std::uint64_t cap = 256;
    bool with_products = true;   // unordered pairs of base rings, |A|*|B| <= cap
    std::uint64_t nilzero_cap = 64;  // carrier bound for zero-multiplication rings
};

std::vector<std::string> zoo_specs(const ZooOptions& opt);

} // namespace ringlab
