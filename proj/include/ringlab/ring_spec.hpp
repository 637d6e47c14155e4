#pragma once

#include <string_view>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// Construct a ring from its spec string:
///
///   zmod:<n>              gf:<p>^<k>           gr:<p>^<k>,<d>
///   corbas:<p>,<k>,<s>    mat:<p>^<k>,<n>      bell
///   nilzero:<m1>[,<m2>...]
///   prod(<spec>,<spec>)   (nests arbitrarily, subject to the size cap)
///
/// Syntax errors raise ParseError with the offending position; semantic
/// errors (non-prime p, out-of-range parameters) raise ValidationError and
/// cap violations SizeCapExceeded.
RingPtr parse_ring_spec(std::string_view spec, const Config& cfg = default_config());

} // namespace ringlab
