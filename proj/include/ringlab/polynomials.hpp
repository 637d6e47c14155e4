#pragma once

#include <cstdint>
#include <vector>

namespace ringlab::poly {

/// Dense polynomials over Z/mZ, coefficients low-degree-first. Shared by the
/// field and Galois-ring constructions; m need not be prime as long as the
/// divisor passed to rem() is monic.
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly a);
Poly add(const Poly& a, const Poly& b, std::uint32_t m);
Poly mul(const Poly& a, const Poly& b, std::uint32_t m);

/// Remainder of a by the monic polynomial d over Z/mZ.
Poly rem(Poly a, const Poly& d, std::uint32_t m);

/// Degree of a trimmed polynomial; -1 for the zero polynomial.
int degree(const Poly& a);

bool is_irreducible(const Poly& a, std::uint32_t p);

/// The lexicographically smallest monic irreducible polynomial of degree k
/// over F_p, coefficient lists compared low-degree-first. Deterministic, so
/// two runs construct literally identical fields.
Poly find_irreducible(std::uint32_t p, std::uint32_t k);

} // namespace ringlab::poly
