#pragma once

#include "ringlab/finite_ring.hpp"
#include "ringlab/polynomials.hpp"

namespace ringlab {

/// The Galois ring GR(p^k, d): the degree-d extension of Z/p^kZ by a monic
/// polynomial whose reduction mod p is irreducible. Local of characteristic
/// p^k; the non-units are exactly the multiples of p. Element id encodes the
/// coefficient vector in base p^k, constant term in the low digit.
class GaloisRing final : public FiniteRing {
public:
    GaloisRing(std::uint32_t p, std::uint32_t k, std::uint32_t d, const Config& cfg);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t d() const { return d_; }
    std::uint32_t coeff_modulus() const { return q_; }
    const poly::Poly& modulus() const { return modulus_; }

    poly::Poly coeffs(Element x) const;
    Element from_coeffs(const poly::Poly& c) const;

protected:
    Element add_impl(Element a, Element b) const override;
    Element mul_impl(Element a, Element b) const override;
    Element neg_impl(Element a) const override;

private:
    std::uint32_t p_, k_, d_;
    std::uint32_t q_;                     // p^k, the coefficient modulus
    poly::Poly modulus_;                  // monic lift of the degree-d irreducible
    std::vector<poly::Poly> high_red_;    // t^(d+j) mod modulus, j = 0..d-2
};

RingPtr make_galois_ring(std::uint32_t p, std::uint32_t k, std::uint32_t d,
                         const Config& cfg = default_config());

} // namespace ringlab
