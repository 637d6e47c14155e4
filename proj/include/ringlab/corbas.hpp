#pragma once

#include <memory>

#include "ringlab/galois_field.hpp"

namespace ringlab {

/// The Corbas (p, k, phi)-ring: carrier F_{p^k} x F_{p^k} with
/// (a, b)(c, d) = (ac, ad + b*phi(c)), where phi is the automorphism
/// x -> x^(p^s). Commutative iff s = 0; unity is (1, 0). Element id is
/// a*p^k + b, so the first coordinate is the high digit.
class CorbasRing final : public FiniteRing {
public:
    CorbasRing(std::uint32_t p, std::uint32_t k, std::uint32_t s, const Config& cfg);

    std::uint32_t p() const { return field_->p(); }
    std::uint32_t k() const { return field_->k(); }
    std::uint32_t s() const { return s_; }
    bool identity_phi() const { return s_ == 0; }
    const GaloisFieldRing& field() const { return *field_; }

    std::uint32_t frob(std::uint32_t a) const { return phi_[a]; }

    Element make(std::uint32_t a, std::uint32_t b) const { return Element{a * field_->q() + b}; }
    std::uint32_t first(Element x) const { return x.id / field_->q(); }
    std::uint32_t second(Element x) const { return x.id % field_->q(); }

protected:
    Element add_impl(Element a, Element b) const override;
    Element mul_impl(Element a, Element b) const override;
    Element neg_impl(Element a) const override;

private:
    std::shared_ptr<const GaloisFieldRing> field_;
    std::uint32_t s_;
    std::vector<std::uint32_t> phi_;  // phi_[a] = a^(p^s)
};

RingPtr make_corbas(std::uint32_t p, std::uint32_t k, std::uint32_t s,
                    const Config& cfg = default_config());

/// (a, b)^n in closed form, n >= 1. Uses the geometric-series shortcut when
/// a != 0 and a*phi(a^-1) != 1, the scalar form (a^n, n a^(n-1) b) when phi
/// fixes a, and handles a = 0 directly; O(log n) field operations.
Element corbas_pow_closed_form(const CorbasRing& ring, std::uint32_t a, std::uint32_t b,
                               std::uint64_t n);

/// (a, b)^n by the defining summation b*phi(a^(n-1)) * sum_j a^j phi(a^-j),
/// O(n) field operations; requires nothing beyond a != 0. The closed form
/// falls back to this on its excluded branch, and tests pit both against
/// repeated multiplication.
Element corbas_pow_series(const CorbasRing& ring, std::uint32_t a, std::uint32_t b,
                          std::uint64_t n);

} // namespace ringlab
