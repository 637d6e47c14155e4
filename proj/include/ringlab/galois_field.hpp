#pragma once

#include <span>

#include "ringlab/finite_ring.hpp"
#include "ringlab/polynomials.hpp"

namespace ringlab {

/// The finite field F_{p^k} as F_p[t]/(modulus). Element id encodes the
/// coefficient vector in base p, constant term in the low digit, so id 0 is
/// zero and id 1 is unity. Multiplication goes through discrete exp/log
/// tables over a fixed generator.
class GaloisFieldRing final : public FiniteRing {
public:
    GaloisFieldRing(std::uint32_t p, std::uint32_t k, poly::Poly modulus, const Config& cfg);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return size(); }
    const poly::Poly& modulus() const { return modulus_; }

    /// id of a fixed multiplicative generator (unity when q = 2).
    std::uint32_t generator() const { return exp_[q() > 2 ? 1 : 0]; }

    // Raw-id field arithmetic for the matrix and Corbas layers.
    std::uint32_t fadd(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t fneg(std::uint32_t a) const;
    std::uint32_t fsub(std::uint32_t a, std::uint32_t b) const { return fadd(a, fneg(b)); }
    std::uint32_t fmul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        const std::uint32_t ord = q() - 1;
        if (e >= ord) e -= ord;
        return exp_[e];
    }
    std::uint32_t finv(std::uint32_t a) const;
    std::uint32_t fpow(std::uint32_t a, std::uint64_t e) const;

    poly::Poly coeffs(Element x) const;
    Element from_coeffs(std::span<const std::uint32_t> c) const;

protected:
    Element add_impl(Element a, Element b) const override { return Element{fadd(a.id, b.id)}; }
    Element mul_impl(Element a, Element b) const override { return Element{fmul(a.id, b.id)}; }
    Element neg_impl(Element a) const override { return Element{fneg(a.id)}; }

private:
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_, k_;
    poly::Poly modulus_;
    std::vector<std::uint32_t> pow_p_;  // p^i for digit access
    std::vector<std::uint32_t> exp_;    // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;    // inverse of exp_ on nonzero ids
};

/// F_{p^k} over the canonical (lexicographically smallest) irreducible
/// modulus from find_irreducible.
RingPtr make_galois_field(std::uint32_t p, std::uint32_t k, const Config& cfg = default_config());

/// Same field family with an explicit modulus; used to confirm that the
/// measured invariants do not depend on the modulus choice.
RingPtr make_galois_field(std::uint32_t p, std::uint32_t k, poly::Poly modulus,
                          const Config& cfg = default_config());

} // namespace ringlab
