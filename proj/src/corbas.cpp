#include "ringlab/corbas.hpp"

#include "ringlab/numtheory.hpp"
#include "ringlab/polynomials.hpp"

namespace ringlab {

namespace {

std::string corbas_spec(std::uint32_t p, std::uint32_t k, std::uint32_t s) {
    return "corbas:" + std::to_string(p) + "," + std::to_string(k) + "," + std::to_string(s);
}

} // namespace

CorbasRing::CorbasRing(std::uint32_t p, std::uint32_t k, std::uint32_t s, const Config& cfg)
    : FiniteRing(Family::corbas, corbas_spec(p, k, s), nt::checked_pow(p, 2 * k),
                 /*commutative=*/s == 0, cfg),
      s_(s) {
    if (s >= k) throw ValidationError(spec() + ": automorphism exponent must satisfy 0 <= s < k");
    // The inner field never needs its own |F|^2 tables; fmul is table-free.
    Config field_cfg = cfg;
    field_cfg.table_cap = 0;
    field_ = std::make_shared<GaloisFieldRing>(p, k, poly::find_irreducible(p, k), field_cfg);

    const std::uint64_t ps = nt::checked_pow(p, s);
    phi_.resize(field_->q());
    phi_[0] = 0;
    for (std::uint32_t a = 1; a < field_->q(); ++a)
        phi_[a] = field_->fpow(a, ps);

    set_unity(make(1, 0));
    finalize(cfg);
}

Element CorbasRing::add_impl(Element x, Element y) const {
    return make(field_->fadd(first(x), first(y)), field_->fadd(second(x), second(y)));
}

Element CorbasRing::mul_impl(Element x, Element y) const {
    const std::uint32_t a = first(x), b = second(x);
    const std::uint32_t c = first(y), d = second(y);
    return make(field_->fmul(a, c), field_->fadd(field_->fmul(a, d), field_->fmul(b, phi_[c])));
}

Element CorbasRing::neg_impl(Element x) const {
    return make(field_->fneg(first(x)), field_->fneg(second(x)));
}

RingPtr make_corbas(std::uint32_t p, std::uint32_t k, std::uint32_t s, const Config& cfg) {
    return std::make_shared<CorbasRing>(p, k, s, cfg);
}

Element corbas_pow_series(const CorbasRing& ring, std::uint32_t a, std::uint32_t b,
                          std::uint64_t n) {
    if (n == 0) throw ValidationError("corbas_pow_series: exponent must be >= 1");
    const auto& f = ring.field();
    if (a == 0) return n == 1 ? ring.make(0, b) : ring.make(0, 0);
    // (a, b)^n = (a^n, b phi(a^(n-1)) sum_{j<n} a^j phi(a^-j))
    const std::uint32_t ainv = f.finv(a);
    std::uint32_t sum = 0;
    std::uint32_t aj = 1, ainvj = 1;
    for (std::uint64_t j = 0; j < n; ++j) {
        sum = f.fadd(sum, f.fmul(aj, ring.frob(ainvj)));
        aj = f.fmul(aj, a);
        ainvj = f.fmul(ainvj, ainv);
    }
    const std::uint32_t an1 = f.fpow(a, n - 1);
    return ring.make(f.fmul(an1, a), f.fmul(b, f.fmul(ring.frob(an1), sum)));
}

Element corbas_pow_closed_form(const CorbasRing& ring, std::uint32_t a, std::uint32_t b,
                               std::uint64_t n) {
    if (n == 0) throw ValidationError("corbas_pow_closed_form: exponent must be >= 1");
    const auto& f = ring.field();
    if (a == 0) return n == 1 ? ring.make(0, b) : ring.make(0, 0);

    const std::uint32_t an = f.fpow(a, n);
    const std::uint32_t an1 = f.fpow(a, n - 1);
    const std::uint32_t r = f.fmul(a, ring.frob(f.finv(a)));  // ratio of the geometric series
    if (r == 1) {
        // phi fixes a (always when phi is the identity): the series collapses
        // to the scalar n, which only matters mod p.
        const std::uint32_t n_mod_p = static_cast<std::uint32_t>(n % ring.p());
        std::uint32_t scalar = 0;
        for (std::uint32_t i = 0; i < n_mod_p; ++i) scalar = f.fadd(scalar, 1);
        return ring.make(an, f.fmul(scalar, f.fmul(an1, b)));
    }
    // geometric series (r^n - 1) / (r - 1)
    const std::uint32_t rn = f.fmul(an, ring.frob(f.finv(an)));
    const std::uint32_t series = f.fmul(f.fsub(rn, 1), f.finv(f.fsub(r, 1)));
    return ring.make(an, f.fmul(b, f.fmul(ring.frob(an1), series)));
}

} // namespace ringlab
