#include "ringlab/galois_ring.hpp"

#include "ringlab/numtheory.hpp"

namespace ringlab {

namespace {

std::string gr_spec(std::uint32_t p, std::uint32_t k, std::uint32_t d) {
    return "gr:" + std::to_string(p) + "^" + std::to_string(k) + "," + std::to_string(d);
}

} // namespace

GaloisRing::GaloisRing(std::uint32_t p, std::uint32_t k, std::uint32_t d, const Config& cfg)
    : FiniteRing(Family::galois_ring, gr_spec(p, k, d),
                 nt::checked_pow(p, k * d), /*commutative=*/true, cfg),
      p_(p),
      k_(k),
      d_(d) {
    if (!nt::is_prime(p)) throw ValidationError(spec() + ": p must be prime");
    if (k == 0 || d == 0) throw ValidationError(spec() + ": k and d must be >= 1");
    q_ = static_cast<std::uint32_t>(nt::checked_pow(p, k));

    // Coefficientwise lift of the mod-p irreducible. Any monic lift of an
    // irreducible is basic irreducible and yields the same extension up to
    // isomorphism.
    modulus_ = poly::find_irreducible(p, d);
    poly::Poly reduced(modulus_.size());
    for (std::size_t i = 0; i < modulus_.size(); ++i) reduced[i] = modulus_[i] % p;
    if (!poly::is_irreducible(poly::trim(std::move(reduced)), p))
        throw ValidationError(spec() + ": modulus reduction mod p is reducible");

    if (d_ >= 2) {
        high_red_.resize(d_ - 1);
        poly::Poly t_power(d_ + 1, 0);
        t_power[d_] = 1;
        for (std::uint32_t j = 0; j + 1 < d_; ++j) {
            auto r = poly::rem(t_power, modulus_, q_);
            r.resize(d_, 0);
            high_red_[j] = std::move(r);
            t_power.insert(t_power.begin(), 0);  // multiply by t
        }
    }

    set_unity(Element{size() == 1 ? 0u : 1u});
    finalize(cfg);
}

poly::Poly GaloisRing::coeffs(Element x) const {
    poly::Poly c(d_, 0);
    std::uint32_t rest = x.id;
    for (std::uint32_t i = 0; i < d_; ++i) {
        c[i] = rest % q_;
        rest /= q_;
    }
    return c;
}

Element GaloisRing::from_coeffs(const poly::Poly& c) const {
    std::uint32_t id = 0;
    for (std::size_t i = d_; i > 0; --i)
        id = id * q_ + (i - 1 < c.size() ? c[i - 1] % q_ : 0);
    return Element{id};
}

Element GaloisRing::add_impl(Element a, Element b) const {
    std::uint32_t id = 0;
    std::uint32_t stride = 1;
    std::uint32_t ra = a.id, rb = b.id;
    for (std::uint32_t i = 0; i < d_; ++i) {
        std::uint32_t s = ra % q_ + rb % q_;
        if (s >= q_) s -= q_;
        id += s * stride;
        ra /= q_;
        rb /= q_;
        stride *= q_;
    }
    return Element{id};
}

Element GaloisRing::mul_impl(Element a, Element b) const {
    const auto ca = coeffs(a);
    const auto cb = coeffs(b);
    // Schoolbook convolution, then fold t^d.. terms through the precomputed
    // reductions of the monic modulus.
    std::vector<std::uint64_t> conv(2 * d_, 0);
    for (std::uint32_t i = 0; i < d_; ++i) {
        if (ca[i] == 0) continue;
        for (std::uint32_t j = 0; j < d_; ++j)
            conv[i + j] += std::uint64_t{ca[i]} * cb[j] % q_;
    }
    std::vector<std::uint32_t> out(d_, 0);
    for (std::uint32_t i = 0; i < d_; ++i) out[i] = static_cast<std::uint32_t>(conv[i] % q_);
    for (std::uint32_t j = 0; j + 1 < d_ && d_ >= 2; ++j) {
        const auto hi = static_cast<std::uint32_t>(conv[d_ + j] % q_);
        if (hi == 0) continue;
        const auto& red = high_red_[j];
        for (std::uint32_t i = 0; i < d_; ++i)
            out[i] = static_cast<std::uint32_t>((out[i] + std::uint64_t{hi} * red[i]) % q_);
    }
    return from_coeffs(poly::Poly(out.begin(), out.end()));
}

Element GaloisRing::neg_impl(Element a) const {
    std::uint32_t id = 0;
    std::uint32_t stride = 1;
    std::uint32_t ra = a.id;
    for (std::uint32_t i = 0; i < d_; ++i) {
        const std::uint32_t c = ra % q_;
        id += (c ? q_ - c : 0) * stride;
        ra /= q_;
        stride *= q_;
    }
    return Element{id};
}

RingPtr make_galois_ring(std::uint32_t p, std::uint32_t k, std::uint32_t d, const Config& cfg) {
    return std::make_shared<GaloisRing>(p, k, d, cfg);
}

} // namespace ringlab
