#include "ringlab/galois_field.hpp"

#include "ringlab/numtheory.hpp"

namespace ringlab {

namespace {

std::string gf_spec(std::uint32_t p, std::uint32_t k) {
    return "gf:" + std::to_string(p) + "^" + std::to_string(k);
}

} // namespace

GaloisFieldRing::GaloisFieldRing(std::uint32_t p, std::uint32_t k, poly::Poly modulus,
                                 const Config& cfg)
    : FiniteRing(Family::galois_field, gf_spec(p, k), nt::checked_pow(p, k),
                 /*commutative=*/true, cfg),
      p_(p),
      k_(k),
      modulus_(poly::trim(std::move(modulus))) {
    if (!nt::is_prime(p)) throw ValidationError(spec() + ": p must be prime");
    if (k == 0) throw ValidationError(spec() + ": degree must be >= 1");
    if (poly::degree(modulus_) != static_cast<int>(k) || modulus_[k] != 1)
        throw ValidationError(spec() + ": modulus must be monic of degree k");
    for (auto c : modulus_)
        if (c >= p) throw ValidationError(spec() + ": modulus coefficient out of range");
    if (!poly::is_irreducible(modulus_, p))
        throw ValidationError(spec() + ": modulus is reducible");

    pow_p_.resize(k + 1);
    pow_p_[0] = 1;
    for (std::uint32_t i = 1; i <= k; ++i) pow_p_[i] = pow_p_[i - 1] * p;

    // Find a multiplicative generator and build the exp/log tables. The
    // group is cyclic of order q - 1, so it suffices that no maximal proper
    // power of the candidate is 1.
    const std::uint32_t ord = q() - 1;
    const auto ord_factors = nt::factorize(std::max<std::uint32_t>(ord, 1)).factors;
    auto slow_pow = [&](std::uint32_t base, std::uint64_t e) {
        std::uint32_t acc = 1;
        std::uint32_t b = base;
        while (e > 0) {
            if (e & 1u) acc = slow_mul(acc, b);
            e >>= 1u;
            if (e > 0) b = slow_mul(b, b);
        }
        return acc;
    };
    std::uint32_t gen = 1;
    for (std::uint32_t cand = 2; cand < q(); ++cand) {
        bool ok = true;
        for (const auto& [f, e] : ord_factors)
            if (slow_pow(cand, ord / f) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen = cand;
            break;
        }
    }
    exp_.resize(std::max<std::uint32_t>(ord, 1));
    log_.assign(q(), 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < exp_.size(); ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = slow_mul(cur, gen);
    }
    if (cur != 1) throw Error(spec() + ": generator order mismatch");

    set_unity(Element{1});
    finalize(cfg);
}

std::uint32_t GaloisFieldRing::slow_mul(std::uint32_t a, std::uint32_t b) const {
    const auto prod = poly::rem(poly::mul(coeffs(Element{a}), coeffs(Element{b}), p_),
                                modulus_, p_);
    return from_coeffs(prod).id;
}

std::uint32_t GaloisFieldRing::fadd(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const std::uint32_t da = a / pow_p_[i] % p_;
        const std::uint32_t db = b / pow_p_[i] % p_;
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        out += s * pow_p_[i];
    }
    return out;
}

std::uint32_t GaloisFieldRing::fneg(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const std::uint32_t d = a / pow_p_[i] % p_;
        out += (d ? p_ - d : 0) * pow_p_[i];
    }
    return out;
}

std::uint32_t GaloisFieldRing::finv(std::uint32_t a) const {
    if (a == 0) throw ValidationError(spec() + ": inverse of zero");
    const std::uint32_t ord = q() - 1;
    return exp_[(ord - log_[a]) % ord];
}

std::uint32_t GaloisFieldRing::fpow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) {
        if (e == 0) throw ValidationError(spec() + ": 0^0");
        return 0;
    }
    const std::uint32_t ord = q() - 1;
    return exp_[static_cast<std::uint32_t>(std::uint64_t{log_[a]} * (e % ord) % ord)];
}

poly::Poly GaloisFieldRing::coeffs(Element x) const {
    poly::Poly c(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) c[i] = x.id / pow_p_[i] % p_;
    return poly::trim(std::move(c));
}

Element GaloisFieldRing::from_coeffs(std::span<const std::uint32_t> c) const {
    std::uint32_t id = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= p_ || i >= k_)
            if (c[i] != 0) throw ValidationError(spec() + ": coefficient out of range");
        if (i < k_) id += c[i] * pow_p_[i];
    }
    return Element{id};
}

RingPtr make_galois_field(std::uint32_t p, std::uint32_t k, const Config& cfg) {
    return std::make_shared<GaloisFieldRing>(p, k, poly::find_irreducible(p, k), cfg);
}

RingPtr make_galois_field(std::uint32_t p, std::uint32_t k, poly::Poly modulus,
                          const Config& cfg) {
    return std::make_shared<GaloisFieldRing>(p, k, std::move(modulus), cfg);
}

} // namespace ringlab
