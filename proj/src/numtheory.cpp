#include "ringlab/numtheory.hpp"

#include <limits>
#include <numeric>

#include "ringlab/errors.hpp"

namespace ringlab::nt {

namespace {

constexpr u64 kMax = std::numeric_limits<u64>::max();

// 2/3/5 wheel increments starting from 7.
constexpr int kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};

} // namespace

FactoredInteger factorize(u64 n) {
    if (n == 0) throw ValidationError("factorize: n must be positive");
    FactoredInteger out;
    out.n = n;
    auto strip = [&](u64 p) {
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    strip(5);
    u64 p = 7;
    int w = 0;
    while (p * p <= n) {
        strip(p);
        p += static_cast<u64>(kWheel[w]);
        w = (w + 1) & 7;
    }
    if (n > 1) out.factors.emplace_back(n, 1);
    return out;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    const auto f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

u64 checked_mul(u64 a, u64 b) {
    if (a != 0 && b > kMax / a) throw OverflowError("integer multiply overflow");
    return a * b;
}

u64 checked_pow(u64 base, std::uint32_t exp) {
    u64 r = 1;
    while (exp > 0) {
        if (exp & 1u) r = checked_mul(r, base);
        exp >>= 1u;
        if (exp > 0) base = checked_mul(base, base);
    }
    return r;
}

u64 checked_lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) throw ValidationError("lcm of zero");
    return checked_mul(a / std::gcd(a, b), b);
}

u64 carmichael_lambda(u64 n) {
    if (n == 0) throw ValidationError("carmichael_lambda: n must be positive");
    u64 lam = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        u64 part;
        if (p == 2 && e >= 3)
            part = checked_pow(2, e - 2);
        else
            part = checked_mul(checked_pow(p, e - 1), p - 1);
        lam = checked_lcm(lam, part);
    }
    return lam;
}

int moebius(u64 n) {
    const auto f = factorize(n);
    for (const auto& [p, e] : f.factors)
        if (e > 1) return 0;
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

u64 rad(u64 n) {
    u64 r = 1;
    for (const auto& [p, e] : factorize(n).factors) r = checked_mul(r, p);
    return r;
}

std::uint32_t omega(u64 n) {
    return static_cast<std::uint32_t>(factorize(n).factors.size());
}

std::uint32_t max_exponent(u64 n) {
    std::uint32_t m = 0;
    for (const auto& [p, e] : factorize(n).factors) m = std::max(m, e);
    return m;
}

u64 count_noncoprime(u64 n_orders, u64 limit) {
    if (n_orders == 0) throw ValidationError("count_noncoprime: N must be positive");
    std::vector<u64> primes;
    for (const auto& [p, e] : factorize(n_orders).factors) primes.push_back(p);
    // Inclusion-exclusion over the subsets of distinct prime divisors.
    u64 count = 0;
    const std::size_t subsets = std::size_t{1} << primes.size();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        u64 d = 1;
        bool odd = false;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (std::size_t{1} << i)) {
                d = checked_mul(d, primes[i]);
                odd = !odd;
            }
        if (odd)
            count += limit / d;
        else
            count -= limit / d;
    }
    return count;
}

u64 count_noncoprime_moebius_sum(u64 n_orders, u64 limit) {
    if (n_orders == 0) throw ValidationError("count_noncoprime: N must be positive");
    // -sum_{d | N, d != 1} mu(d) * floor(limit / d), accumulated in signed form.
    std::int64_t acc = 0;
    for (u64 d = 1; d * d <= n_orders; ++d) {
        if (n_orders % d != 0) continue;
        const u64 d2 = n_orders / d;
        if (d != 1) acc -= static_cast<std::int64_t>(moebius(d)) * static_cast<std::int64_t>(limit / d);
        if (d2 != d && d2 != 1)
            acc -= static_cast<std::int64_t>(moebius(d2)) * static_cast<std::int64_t>(limit / d2);
    }
    if (acc < 0) throw OverflowError("count_noncoprime_moebius_sum: negative count");
    return static_cast<u64>(acc);
}

u64 predicted_muP_zmod(u64 n) {
    if (n < 2) throw ValidationError("predicted_muP_zmod: n must be >= 2");
    const u64 core = rad(n / rad(n));  // primes whose square divides n
    if (core == 1) return 0;
    const u64 window = carmichael_lambda(n) + max_exponent(n) - 1;
    return count_noncoprime(core, window);
}

PredictedProfile predicted_profile_zmod(u64 n) {
    return {max_exponent(n), carmichael_lambda(n), predicted_muP_zmod(n)};
}

PredictedProfile predicted_profile_galois_ring(u64 p, std::uint32_t k, std::uint32_t d) {
    if (k < 1 || d < 1) throw ValidationError("galois ring: k and d must be >= 1");
    if (d == 1) return predicted_profile_zmod(checked_pow(p, k));
    if (k == 1) return {1, checked_pow(p, d) - 1, 0};
    const u64 qm1 = checked_pow(p, d) - 1;
    return {k,
            checked_mul(checked_pow(p, k - 1), qm1),
            checked_mul(checked_pow(p, k - 2), qm1) + (k - 1) / p};
}

PredictedProfile predicted_profile_corbas(u64 p, std::uint32_t k, bool identity_phi) {
    if (k < 1) throw ValidationError("corbas: k must be >= 1");
    const u64 qm1 = checked_pow(p, k) - 1;
    return {2, checked_mul(p, qm1), identity_phi ? qm1 : 0};
}

u64 predicted_mu1_matrix(u64 p, std::uint32_t k, std::uint32_t n) {
    if (n < 1) throw ValidationError("matrix ring: n must be >= 1");
    const u64 q = checked_pow(p, k);
    // smallest t with p^t >= n
    std::uint32_t t = 0;
    u64 pt = 1;
    while (pt < n) {
        pt = checked_mul(pt, p);
        ++t;
    }
    u64 l = 1;
    u64 qi = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
        qi = checked_mul(qi, q);
        l = checked_lcm(l, qi - 1);
    }
    return checked_mul(checked_pow(p, t), l);
}

u64 periodic_map_lower_bound(u64 n_orders, u64 mu0, u64 mu1) {
    if (n_orders == 1) return 0;
    return count_noncoprime(rad(n_orders), mu0 + mu1 - 1);
}

} // namespace ringlab::nt
