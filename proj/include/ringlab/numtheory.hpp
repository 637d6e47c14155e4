#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ringlab::nt {

using u64 = std::uint64_t;

/// n together with its prime factorization, primes strictly increasing.
struct FactoredInteger {
    u64 n = 1;
    std::vector<std::pair<u64, std::uint32_t>> factors;  // (prime, exponent)
};

/// Trial division with a 2/3/5 wheel; intended range n <= 10^9.
FactoredInteger factorize(u64 n);

bool is_prime(u64 n);

/// Multiplication / exponentiation / lcm that throw OverflowError instead of
/// wrapping. Counts involving group exponents can grow fast.
u64 checked_mul(u64 a, u64 b);
u64 checked_pow(u64 base, std::uint32_t exp);
u64 checked_lcm(u64 a, u64 b);

/// Carmichael function: exponent of the unit group of Z/nZ.
u64 carmichael_lambda(u64 n);

/// Moebius function in {-1, 0, 1}.
int moebius(u64 n);

/// Product of the distinct prime divisors of n; rad(1) = 1.
u64 rad(u64 n);

/// Number of distinct prime divisors.
std::uint32_t omega(u64 n);

/// Largest exponent in the prime factorization of n; 0 for n = 1.
std::uint32_t max_exponent(u64 n);

/// #{ m in [1, M] : gcd(m, N) > 1 }, by inclusion-exclusion over the
/// distinct prime divisors of N.
u64 count_noncoprime(u64 n_orders, u64 limit);

/// Same count as the signed Moebius sum over all divisors d | N, d != 1.
/// Kept as an independent route for cross-checking.
u64 count_noncoprime_moebius_sum(u64 n_orders, u64 limit);

/// Predicted (mu0, mu1, muP) triples for the closed-form families.
struct PredictedProfile {
    u64 mu0 = 0;
    u64 mu1 = 0;
    u64 mu_p = 0;
};

/// Number of periodic power maps over Z/nZ; zero iff n is squarefree.
u64 predicted_muP_zmod(u64 n);

/// (E(n), lambda(n), predicted_muP_zmod(n)) for n >= 2.
PredictedProfile predicted_profile_zmod(u64 n);

/// Galois ring GR(p^k, d). k = 1 degenerates to the field, d = 1 to Z/p^kZ.
PredictedProfile predicted_profile_galois_ring(u64 p, std::uint32_t k, std::uint32_t d);

/// Corbas (p, k, phi)-ring; the count of periodic maps depends only on
/// whether phi is the identity automorphism.
PredictedProfile predicted_profile_corbas(u64 p, std::uint32_t k, bool identity_phi);

/// Exponent of GL(n, F_q) with q = p^k: the exponential period of the full
/// matrix ring M_n(F_q).
u64 predicted_mu1_matrix(u64 p, std::uint32_t k, std::uint32_t n);

/// Lower bound on the number of periodic power maps of a commutative ring
/// whose nilpotents have additive orders with lcm N: the count of exponents
/// in [1, mu0 + mu1 - 1] sharing a factor with N.
u64 periodic_map_lower_bound(u64 n_orders, u64 mu0, u64 mu1);

} // namespace ringlab::nt
