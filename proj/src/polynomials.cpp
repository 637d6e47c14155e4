#include "ringlab/polynomials.hpp"

#include "ringlab/errors.hpp"
#include "ringlab/numtheory.hpp"

namespace ringlab::poly {

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int degree(const Poly& a) {
    for (std::size_t i = a.size(); i > 0; --i)
        if (a[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
}

Poly add(const Poly& a, const Poly& b, std::uint32_t m) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t s = 0;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out[i] = static_cast<std::uint32_t>(s % m);
    }
    return trim(std::move(out));
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t m) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + std::uint64_t{a[i]} * b[j]) % m);
    }
    return trim(std::move(out));
}

Poly rem(Poly a, const Poly& d, std::uint32_t m) {
    const int dd = degree(d);
    if (dd < 0 || d[static_cast<std::size_t>(dd)] != 1)
        throw ValidationError("poly::rem: divisor must be monic");
    a = trim(std::move(a));
    while (degree(a) >= dd) {
        const auto da = static_cast<std::size_t>(degree(a));
        const std::uint64_t c = a[da];
        for (int i = 0; i <= dd; ++i) {
            const std::size_t pos = da - static_cast<std::size_t>(dd) + static_cast<std::size_t>(i);
            const std::uint64_t sub = c * d[static_cast<std::size_t>(i)] % m;
            a[pos] = static_cast<std::uint32_t>((a[pos] + m - sub % m) % m);
        }
        a = trim(std::move(a));
    }
    return a;
}

namespace {

// Enumerate monic polynomials of the given degree over F_p by counter.
Poly monic_from_counter(std::uint64_t counter, std::uint32_t deg, std::uint32_t p) {
    Poly out(deg + 1, 0);
    for (std::uint32_t i = 0; i < deg; ++i) {
        out[i] = static_cast<std::uint32_t>(counter % p);
        counter /= p;
    }
    out[deg] = 1;
    return out;
}

} // namespace

bool is_irreducible(const Poly& a, std::uint32_t p) {
    const int deg = degree(a);
    if (deg <= 0) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2. A proper
    // factor, if any, leaves one of these as a divisor.
    for (std::uint32_t d = 1; 2 * d <= static_cast<std::uint32_t>(deg); ++d) {
        const std::uint64_t count = nt::checked_pow(p, d);
        for (std::uint64_t c = 0; c < count; ++c) {
            if (rem(a, monic_from_counter(c, d, p), p).empty()) return false;
        }
    }
    return true;
}

Poly find_irreducible(std::uint32_t p, std::uint32_t k) {
    if (!nt::is_prime(p)) throw ValidationError("find_irreducible: p must be prime");
    if (k == 0) throw ValidationError("find_irreducible: degree must be >= 1");
    // Low-degree-first lexicographic order: the constant coefficient is the
    // most significant comparison digit.
    Poly cand(k + 1, 0);
    cand[k] = 1;
    while (true) {
        if (is_irreducible(cand, p)) return cand;
        // increment from the most significant comparison digit downward
        std::uint32_t i = k;
        do {
            --i;
            // positions ordered c_{k-1} (fastest) ... c_0 (slowest)
            if (++cand[i] < p) break;
            cand[i] = 0;
        } while (i > 0);
        if (i == 0 && cand[0] == 0) throw Error("find_irreducible: search exhausted");
    }
}

} // namespace ringlab::poly
