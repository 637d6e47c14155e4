#pragma once

#include <map>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// Shape of the power sequence x, x^2, x^3, ...: tail is the least m >= 1
/// with x^m on the eventual cycle, cycle its length. x^(m+c) = x^m holds
/// exactly for m >= tail and cycle | c.
struct OrbitInfo {
    std::uint64_t tail = 1;
    std::uint64_t cycle = 1;

    bool operator==(const OrbitInfo&) const = default;
};

/// Tail and cycle by Brent cycle detection on y -> y*x; O(tail + cycle)
/// multiplications, O(1) memory.
OrbitInfo orbit(const FiniteRing& ring, Element x);

/// orbit() for every element, indexed by id.
std::vector<OrbitInfo> orbit_table(const FiniteRing& ring);

/// Measured power-map dynamics of a ring.
struct MuProfile {
    std::uint64_t mu0 = 1;  // onset: max tail
    std::uint64_t mu1 = 1;  // exponential period: lcm of cycles
    /// Number of pairwise-distinct tables of f(x) = x^n over the window
    /// n in [1, mu0 + mu1 - 1], measured by hashing; equals mu0 + mu1 - 1
    /// whenever the implementation is consistent.
    std::uint64_t distinct_maps = 1;
    bool periods_computed = false;
    std::vector<std::uint64_t> periodic_exponents;  // sorted; n with Per(f_n) != {0}
    /// Per(f_n) for each periodic exponent: sorted element ids, always
    /// containing 0 and closed under addition and negation.
    std::map<std::uint64_t, std::vector<std::uint32_t>> period_subgroups;

    std::uint64_t mu_p() const { return periodic_exponents.size(); }
    std::uint64_t window() const { return mu0 + mu1 - 1; }
};

struct ProfileOptions {
    bool with_periods = true;
};

/// Full profile measurement. Throws BoundExceeded when the lcm of cycle
/// lengths passes cfg.mu1_bound (the sweep would be unaffordable).
MuProfile mu_profile(const FiniteRing& ring, const Config& cfg = default_config(),
                     ProfileOptions opt = {});

/// Per(f_n) together with 0: all r with (x+r)^n = x^n for every x. The
/// candidate search is restricted to { r : r^n = 0 }, which is sound because
/// x = 0 forces r^n = 0. The result is verified to be a subgroup.
std::vector<std::uint32_t> periods_of(const FiniteRing& ring, std::uint64_t n);

std::vector<std::uint32_t> nilpotents(const FiniteRing& ring);
std::vector<std::uint32_t> nilpotents(const FiniteRing& ring, const std::vector<OrbitInfo>& orbits);
std::vector<std::uint32_t> potents(const FiniteRing& ring);
std::vector<std::uint32_t> potents(const FiniteRing& ring, const std::vector<OrbitInfo>& orbits);

/// Largest nilpotency index over Nil(R); 1 when Nil(R) = {0}.
std::uint32_t nil_index(const FiniteRing& ring);

/// Structural predicates, all measured by exact enumeration.
struct StructuralFlags {
    bool commutative = false;
    bool unital = false;
    bool nil_central = false;
    bool nil_torsion_bounded = false;  // additive orders of Nil(R) have finite lcm
    std::vector<std::uint32_t> nil_set;
    std::vector<std::uint32_t> pot_set;
    std::uint32_t nil_index = 1;
    std::uint64_t nil_order_lcm = 1;  // N: lcm of additive orders over Nil(R)
    bool weakly_periodic = false;     // R = Nil(R) + Pot(R)
    bool j_ring = false;              // Pot(R) = R
    bool nilperiod = false;  // every nonzero nilpotent is a period of some power map
    bool ni_ring = false;    // Nil(R) is a two-sided ideal
};

/// Requires a profile with periods_computed: the nilperiod check consults the
/// period subgroups over the window [2, mu0 + mu1 - 1], which contains every
/// distinct power map of a finite ring.
StructuralFlags structural_flags(const FiniteRing& ring, const MuProfile& profile);

/// The constructive period exponent (index(r) - 1)! * order(r) for a central
/// torsion nilpotent r, with the identity (x+r)^n = x^n verified by
/// square-and-multiply over the whole ring. A non-central r is reported via
/// the central field rather than rejected.
struct ConstructiveExponentCheck {
    std::uint64_t exponent = 0;
    std::uint64_t index = 0;  // nilpotency index of r
    std::uint64_t order = 0;  // additive order of r
    bool nilpotent = false;
    bool central = false;
    bool holds = false;
};

ConstructiveExponentCheck constructive_period_exponent(const FiniteRing& ring, Element r);

/// True iff (x+c)^n = x^n + c for all x outside {0, c} and every n in the
/// window [1, mu0 + mu1 - 1].
bool quasiperiodic_check(const FiniteRing& ring, Element c, const MuProfile& profile);

} // namespace ringlab
