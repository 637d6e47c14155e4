#include "ringlab/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ringlab/numtheory.hpp"

namespace ringlab {

OrbitInfo orbit(const FiniteRing& ring, Element x) {
    // Brent: race a hare at doubling distances to find the cycle length.
    std::uint64_t power = 1, cycle = 1;
    Element tortoise = x;
    Element hare = ring.mul(x, x);
    while (tortoise != hare) {
        if (power == cycle) {
            tortoise = hare;
            power *= 2;
            cycle = 0;
        }
        hare = ring.mul(hare, x);
        ++cycle;
    }
    // First on-cycle power: advance a second cursor `cycle` steps ahead, then
    // walk both until they meet.
    tortoise = x;
    hare = x;
    for (std::uint64_t i = 0; i < cycle; ++i) hare = ring.mul(hare, x);
    std::uint64_t steps = 0;
    while (tortoise != hare) {
        tortoise = ring.mul(tortoise, x);
        hare = ring.mul(hare, x);
        ++steps;
    }
    return {steps + 1, cycle};
}

std::vector<OrbitInfo> orbit_table(const FiniteRing& ring) {
    std::vector<OrbitInfo> out(ring.size());
    for (std::uint32_t i = 0; i < ring.size(); ++i) out[i] = orbit(ring, Element{i});
    return out;
}

namespace {

struct TableHash {
    std::uint64_t h1 = 1469598103934665603ULL;
    std::uint64_t h2 = 0x243f6a8885a308d3ULL;
    void feed(std::uint32_t v) {
        h1 = (h1 ^ v) * 1099511628211ULL;
        h2 = (h2 + v + 0x9e3779b97f4a7c15ULL) * 0xff51afd7ed558ccdULL;
        h2 ^= h2 >> 29;
    }
    std::pair<std::uint64_t, std::uint64_t> value() const { return {h1, h2}; }
};

void verify_subgroup(const FiniteRing& ring, const std::vector<std::uint32_t>& ids,
                     const char* what) {
    std::vector<bool> member(ring.size(), false);
    for (auto id : ids) member[id] = true;
    if (ids.empty() || !member[0]) throw Error(std::string(what) + ": missing zero");
    for (auto a : ids) {
        if (!member[ring.neg(Element{a}).id])
            throw Error(std::string(what) + ": not closed under negation");
        for (auto b : ids)
            if (!member[ring.add(Element{a}, Element{b}).id])
                throw Error(std::string(what) + ": not closed under addition");
    }
}

// All r != 0 with f_n(x + r) = f_n(x) for every x, given the full table of
// f_n. Candidates are the table's zeros.
std::vector<std::uint32_t> periods_from_table(const FiniteRing& ring,
                                              const std::vector<std::uint32_t>& table) {
    std::vector<std::uint32_t> periods{0};
    for (std::uint32_t r = 1; r < ring.size(); ++r) {
        if (table[r] != 0) continue;
        bool period = true;
        for (std::uint32_t x = 0; x < ring.size(); ++x) {
            if (table[ring.add(Element{x}, Element{r}).id] != table[x]) {
                period = false;
                break;
            }
        }
        if (period) periods.push_back(r);
    }
    verify_subgroup(ring, periods, "Per(f)");
    return periods;
}

} // namespace

MuProfile mu_profile(const FiniteRing& ring, const Config& cfg, ProfileOptions opt) {
    MuProfile out;
    out.periods_computed = opt.with_periods;
    if (ring.size() == 1) {
        // The one-element ring carries a single mapping; mu0 = mu1 = 1 is
        // consistent since x^2 = x there.
        out.distinct_maps = 1;
        return out;
    }

    // mu1 = lcm of cycle lengths and mu0 = max tail: for each x, once
    // cycle(x) | mu1 we have x^(m + mu1) = x^m exactly for m >= tail(x), so
    // the least uniform onset is the largest tail.
    const auto orbits = orbit_table(ring);
    std::uint64_t mu1 = 1, mu0 = 1;
    for (const auto& o : orbits) {
        mu1 = std::lcm(mu1, o.cycle);
        if (mu1 > cfg.mu1_bound)
            throw BoundExceeded(ring.spec() + ": exponential period exceeds bound " +
                                std::to_string(cfg.mu1_bound));
        mu0 = std::max(mu0, o.tail);
    }
    out.mu0 = mu0;
    out.mu1 = mu1;

    // One pass per exponent over the window containing every distinct power
    // map: maintain the current table, hash it for the dedup count, pick up
    // the zeros as period candidates.
    const std::uint64_t window = mu0 + mu1 - 1;
    const std::uint32_t n_elems = ring.size();
    std::vector<std::uint32_t> cur(n_elems);
    for (std::uint32_t i = 0; i < n_elems; ++i) cur[i] = i;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::vector<std::uint32_t> candidates;
    for (std::uint64_t n = 1; n <= window; ++n) {
        if (n > 1)
            for (std::uint32_t i = 0; i < n_elems; ++i)
                cur[i] = ring.mul(Element{cur[i]}, Element{i}).id;
        TableHash h;
        candidates.clear();
        for (std::uint32_t i = 0; i < n_elems; ++i) {
            h.feed(cur[i]);
            if (cur[i] == 0 && i != 0) candidates.push_back(i);
        }
        seen.insert(h.value());

        if (!opt.with_periods || n == 1) continue;  // the identity map has no period
        std::vector<std::uint32_t> periods{0};
        for (auto r : candidates) {
            bool period = true;
            for (std::uint32_t x = 0; x < n_elems; ++x) {
                if (cur[ring.add(Element{x}, Element{r}).id] != cur[x]) {
                    period = false;
                    break;
                }
            }
            if (period) periods.push_back(r);
        }
        if (periods.size() > 1) {
            verify_subgroup(ring, periods, "Per(f)");
            out.periodic_exponents.push_back(n);
            out.period_subgroups.emplace(n, std::move(periods));
        }
    }
    out.distinct_maps = seen.size();
    return out;
}

std::vector<std::uint32_t> periods_of(const FiniteRing& ring, std::uint64_t n) {
    if (n == 0) throw ValidationError("periods_of: exponent must be >= 1");
    return periods_from_table(ring, power_map(ring, n));
}

std::vector<std::uint32_t> nilpotents(const FiniteRing& ring,
                                      const std::vector<OrbitInfo>& orbits) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < ring.size(); ++i) {
        const auto& o = orbits[i];
        if (o.cycle == 1 && elem_pow(ring, Element{i}, o.tail) == ring.zero())
            out.push_back(i);
    }
    return out;
}

std::vector<std::uint32_t> nilpotents(const FiniteRing& ring) {
    return nilpotents(ring, orbit_table(ring));
}

std::vector<std::uint32_t> potents(const FiniteRing& ring,
                                   const std::vector<OrbitInfo>& orbits) {
    // tail(x) = 1 means x sits on its own power cycle: x^(1 + cycle) = x.
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < ring.size(); ++i)
        if (orbits[i].tail == 1) out.push_back(i);
    return out;
}

std::vector<std::uint32_t> potents(const FiniteRing& ring) {
    return potents(ring, orbit_table(ring));
}

std::uint32_t nil_index(const FiniteRing& ring) {
    const auto orbits = orbit_table(ring);
    std::uint32_t index = 1;
    for (auto id : nilpotents(ring, orbits))
        index = std::max(index, static_cast<std::uint32_t>(orbits[id].tail));
    return index;
}

StructuralFlags structural_flags(const FiniteRing& ring, const MuProfile& profile) {
    if (!profile.periods_computed)
        throw ValidationError("structural_flags: profile lacks period subgroups");
    StructuralFlags f;
    const std::uint32_t n = ring.size();
    const auto orbits = orbit_table(ring);
    f.nil_set = nilpotents(ring, orbits);
    f.pot_set = potents(ring, orbits);
    for (auto id : f.nil_set)
        f.nil_index = std::max(f.nil_index, static_cast<std::uint32_t>(orbits[id].tail));

    f.commutative = true;
    for (std::uint32_t a = 0; a < n && f.commutative; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
            if (ring.mul(Element{a}, Element{b}) != ring.mul(Element{b}, Element{a})) {
                f.commutative = false;
                break;
            }

    // Unity, if any, is located by scan rather than trusted from the
    // construction.
    f.unital = false;
    for (std::uint32_t e = 0; e < n && !f.unital; ++e) {
        bool works = true;
        for (std::uint32_t x = 0; x < n; ++x) {
            if (ring.mul(Element{e}, Element{x}) != Element{x} ||
                ring.mul(Element{x}, Element{e}) != Element{x}) {
                works = false;
                break;
            }
        }
        f.unital = works;
    }

    f.nil_central = true;
    for (auto r : f.nil_set) {
        for (std::uint32_t x = 0; x < n; ++x)
            if (ring.mul(Element{r}, Element{x}) != ring.mul(Element{x}, Element{r})) {
                f.nil_central = false;
                break;
            }
        if (!f.nil_central) break;
    }

    f.nil_order_lcm = 1;
    for (auto r : f.nil_set) f.nil_order_lcm = std::lcm(f.nil_order_lcm, additive_order(ring, Element{r}));
    f.nil_torsion_bounded = true;  // finite carrier: the lcm above exists

    std::vector<bool> pot_member(n, false);
    for (auto id : f.pot_set) pot_member[id] = true;
    f.j_ring = f.pot_set.size() == n;
    f.weakly_periodic = true;
    for (std::uint32_t x = 0; x < n && f.weakly_periodic; ++x) {
        bool decomposable = false;
        for (auto a : f.nil_set)
            if (pot_member[ring.sub(Element{x}, Element{a}).id]) {
                decomposable = true;
                break;
            }
        f.weakly_periodic = decomposable;
    }

    // Every distinct power map appears at an exponent below mu0 + mu1, so the
    // recorded subgroups decide nilperiodicity for a finite ring.
    std::vector<bool> covered(n, false);
    covered[0] = true;
    for (const auto& [expnt, subgroup] : profile.period_subgroups)
        for (auto id : subgroup) covered[id] = true;
    f.nilperiod = std::all_of(f.nil_set.begin(), f.nil_set.end(),
                              [&](std::uint32_t id) { return covered[id]; });

    std::vector<bool> nil_member(n, false);
    for (auto id : f.nil_set) nil_member[id] = true;
    f.ni_ring = true;
    for (auto a : f.nil_set) {
        if (!f.ni_ring) break;
        for (auto b : f.nil_set)
            if (!nil_member[ring.add(Element{a}, Element{b}).id]) {
                f.ni_ring = false;
                break;
            }
        for (std::uint32_t x = 0; x < n && f.ni_ring; ++x)
            if (!nil_member[ring.mul(Element{a}, Element{x}).id] ||
                !nil_member[ring.mul(Element{x}, Element{a}).id])
                f.ni_ring = false;
    }
    return f;
}

ConstructiveExponentCheck constructive_period_exponent(const FiniteRing& ring, Element r) {
    ConstructiveExponentCheck out;
    const OrbitInfo o = orbit(ring, r);
    out.nilpotent = o.cycle == 1 && elem_pow(ring, r, o.tail) == ring.zero();
    if (!out.nilpotent) return out;
    out.index = o.tail;
    out.order = additive_order(ring, r);

    out.central = true;
    for (std::uint32_t x = 0; x < ring.size(); ++x)
        if (ring.mul(r, Element{x}) != ring.mul(Element{x}, r)) {
            out.central = false;
            break;
        }

    std::uint64_t factorial = 1;
    for (std::uint64_t i = 2; i + 1 <= out.index; ++i) factorial = nt::checked_mul(factorial, i);
    out.exponent = nt::checked_mul(factorial, out.order);

    out.holds = true;
    for (std::uint32_t x = 0; x < ring.size(); ++x) {
        const Element shifted = ring.add(Element{x}, r);
        if (elem_pow(ring, shifted, out.exponent) != elem_pow(ring, Element{x}, out.exponent)) {
            out.holds = false;
            break;
        }
    }
    return out;
}

bool quasiperiodic_check(const FiniteRing& ring, Element c, const MuProfile& profile) {
    const std::uint32_t n_elems = ring.size();
    std::vector<std::uint32_t> cur(n_elems);
    for (std::uint32_t i = 0; i < n_elems; ++i) cur[i] = i;
    for (std::uint64_t n = 1; n <= profile.window(); ++n) {
        if (n > 1)
            for (std::uint32_t i = 0; i < n_elems; ++i)
                cur[i] = ring.mul(Element{cur[i]}, Element{i}).id;
        for (std::uint32_t x = 0; x < n_elems; ++x) {
            if (x == 0 || x == c.id) continue;
            const std::uint32_t shifted = cur[ring.add(Element{x}, c).id];
            if (shifted != ring.add(Element{cur[x]}, c).id) return false;
        }
    }
    return true;
}

} // namespace ringlab
