#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/element.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

enum class Family {
    zmod,
    galois_field,
    galois_ring,
    corbas,
    nil_zero,
    bell_klein,
    matrix,
    product,
};

/// Flat |R|^2 lookup tables for add and mul, storing result ids. Built only
/// for rings with |R| <= Config::table_cap; entries always agree with the
/// direct arithmetic.
struct OpTables {
    std::vector<std::uint32_t> add;
    std::vector<std::uint32_t> mul;
};

/// A finite ring: element enumeration plus exact add/negate/multiply and an
/// optional unity. Elements are canonical indices in [0, size); index 0 is
/// the additive identity. Instances are immutable after construction, so all
/// operations are safe to call from concurrent workers.
///
/// Rings are not assumed commutative or unital. is_commutative() reports the
/// structural fact known from the construction parameters; the analysis layer
/// re-measures it by enumeration.
class FiniteRing {
public:
    virtual ~FiniteRing() = default;
    FiniteRing(const FiniteRing&) = delete;
    FiniteRing& operator=(const FiniteRing&) = delete;

    std::uint32_t size() const { return size_; }
    Element zero() const { return Element{0}; }
    bool has_unity() const { return unity_.has_value(); }
    Element unity() const {
        if (!unity_) throw ValidationError(spec_ + ": ring has no unity");
        return *unity_;
    }
    bool is_commutative() const { return commutative_; }
    Family family() const { return family_; }

    /// Canonical ring-spec string, e.g. "corbas:2,2,1".
    const std::string& spec() const { return spec_; }

    Element add(Element a, Element b) const {
        if (tables_) return Element{tables_->add[std::size_t{a.id} * size_ + b.id]};
        return add_impl(a, b);
    }
    Element mul(Element a, Element b) const {
        if (tables_) return Element{tables_->mul[std::size_t{a.id} * size_ + b.id]};
        return mul_impl(a, b);
    }
    Element neg(Element a) const { return Element{neg_table_[a.id]}; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    const OpTables* tables() const { return tables_.get(); }

    /// Direct arithmetic, bypassing the tables. Used by the table-consistency
    /// checks.
    Element add_direct(Element a, Element b) const { return add_impl(a, b); }
    Element mul_direct(Element a, Element b) const { return mul_impl(a, b); }

protected:
    FiniteRing(Family family, std::string spec, std::uint64_t size, bool commutative,
               const Config& cfg);

    void set_unity(Element u) { unity_ = u; }

    /// Derived constructors call this last: fills the negation cache and, if
    /// size <= cfg.table_cap, the operation tables.
    void finalize(const Config& cfg);

    virtual Element add_impl(Element a, Element b) const = 0;
    virtual Element mul_impl(Element a, Element b) const = 0;
    virtual Element neg_impl(Element a) const = 0;

private:
    Family family_;
    std::string spec_;
    std::uint32_t size_;
    bool commutative_;
    std::optional<Element> unity_;
    std::vector<std::uint32_t> neg_table_;
    std::unique_ptr<OpTables> tables_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// x^n for n >= 1 by square-and-multiply. n = 0 is rejected: x^0 has no
/// meaning in a ring without unity.
Element elem_pow(const FiniteRing& ring, Element x, std::uint64_t n);

/// The full table of f(x) = x^n: entry i is elem_pow on element i.
std::vector<std::uint32_t> power_map(const FiniteRing& ring, std::uint64_t n);

/// m·x in the additive group (m >= 0; m = 0 gives zero).
Element scalar_mul(const FiniteRing& ring, Element x, std::uint64_t m);

/// Smallest j >= 1 with j·x = 0. Divides |R| by Lagrange, which the search
/// exploits.
std::uint64_t additive_order(const FiniteRing& ring, Element x);

/// Exponent of the additive group: the lcm of all additive orders.
std::uint64_t characteristic(const FiniteRing& ring);

/// Componentwise product ring. Unital iff both factors are.
class ProductRing final : public FiniteRing {
public:
    ProductRing(RingPtr first, RingPtr second, const Config& cfg);

    const FiniteRing& first() const { return *first_; }
    const FiniteRing& second() const { return *second_; }
    RingPtr first_ptr() const { return first_; }
    RingPtr second_ptr() const { return second_; }

    Element combine(Element a, Element b) const {
        return Element{a.id * second_->size() + b.id};
    }
    std::pair<Element, Element> split(Element x) const {
        return {Element{x.id / second_->size()}, Element{x.id % second_->size()}};
    }

protected:
    Element add_impl(Element a, Element b) const override;
    Element mul_impl(Element a, Element b) const override;
    Element neg_impl(Element a) const override;

private:
    RingPtr first_;
    RingPtr second_;
};

RingPtr direct_product(RingPtr first, RingPtr second, const Config& cfg = default_config());

/// Result of the ring-law verification: additive group axioms, associativity
/// of multiplication, distributivity, unity action, and table consistency.
/// Exhaustive for |R| <= 256, randomized (fixed seed, 2*10^4 triples) above.
struct LawCheckReport {
    bool exhaustive = false;
    std::uint64_t triples_checked = 0;
    bool additive_ok = false;
    bool mul_associative = false;
    bool distributive = false;
    bool unity_ok = true;   // vacuously true without unity
    bool tables_ok = true;  // vacuously true without tables
    bool all_ok() const {
        return additive_ok && mul_associative && distributive && unity_ok && tables_ok;
    }
};

LawCheckReport check_ring_laws(const FiniteRing& ring, const Config& cfg = default_config());

} // namespace ringlab
