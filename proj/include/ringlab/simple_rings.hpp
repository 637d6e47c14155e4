#pragma once

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// Direct sum of cyclic groups Z/m_i Z equipped with the zero
/// multiplication: xy = 0 for all x, y, so every element is nilpotent of
/// index at most 2. The empty order list gives the one-element zero ring.
class NilZeroRing final : public FiniteRing {
public:
    NilZeroRing(std::vector<std::uint32_t> orders, const Config& cfg);

    const std::vector<std::uint32_t>& orders() const { return orders_; }

protected:
    Element add_impl(Element a, Element b) const override;
    Element mul_impl(Element, Element) const override { return zero(); }
    Element neg_impl(Element a) const override;

private:
    std::vector<std::uint32_t> orders_;
    std::vector<std::uint32_t> stride_;
};

RingPtr make_nil_zero(std::vector<std::uint32_t> orders, const Config& cfg = default_config());

/// Bell's four-element ring on the Klein group {0, a, b, c}: 0x = cx = 0 and
/// ax = bx = x. Non-unital; one-sidedly noncommutative (ab = b, ba = a).
/// Ids 1, 2, 3 are a, b, c.
class BellKleinRing final : public FiniteRing {
public:
    explicit BellKleinRing(const Config& cfg);

    static constexpr Element a() { return Element{1}; }
    static constexpr Element b() { return Element{2}; }
    static constexpr Element c() { return Element{3}; }

protected:
    Element add_impl(Element x, Element y) const override { return Element{x.id ^ y.id}; }
    Element mul_impl(Element x, Element y) const override {
        return (x.id == 1 || x.id == 2) ? y : zero();
    }
    Element neg_impl(Element x) const override { return x; }
};

RingPtr make_bell_klein(const Config& cfg = default_config());

} // namespace ringlab
