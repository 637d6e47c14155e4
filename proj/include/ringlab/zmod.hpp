#pragma once

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// The residue ring Z/nZ. Multiplication uses Barrett reduction so large
/// census sweeps do not pay for a hardware divide per product.
class ZmodRing final : public FiniteRing {
public:
    ZmodRing(std::uint64_t n, const Config& cfg);

    std::uint32_t modulus() const { return size(); }
    std::uint32_t residue(Element x) const { return x.id; }
    Element from_residue(std::uint64_t v) const { return Element{static_cast<std::uint32_t>(v % size())}; }

protected:
    Element add_impl(Element a, Element b) const override {
        const std::uint32_t s = a.id + b.id;
        return Element{s >= size() ? s - size() : s};
    }
    Element mul_impl(Element a, Element b) const override {
        return Element{reduce(std::uint64_t{a.id} * b.id)};
    }
    Element neg_impl(Element a) const override { return Element{a.id ? size() - a.id : 0}; }

private:
    std::uint32_t reduce(std::uint64_t z) const {
        if (size() == 1) return 0;
        const auto q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(z) * barrett_) >> 64);
        auto r = static_cast<std::uint32_t>(z - q * size());
        if (r >= size()) r -= size();
        return r;
    }

    std::uint64_t barrett_ = 0;  // floor(2^64 / n), n >= 2
};

RingPtr make_zmod(std::uint64_t n, const Config& cfg = default_config());

} // namespace ringlab
