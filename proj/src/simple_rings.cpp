#include "ringlab/simple_rings.hpp"

namespace ringlab {

namespace {

std::string nil_zero_spec(const std::vector<std::uint32_t>& orders) {
    std::string s = "nilzero:";
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(orders[i]);
    }
    if (orders.empty()) s += "1";
    return s;
}

std::uint64_t product_of(const std::vector<std::uint32_t>& orders) {
    std::uint64_t n = 1;
    for (auto m : orders) n *= m;
    return n;
}

} // namespace

NilZeroRing::NilZeroRing(std::vector<std::uint32_t> orders, const Config& cfg)
    : FiniteRing(Family::nil_zero, nil_zero_spec(orders), product_of(orders),
                 /*commutative=*/true, cfg),
      orders_(std::move(orders)) {
    for (auto m : orders_)
        if (m == 0) throw ValidationError(spec() + ": cyclic orders must be positive");
    stride_.resize(orders_.size());
    std::uint32_t acc = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        stride_[i] = acc;
        acc *= orders_[i];
    }
    if (size() == 1) set_unity(zero());  // the zero ring is its own unity
    finalize(cfg);
}

Element NilZeroRing::add_impl(Element a, Element b) const {
    std::uint32_t id = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        std::uint32_t s = a.id / stride_[i] % orders_[i] + b.id / stride_[i] % orders_[i];
        if (s >= orders_[i]) s -= orders_[i];
        id += s * stride_[i];
    }
    return Element{id};
}

Element NilZeroRing::neg_impl(Element a) const {
    std::uint32_t id = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const std::uint32_t d = a.id / stride_[i] % orders_[i];
        id += (d ? orders_[i] - d : 0) * stride_[i];
    }
    return Element{id};
}

RingPtr make_nil_zero(std::vector<std::uint32_t> orders, const Config& cfg) {
    return std::make_shared<NilZeroRing>(std::move(orders), cfg);
}

BellKleinRing::BellKleinRing(const Config& cfg)
    : FiniteRing(Family::bell_klein, "bell", 4, /*commutative=*/false, cfg) {
    finalize(cfg);
}

RingPtr make_bell_klein(const Config& cfg) {
    return std::make_shared<BellKleinRing>(cfg);
}

} // namespace ringlab
