#include "ringlab/zmod.hpp"

namespace ringlab {

ZmodRing::ZmodRing(std::uint64_t n, const Config& cfg)
    : FiniteRing(Family::zmod, "zmod:" + std::to_string(n), n, /*commutative=*/true, cfg) {
    if (n >= 2) barrett_ = ~std::uint64_t{0} / n;
    set_unity(Element{n == 1 ? 0u : 1u});
    finalize(cfg);
}

RingPtr make_zmod(std::uint64_t n, const Config& cfg) {
    return std::make_shared<ZmodRing>(n, cfg);
}

} // namespace ringlab
