#include "ringlab/matrix_ring.hpp"

#include "ringlab/numtheory.hpp"
#include "ringlab/polynomials.hpp"

namespace ringlab {

namespace {

std::string mat_spec(std::uint32_t p, std::uint32_t k, std::uint32_t n) {
    return "mat:" + std::to_string(p) + "^" + std::to_string(k) + "," + std::to_string(n);
}

std::uint64_t mat_size(std::uint32_t p, std::uint32_t k, std::uint32_t n, const Config& cfg) {
    // q^(n^2) with an early bail so the power cannot overflow before the cap
    // check fires.
    const std::uint64_t q = nt::checked_pow(p, k);
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < n * n; ++i) {
        size *= q;
        if (size > cfg.max_ring_size)
            throw SizeCapExceeded(mat_spec(p, k, n) + ": size exceeds cap " +
                                  std::to_string(cfg.max_ring_size));
    }
    return size;
}

} // namespace

MatrixRing::MatrixRing(std::uint32_t p, std::uint32_t k, std::uint32_t n, const Config& cfg)
    : FiniteRing(Family::matrix, mat_spec(p, k, n), mat_size(p, k, n, cfg),
                 /*commutative=*/n == 1, cfg),
      n_(n) {
    if (n == 0) throw ValidationError(spec() + ": dimension must be >= 1");
    if (n > kMaxDim) throw ValidationError(spec() + ": dimension too large");
    Config field_cfg = cfg;
    field_cfg.table_cap = 0;
    field_ = std::make_shared<GaloisFieldRing>(p, k, poly::find_irreducible(p, k), field_cfg);

    std::uint32_t eye[kMaxDim * kMaxDim] = {};
    for (std::uint32_t i = 0; i < n_; ++i) eye[i * n_ + i] = 1;
    set_unity(encode(eye));
    finalize(cfg);
}

void MatrixRing::decode(Element x, std::uint32_t* out) const {
    const std::uint32_t q = field_->q();
    std::uint32_t rest = x.id;
    for (std::uint32_t i = 0; i < n_ * n_; ++i) {
        out[i] = rest % q;
        rest /= q;
    }
}

Element MatrixRing::encode(const std::uint32_t* entries) const {
    const std::uint32_t q = field_->q();
    std::uint32_t id = 0;
    for (std::uint32_t i = n_ * n_; i > 0; --i) id = id * q + entries[i - 1];
    return Element{id};
}

Element MatrixRing::add_impl(Element a, Element b) const {
    std::uint32_t ma[kMaxDim * kMaxDim], mb[kMaxDim * kMaxDim];
    decode(a, ma);
    decode(b, mb);
    for (std::uint32_t i = 0; i < n_ * n_; ++i) ma[i] = field_->fadd(ma[i], mb[i]);
    return encode(ma);
}

Element MatrixRing::mul_impl(Element a, Element b) const {
    std::uint32_t ma[kMaxDim * kMaxDim], mb[kMaxDim * kMaxDim], mc[kMaxDim * kMaxDim];
    decode(a, ma);
    decode(b, mb);
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = 0; j < n_; ++j) {
            std::uint32_t acc = 0;
            for (std::uint32_t t = 0; t < n_; ++t)
                acc = field_->fadd(acc, field_->fmul(ma[i * n_ + t], mb[t * n_ + j]));
            mc[i * n_ + j] = acc;
        }
    return encode(mc);
}

Element MatrixRing::neg_impl(Element a) const {
    std::uint32_t ma[kMaxDim * kMaxDim];
    decode(a, ma);
    for (std::uint32_t i = 0; i < n_ * n_; ++i) ma[i] = field_->fneg(ma[i]);
    return encode(ma);
}

FieldMatrix MatrixRing::to_matrix(Element x) const {
    FieldMatrix m(field_, n_);
    decode(x, m.a.data());
    return m;
}

Element MatrixRing::from_matrix(const FieldMatrix& m) const {
    if (m.n != n_ || m.field.get() != field_.get())
        throw ValidationError(spec() + ": matrix from a different ring");
    return encode(m.a.data());
}

RingPtr make_matrix_ring(std::uint32_t p, std::uint32_t k, std::uint32_t n, const Config& cfg) {
    return std::make_shared<MatrixRing>(p, k, n, cfg);
}

} // namespace ringlab
