#pragma once

#include "ringlab/matrix_witness.hpp"

namespace ringlab {

/// The full matrix ring M_n(F_q), q = p^k. Element id encodes the row-major
/// entry list in base q with entry (0,0) in the low digit. Noncommutative
/// for n >= 2; unity is the identity matrix.
class MatrixRing final : public FiniteRing {
public:
    MatrixRing(std::uint32_t p, std::uint32_t k, std::uint32_t n, const Config& cfg);

    std::uint32_t dim() const { return n_; }
    const GaloisFieldRing& scalar_field() const { return *field_; }
    std::shared_ptr<const GaloisFieldRing> scalar_field_ptr() const { return field_; }

    FieldMatrix to_matrix(Element x) const;
    Element from_matrix(const FieldMatrix& m) const;

protected:
    Element add_impl(Element a, Element b) const override;
    Element mul_impl(Element a, Element b) const override;
    Element neg_impl(Element a) const override;

private:
    static constexpr std::uint32_t kMaxDim = 8;
    void decode(Element x, std::uint32_t* out) const;
    Element encode(const std::uint32_t* entries) const;

    std::shared_ptr<const GaloisFieldRing> field_;
    std::uint32_t n_;
};

RingPtr make_matrix_ring(std::uint32_t p, std::uint32_t k, std::uint32_t n,
                         const Config& cfg = default_config());

} // namespace ringlab
