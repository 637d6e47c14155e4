#pragma once

#include <memory>

#include "ringlab/galois_field.hpp"

namespace ringlab {

/// Dense square matrix over a constructed finite field, entries stored
/// row-major as field-element ids.
struct FieldMatrix {
    std::shared_ptr<const GaloisFieldRing> field;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> a;  // n*n ids

    FieldMatrix() = default;
    FieldMatrix(std::shared_ptr<const GaloisFieldRing> f, std::uint32_t dim);

    std::uint32_t& at(std::uint32_t i, std::uint32_t j) { return a[i * n + j]; }
    std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return a[i * n + j]; }

    bool operator==(const FieldMatrix& o) const { return n == o.n && a == o.a; }
};

FieldMatrix mat_identity(std::shared_ptr<const GaloisFieldRing> field, std::uint32_t n);
FieldMatrix mat_add(const FieldMatrix& x, const FieldMatrix& y);
FieldMatrix mat_sub(const FieldMatrix& x, const FieldMatrix& y);
FieldMatrix mat_mul(const FieldMatrix& x, const FieldMatrix& y);
FieldMatrix mat_pow(const FieldMatrix& x, std::uint64_t e);  // e >= 1

std::uint32_t mat_rank(FieldMatrix x);
std::uint32_t mat_det(FieldMatrix x);
bool mat_invertible(const FieldMatrix& x);
FieldMatrix mat_inverse(const FieldMatrix& x);  // throws ValidationError if singular

bool mat_nilpotent(const FieldMatrix& x);

/// Jordan decomposition of a nonzero nilpotent matrix: A = S J S^{-1} with J
/// block-diagonal, blocks in decreasing size, and each block carrying its
/// ones on the subdiagonal (strictly lower triangular). Chains are chosen
/// greedily by lowest vector id, so the output is deterministic; the
/// constructor re-multiplies S J S^{-1} and refuses to return a wrong
/// decomposition.
struct JordanDecomposition {
    FieldMatrix s;
    FieldMatrix j;
    FieldMatrix s_inv;
    std::vector<std::uint32_t> block_sizes;  // decreasing, sums to n
};

JordanDecomposition nilpotent_jordan(const FieldMatrix& a);

/// For a nonzero nilpotent A, a matrix X with X^m invertible and (X - A)^m
/// singular for every m >= 1; hence A is not a period of any power map over
/// the matrix ring. X conjugates the companion matrix of t^n - 1 by the
/// Jordan basis of A.
FieldMatrix non_period_witness(const FieldMatrix& a);

struct WitnessCheck {
    bool ok = true;
    std::uint64_t failed_m = 0;  // first exponent violating the guarantee
};

/// Verify det(X^m) != 0 and det((X - A)^m) = 0 for all m in [1, m_max].
WitnessCheck verify_non_period_witness(const FieldMatrix& a, const FieldMatrix& x,
                                       std::uint64_t m_max);

} // namespace ringlab
