#include "ringlab/matrix_witness.hpp"

#include "ringlab/numtheory.hpp"

namespace ringlab {

FieldMatrix::FieldMatrix(std::shared_ptr<const GaloisFieldRing> f, std::uint32_t dim)
    : field(std::move(f)), n(dim), a(std::size_t{dim} * dim, 0) {}

FieldMatrix mat_identity(std::shared_ptr<const GaloisFieldRing> field, std::uint32_t n) {
    FieldMatrix m(std::move(field), n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

void require_same_shape(const FieldMatrix& x, const FieldMatrix& y) {
    if (x.n != y.n || x.field.get() != y.field.get())
        throw ValidationError("matrix shape/field mismatch");
}

bool is_zero(const FieldMatrix& x) {
    for (auto v : x.a)
        if (v != 0) return false;
    return true;
}

std::vector<std::uint32_t> mat_vec(const FieldMatrix& m, const std::vector<std::uint32_t>& v) {
    const auto& f = *m.field;
    std::vector<std::uint32_t> out(m.n, 0);
    for (std::uint32_t i = 0; i < m.n; ++i) {
        std::uint32_t acc = 0;
        for (std::uint32_t j = 0; j < m.n; ++j) acc = f.fadd(acc, f.fmul(m.at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

// Rank of the row list, by destructive elimination. Rows may be longer than
// the matrix dimension when used on stacked bases.
std::uint32_t rows_rank(std::vector<std::vector<std::uint32_t>> rows,
                        const GaloisFieldRing& f) {
    if (rows.empty()) return 0;
    const std::size_t width = rows[0].size();
    std::uint32_t rank = 0;
    std::size_t lead = 0;
    for (; lead < width && rank < rows.size(); ++lead) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][lead] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint32_t inv = f.finv(rows[rank][lead]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][lead] == 0) continue;
            const std::uint32_t factor = f.fmul(rows[r][lead], inv);
            for (std::size_t c = lead; c < width; ++c)
                rows[r][c] = f.fsub(rows[r][c], f.fmul(factor, rows[rank][c]));
        }
        ++rank;
    }
    return rank;
}

} // namespace

FieldMatrix mat_add(const FieldMatrix& x, const FieldMatrix& y) {
    require_same_shape(x, y);
    FieldMatrix out(x.field, x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.field->fadd(x.a[i], y.a[i]);
    return out;
}

FieldMatrix mat_sub(const FieldMatrix& x, const FieldMatrix& y) {
    require_same_shape(x, y);
    FieldMatrix out(x.field, x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.field->fsub(x.a[i], y.a[i]);
    return out;
}

FieldMatrix mat_mul(const FieldMatrix& x, const FieldMatrix& y) {
    require_same_shape(x, y);
    const auto& f = *x.field;
    FieldMatrix out(x.field, x.n);
    for (std::uint32_t i = 0; i < x.n; ++i)
        for (std::uint32_t j = 0; j < x.n; ++j) {
            std::uint32_t acc = 0;
            for (std::uint32_t t = 0; t < x.n; ++t)
                acc = f.fadd(acc, f.fmul(x.at(i, t), y.at(t, j)));
            out.at(i, j) = acc;
        }
    return out;
}

FieldMatrix mat_pow(const FieldMatrix& x, std::uint64_t e) {
    if (e == 0) throw ValidationError("mat_pow: exponent must be >= 1");
    int top = 63;
    while (!(e >> top & 1u)) --top;
    FieldMatrix acc = x;
    for (int bit = top - 1; bit >= 0; --bit) {
        acc = mat_mul(acc, acc);
        if (e >> bit & 1u) acc = mat_mul(acc, x);
    }
    return acc;
}

std::uint32_t mat_rank(FieldMatrix x) {
    const auto& f = *x.field;
    std::uint32_t rank = 0;
    for (std::uint32_t lead = 0; lead < x.n && rank < x.n; ++lead) {
        std::uint32_t pivot = rank;
        while (pivot < x.n && x.at(pivot, lead) == 0) ++pivot;
        if (pivot == x.n) continue;
        for (std::uint32_t c = 0; c < x.n; ++c) std::swap(x.at(rank, c), x.at(pivot, c));
        const std::uint32_t inv = f.finv(x.at(rank, lead));
        for (std::uint32_t r = rank + 1; r < x.n; ++r) {
            if (x.at(r, lead) == 0) continue;
            const std::uint32_t factor = f.fmul(x.at(r, lead), inv);
            for (std::uint32_t c = lead; c < x.n; ++c)
                x.at(r, c) = f.fsub(x.at(r, c), f.fmul(factor, x.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

std::uint32_t mat_det(FieldMatrix x) {
    const auto& f = *x.field;
    std::uint32_t det = 1;
    for (std::uint32_t lead = 0; lead < x.n; ++lead) {
        std::uint32_t pivot = lead;
        while (pivot < x.n && x.at(pivot, lead) == 0) ++pivot;
        if (pivot == x.n) return 0;
        if (pivot != lead) {
            for (std::uint32_t c = 0; c < x.n; ++c) std::swap(x.at(lead, c), x.at(pivot, c));
            det = f.fneg(det);
        }
        det = f.fmul(det, x.at(lead, lead));
        const std::uint32_t inv = f.finv(x.at(lead, lead));
        for (std::uint32_t r = lead + 1; r < x.n; ++r) {
            if (x.at(r, lead) == 0) continue;
            const std::uint32_t factor = f.fmul(x.at(r, lead), inv);
            for (std::uint32_t c = lead; c < x.n; ++c)
                x.at(r, c) = f.fsub(x.at(r, c), f.fmul(factor, x.at(lead, c)));
        }
    }
    return det;
}

bool mat_invertible(const FieldMatrix& x) { return mat_det(x) != 0; }

FieldMatrix mat_inverse(const FieldMatrix& x) {
    const auto& f = *x.field;
    FieldMatrix work = x;
    FieldMatrix inv = mat_identity(x.field, x.n);
    for (std::uint32_t lead = 0; lead < x.n; ++lead) {
        std::uint32_t pivot = lead;
        while (pivot < x.n && work.at(pivot, lead) == 0) ++pivot;
        if (pivot == x.n) throw ValidationError("mat_inverse: singular matrix");
        for (std::uint32_t c = 0; c < x.n; ++c) {
            std::swap(work.at(lead, c), work.at(pivot, c));
            std::swap(inv.at(lead, c), inv.at(pivot, c));
        }
        const std::uint32_t scale = f.finv(work.at(lead, lead));
        for (std::uint32_t c = 0; c < x.n; ++c) {
            work.at(lead, c) = f.fmul(work.at(lead, c), scale);
            inv.at(lead, c) = f.fmul(inv.at(lead, c), scale);
        }
        for (std::uint32_t r = 0; r < x.n; ++r) {
            if (r == lead || work.at(r, lead) == 0) continue;
            const std::uint32_t factor = work.at(r, lead);
            for (std::uint32_t c = 0; c < x.n; ++c) {
                work.at(r, c) = f.fsub(work.at(r, c), f.fmul(factor, work.at(lead, c)));
                inv.at(r, c) = f.fsub(inv.at(r, c), f.fmul(factor, inv.at(lead, c)));
            }
        }
    }
    return inv;
}

bool mat_nilpotent(const FieldMatrix& x) {
    return is_zero(mat_pow(x, std::max<std::uint32_t>(x.n, 1)));
}

JordanDecomposition nilpotent_jordan(const FieldMatrix& a) {
    const std::uint32_t n = a.n;
    const auto& f = *a.field;
    if (is_zero(a)) throw ValidationError("nilpotent_jordan: A must be nonzero");

    // Rank profile of the powers determines the block structure.
    std::vector<std::uint32_t> rank_of_power{n};  // rank(A^0) = n
    std::vector<FieldMatrix> powers{mat_identity(a.field, n)};
    std::uint32_t index = 0;
    for (std::uint32_t j = 1; j <= n; ++j) {
        powers.push_back(mat_mul(powers.back(), a));
        rank_of_power.push_back(mat_rank(powers.back()));
        if (rank_of_power.back() == 0) {
            index = j;
            break;
        }
    }
    if (index == 0) throw ValidationError("nilpotent_jordan: A is not nilpotent");

    auto blocks_at_least = [&](std::uint32_t j) {
        return rank_of_power[j - 1] - rank_of_power[j];
    };
    std::vector<std::uint32_t> block_sizes;
    for (std::uint32_t j = index; j >= 1; --j) {
        const std::uint32_t exactly =
            blocks_at_least(j) - (j + 1 <= index ? blocks_at_least(j + 1) : 0);
        for (std::uint32_t t = 0; t < exactly; ++t) block_sizes.push_back(j);
    }

    // Greedy chain construction, scanning candidate vectors in id order so
    // the basis is canonical. A head v of a size-j chain must keep
    // { previous chains } + { v, Av, ..., A^(j-1) v } independent.
    const std::uint64_t vector_count = nt::checked_pow(f.q(), n);
    auto decode_vec = [&](std::uint64_t id) {
        std::vector<std::uint32_t> v(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            v[i] = static_cast<std::uint32_t>(id % f.q());
            id /= f.q();
        }
        return v;
    };
    std::vector<std::vector<std::uint32_t>> accepted;  // every chain vector
    std::vector<std::vector<std::vector<std::uint32_t>>> chains;
    for (auto j : block_sizes) {
        bool found = false;
        for (std::uint64_t vid = 1; vid < vector_count && !found; ++vid) {
            auto v = decode_vec(vid);
            std::vector<std::vector<std::uint32_t>> chain{v};
            for (std::uint32_t t = 1; t < j; ++t) chain.push_back(mat_vec(a, chain.back()));
            if (mat_vec(a, chain.back()) != std::vector<std::uint32_t>(n, 0)) continue;
            auto trial = accepted;
            trial.insert(trial.end(), chain.begin(), chain.end());
            if (rows_rank(trial, f) != trial.size()) continue;
            accepted = std::move(trial);
            chains.push_back(std::move(chain));
            found = true;
        }
        if (!found) throw Error("nilpotent_jordan: chain search failed");
    }

    JordanDecomposition out;
    out.block_sizes = block_sizes;
    out.s = FieldMatrix(a.field, n);
    out.j = FieldMatrix(a.field, n);
    std::uint32_t col = 0;
    for (const auto& chain : chains) {
        for (std::size_t t = 0; t < chain.size(); ++t, ++col) {
            for (std::uint32_t i = 0; i < n; ++i) out.s.at(i, col) = chain[t][i];
            if (t + 1 < chain.size()) out.j.at(col + 1, col) = 1;  // subdiagonal one
        }
    }
    out.s_inv = mat_inverse(out.s);
    if (mat_mul(mat_mul(out.s, out.j), out.s_inv) != a)
        throw Error("nilpotent_jordan: recomposition mismatch");
    return out;
}

FieldMatrix non_period_witness(const FieldMatrix& a) {
    const auto dec = nilpotent_jordan(a);
    const std::uint32_t n = a.n;
    // Companion matrix of t^n - 1: ones on the subdiagonal plus the (1, n)
    // corner; a cyclic shift, so all its powers are invertible.
    FieldMatrix companion(a.field, n);
    companion.at(0, n - 1) = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) companion.at(i + 1, i) = 1;
    return mat_mul(mat_mul(dec.s, companion), dec.s_inv);
}

WitnessCheck verify_non_period_witness(const FieldMatrix& a, const FieldMatrix& x,
                                       std::uint64_t m_max) {
    WitnessCheck out;
    FieldMatrix xm = x;
    const FieldMatrix diff = mat_sub(x, a);
    FieldMatrix dm = diff;
    for (std::uint64_t m = 1; m <= m_max; ++m) {
        if (m > 1) {
            xm = mat_mul(xm, x);
            dm = mat_mul(dm, diff);
        }
        if (mat_det(xm) == 0 || mat_det(dm) != 0) {
            out.ok = false;
            out.failed_m = m;
            return out;
        }
    }
    return out;
}

} // namespace ringlab
