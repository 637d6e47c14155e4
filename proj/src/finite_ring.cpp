#include "ringlab/finite_ring.hpp"

#include <numeric>
#include <random>

#include "ringlab/numtheory.hpp"

namespace ringlab {

FiniteRing::FiniteRing(Family family, std::string spec, std::uint64_t size, bool commutative,
                       const Config& cfg)
    : family_(family), spec_(std::move(spec)), size_(0), commutative_(commutative) {
    if (size == 0) throw ValidationError(spec_ + ": empty carrier");
    if (size > cfg.max_ring_size)
        throw SizeCapExceeded(spec_ + ": size " + std::to_string(size) + " exceeds cap " +
                              std::to_string(cfg.max_ring_size));
    size_ = static_cast<std::uint32_t>(size);
}

void FiniteRing::finalize(const Config& cfg) {
    neg_table_.resize(size_);
    for (std::uint32_t i = 0; i < size_; ++i) neg_table_[i] = neg_impl(Element{i}).id;

    if (size_ <= cfg.table_cap) {
        auto t = std::make_unique<OpTables>();
        const std::size_t n2 = std::size_t{size_} * size_;
        t->add.resize(n2);
        t->mul.resize(n2);
        for (std::uint32_t a = 0; a < size_; ++a) {
            const std::size_t row = std::size_t{a} * size_;
            for (std::uint32_t b = 0; b < size_; ++b) {
                t->add[row + b] = add_impl(Element{a}, Element{b}).id;
                t->mul[row + b] = mul_impl(Element{a}, Element{b}).id;
            }
        }
        tables_ = std::move(t);
    }
}

Element elem_pow(const FiniteRing& ring, Element x, std::uint64_t n) {
    if (n == 0)
        throw ValidationError("elem_pow: x^0 is undefined (ring may lack unity)");
    // Walk the exponent bits below the leading one.
    int top = 63;
    while (!(n >> top & 1u)) --top;
    Element acc = x;
    for (int bit = top - 1; bit >= 0; --bit) {
        acc = ring.mul(acc, acc);
        if (n >> bit & 1u) acc = ring.mul(acc, x);
    }
    return acc;
}

std::vector<std::uint32_t> power_map(const FiniteRing& ring, std::uint64_t n) {
    std::vector<std::uint32_t> table(ring.size());
    for (std::uint32_t i = 0; i < ring.size(); ++i)
        table[i] = elem_pow(ring, Element{i}, n).id;
    return table;
}

Element scalar_mul(const FiniteRing& ring, Element x, std::uint64_t m) {
    Element acc = ring.zero();
    Element base = x;
    while (m > 0) {
        if (m & 1u) acc = ring.add(acc, base);
        m >>= 1u;
        if (m > 0) base = ring.add(base, base);
    }
    return acc;
}

std::uint64_t additive_order(const FiniteRing& ring, Element x) {
    // The order divides |R|; strip prime factors from |R| while the multiple
    // stays zero.
    std::uint64_t d = ring.size();
    for (const auto& [p, e] : nt::factorize(ring.size()).factors) {
        while (d % p == 0 && scalar_mul(ring, x, d / p) == ring.zero()) d /= p;
    }
    return d;
}

std::uint64_t characteristic(const FiniteRing& ring) {
    std::uint64_t c = 1;
    for (std::uint32_t i = 0; i < ring.size(); ++i) {
        const Element x{i};
        if (scalar_mul(ring, x, c) != ring.zero()) c = std::lcm(c, additive_order(ring, x));
    }
    return c;
}

ProductRing::ProductRing(RingPtr first, RingPtr second, const Config& cfg)
    : FiniteRing(Family::product, "prod(" + first->spec() + "," + second->spec() + ")",
                 std::uint64_t{first->size()} * second->size(),
                 first->is_commutative() && second->is_commutative(), cfg),
      first_(std::move(first)),
      second_(std::move(second)) {
    if (first_->has_unity() && second_->has_unity())
        set_unity(combine(first_->unity(), second_->unity()));
    finalize(cfg);
}

Element ProductRing::add_impl(Element a, Element b) const {
    const auto [a1, a2] = split(a);
    const auto [b1, b2] = split(b);
    return combine(first_->add(a1, b1), second_->add(a2, b2));
}

Element ProductRing::mul_impl(Element a, Element b) const {
    const auto [a1, a2] = split(a);
    const auto [b1, b2] = split(b);
    return combine(first_->mul(a1, b1), second_->mul(a2, b2));
}

Element ProductRing::neg_impl(Element a) const {
    const auto [a1, a2] = split(a);
    return combine(first_->neg(a1), second_->neg(a2));
}

RingPtr direct_product(RingPtr first, RingPtr second, const Config& cfg) {
    return std::make_shared<ProductRing>(std::move(first), std::move(second), cfg);
}

namespace {

bool check_triple_laws(const FiniteRing& r, Element a, Element b, Element c, bool& assoc_add,
                       bool& assoc_mul, bool& distrib) {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) assoc_add = false;
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) assoc_mul = false;
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) distrib = false;
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) distrib = false;
    return assoc_add && assoc_mul && distrib;
}

} // namespace

LawCheckReport check_ring_laws(const FiniteRing& ring, const Config& cfg) {
    LawCheckReport rep;
    const std::uint32_t n = ring.size();

    // Unary and pairwise additive axioms are always exhaustive.
    bool additive = true;
    for (std::uint32_t i = 0; i < n && additive; ++i) {
        const Element x{i};
        if (ring.add(ring.zero(), x) != x || ring.add(x, ring.zero()) != x) additive = false;
        if (ring.add(x, ring.neg(x)) != ring.zero()) additive = false;
    }
    if (n <= 4096) {
        for (std::uint32_t i = 0; i < n && additive; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                if (ring.add(Element{i}, Element{j}) != ring.add(Element{j}, Element{i})) {
                    additive = false;
                    break;
                }
    } else {
        std::mt19937_64 rng(cfg.rng_seed);
        std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
        for (int t = 0; t < 100000 && additive; ++t) {
            const Element a{pick(rng)}, b{pick(rng)};
            if (ring.add(a, b) != ring.add(b, a)) additive = false;
        }
    }
    rep.additive_ok = additive;

    bool assoc_add = true, assoc_mul = true, distrib = true;
    if (n <= 256) {
        rep.exhaustive = true;
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                for (std::uint32_t k = 0; k < n; ++k) {
                    check_triple_laws(ring, Element{i}, Element{j}, Element{k}, assoc_add,
                                      assoc_mul, distrib);
                    ++rep.triples_checked;
                    if (!(assoc_add && assoc_mul && distrib)) goto done;
                }
    } else {
        std::mt19937_64 rng(cfg.rng_seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
        for (int t = 0; t < 20000; ++t) {
            check_triple_laws(ring, Element{pick(rng)}, Element{pick(rng)}, Element{pick(rng)},
                              assoc_add, assoc_mul, distrib);
            ++rep.triples_checked;
            if (!(assoc_add && assoc_mul && distrib)) break;
        }
    }
done:
    rep.additive_ok = rep.additive_ok && assoc_add;
    rep.mul_associative = assoc_mul;
    rep.distributive = distrib;

    if (ring.has_unity()) {
        const Element one = ring.unity();
        for (std::uint32_t i = 0; i < n; ++i) {
            const Element x{i};
            if (ring.mul(one, x) != x || ring.mul(x, one) != x) {
                rep.unity_ok = false;
                break;
            }
        }
    }

    if (const OpTables* t = ring.tables()) {
        for (std::uint32_t a = 0; a < n && rep.tables_ok; ++a) {
            const std::size_t row = std::size_t{a} * n;
            for (std::uint32_t b = 0; b < n; ++b) {
                if (t->add[row + b] != ring.add_direct(Element{a}, Element{b}).id ||
                    t->mul[row + b] != ring.mul_direct(Element{a}, Element{b}).id) {
                    rep.tables_ok = false;
                    break;
                }
            }
        }
    }
    return rep;
}

} // namespace ringlab
