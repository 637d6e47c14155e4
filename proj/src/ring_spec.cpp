#include "ringlab/ring_spec.hpp"

#include "ringlab/corbas.hpp"
#include "ringlab/galois_field.hpp"
#include "ringlab/galois_ring.hpp"
#include "ringlab/matrix_ring.hpp"
#include "ringlab/simple_rings.hpp"
#include "ringlab/zmod.hpp"

namespace ringlab {

namespace {

class Parser {
public:
    Parser(std::string_view input, const Config& cfg) : in_(input), cfg_(cfg) {}

    RingPtr run() {
        RingPtr ring = parse_spec();
        if (pos_ != in_.size()) fail("unexpected trailing characters");
        return ring;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    bool consume(std::string_view token) {
        if (in_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (pos_ >= in_.size() || in_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::uint64_t parse_uint() {
        if (pos_ >= in_.size() || in_[pos_] < '0' || in_[pos_] > '9') fail("expected a number");
        std::uint64_t v = 0;
        while (pos_ < in_.size() && in_[pos_] >= '0' && in_[pos_] <= '9') {
            v = v * 10 + static_cast<std::uint64_t>(in_[pos_] - '0');
            if (v > (std::uint64_t{1} << 40)) fail("number out of range");
            ++pos_;
        }
        return v;
    }

    RingPtr parse_spec() {
        if (consume("prod(")) {
            RingPtr a = parse_spec();
            expect(',');
            RingPtr b = parse_spec();
            expect(')');
            return direct_product(std::move(a), std::move(b), cfg_);
        }
        if (consume("zmod:")) return make_zmod(parse_uint(), cfg_);
        if (consume("gf:")) {
            const auto p = parse_uint();
            expect('^');
            const auto k = parse_uint();
            return make_galois_field(narrow(p), narrow(k), cfg_);
        }
        if (consume("gr:")) {
            const auto p = parse_uint();
            expect('^');
            const auto k = parse_uint();
            expect(',');
            const auto d = parse_uint();
            return make_galois_ring(narrow(p), narrow(k), narrow(d), cfg_);
        }
        if (consume("corbas:")) {
            const auto p = parse_uint();
            expect(',');
            const auto k = parse_uint();
            expect(',');
            const auto s = parse_uint();
            return make_corbas(narrow(p), narrow(k), narrow(s), cfg_);
        }
        if (consume("mat:")) {
            const auto p = parse_uint();
            expect('^');
            const auto k = parse_uint();
            expect(',');
            const auto n = parse_uint();
            return make_matrix_ring(narrow(p), narrow(k), narrow(n), cfg_);
        }
        if (consume("nilzero:")) {
            std::vector<std::uint32_t> orders{narrow(parse_uint())};
            // the order list ends at a comma not followed by a digit, which
            // keeps prod(nilzero:2,zmod:4) unambiguous
            while (pos_ + 1 < in_.size() && in_[pos_] == ',' && in_[pos_ + 1] >= '0' &&
                   in_[pos_ + 1] <= '9') {
                ++pos_;
                orders.push_back(narrow(parse_uint()));
            }
            return make_nil_zero(std::move(orders), cfg_);
        }
        if (consume("bell")) return make_bell_klein(cfg_);
        fail("unknown ring family");
    }

    std::uint32_t narrow(std::uint64_t v) const {
        if (v > 0xffffffffULL) throw ValidationError("parameter out of range");
        return static_cast<std::uint32_t>(v);
    }

    std::string_view in_;
    const Config& cfg_;
    std::size_t pos_ = 0;
};

} // namespace

RingPtr parse_ring_spec(std::string_view spec, const Config& cfg) {
    return Parser(spec, cfg).run();
}

} // namespace ringlab
