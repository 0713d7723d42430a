#include "pekt/nu_parser.hpp"

#include "pekt/errors.hpp"

#include <cctype>
#include <string>

namespace pekt {

namespace {

// Large enough for any hand-written input; the caller's cap is checked after.
constexpr unsigned kParseWeightCap = 512;

class Parser {
public:
    Parser(std::string_view text, unsigned q_order, Algebra algebra)
        : text_(text), q_order_(q_order), algebra_(algebra) {}

    LambdaElement parse() {
        LambdaElement e = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

private:
    LambdaElement expr() {
        LambdaElement e = term();
        while (true) {
            skip_space();
            if (accept('+')) e += term();
            else if (accept('-')) e -= term();
            else return e;
        }
    }

    LambdaElement term() {
        LambdaElement e = factor();
        while (true) {
            skip_space();
            if (!accept('*')) return e;
            e = e * factor();
        }
    }

    LambdaElement factor() {
        skip_space();
        if (accept('-')) {
            LambdaElement e = factor();
            e *= Rational(-1);
            return e;
        }
        LambdaElement base = atom();
        skip_space();
        if (!accept('^')) return base;
        skip_space();
        const BigInt e = integer();
        if (!e.fits_uint_p() || e > kParseWeightCap) throw ParseError("exponent too large", pos_);
        return pow(base, static_cast<unsigned>(e.get_ui()));
    }

    LambdaElement atom() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (accept('(')) {
            LambdaElement e = expr();
            skip_space();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (c == 'N') {
            ++pos_;
            const std::size_t at = pos_;
            const BigInt k = integer();
            if (k == 0 || !k.fits_uint_p() || k > kParseWeightCap)
                throw ParseError("power-sum index out of range", at);
            return LambdaElement::generator(static_cast<unsigned>(k.get_ui()), kParseWeightCap,
                                            q_order_);
        }
        if (c == 'x') {
            ++pos_;
            return LambdaElement::rank_one_x(kParseWeightCap, q_order_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = integer();
            BigInt den = 1;
            skip_space();
            if (accept('/')) {
                skip_space();
                const std::size_t at = pos_;
                den = integer();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            return LambdaElement::constant(
                QSeries::constant(make_rational(num, den), q_order_), kParseWeightCap, algebra_);
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    BigInt integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", pos_);
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    unsigned q_order_;
    Algebra algebra_;
};

}  // namespace

LambdaElement parse_nu(std::string_view text, unsigned weight_cap, unsigned q_order) {
    bool has_x = false;
    bool has_n = false;
    for (char c : text) {
        has_x |= c == 'x';
        has_n |= c == 'N';
    }
    if (has_x && has_n)
        throw DomainError("cannot mix the rank-one generator x with power sums N_k");
    const Algebra algebra = has_x ? Algebra::rank_one : Algebra::power_sum;
    LambdaElement e = Parser(text, q_order, algebra).parse();
    if (auto w = e.max_weight(); w && *w > weight_cap)
        throw DomainError("input has weight " + std::to_string(*w) + " above the weight cap " +
                          std::to_string(weight_cap));
    return e.with_weight_cap(weight_cap);
}

}  // namespace pekt
