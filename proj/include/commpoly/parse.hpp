#ifndef COMMPOLY_PARSE_HPP
#define COMMPOLY_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "commpoly/poly.hpp"

namespace commpoly {

// syntax error with the byte offset of the offending character
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& what)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

namespace detail {

constexpr long long kMaxExponent = 10000;

// recursive-descent parser for signed rational coefficients, variable x,
// operators + - * ^ and parentheses, with implicit multiplication ("4x",
// "1/2x^2"); "p/q" is a single rational literal, not a division operator
class PolyParser {
  public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    Poly<Rational> parse() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError(pos_, "empty polynomial expression");
        Poly<Rational> p = parse_expr();
        skip_ws();
        if (pos_ < s_.size()) throw ParseError(pos_, "unexpected trailing input");
        return p;
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    Poly<Rational> parse_expr() {
        bool negate = false;
        skip_ws();
        if (peek_is('+') || peek_is('-')) {
            negate = s_[pos_] == '-';
            ++pos_;
        }
        Poly<Rational> acc = parse_term();
        if (negate) acc = neg(acc);
        for (;;) {
            skip_ws();
            if (peek_is('+') || peek_is('-')) {
                bool minus = s_[pos_] == '-';
                ++pos_;
                Poly<Rational> t = parse_term();
                acc = minus ? sub(acc, t) : add(acc, t);
            } else {
                return acc;
            }
        }
    }

    Poly<Rational> parse_term() {
        Poly<Rational> acc = parse_factor();
        for (;;) {
            if (peek_is('*')) {
                ++pos_;
                acc = mul(acc, parse_factor());
            } else if (starts_factor()) {
                acc = mul(acc, parse_factor());
            } else {
                return acc;
            }
        }
    }

    Poly<Rational> parse_factor() {
        Poly<Rational> base = parse_atom();
        if (!peek_is('^')) return base;
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        Rational e = parse_number();
        if (!e.is_integer() || e.signum() < 0) throw ParseError(at, "exponent must be a nonnegative integer");
        auto ev = e.num().to_int64();
        if (!ev || *ev > kMaxExponent) throw ParseError(at, "exponent overflow (> 10^4)");
        if (base.degree() > 0 && *ev * base.degree() > kMaxExponent)
            throw ParseError(at, "exponent overflow (> 10^4)");
        return poly_pow(base, static_cast<unsigned long long>(*ev));
    }

    Poly<Rational> parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError(pos_, "expected polynomial atom");
        char c = s_[pos_];
        if (c == 'x') {
            ++pos_;
            return monomial(Rational(1), 1);
        }
        if (c == '(') {
            ++pos_;
            Poly<Rational> inner = parse_expr();
            if (!peek_is(')')) throw ParseError(pos_, "expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return constant_poly(parse_number());
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    Rational parse_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(start, "expected number");
        Integer num = Integer::from_string(s_.substr(start, pos_ - start));
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == dstart) throw ParseError(dstart, "expected denominator digits");
            Integer den = Integer::from_string(s_.substr(dstart, pos_ - dstart));
            if (den.is_zero()) throw ParseError(dstart, "zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }
};

}  // namespace detail

inline Poly<Rational> parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

// "x^2+4x" style, descending powers, compact; parse(print(p)) == p
inline std::string print_pretty(const Poly<Rational>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        bool negative = c.signum() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        Rational mag = abs(c);
        if (i == 0) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string();
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string print_pretty(const Poly<Integer>& p) { return print_pretty(rational_poly(p)); }

// canonical text form: comma-separated ascending coefficients, "0,4,1" for x^2+4x
inline std::string print_csv(const Poly<Rational>& p) {
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ",";
        out += p.coeffs()[i].to_string();
    }
    return out;
}

inline std::string print_csv(const Poly<Integer>& p) { return print_csv(rational_poly(p)); }

}  // namespace commpoly

#endif
