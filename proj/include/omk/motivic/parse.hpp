#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "omk/error.hpp"
#include "omk/motivic/weight.hpp"

namespace omk {

namespace detail {

/*
 * Reads the serialized form of a weight back, and a little more:
 *
 *   weight   := 'infinity' | sum
 *   sum      := [sign] product (('+' | '-') product)*
 *   product  := factor (('*' | '/') factor)*
 *   factor   := int | 'L' ['^' exponent] | '(' sum ')' ['^' nonneg-int]
 *   exponent := ['-'] int | '(' ['-'] int ['/' positive-int] ')'
 */
class WeightParser {
public:
    explicit WeightParser(std::string_view text) : text_(text) {}

    MotivicWeight parse() {
        skip_ws();
        if (text_.substr(pos_).starts_with("infinity")) {
            pos_ += 8;
            skip_ws();
            if (pos_ != text_.size()) error("unexpected text after 'infinity'");
            return MotivicWeight::infinity();
        }
        MotivicWeight w = sum();
        skip_ws();
        if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    MotivicWeight sum() {
        skip_ws();
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        MotivicWeight acc = product();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            MotivicWeight rhs = product();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    MotivicWeight product() {
        MotivicWeight acc = factor();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '*' && c != '/') break;
            const std::size_t at = pos_++;
            MotivicWeight rhs = factor();
            if (c == '*') {
                acc = acc * rhs;
            } else {
                if (rhs.is_zero()) {
                    pos_ = at;
                    error("division by zero");
                }
                acc = acc / rhs;
            }
        }
        return acc;
    }

    MotivicWeight factor() {
        skip_ws();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return MotivicWeight::constant(Rational(integer()));
        if (c == 'L') {
            ++pos_;
            skip_ws();
            if (peek() != '^') return MotivicWeight::L();
            ++pos_;
            return MotivicWeight::L_power(exponent());
        }
        if (c == '(') {
            ++pos_;
            MotivicWeight inner = sum();
            skip_ws();
            if (peek() != ')') error("expected ')'");
            ++pos_;
            skip_ws();
            if (peek() != '^') return inner;
            ++pos_;
            skip_ws();
            return inner.pow(integer().get_ui());
        }
        if (c == '\0') error("unexpected end of input");
        error("unexpected '" + std::string(1, c) + "'");
    }

    Rational exponent() {
        skip_ws();
        const bool bracketed = peek() == '(';
        if (bracketed) ++pos_;
        skip_ws();
        const bool negative = peek() == '-';
        if (negative) ++pos_;
        skip_ws();
        Rational e(integer());
        if (bracketed) {
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                const Integer den = integer();
                if (den == 0) {
                    pos_ = at;
                    error("zero denominator in exponent");
                }
                e /= Rational(den);
            }
            skip_ws();
            if (peek() != ')') error("expected ')'");
            ++pos_;
        }
        return negative ? Rational(-e) : e;
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) error("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void error(const std::string& message) const { throw ParseError(pos_, message); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a weight such as "L^2 + L", "(L - 1)/(L^(1/2) - 1)" or "infinity".
inline MotivicWeight parse_weight(std::string_view text) { return detail::WeightParser(text).parse(); }

}  // namespace omk
