#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "omk/error.hpp"
#include "omk/exactnum/cyclotomic.hpp"
#include "omk/exactnum/rational.hpp"

namespace omk {

namespace detail {

/*
 * Recursive-descent parser for
 *
 *   expr     := [sign] term (('+' | '-') term)*
 *   term     := [rational '*'] atom
 *   atom     := rational | 'z' ['^' nonneg-int] | '(' expr ')'
 *   rational := int ['/' positive-int]
 *
 * The optional leading sign lets negative entries like "-1" or "-z" be
 * written directly; it is the only place a sign may appear unbracketed.
 */
class CyclotomicParser {
public:
    CyclotomicParser(std::string_view text, std::size_t order) : text_(text), order_(order) {}

    Cyclotomic parse() {
        Cyclotomic value = expr();
        skip_ws();
        if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    Cyclotomic expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        Cyclotomic acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Cyclotomic rhs = term();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Cyclotomic term() {
        skip_ws();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const Rational coeff = rational();
            skip_ws();
            if (peek() != '*') return Cyclotomic::rational(order_, coeff);
            ++pos_;
            return coeff * atom();
        }
        return atom();
    }

    Cyclotomic atom() {
        skip_ws();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return Cyclotomic::rational(order_, rational());
        if (c == 'z') {
            ++pos_;
            skip_ws();
            if (peek() != '^') return Cyclotomic::zeta(order_, 1);
            ++pos_;
            skip_ws();
            const Integer e = integer("exponent");
            const Integer reduced = e % Integer(static_cast<unsigned long>(order_));
            return Cyclotomic::zeta(order_, static_cast<long long>(reduced.get_ui()));
        }
        if (c == '(') {
            ++pos_;
            Cyclotomic inner = expr();
            skip_ws();
            if (peek() != ')') error("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '\0') error("unexpected end of input");
        error("unexpected '" + std::string(1, c) + "'");
    }

    Rational rational() {
        Integer num = integer("integer");
        skip_ws();
        if (peek() != '/') return Rational(num);
        const std::size_t slash = pos_;
        ++pos_;
        skip_ws();
        Integer den = integer("denominator");
        if (den == 0) {
            pos_ = slash;
            error("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    Integer integer(const char* what) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) error(std::string("expected ") + what);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void error(const std::string& message) const { throw ParseError(pos_, message); }

    std::string_view text_;
    std::size_t order_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse an expression in z = zeta_order into canonical form.
inline Cyclotomic parse_cyclotomic(std::string_view text, std::size_t order) {
    if (order == 0) detail::fail(ErrorKind::input, "InvalidOrder", "cyclotomic order must be positive");
    return detail::CyclotomicParser(text, order).parse();
}

}  // namespace omk
