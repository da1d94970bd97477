#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace omk {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using Rational = mpq_class;

inline Rational rational(long numerator, long denominator = 1) {
    Rational q{Integer(numerator), Integer(denominator)};
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

/// Floor of q.
inline Integer floor(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

/// Strict "[-]p[/q]" with q > 0; nullopt for anything else.
inline std::optional<Rational> parse_rational(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    const std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) return std::nullopt;
    if (i < text.size()) {
        if (text[i] != '/') return std::nullopt;
        const std::size_t den_start = ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size()) return std::nullopt;
    }
    Rational q;
    if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

inline std::uint64_t to_u64(const Integer& z) {
    return static_cast<std::uint64_t>(z.get_ui());
}

}  // namespace omk
