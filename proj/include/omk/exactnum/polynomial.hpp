#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omk/error.hpp"
#include "omk/exactnum/rational.hpp"

namespace omk {

/**
 * Dense univariate polynomial over Q, coefficients in ascending degree.
 *
 * Trailing zeros are always stripped, so the zero polynomial is the empty
 * coefficient sequence and has degree -1.
 */
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& value) { return Polynomial({value}); }

    static Polynomial monomial(const Rational& coeff, std::size_t exponent) {
        std::vector<Rational> c(exponent + 1);
        c[exponent] = coeff;
        return Polynomial(std::move(c));
    }

    /// x - 1, x + 1 etc. are common enough to deserve a shortcut.
    static Polynomial x_power_minus(std::size_t exponent, const Rational& constant_term) {
        std::vector<Rational> c(exponent + 1);
        c[exponent] = 1;
        c[0] -= constant_term;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    const Rational& leading() const {
        if (c_.empty()) detail::fail(ErrorKind::internal, "ZeroPolynomial", "leading coefficient of zero polynomial");
        return c_.back();
    }

    Polynomial monic() const {
        if (c_.empty()) return *this;
        return scaled(Rational(1) / c_.back());
    }

    Polynomial scaled(const Rational& s) const {
        if (s == 0) return {};
        std::vector<Rational> out(c_);
        for (auto& x : out) x *= s;
        return Polynomial(std::move(out));
    }

    /// p(x) -> p(x^k)
    Polynomial inflate(std::size_t k) const {
        if (c_.empty() || k == 1) return *this;
        std::vector<Rational> out((c_.size() - 1) * k + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
        return Polynomial(std::move(out));
    }

    /// p(x) -> p(x^(1/k)); requires every nonzero exponent to be a multiple of k.
    Polynomial deflate(std::size_t k) const {
        if (c_.empty() || k == 1) return *this;
        std::vector<Rational> out((c_.size() - 1) / k + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (i % k != 0) detail::fail(ErrorKind::internal, "BadDeflate", "exponent not divisible");
            out[i / k] = c_[i];
        }
        return Polynomial(std::move(out));
    }

    /// x^k * p(x)
    Polynomial shifted(std::size_t k) const {
        if (c_.empty()) return *this;
        std::vector<Rational> out(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
        return Polynomial(std::move(out));
    }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial operator-() const { return scaled(Rational(-1)); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) detail::fail(ErrorKind::internal, "DivisionByZero", "polynomial division by zero");
        std::vector<Rational> rem(a.c_);
        const int db = b.degree();
        if (a.degree() < db) return {Polynomial{}, a};
        std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
        const Rational inv_lead = Rational(1) / b.c_.back();
        for (int i = a.degree(); i >= db; --i) {
            const Rational f = rem[static_cast<std::size_t>(i)] * inv_lead;
            if (f == 0) continue;
            quo[static_cast<std::size_t>(i - db)] = f;
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    /// Monic gcd; gcd(0, 0) = 0.
    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    struct ExtendedGcd;

    std::string to_string(std::string_view var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// s*a + t*b = g with g monic.
struct Polynomial::ExtendedGcd {
    Polynomial g, s, t;
};

inline Polynomial::ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(1), s1;
    Polynomial t0, t1 = Polynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational norm = Rational(1) / r0.leading();
    return {r0.scaled(norm), s0.scaled(norm), t0.scaled(norm)};
}

inline std::string Polynomial::to_string(std::string_view var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace omk
