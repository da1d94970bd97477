#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "omk/error.hpp"
#include "omk/exactnum/polynomial.hpp"
#include "omk/exactnum/rational.hpp"

namespace omk {

/// Carrier type for Phi_n and for raw (unreduced) cyclotomic expressions.
using CycPoly = Polynomial;

/**
 * The n-th cyclotomic polynomial, by exact division of x^n - 1 by the
 * product of Phi_d over the proper divisors d of n. Results are memoized
 * process-wide.
 */
inline CycPoly cyclotomic_polynomial(std::size_t n) {
    if (n == 0) detail::fail(ErrorKind::input, "InvalidOrder", "cyclotomic order must be positive");

    static std::mutex mutex;
    static std::map<std::size_t, CycPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }

    CycPoly divisor = CycPoly::constant(1);
    for (std::size_t d = 1; d < n; ++d)
        if (n % d == 0) divisor = divisor * cyclotomic_polynomial(d);
    auto [quotient, remainder] = divmod(CycPoly::x_power_minus(n, 1), divisor);
    if (!remainder.is_zero())
        detail::fail(ErrorKind::internal, "CyclotomicDivision", "x^n - 1 not divisible by proper cyclotomic factors");

    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(quotient)).first->second;
}

namespace detail {

/// Reduction data for Q(zeta_n): x^k mod Phi_n for 0 <= k < n.
struct CyclotomicField {
    std::size_t order;
    std::size_t phi;
    CycPoly modulus;
    std::vector<std::vector<Rational>> power_rows;
};

inline std::shared_ptr<const CyclotomicField> cyclotomic_field(std::size_t n) {
    thread_local std::shared_ptr<const CyclotomicField> last;
    if (last && last->order == n) return last;

    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const CyclotomicField>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return last = it->second;
    }

    auto field = std::make_shared<CyclotomicField>();
    field->order = n;
    field->modulus = cyclotomic_polynomial(n);
    field->phi = static_cast<std::size_t>(field->modulus.degree());
    field->power_rows.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const CycPoly r = CycPoly::monomial(1, k) % field->modulus;
        std::vector<Rational> row(field->phi);
        for (std::size_t i = 0; i < r.coefficients().size(); ++i) row[i] = r.coefficients()[i];
        field->power_rows.push_back(std::move(row));
    }

    std::lock_guard lock(mutex);
    return last = cache.emplace(n, std::move(field)).first->second;
}

}  // namespace detail

/**
 * An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1).
 *
 * The coefficient vector always has length phi(n) and is the unique
 * representative modulo Phi_n, so structural equality is field equality.
 * Arithmetic between values of different orders throws OrderMismatch;
 * use embed() to move to a common order first.
 */
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(zero(1)) {}

    static Cyclotomic zero(std::size_t n) {
        auto f = detail::cyclotomic_field(n);
        return Cyclotomic(n, std::vector<Rational>(f->phi));
    }

    static Cyclotomic rational(std::size_t n, const Rational& q) {
        Cyclotomic out = zero(n);
        out.coeffs_[0] = q;
        return out;
    }

    static Cyclotomic one(std::size_t n) { return rational(n, 1); }

    /// zeta_n^k for any integer k.
    static Cyclotomic zeta(std::size_t n, long long k = 1) {
        auto f = detail::cyclotomic_field(n);
        const auto sn = static_cast<long long>(n);
        const auto e = static_cast<std::size_t>(((k % sn) + sn) % sn);
        return Cyclotomic(n, f->power_rows[e]);
    }

    /// Reduce a raw polynomial in zeta_n: first mod x^n - 1, then mod Phi_n.
    static Cyclotomic make(std::size_t n, const CycPoly& raw) {
        auto f = detail::cyclotomic_field(n);
        std::vector<Rational> folded(n);
        const auto& c = raw.coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) folded[i % n] += c[i];
        return from_folded(*f, folded);
    }

    std::size_t order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    /// The value as a rational number, if it lies in Q.
    std::optional<Rational> as_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return std::nullopt;
        return coeffs_[0];
    }

    bool is_one() const {
        auto q = as_rational();
        return q && *q == 1;
    }

    CycPoly as_polynomial() const { return CycPoly(coeffs_); }

    Cyclotomic operator-() const {
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        check_same_order(a, b);
        Cyclotomic out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
        return out;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        check_same_order(a, b);
        Cyclotomic out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
        return out;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        check_same_order(a, b);
        auto f = detail::cyclotomic_field(a.order_);
        std::vector<Rational> folded(a.order_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                folded[(i + j) % a.order_] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_folded(*f, folded);
    }

    friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
        Cyclotomic out = a;
        for (auto& c : out.coeffs_) c *= s;
        return out;
    }

    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    /// Multiplicative inverse through the extended gcd with Phi_n.
    Cyclotomic inverse() const {
        if (is_zero()) detail::fail(ErrorKind::input, "DivisionByZero", "inverse of zero cyclotomic");
        auto f = detail::cyclotomic_field(order_);
        const auto eg = extended_gcd(as_polynomial(), f->modulus);
        if (eg.g.degree() != 0)
            detail::fail(ErrorKind::internal, "NotInvertible", "gcd with cyclotomic modulus is not constant");
        return make(order_, eg.s);
    }

    Cyclotomic pow(long long k) const {
        if (k < 0) return inverse().pow(-k);
        Cyclotomic result = one(order_), base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            base = base * base;
            k >>= 1;
        }
        return result;
    }

    /// Image under zeta_n -> zeta_m^(m/n).
    Cyclotomic embed(std::size_t target_order) const {
        if (target_order == 0 || target_order % order_ != 0)
            detail::fail(ErrorKind::input, "NotDivisible",
                         "cannot embed order " + std::to_string(order_) + " into order " + std::to_string(target_order));
        if (target_order == order_) return *this;
        auto f = detail::cyclotomic_field(target_order);
        const std::size_t step = target_order / order_;
        std::vector<Rational> folded(target_order);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) folded[i * step] = coeffs_[i];
        return from_folded(*f, folded);
    }

    /// Double-precision value at zeta_n = exp(2 pi i / n). Test oracles only.
    std::complex<double> to_complex() const {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order_);
            acc += coeffs_[k].get_d() * std::polar(1.0, angle);
        }
        return acc;
    }

    /// Canonical text in the expression grammar, highest power first.
    std::string to_string() const { return as_polynomial().to_string("z"); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

private:
    Cyclotomic(std::size_t n, std::vector<Rational> coeffs) : order_(n), coeffs_(std::move(coeffs)) {}

    static Cyclotomic from_folded(const detail::CyclotomicField& f, const std::vector<Rational>& folded) {
        std::vector<Rational> out(f.phi);
        for (std::size_t k = 0; k < folded.size(); ++k) {
            if (folded[k] == 0) continue;
            if (k < f.phi) {
                out[k] += folded[k];
                continue;
            }
            const auto& row = f.power_rows[k];
            for (std::size_t i = 0; i < f.phi; ++i)
                if (row[i] != 0) out[i] += folded[k] * row[i];
        }
        return Cyclotomic(f.order, std::move(out));
    }

    static void check_same_order(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ != b.order_)
            detail::fail(ErrorKind::input, "OrderMismatch",
                         "cyclotomic orders differ: " + std::to_string(a.order_) + " vs " + std::to_string(b.order_));
    }

    std::size_t order_;
    std::vector<Rational> coeffs_;
};

inline std::size_t lcm_order(std::size_t a, std::size_t b) { return std::lcm(a, b); }

}  // namespace omk
