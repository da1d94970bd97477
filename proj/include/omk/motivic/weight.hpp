#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "omk/error.hpp"
#include "omk/exactnum/polynomial.hpp"
#include "omk/exactnum/rational.hpp"

namespace omk {

/// Dimension of a motivic weight: a rational, or -infinity (for 0), or +infinity.
struct Dimension {
    enum class Kind { negative_infinity, finite, positive_infinity };

    Kind kind = Kind::finite;
    Rational value = 0;

    static Dimension finite(Rational q) { return {Kind::finite, std::move(q)}; }
    static Dimension negative_infinity() { return {Kind::negative_infinity, 0}; }
    static Dimension positive_infinity() { return {Kind::positive_infinity, 0}; }

    bool is_finite() const { return kind == Kind::finite; }

    std::string to_string() const {
        switch (kind) {
            case Kind::negative_infinity: return "-infinity";
            case Kind::positive_infinity: return "infinity";
            case Kind::finite: break;
        }
        return value.get_str();
    }

    friend bool operator==(const Dimension& a, const Dimension& b) {
        return a.kind == b.kind && (a.kind != Kind::finite || a.value == b.value);
    }

    friend bool operator<(const Dimension& a, const Dimension& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.kind == Kind::finite && a.value < b.value;
    }
    friend bool operator<=(const Dimension& a, const Dimension& b) { return !(b < a); }
};

/**
 * Exact value in Q(t) with t = L^(1/r), plus a formal infinity.
 *
 * Finite values are kept canonical: num/den coprime, den monic, and r as
 * small as possible (no common divisor of r and every exponent present).
 * Canonical forms are unique, so equality is structural. Infinity absorbs
 * addition and multiplication by nonzero values; 0 * infinity throws.
 */
class MotivicWeight {
public:
    MotivicWeight() : MotivicWeight(Polynomial{}, Polynomial::constant(1), 1) {}

    static MotivicWeight zero() { return {}; }
    static MotivicWeight one() { return constant(1); }
    static MotivicWeight constant(const Rational& c) {
        return MotivicWeight(Polynomial::constant(c), Polynomial::constant(1), 1);
    }

    static MotivicWeight infinity() {
        MotivicWeight w;
        w.infinite_ = true;
        return w;
    }

    /// L^q for rational q; the monomial t^(q r) with r the denominator of q.
    static MotivicWeight L_power(const Rational& q) {
        const std::size_t r = q.get_den().get_ui();
        const Integer& e = q.get_num();
        if (e >= 0) return MotivicWeight(Polynomial::monomial(1, e.get_ui()), Polynomial::constant(1), r);
        const Integer neg = -e;
        return MotivicWeight(Polynomial::constant(1), Polynomial::monomial(1, neg.get_ui()), r);
    }

    static MotivicWeight L() { return L_power(1); }

    /// num(t)/den(t) with t = L^(1/r); reduced on construction.
    static MotivicWeight fraction(Polynomial num, Polynomial den, std::size_t r) {
        return MotivicWeight(std::move(num), std::move(den), r);
    }

    /// A polynomial in L itself (r = 1).
    static MotivicWeight polynomial_in_L(Polynomial p) { return fraction(std::move(p), Polynomial::constant(1), 1); }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    bool is_zero() const { return !infinite_ && num_.is_zero(); }
    bool is_polynomial() const { return !infinite_ && den_.is_one(); }

    std::size_t root() const { return root_; }
    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    friend MotivicWeight operator+(const MotivicWeight& a, const MotivicWeight& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        const std::size_t r = std::lcm(a.root_, b.root_);
        const auto [an, ad] = a.rescaled(r);
        const auto [bn, bd] = b.rescaled(r);
        if (ad == bd) return MotivicWeight(an + bn, ad, r);
        return MotivicWeight(an * bd + bn * ad, ad * bd, r);
    }

    friend MotivicWeight operator*(const MotivicWeight& a, const MotivicWeight& b) {
        if (a.infinite_ || b.infinite_) {
            if (a.is_zero() || b.is_zero())
                detail::fail(ErrorKind::input, "IndeterminateZeroTimesInfinity", "0 * infinity is undefined");
            return infinity();
        }
        const std::size_t r = std::lcm(a.root_, b.root_);
        const auto [an, ad] = a.rescaled(r);
        const auto [bn, bd] = b.rescaled(r);
        return MotivicWeight(an * bn, ad * bd, r);
    }

    // Subtraction and division exist only in the rational-function image;
    // neither is defined when infinity is involved.
    MotivicWeight operator-() const {
        require_finite("negation");
        return MotivicWeight(-num_, den_, root_);
    }

    friend MotivicWeight operator-(const MotivicWeight& a, const MotivicWeight& b) {
        b.require_finite("subtraction");
        return a + (-b);
    }

    friend MotivicWeight operator/(const MotivicWeight& a, const MotivicWeight& b) {
        a.require_finite("division");
        b.require_finite("division");
        if (b.is_zero()) detail::fail(ErrorKind::input, "DivisionByZero", "division by the zero weight");
        const std::size_t r = std::lcm(a.root_, b.root_);
        const auto [an, ad] = a.rescaled(r);
        const auto [bn, bd] = b.rescaled(r);
        return MotivicWeight(an * bd, ad * bn, r);
    }

    MotivicWeight& operator+=(const MotivicWeight& b) { return *this = *this + b; }
    MotivicWeight& operator*=(const MotivicWeight& b) { return *this = *this * b; }

    MotivicWeight pow(std::size_t k) const {
        MotivicWeight out = one();
        for (std::size_t i = 0; i < k; ++i) out *= *this;
        return out;
    }

    /// (deg num - deg den)/r; -infinity for 0, +infinity for infinity.
    Dimension dim() const {
        if (infinite_) return Dimension::positive_infinity();
        if (num_.is_zero()) return Dimension::negative_infinity();
        return Dimension::finite(Rational(num_.degree() - den_.degree()) / static_cast<long>(root_));
    }

    /// Substitute L = value. t = L^(1/r) is taken as the nonnegative rational
    /// r-th root, which must exist.
    Rational evaluate(const Rational& L_value) const {
        require_finite("evaluation");
        Rational t = L_value;
        if (root_ > 1) {
            if (L_value < 0)
                detail::fail(ErrorKind::input, "NotAPerfectPower",
                             "negative value has no positive " + std::to_string(root_) + "-th root");
            Integer num_root, den_root;
            const bool exact_num =
                mpz_root(num_root.get_mpz_t(), L_value.get_num_mpz_t(), static_cast<unsigned long>(root_)) != 0;
            const bool exact_den =
                mpz_root(den_root.get_mpz_t(), L_value.get_den_mpz_t(), static_cast<unsigned long>(root_)) != 0;
            if (!exact_num || !exact_den)
                detail::fail(ErrorKind::input, "NotAPerfectPower",
                             L_value.get_str() + " is not a perfect " + std::to_string(root_) + "-th power");
            t = Rational(num_root, den_root);
            t.canonicalize();
        }
        const Rational d = den_.evaluate(t);
        if (d == 0) detail::fail(ErrorKind::input, "PoleAtPoint", "weight has a pole at L = " + L_value.get_str());
        return num_.evaluate(t) / d;
    }

    /// Exponent (in L) -> coefficient, for weights that are polynomials in L^(1/r).
    std::map<Rational, Rational> poly_coeffs() const {
        require_finite("coefficient extraction");
        if (!den_.is_one()) detail::fail(ErrorKind::input, "NotAPolynomial", "weight has a nontrivial denominator");
        std::map<Rational, Rational> out;
        const auto& c = num_.coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            out.emplace(rational(static_cast<long>(i), static_cast<long>(root_)), c[i]);
        }
        return out;
    }

    /// "P/Q" in L with fractional exponents as L^(p/q), or "infinity".
    std::string to_string() const {
        if (infinite_) return "infinity";
        const std::string top = format_polynomial(num_);
        if (den_.is_one()) return top;
        const auto wrap = [](const Polynomial& p, std::string s) {
            return term_count(p) > 1 ? "(" + s + ")" : s;
        };
        return wrap(num_, top) + "/" + wrap(den_, format_polynomial(den_));
    }

    friend bool operator==(const MotivicWeight& a, const MotivicWeight& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.root_ == b.root_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    MotivicWeight(Polynomial num, Polynomial den, std::size_t r) : root_(r), num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    void canonicalize() {
        if (root_ == 0) detail::fail(ErrorKind::internal, "InvalidRoot", "root index must be positive");
        if (den_.is_zero()) detail::fail(ErrorKind::input, "DivisionByZero", "zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial::constant(1);
            root_ = 1;
            return;
        }
        const Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const Rational lead = den_.leading();
        if (lead != 1) {
            num_ = num_.scaled(Rational(1) / lead);
            den_ = den_.scaled(Rational(1) / lead);
        }
        std::size_t k = root_;
        for (const Polynomial* p : {&num_, &den_}) {
            const auto& c = p->coefficients();
            for (std::size_t i = 0; i < c.size() && k > 1; ++i)
                if (c[i] != 0) k = std::gcd(k, i);
        }
        if (k > 1) {
            num_ = num_.deflate(k);
            den_ = den_.deflate(k);
            root_ /= k;
        }
    }

    std::pair<Polynomial, Polynomial> rescaled(std::size_t r) const {
        const std::size_t k = r / root_;
        return {num_.inflate(k), den_.inflate(k)};
    }

    void require_finite(const char* what) const {
        if (infinite_)
            detail::fail(ErrorKind::input, "IndeterminateInfinity", std::string(what) + " is undefined for infinity");
    }

    static std::size_t term_count(const Polynomial& p) {
        std::size_t n = 0;
        for (const auto& c : p.coefficients())
            if (c != 0) ++n;
        return n;
    }

    std::string format_polynomial(const Polynomial& p) const {
        if (p.is_zero()) return "0";
        std::string out;
        for (int i = p.degree(); i >= 0; --i) {
            const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            const bool negative = c < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const Rational e = rational(i, static_cast<long>(root_));
            if (e == 0) {
                out += mag.get_str();
                continue;
            }
            if (mag != 1) out += mag.get_str() + "*";
            out += "L";
            if (e == 1) continue;
            out += is_integer(e) ? "^" + e.get_str() : "^(" + e.get_str() + ")";
        }
        return out;
    }

    bool infinite_ = false;
    std::size_t root_ = 1;
    Polynomial num_;
    Polynomial den_;
};

/**
 * Closed form of sum_{s>=1} L^{-(e+1)s} (L - 1) = (L - 1)/(L^{e+1} - 1),
 * the contribution of one exceptional component with discrepancy e.
 * Diverges (infinity) for e <= -1.
 */
inline MotivicWeight stringy_factor(const Rational& e) {
    if (e <= -1) return MotivicWeight::infinity();
    const Rational q = e + 1;
    const std::size_t r = q.get_den().get_ui();
    const std::size_t p = q.get_num().get_ui();
    return MotivicWeight::fraction(Polynomial::x_power_minus(r, 1), Polynomial::x_power_minus(p, 1), r);
}

}  // namespace omk
