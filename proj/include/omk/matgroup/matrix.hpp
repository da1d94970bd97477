#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omk/error.hpp"
#include "omk/exactnum/cyclotomic.hpp"

namespace omk {

/**
 * Square matrix over Q(zeta_n). All entries share the matrix's cyclotomic
 * order, so key() (row-major canonical entries) is an injective
 * serialization usable for hashing and ordering.
 */
class CycMatrix {
public:
    CycMatrix(std::size_t degree, std::vector<Cyclotomic> entries)
        : degree_(degree), entries_(std::move(entries)) {
        if (degree_ == 0) detail::fail(ErrorKind::input, "EmptyMatrix", "matrix degree must be positive");
        if (entries_.size() != degree_ * degree_)
            detail::fail(ErrorKind::input, "NotSquare",
                         "expected " + std::to_string(degree_ * degree_) + " entries, got " +
                             std::to_string(entries_.size()));
        order_ = entries_.front().order();
        for (const auto& e : entries_)
            if (e.order() != order_)
                detail::fail(ErrorKind::input, "OrderMismatch", "matrix entries have different cyclotomic orders");
    }

    static CycMatrix identity(std::size_t degree, std::size_t order) {
        std::vector<Cyclotomic> e(degree * degree, Cyclotomic::zero(order));
        for (std::size_t i = 0; i < degree; ++i) e[i * degree + i] = Cyclotomic::one(order);
        return CycMatrix(degree, std::move(e));
    }

    static CycMatrix diagonal(const std::vector<Cyclotomic>& diag) {
        if (diag.empty()) detail::fail(ErrorKind::input, "EmptyMatrix", "matrix degree must be positive");
        const std::size_t d = diag.size();
        std::vector<Cyclotomic> e(d * d, Cyclotomic::zero(diag.front().order()));
        for (std::size_t i = 0; i < d; ++i) e[i * d + i] = diag[i];
        return CycMatrix(d, std::move(e));
    }

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return order_; }
    const std::vector<Cyclotomic>& entries() const { return entries_; }
    const Cyclotomic& operator()(std::size_t row, std::size_t col) const { return entries_[row * degree_ + col]; }

    CycMatrix embed(std::size_t target_order) const {
        if (target_order == order_) return *this;
        std::vector<Cyclotomic> e;
        e.reserve(entries_.size());
        for (const auto& x : entries_) e.push_back(x.embed(target_order));
        return CycMatrix(degree_, std::move(e));
    }

    Cyclotomic trace() const {
        Cyclotomic t = Cyclotomic::zero(order_);
        for (std::size_t i = 0; i < degree_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < degree_; ++i)
            for (std::size_t j = 0; j < degree_; ++j) {
                const auto& e = (*this)(i, j);
                if (i == j ? !e.is_one() : !e.is_zero()) return false;
            }
        return true;
    }

    /// Canonical serialization: "n|c,c;c,c|..." with rows separated by '|'.
    std::string key() const {
        std::string out = std::to_string(order_);
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            out += i % degree_ == 0 ? '|' : ';';
            bool first = true;
            for (const auto& c : entries_[i].coefficients()) {
                if (!first) out += ',';
                first = false;
                out += c.get_str();
            }
        }
        return out;
    }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        if (a.degree_ != b.degree_) detail::fail(ErrorKind::input, "DegreeMismatch", "matrix degrees differ");
        const std::size_t d = a.degree_;
        std::vector<Cyclotomic> e(d * d, Cyclotomic::zero(a.order_));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                const auto& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < d; ++j) {
                    const auto& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    e[i * d + j] += aik * bkj;
                }
            }
        return CycMatrix(d, std::move(e));
    }

    friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
        return a.degree_ == b.degree_ && a.entries_ == b.entries_;
    }

private:
    std::size_t degree_;
    std::size_t order_ = 1;
    std::vector<Cyclotomic> entries_;
};

/// Exact determinant by Gaussian elimination over Q(zeta_n).
inline Cyclotomic determinant(const CycMatrix& g) {
    const std::size_t d = g.degree();
    std::vector<Cyclotomic> m = g.entries();
    Cyclotomic det = Cyclotomic::one(g.order());
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && m[pivot * d + col].is_zero()) ++pivot;
        if (pivot == d) return Cyclotomic::zero(g.order());
        if (pivot != col) {
            for (std::size_t j = 0; j < d; ++j) std::swap(m[pivot * d + j], m[col * d + j]);
            det = -det;
        }
        const Cyclotomic p = m[col * d + col];
        det *= p;
        const Cyclotomic inv = p.inverse();
        for (std::size_t r = col + 1; r < d; ++r) {
            if (m[r * d + col].is_zero()) continue;
            const Cyclotomic f = m[r * d + col] * inv;
            for (std::size_t j = col; j < d; ++j) m[r * d + j] = m[r * d + j] - f * m[col * d + j];
        }
    }
    return det;
}

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<CycMatrix> inverse(const CycMatrix& g) {
    const std::size_t d = g.degree();
    const std::size_t n = g.order();
    std::vector<Cyclotomic> m = g.entries();
    std::vector<Cyclotomic> inv = CycMatrix::identity(d, n).entries();
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && m[pivot * d + col].is_zero()) ++pivot;
        if (pivot == d) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < d; ++j) {
                std::swap(m[pivot * d + j], m[col * d + j]);
                std::swap(inv[pivot * d + j], inv[col * d + j]);
            }
        const Cyclotomic p_inv = m[col * d + col].inverse();
        for (std::size_t j = 0; j < d; ++j) {
            m[col * d + j] = m[col * d + j] * p_inv;
            inv[col * d + j] = inv[col * d + j] * p_inv;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || m[r * d + col].is_zero()) continue;
            const Cyclotomic f = m[r * d + col];
            for (std::size_t j = 0; j < d; ++j) {
                m[r * d + j] = m[r * d + j] - f * m[col * d + j];
                inv[r * d + j] = inv[r * d + j] - f * inv[col * d + j];
            }
        }
    }
    return CycMatrix(d, std::move(inv));
}

inline CycMatrix power(const CycMatrix& g, unsigned long long k) {
    CycMatrix result = CycMatrix::identity(g.degree(), g.order());
    CycMatrix base = g;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

inline constexpr std::size_t default_order_bound = 1'000'000;

/// Least l >= 1 with g^l = 1, by iterated multiplication.
inline std::size_t element_order(const CycMatrix& g, std::size_t bound = default_order_bound) {
    CycMatrix p = g;
    for (std::size_t l = 1; l <= bound; ++l) {
        if (p.is_identity()) return l;
        p = p * g;
    }
    detail::fail(ErrorKind::resource, "OrderOverflow",
                 "element order exceeds " + std::to_string(bound) + "; input is probably not of finite order");
}

}  // namespace omk
