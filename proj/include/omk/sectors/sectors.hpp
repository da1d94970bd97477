#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "omk/error.hpp"
#include "omk/exactnum/cyclotomic.hpp"
#include "omk/matgroup/group.hpp"
#include "omk/matgroup/matrix.hpp"

namespace omk {

/**
 * Eigenvalue-exponent multiplicities m_1..m_l of a finite-order matrix,
 * where m_j = dim of the zeta_l^j eigenspace and l is the element order.
 * The eigenvalue 1 lives in the last bucket (j = l).
 *
 * Computed by character averaging,
 *
 *     m_j = (1/l) sum_{k=0}^{l-1} zeta_l^{-jk} tr(g^k),
 *
 * carried out exactly in Q(zeta_M) with M = lcm(entry order, l). A result
 * that is not a nonnegative integer means the arithmetic is broken.
 */
inline std::vector<std::size_t> exponent_multiplicities(const CycMatrix& g) {
    const std::size_t l = element_order(g);
    const std::size_t field = std::lcm(g.order(), l);
    const std::size_t step = field / l;
    const CycMatrix h = g.embed(field);

    std::vector<Cyclotomic> traces;
    traces.reserve(l);
    CycMatrix p = CycMatrix::identity(h.degree(), field);
    for (std::size_t k = 0; k < l; ++k) {
        traces.push_back(p.trace());
        p = p * h;
    }

    std::vector<std::size_t> mult(l);
    const auto sl = static_cast<long long>(l);
    for (std::size_t j = 1; j <= l; ++j) {
        Cyclotomic acc = Cyclotomic::zero(field);
        for (std::size_t k = 0; k < l; ++k) {
            const long long e = -static_cast<long long>((j * k) % l);
            acc += Cyclotomic::zeta(field, ((e % sl + sl) % sl) * static_cast<long long>(step)) * traces[k];
        }
        const auto value = acc.as_rational();
        if (!value)
            detail::fail(ErrorKind::internal, "NonIntegerMultiplicity", "eigenvalue multiplicity is not rational");
        const Rational m = *value / static_cast<long>(l);
        if (!is_integer(m) || m < 0)
            detail::fail(ErrorKind::internal, "NonIntegerMultiplicity",
                         "eigenvalue multiplicity " + m.get_str() + " is not a nonnegative integer");
        mult[j - 1] = m.get_num().get_ui();
    }

    std::size_t total = 0;
    for (auto m : mult) total += m;
    if (total != g.degree())
        detail::fail(ErrorKind::internal, "NonIntegerMultiplicity", "eigenvalue multiplicities do not sum to the degree");
    return mult;
}

// The views below take the multiplicity vector so callers can compute it once.

/// (1/l) sum_j a_j m_j with exponents normalized to 0..l-1 (eigenvalue 1 counts 0).
inline Rational age_from_multiplicities(std::span<const std::size_t> mult) {
    const std::size_t l = mult.size();
    Rational acc = 0;
    for (std::size_t j = 1; j < l; ++j) acc += Rational(static_cast<long>(j * mult[j - 1]));
    return acc / static_cast<long>(l);
}

/// (1/l) sum_j (l - j) m_j with exponents normalized to 1..l.
inline Rational shift_from_multiplicities(std::span<const std::size_t> mult) {
    const std::size_t l = mult.size();
    Rational acc = 0;
    for (std::size_t j = 1; j <= l; ++j) acc += Rational(static_cast<long>((l - j) * mult[j - 1]));
    return acc / static_cast<long>(l);
}

inline std::size_t fixed_dim_from_multiplicities(std::span<const std::size_t> mult) { return mult.back(); }

inline Rational age(const CycMatrix& g) { return age_from_multiplicities(exponent_multiplicities(g)); }

inline Rational shift(const CycMatrix& g) { return shift_from_multiplicities(exponent_multiplicities(g)); }

/// Dimension of the fixed subspace (eigenvalue-1 multiplicity).
inline std::size_t fixed_dim(const CycMatrix& g) { return fixed_dim_from_multiplicities(exponent_multiplicities(g)); }

/// One component [fix(g)/C_g] of the inertia stack of [C^d/G].
struct TwistedSector {
    std::size_t class_index = 0;
    std::size_t representative = 0;  ///< element index in the group
    std::size_t class_size = 0;
    std::size_t order = 1;
    std::vector<std::size_t> exponent_mult;
    Rational age;
    Rational shift;
    std::size_t fixed_dim = 0;
    std::size_t centralizer_order = 0;

    std::size_t degree() const { return std::accumulate(exponent_mult.begin(), exponent_mult.end(), std::size_t{0}); }
};

/**
 * Exponents of a diagonalized representative, one per coordinate, in the
 * 1..l normalization and ascending order: m_1 copies of 1, then m_2 copies
 * of 2, ..., with fixed coordinates (exponent l) last.
 */
inline std::vector<std::size_t> diagonal_exponents(const TwistedSector& sector) {
    std::vector<std::size_t> out;
    for (std::size_t j = 1; j <= sector.exponent_mult.size(); ++j)
        out.insert(out.end(), sector.exponent_mult[j - 1], j);
    return out;
}

inline TwistedSector make_sector(const FiniteMatrixGroup& group, std::size_t class_index) {
    TwistedSector s;
    s.class_index = class_index;
    s.representative = group.class_reps().at(class_index);
    s.class_size = group.class_sizes().at(class_index);
    const CycMatrix& g = group.element(s.representative);
    s.exponent_mult = exponent_multiplicities(g);
    s.order = s.exponent_mult.size();
    s.age = age_from_multiplicities(s.exponent_mult);
    s.shift = shift_from_multiplicities(s.exponent_mult);
    s.fixed_dim = fixed_dim_from_multiplicities(s.exponent_mult);
    s.centralizer_order = centralizer_order(group, g);
    return s;
}

/// One sector per conjugacy class, in class order.
inline std::vector<TwistedSector> inertia_decomposition(const FiniteMatrixGroup& group) {
    std::vector<TwistedSector> out;
    out.reserve(group.class_count());
    for (std::size_t c = 0; c < group.class_count(); ++c) out.push_back(make_sector(group, c));
    return out;
}

}  // namespace omk
