#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omk/error.hpp"
#include "omk/matgroup/group.hpp"
#include "omk/matgroup/reflections.hpp"
#include "omk/motivic/weight.hpp"
#include "omk/sectors/sectors.hpp"

namespace omk {

// ---------------------------------------------------------------------------
// Quotients [C^d/G]
// ---------------------------------------------------------------------------

/**
 * sum over conjugacy classes of L^{d - age(g)}.
 *
 * The same sum is formed a second time as sum of L^{fixed_dim(g) + shift(g)}
 * (the sector-by-sector form); disagreement is an internal error.
 */
inline MotivicWeight orbifold_weight(const std::vector<TwistedSector>& sectors, std::size_t degree) {
    MotivicWeight by_age, by_shift;
    for (const auto& s : sectors) {
        by_age += MotivicWeight::L_power(Rational(static_cast<long>(degree)) - s.age);
        by_shift += MotivicWeight::L_power(Rational(static_cast<long>(s.fixed_dim)) + s.shift);
    }
    if (!(by_age == by_shift))
        detail::fail(ErrorKind::internal, "RouteMismatch",
                     "age route " + by_age.to_string() + " differs from shift route " + by_shift.to_string());
    return by_age;
}

inline MotivicWeight orbifold_weight(const FiniteMatrixGroup& group) {
    return orbifold_weight(inertia_decomposition(group), group.degree());
}

/// n_i = #{classes with age = i/2}, keyed by i = 2 age.
struct McKayTable {
    std::map<Rational, std::size_t> counts;
    bool special_linear = false;  ///< false: counts are still defined, the cohomology reading is not

    std::size_t total() const {
        std::size_t n = 0;
        for (const auto& [i, c] : counts) n += c;
        return n;
    }
};

inline McKayTable mckay_betti(const std::vector<TwistedSector>& sectors, bool special_linear) {
    McKayTable t;
    t.special_linear = special_linear;
    for (const auto& s : sectors) ++t.counts[Rational(2 * s.age)];
    return t;
}

inline McKayTable mckay_betti(const FiniteMatrixGroup& group) {
    return mckay_betti(inertia_decomposition(group), is_subgroup_of_SL(group));
}

struct DiscrepancyResult {
    Rational value;
    std::size_t minimizing_class = 0;
    Rational minimal_age;
};

/**
 * min{age(g) : g != 1} - 1 for a reflection-free group.
 *
 * Throws TrivialGroup (no non-identity element) or HasReflections (message
 * lists the offending classes); both are hypothesis errors.
 */
inline DiscrepancyResult discrepancy(const FiniteMatrixGroup& group, const std::vector<TwistedSector>& sectors) {
    if (group.size() == 1)
        detail::fail(ErrorKind::hypothesis, "TrivialGroup", "the trivial group has no non-identity element; C^d is smooth");
    const auto reflections = find_reflections(group);
    if (!reflections.empty()) {
        std::set<std::size_t> classes;
        for (auto r : reflections) classes.insert(group.class_of(r));
        std::string list;
        for (auto c : classes) list += (list.empty() ? "" : ", ") + std::to_string(c);
        detail::fail(ErrorKind::hypothesis, "HasReflections", "group contains reflections (classes " + list + ")");
    }
    std::optional<DiscrepancyResult> best;
    for (const auto& s : sectors) {
        if (s.representative == group.identity_index()) continue;
        if (!best || s.age < best->minimal_age) best = DiscrepancyResult{s.age - 1, s.class_index, s.age};
    }
    return *best;
}

inline DiscrepancyResult discrepancy(const FiniteMatrixGroup& group) {
    return discrepancy(group, inertia_decomposition(group));
}

// ---------------------------------------------------------------------------
// Normal-crossing pairs
// ---------------------------------------------------------------------------

struct NCComponent {
    std::string id;
    Rational coefficient;  ///< e_i for stringy_nc (K_{Y/X} sense); u_i for klt_nc
    bool meets_W = true;
};

struct NCStratum {
    std::vector<std::string> subset;  ///< component ids J; E_J^o is the open stratum
    MotivicWeight open_class;
};

/// Strata data of a pair (Y, sum e_i E_i) with normal-crossing support.
struct NCPairData {
    MotivicWeight ambient_class;
    std::vector<NCComponent> components;
    std::vector<NCStratum> strata;
};

/// Checks ids, distinct strata, a unique empty stratum, and that the strata classes sum to the ambient class.
inline void validate(const NCPairData& data) {
    std::set<std::string> ids;
    for (const auto& c : data.components)
        if (!ids.insert(c.id).second)
            detail::fail(ErrorKind::input, "DuplicateComponent", "component id '" + c.id + "' appears twice");

    std::set<std::vector<std::string>> seen;
    MotivicWeight total;
    for (const auto& s : data.strata) {
        std::vector<std::string> key = s.subset;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
            detail::fail(ErrorKind::input, "InvalidStratum", "stratum lists a component twice");
        for (const auto& id : key)
            if (!ids.contains(id))
                detail::fail(ErrorKind::input, "UnknownComponent", "stratum references unknown component '" + id + "'");
        if (!seen.insert(key).second) detail::fail(ErrorKind::input, "DuplicateStratum", "strata subsets must be distinct");
        if (s.open_class.is_infinite())
            detail::fail(ErrorKind::input, "InvalidStratum", "stratum classes must be finite");
        total += s.open_class;
    }
    if (!seen.contains({})) detail::fail(ErrorKind::input, "MissingEmptyStratum", "the empty stratum is required");
    if (data.ambient_class.is_infinite() || !(total == data.ambient_class))
        detail::fail(ErrorKind::input, "StrataNotPartition",
                     "strata classes sum to " + total.to_string() + ", ambient class is " +
                         data.ambient_class.to_string());
}

/**
 * sum_J {E_J^o} prod_{i in J} (L - 1)/(L^{e_i + 1} - 1).
 *
 * Infinite exactly when some e_i <= -1 lies on a stratum of nonzero class;
 * strata of class zero contribute nothing.
 */
inline MotivicWeight stringy_nc(const NCPairData& data) {
    validate(data);
    std::map<std::string, Rational> coefficient;
    for (const auto& c : data.components) coefficient.emplace(c.id, c.coefficient);

    MotivicWeight total;
    for (const auto& s : data.strata) {
        if (s.open_class.is_zero()) continue;
        MotivicWeight term = s.open_class;
        for (const auto& id : s.subset) term *= stringy_factor(coefficient.at(id));
        total += term;
    }
    return total;
}

/// Every relevant coefficient below 1. With W_restricted, only components meeting W count.
inline bool klt_nc(const NCPairData& data, bool W_restricted) {
    return std::all_of(data.components.begin(), data.components.end(), [&](const NCComponent& c) {
        return (W_restricted && !c.meets_W) || c.coefficient < 1;
    });
}

/// The boundary form u_i = -e_i of discrepancy data, for klt_nc.
inline NCPairData as_boundary(NCPairData data) {
    for (auto& c : data.components) c.coefficient = -c.coefficient;
    return data;
}

// ---------------------------------------------------------------------------
// Fiber integrals over one twisted sector
// ---------------------------------------------------------------------------

struct DivisorWeight {
    std::size_t position;  ///< coordinate index into diagonal_exponents(sector)
    Rational u;
};

/// A divisor sum u_i {x_i = 0} through a point with stabilizer sector `sector`.
struct SectorDivisorData {
    TwistedSector sector;
    std::vector<DivisorWeight> weights;
};

struct FiberConvergence {
    bool converges = false;
    Dimension dim_sup;
};

/**
 * The fiber integral is a sum over s in Z_{>=0}^c of terms of dimension
 * sum_i (u_i - 1) s_i + C, C = sum_i u_i a_i / l + shift(g). It converges
 * iff every u_i < 1, and then the supremum is attained at s = 0.
 */
inline FiberConvergence sector_fiber_convergence(const SectorDivisorData& data) {
    const auto exponents = diagonal_exponents(data.sector);
    std::set<std::size_t> used;
    for (const auto& w : data.weights) {
        if (w.position >= exponents.size())
            detail::fail(ErrorKind::input, "CoordinateMismatch",
                         "coordinate " + std::to_string(w.position) + " out of range for degree " +
                             std::to_string(exponents.size()));
        if (!used.insert(w.position).second)
            detail::fail(ErrorKind::input, "CoordinateMismatch",
                         "coordinate " + std::to_string(w.position) + " carries two weights");
    }

    const bool converges = std::all_of(data.weights.begin(), data.weights.end(),
                                       [](const DivisorWeight& w) { return w.u < 1; });
    if (!converges) return {false, Dimension::positive_infinity()};

    const auto l = static_cast<long>(data.sector.order);
    Rational c = data.sector.shift;
    for (const auto& w : data.weights) c += w.u * rational(static_cast<long>(exponents[w.position]), l);
    return {true, Dimension::finite(c)};
}

}  // namespace omk
