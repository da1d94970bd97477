#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omk/error.hpp"
#include "omk/matgroup/matrix.hpp"

namespace omk {

inline constexpr std::size_t default_closure_cap = 100'000;

/// Conjugacy-class partition of a group's element list.
struct ClassPartition {
    std::vector<std::size_t> class_of;     ///< element index -> class index
    std::vector<std::size_t> class_reps;   ///< class index -> element index
    std::vector<std::size_t> class_sizes;  ///< class index -> size
};

class FiniteMatrixGroup;
ClassPartition conjugacy_classes(const FiniteMatrixGroup& group);

/**
 * A finite subgroup of GL_d(Q(zeta_n)), stored as its full element list.
 *
 * Built only by close_group(); immutable afterwards. Classes are numbered
 * by first appearance in the element list, so the identity is always
 * class 0, and each class is represented by its member with the smallest
 * key().
 */
class FiniteMatrixGroup {
public:
    std::size_t degree() const { return degree_; }
    std::size_t cyclotomic_order() const { return order_; }
    std::size_t size() const { return elements_.size(); }

    const std::vector<CycMatrix>& elements() const { return elements_; }
    const CycMatrix& element(std::size_t i) const { return elements_.at(i); }
    std::size_t identity_index() const { return 0; }

    /// Element indices of the (deduplicated, key-sorted) generators.
    const std::vector<std::size_t>& generators() const { return generators_; }

    std::size_t class_count() const { return classes_.class_reps.size(); }
    std::size_t class_of(std::size_t element) const { return classes_.class_of.at(element); }
    const std::vector<std::size_t>& class_reps() const { return classes_.class_reps; }
    const std::vector<std::size_t>& class_sizes() const { return classes_.class_sizes; }
    const ClassPartition& classes() const { return classes_; }

    std::optional<std::size_t> find(const CycMatrix& g) const {
        if (g.degree() != degree_) return std::nullopt;
        if (g.order() != order_) {
            if (order_ % g.order() == 0) return find(g.embed(order_));
            // Presented over a larger field: compare in the compositum.
            const std::size_t common = std::lcm(order_, g.order());
            const std::string target = g.embed(common).key();
            for (std::size_t i = 0; i < elements_.size(); ++i)
                if (elements_[i].embed(common).key() == target) return i;
            return std::nullopt;
        }
        auto it = index_.find(g.key());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const CycMatrix& g) const {
        auto i = find(g);
        if (!i) detail::fail(ErrorKind::input, "NotAMember", "matrix is not an element of the group");
        return *i;
    }

private:
    friend FiniteMatrixGroup close_group(std::vector<CycMatrix> generators, std::size_t cap);

    FiniteMatrixGroup() = default;

    std::size_t degree_ = 0;
    std::size_t order_ = 1;
    std::vector<CycMatrix> elements_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> generators_;
    ClassPartition classes_;
};

/**
 * Breadth-first closure of a generating set under right multiplication by
 * the generators. All generators are first lifted to a common cyclotomic
 * order (the lcm of theirs). Element 0 is the identity; the remaining order
 * is the BFS insertion order with generators processed in key order.
 */
inline FiniteMatrixGroup close_group(std::vector<CycMatrix> generators, std::size_t cap = default_closure_cap) {
    if (generators.empty()) detail::fail(ErrorKind::input, "NoGenerators", "at least one generator is required");
    const std::size_t d = generators.front().degree();
    std::size_t n = 1;
    for (const auto& g : generators) {
        if (g.degree() != d) detail::fail(ErrorKind::input, "DegreeMismatch", "generators have different degrees");
        n = std::lcm(n, g.order());
    }
    for (auto& g : generators) {
        g = g.embed(n);
        if (determinant(g).is_zero()) detail::fail(ErrorKind::input, "SingularGenerator", "generator has determinant 0");
    }

    std::vector<std::pair<std::string, CycMatrix>> keyed;
    for (auto& g : generators) keyed.emplace_back(g.key(), std::move(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());

    FiniteMatrixGroup group;
    group.degree_ = d;
    group.order_ = n;

    auto insert = [&](CycMatrix m) -> bool {
        std::string k = m.key();
        if (group.index_.contains(k)) return false;
        if (group.elements_.size() >= cap)
            detail::fail(ErrorKind::resource, "CapExceeded",
                         "group closure exceeded " + std::to_string(cap) + " elements");
        group.index_.emplace(std::move(k), group.elements_.size());
        group.elements_.push_back(std::move(m));
        return true;
    };

    insert(CycMatrix::identity(d, n));
    for (std::size_t next = 0; next < group.elements_.size(); ++next)
        for (const auto& [k, s] : keyed) insert(group.elements_[next] * s);

    for (const auto& [k, s] : keyed) group.generators_.push_back(group.index_.at(k));
    group.classes_ = conjugacy_classes(group);
    return group;
}

/// Classes as orbits of conjugation by the generators (and hence by G).
inline ClassPartition conjugacy_classes(const FiniteMatrixGroup& group) {
    std::vector<std::pair<CycMatrix, CycMatrix>> conjugators;
    for (std::size_t gi : group.generators()) {
        const CycMatrix& s = group.element(gi);
        auto s_inv = inverse(s);
        if (!s_inv) detail::fail(ErrorKind::internal, "SingularGenerator", "generator lost invertibility");
        conjugators.emplace_back(s, *s_inv);
    }

    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    ClassPartition out;
    out.class_of.assign(group.size(), unassigned);
    for (std::size_t start = 0; start < group.size(); ++start) {
        if (out.class_of[start] != unassigned) continue;
        const std::size_t c = out.class_reps.size();
        std::vector<std::size_t> members{start};
        out.class_of[start] = c;
        for (std::size_t next = 0; next < members.size(); ++next) {
            const CycMatrix& x = group.element(members[next]);
            for (const auto& [s, s_inv] : conjugators) {
                const std::size_t y = group.index_of(s * x * s_inv);
                if (out.class_of[y] == unassigned) {
                    out.class_of[y] = c;
                    members.push_back(y);
                }
            }
        }
        std::size_t rep = members.front();
        std::string rep_key = group.element(rep).key();
        for (std::size_t m : members) {
            std::string k = group.element(m).key();
            if (k < rep_key) {
                rep = m;
                rep_key = std::move(k);
            }
        }
        out.class_reps.push_back(rep);
        out.class_sizes.push_back(members.size());
    }
    return out;
}

/// #{h in G : hg = gh}, by a full commutation scan.
inline std::size_t centralizer_order(const FiniteMatrixGroup& group, const CycMatrix& g) {
    const CycMatrix& x = group.element(group.index_of(g));
    std::size_t count = 0;
    for (const auto& h : group.elements())
        if (h * x == x * h) ++count;
    return count;
}

/// Full determinant scan, not just the generators.
inline bool is_subgroup_of_SL(const FiniteMatrixGroup& group) {
    return std::all_of(group.elements().begin(), group.elements().end(),
                       [](const CycMatrix& g) { return determinant(g).is_one(); });
}

}  // namespace omk
