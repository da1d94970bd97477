#pragma once

#include <random>
#include <string>
#include <vector>

#include "omk/omk.hpp"

namespace omk::testing {

using Grid = std::vector<std::vector<std::string>>;

inline CycMatrix mat(std::size_t order, const Grid& grid) {
    std::vector<Cyclotomic> entries;
    for (const auto& row : grid)
        for (const auto& e : row) entries.push_back(parse_cyclotomic(e, order));
    return CycMatrix(grid.size(), std::move(entries));
}

inline CycMatrix diag_zeta(std::size_t r, const std::vector<long long>& weights) {
    std::vector<Cyclotomic> d;
    for (auto a : weights) d.push_back(Cyclotomic::zeta(r, a));
    return CycMatrix::diagonal(d);
}

struct GroupFixture {
    std::string name;
    std::vector<CycMatrix> generators;
    std::size_t expected_order;
};

inline CycMatrix quaternion_i(std::size_t order) {
    const std::string i = "z^" + std::to_string(order / 4);
    return mat(order, {{i, "0"}, {"0", "-" + i}});
}

inline CycMatrix quaternion_j(std::size_t order) { return mat(order, {{"0", "-1"}, {"1", "0"}}); }

/// (-1 + i + j + k)/2 in the 2x2 model q -> [[a+bi, c+di], [-c+di, a-bi]].
inline CycMatrix quaternion_omega(std::size_t order) {
    const std::string i = "z^" + std::to_string(order / 4);
    return mat(order, {{"-1/2 + 1/2*" + i, "1/2 + 1/2*" + i}, {"-1/2 + 1/2*" + i, "-1/2 - 1/2*" + i}});
}

inline std::vector<CycMatrix> q8_generators() { return {quaternion_j(4), quaternion_i(4)}; }

/// Monomial 3x3 permutation matrix for the permutation sigma (row i has a 1 in column sigma[i]).
inline CycMatrix permutation(std::size_t order, const std::vector<std::size_t>& sigma) {
    Grid g(sigma.size(), std::vector<std::string>(sigma.size(), "0"));
    for (std::size_t i = 0; i < sigma.size(); ++i) g[i][sigma[i]] = "1";
    return mat(order, g);
}

/// h g h^{-1} for a random invertible h with small integer entries, non-diagonal
/// unless g is scalar.
inline CycMatrix random_conjugate(const CycMatrix& g, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int attempt = 0;; ++attempt) {
        std::vector<Cyclotomic> e;
        for (std::size_t i = 0; i < g.degree() * g.degree(); ++i) e.push_back(Cyclotomic::rational(g.order(), entry(rng)));
        const CycMatrix h(g.degree(), std::move(e));
        const auto h_inv = inverse(h);
        if (!h_inv) continue;
        CycMatrix out = h * g * *h_inv;
        bool diagonal = true;
        for (std::size_t i = 0; i < g.degree(); ++i)
            for (std::size_t j = 0; j < g.degree(); ++j)
                if (i != j && !out(i, j).is_zero()) diagonal = false;
        if (!diagonal || attempt == 100) return out;
    }
}

/// Every group used by the identity and Euler suites (>= 500 elements in total).
inline std::vector<GroupFixture> group_fixtures() {
    std::vector<GroupFixture> f;
    f.push_back({"trivial_d2", {CycMatrix::identity(2, 1)}, 1});
    f.push_back({"Z3(1,2)", {diag_zeta(3, {1, 2})}, 3});
    f.push_back({"Q8", q8_generators(), 8});
    f.push_back({"Z3(1,1,1)", {diag_zeta(3, {1, 1, 1})}, 3});
    for (long long r = 2; r <= 6; ++r)
        f.push_back({"Z" + std::to_string(r) + "(1,1)", {diag_zeta(static_cast<std::size_t>(r), {1, 1})},
                     static_cast<std::size_t>(r)});
    f.push_back({"Z5(1,2)", {diag_zeta(5, {1, 2})}, 5});
    f.push_back({"Z7(1,2,4)", {diag_zeta(7, {1, 2, 4})}, 7});
    f.push_back({"BD12", {diag_zeta(6, {1, 5}), quaternion_j(6)}, 12});
    f.push_back({"2T", {quaternion_i(4), quaternion_j(4), quaternion_omega(4)}, 24});
    f.push_back({"2O", {quaternion_i(8), quaternion_j(8), quaternion_omega(8), diag_zeta(8, {1, 7})}, 48});
    f.push_back({"G(4,1,3)", {diag_zeta(4, {1, 0, 0}), permutation(4, {1, 0, 2}), permutation(4, {0, 2, 1})}, 384});
    f.push_back({"mu2 x Z3 reflection", {diag_zeta(6, {3, 0}), diag_zeta(6, {0, 2})}, 6});
    return f;
}

// Hand-computed strata of minimal resolutions of C^2/G (chains/trees of P^1's).
// Y \ E = (C^2 \ 0)/G has class L^2 - 1; a curve meeting k others has open part L + 1 - k;
// each intersection point has class 1.

inline NCPairData a1_pair() {
    return {parse_weight("L^2 + L"),
            {{"E", 0, true}},
            {{{}, parse_weight("L^2 - 1")}, {{"E"}, parse_weight("L + 1")}}};
}

inline NCPairData a2_pair() {
    return {parse_weight("L^2 + 2*L"),
            {{"E1", 0, true}, {"E2", 0, true}},
            {{{}, parse_weight("L^2 - 1")},
             {{"E1"}, parse_weight("L")},
             {{"E2"}, parse_weight("L")},
             {{"E1", "E2"}, parse_weight("1")}}};
}

inline NCPairData d4_pair() {
    return {parse_weight("L^2 + 4*L"),
            {{"E0", 0, true}, {"E1", 0, true}, {"E2", 0, true}, {"E3", 0, true}},
            {{{}, parse_weight("L^2 - 1")},
             {{"E0"}, parse_weight("L - 2")},
             {{"E1"}, parse_weight("L")},
             {{"E2"}, parse_weight("L")},
             {{"E3"}, parse_weight("L")},
             {{"E0", "E1"}, parse_weight("1")},
             {{"E0", "E2"}, parse_weight("1")},
             {{"E0", "E3"}, parse_weight("1")}}};
}

/// Single exceptional P^1 over the origin with discrepancy e (ambient = (L^2 - 1) + (L + 1)).
inline NCPairData one_curve_pair(const Rational& e) {
    return {parse_weight("L^2 + L"), {{"E", e, true}}, {{{}, parse_weight("L^2 - 1")}, {{"E"}, parse_weight("L + 1")}}};
}

}  // namespace omk::testing
