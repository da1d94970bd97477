// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance <path-to-omk> <data-dir>

#include <array>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace omk;
using namespace omk::testing;

namespace fs = std::filesystem;

namespace {

/// Collects mismatches for one criterion.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::map<Rational, std::size_t> table(std::initializer_list<std::pair<long, std::size_t>> entries) {
    std::map<Rational, std::size_t> out;
    for (const auto& [i, n] : entries) out[Rational(i)] = n;
    return out;
}

std::string show(const std::map<Rational, std::size_t>& t) {
    std::string s = "{";
    for (const auto& [i, n] : t) s += (s.size() > 1 ? ", " : "") + i.get_str() + ":" + std::to_string(n);
    return s + "}";
}

void criterion_two_route_a1(Check& c) {
    const auto orbifold = orbifold_weight(close_group({diag_zeta(2, {1, 1})}));
    const auto stringy = stringy_nc(a1_pair());
    const auto expected = parse_weight("L^2 + L");
    c.expect(orbifold == expected, "orbifold_weight({+-I}) = " + orbifold.to_string());
    c.expect(stringy == expected, "stringy_nc(A1) = " + stringy.to_string());
}

void criterion_mckay(Check& c) {
    const std::vector<std::pair<std::string, std::pair<std::vector<CycMatrix>, std::map<Rational, std::size_t>>>> cases{
        {"Z2(1,1)", {{diag_zeta(2, {1, 1})}, table({{0, 1}, {2, 1}})}},
        {"Z3(1,2)", {{diag_zeta(3, {1, 2})}, table({{0, 1}, {2, 2}})}},
        {"Q8", {q8_generators(), table({{0, 1}, {2, 4}})}},
        {"Z3(1,1,1)", {{diag_zeta(3, {1, 1, 1})}, table({{0, 1}, {2, 1}, {4, 1}})}},
    };
    for (const auto& [name, data] : cases) {
        const auto got = mckay_betti(close_group(data.first)).counts;
        c.expect(got == data.second, name + " gave " + show(got));
    }
}

void criterion_discrepancy(Check& c) {
    for (long r = 2; r <= 6; ++r) {
        const auto ages = brute_force_cyclic_ages(r, {1, 1});
        const Rational oracle = *std::min_element(ages.begin(), ages.end()) - 1;
        const Rational got = discrepancy(close_group({diag_zeta(static_cast<std::size_t>(r), {1, 1})})).value;
        c.expect(got == rational(2, r) - 1 && got == oracle,
                 "r=" + std::to_string(r) + " gave " + got.get_str() + ", oracle " + oracle.get_str());
    }
    const Rational a1 = discrepancy(close_group({diag_zeta(2, {1, 1})})).value;
    c.expect(a1 == 0, "{+-I} gave " + a1.get_str());
}

void criterion_convergence(Check& c) {
    for (const Rational& e : {rational(-1, 2), rational(0), rational(1), rational(7, 3)})
        c.expect(stringy_nc(one_curve_pair(e)).is_finite(), "e=" + e.get_str() + " diverged");
    for (const Rational& e : {rational(-1), rational(-2)})
        c.expect(stringy_nc(one_curve_pair(e)).is_infinite(), "e=" + e.get_str() + " converged");

    const auto sectors = inertia_decomposition(close_group({diag_zeta(2, {1, 1})}));
    for (const Rational& u : {rational(0), rational(1, 2), rational(999, 1000), rational(1), rational(1001, 1000),
                              rational(2)}) {
        const auto r = sector_fiber_convergence({sectors[1], {{0, u}}});
        c.expect(r.converges == (u < 1), "fiber u=" + u.get_str());
    }
    const auto half = sector_fiber_convergence({sectors[1], {{0, rational(1, 2)}}});
    c.expect(half.dim_sup == Dimension::finite(rational(5, 4)), "fiber u=1/2 dim " + half.dim_sup.to_string());
}

void criterion_identities(Check& c) {
    std::size_t elements = 0;
    for (const auto& f : group_fixtures()) {
        const auto G = close_group(f.generators);
        const auto d = static_cast<long>(G.degree());
        for (const auto& g : G.elements()) {
            ++elements;
            const auto m = exponent_multiplicities(g);
            std::size_t total = 0;
            for (auto x : m) total += x;
            const Rational a = age_from_multiplicities(m);
            const auto fixed = static_cast<long>(fixed_dim_from_multiplicities(m));
            c.expect(shift_from_multiplicities(m) + a + fixed == d, f.name + " shift+age+fixed at " + g.key());
            c.expect(total == G.degree(), f.name + " multiplicity sum at " + g.key());
            c.expect(is_integer(a) == determinant(g).is_one(), f.name + " age/det at " + g.key());
        }
        for (std::size_t k = 0; k < G.class_count(); ++k)
            c.expect(G.class_sizes()[k] * centralizer_order(G, G.element(G.class_reps()[k])) == G.size(),
                     f.name + " orbit-stabilizer at class " + std::to_string(k));
    }
    c.expect(elements >= 500, "only " + std::to_string(elements) + " elements");
}

void criterion_euler(Check& c) {
    for (const auto& f : group_fixtures()) {
        const auto G = close_group(f.generators);
        const Rational e = orbifold_weight(G).evaluate(1);
        c.expect(e == static_cast<long>(G.class_count()),
                 f.name + ": " + e.get_str() + " vs " + std::to_string(G.class_count()) + " classes");
    }
}

void criterion_eigen_oracle(Check& c) {
    std::mt19937 rng(2024);
    const auto conjugated = random_conjugate(diag_zeta(7, {1, 3}), rng);
    c.expect(!(conjugated(0, 1).is_zero() && conjugated(1, 0).is_zero()), "conjugated generator is diagonal");
    for (const auto& gens : {q8_generators(), std::vector<CycMatrix>{conjugated}}) {
        const auto G = close_group(gens);
        for (const auto& g : G.elements()) {
            const auto exact = exponent_multiplicities(g);
            const auto numeric = numeric_exponent_multiplicities(g, element_order(g), 1e-6);
            c.expect(exact == numeric, "mismatch at " + g.key());
        }
    }
}

std::string capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

void criterion_determinism(Check& c, const std::string& omk, const fs::path& data) {
    std::vector<std::pair<std::string, std::string>> jobs;
    std::vector<fs::path> groups, pairs;
    for (const auto& e : fs::directory_iterator(data / "groups")) groups.push_back(e.path());
    for (const auto& e : fs::directory_iterator(data / "pairs")) pairs.push_back(e.path());
    std::sort(groups.begin(), groups.end());
    std::sort(pairs.begin(), pairs.end());
    for (const auto& g : groups)
        for (const auto* cmd : {"sectors", "mckay", "discrepancy", "orbifold-weight"}) jobs.emplace_back(cmd, g.string());
    for (const auto& p : pairs) jobs.emplace_back("stringy", p.string());
    c.expect(!jobs.empty(), "no fixtures found under " + data.string());
    for (const auto& [cmd, file] : jobs) {
        const std::string line = "'" + omk + "' " + cmd + " --json '" + file + "' 2>/dev/null";
        const auto first = capture(line), second = capture(line);
        c.expect(!first.empty() && first.front() == '{', cmd + " " + file + ": no JSON output");
        c.expect(first == second, cmd + " " + file + ": outputs differ");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: " << argv[0] << " <omk-binary> <data-dir>\n";
        return 2;
    }
    const std::string omk = argv[1];
    const fs::path data = argv[2];

    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"two-route A1: orbifold weight and stringy strata sum both equal L^2 + L", criterion_two_route_a1},
        {"McKay counts for Z2(1,1), Z3(1,2), Q8, Z3(1,1,1)", criterion_mckay},
        {"discrepancy of Z_r(1,1) is 2/r - 1 for r = 2..6, brute-force oracle agrees", criterion_discrepancy},
        {"convergence flips at e = -1 and at u = 1", criterion_convergence},
        {"shift + age + fixed = d, multiplicity sums, age/det, orbit-stabilizer on >= 500 elements",
         criterion_identities},
        {"orbifold weight at L = 1 counts conjugacy classes", criterion_euler},
        {"exact multiplicities match numeric eigenvalues (Q8, conjugated Z7)", criterion_eigen_oracle},
        {"repeated CLI runs give byte-identical JSON", [&](Check& c) { criterion_determinism(c, omk, data); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = check.failures.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << "\n";
        for (std::size_t k = 0; k < check.failures.size() && k < 10; ++k) std::cout << "    " << check.failures[k] << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
