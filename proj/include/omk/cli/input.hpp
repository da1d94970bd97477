#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "omk/error.hpp"
#include "omk/exactnum/parse.hpp"
#include "omk/invariants/invariants.hpp"
#include "omk/matgroup/group.hpp"
#include "omk/motivic/parse.hpp"

namespace omk::cli {

/// An input error pinned to a place in the job document.
class LocatedError : public Error {
public:
    LocatedError(const Error& cause, std::string location, std::optional<std::size_t> position = std::nullopt)
        : Error(cause.kind(), cause.code(), location + ": " + cause.what()),
          location_(std::move(location)), position_(position) {}

    LocatedError(ErrorKind kind, std::string code, std::string location, const std::string& message)
        : Error(kind, std::move(code), location + ": " + message), location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    std::string location_;
    std::optional<std::size_t> position_;
};

/// Cyclic group generated by diag(zeta_r^{a_1}, ..., zeta_r^{a_d}).
struct CyclicPreset {
    std::size_t r = 1;
    std::vector<long long> weights;  ///< reduced into [0, r)
};

/**
 * Group job document. Either explicit generators (d x d grids of
 * cyclotomic-expression strings in z = zeta_n) or a cyclic preset.
 *
 *   {"degree": 2, "cyclotomic_order": 4,
 *    "generators": [[["0", "-1"], ["1", "0"]], [["z", "0"], ["0", "-z"]]]}
 *   {"degree": 2, "preset": {"kind": "cyclic", "r": 3, "weights": [1, 2]}}
 */
struct GroupSpec {
    std::size_t degree = 0;
    std::size_t cyclotomic_order = 1;
    std::vector<std::vector<std::vector<std::string>>> generators;
    std::optional<CyclicPreset> preset;
};

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LocatedError(ErrorKind::input, "FileNotFound", path, "cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw LocatedError(Error(ErrorKind::input, "InvalidJson", e.what()), path, e.byte);
    }
}

namespace detail {

[[noreturn]] inline void schema_error(const std::string& location, const std::string& message) {
    throw LocatedError(ErrorKind::input, "InvalidSpec", location, message);
}

inline std::size_t positive_size(const nlohmann::json& j, const std::string& location) {
    if (!j.is_number_integer() || j.get<long long>() <= 0) schema_error(location, "expected a positive integer");
    return j.get<std::size_t>();
}

inline Rational rational_field(const nlohmann::json& j, const std::string& location) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_string())
        if (auto q = parse_rational(j.get<std::string>())) return *q;
    schema_error(location, "expected a rational written as \"p/q\" or an integer");
}

inline MotivicWeight weight_field(const nlohmann::json& j, const std::string& location) {
    if (!j.is_string()) schema_error(location, "expected a weight string");
    try {
        return parse_weight(j.get<std::string>());
    } catch (const ParseError& e) {
        throw LocatedError(e, location, e.position());
    } catch (const Error& e) {
        throw LocatedError(e, location);
    }
}

}  // namespace detail

inline GroupSpec parse_group_spec(const nlohmann::json& doc) {
    using detail::schema_error;
    if (!doc.is_object()) schema_error("$", "expected an object");
    GroupSpec spec;
    if (!doc.contains("degree")) schema_error("$", "missing 'degree'");
    spec.degree = detail::positive_size(doc["degree"], "degree");

    const bool has_generators = doc.contains("generators");
    const bool has_preset = doc.contains("preset");
    if (has_generators == has_preset) schema_error("$", "exactly one of 'generators' or 'preset' is required");

    if (has_preset) {
        const auto& p = doc["preset"];
        if (!p.is_object() || p.value("kind", "") != "cyclic") schema_error("preset", "only {\"kind\": \"cyclic\"} is supported");
        if (!p.contains("r")) schema_error("preset", "missing 'r'");
        CyclicPreset preset;
        preset.r = detail::positive_size(p["r"], "preset.r");
        if (!p.contains("weights") || !p["weights"].is_array()) schema_error("preset.weights", "expected an array");
        const auto& w = p["weights"];
        if (w.size() != spec.degree)
            schema_error("preset.weights", "expected " + std::to_string(spec.degree) + " weights");
        const auto r = static_cast<long long>(preset.r);
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!w[i].is_number_integer()) schema_error("preset.weights[" + std::to_string(i) + "]", "expected an integer");
            preset.weights.push_back(((w[i].get<long long>() % r) + r) % r);
        }
        spec.cyclotomic_order = preset.r;
        spec.preset = std::move(preset);
        return spec;
    }

    if (!doc.contains("cyclotomic_order")) schema_error("$", "missing 'cyclotomic_order'");
    spec.cyclotomic_order = detail::positive_size(doc["cyclotomic_order"], "cyclotomic_order");
    const auto& gens = doc["generators"];
    if (!gens.is_array() || gens.empty()) schema_error("generators", "expected a nonempty array");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::string at = "generators[" + std::to_string(g) + "]";
        const auto& rows = gens[g];
        if (!rows.is_array() || rows.size() != spec.degree)
            schema_error(at, "expected " + std::to_string(spec.degree) + " rows");
        std::vector<std::vector<std::string>> grid;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string row_at = at + "[" + std::to_string(i) + "]";
            if (!rows[i].is_array() || rows[i].size() != spec.degree)
                schema_error(row_at, "expected " + std::to_string(spec.degree) + " entries");
            std::vector<std::string> row;
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (!rows[i][j].is_string()) schema_error(row_at + "[" + std::to_string(j) + "]", "expected a string");
                row.push_back(rows[i][j].get<std::string>());
            }
            grid.push_back(std::move(row));
        }
        spec.generators.push_back(std::move(grid));
    }
    return spec;
}

inline std::vector<CycMatrix> generator_matrices(const GroupSpec& spec) {
    std::vector<CycMatrix> out;
    if (spec.preset) {
        std::vector<Cyclotomic> diag;
        for (auto a : spec.preset->weights) diag.push_back(Cyclotomic::zeta(spec.preset->r, a));
        out.push_back(CycMatrix::diagonal(diag));
        return out;
    }
    for (std::size_t g = 0; g < spec.generators.size(); ++g) {
        std::vector<Cyclotomic> entries;
        for (std::size_t i = 0; i < spec.degree; ++i)
            for (std::size_t j = 0; j < spec.degree; ++j) {
                const std::string at =
                    "generators[" + std::to_string(g) + "][" + std::to_string(i) + "][" + std::to_string(j) + "]";
                try {
                    entries.push_back(parse_cyclotomic(spec.generators[g][i][j], spec.cyclotomic_order));
                } catch (const ParseError& e) {
                    throw LocatedError(e, at, e.position());
                }
            }
        out.emplace_back(spec.degree, std::move(entries));
    }
    return out;
}

/// Closure of the spec's generators; rejects presets whose matrix group is smaller than r.
inline FiniteMatrixGroup build_group(const GroupSpec& spec, std::size_t cap) {
    FiniteMatrixGroup group = [&] {
        try {
            return close_group(generator_matrices(spec), cap);
        } catch (const LocatedError&) {
            throw;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::input) throw LocatedError(e, "generators");
            throw;
        }
    }();
    if (spec.preset && group.size() < spec.preset->r)
        throw LocatedError(ErrorKind::input, "NonFaithfulPreset", "preset",
                           "weights generate a group of order " + std::to_string(group.size()) + " < r = " +
                               std::to_string(spec.preset->r));
    return group;
}

/**
 * Normal-crossing pair document:
 *
 *   {"ambient": "L^2 + L",
 *    "components": [{"id": "E", "coefficient": "0", "meets_W": true}],
 *    "strata": [{"subset": [], "class": "L^2 - 1"}, {"subset": ["E"], "class": "L + 1"}]}
 *
 * Coefficients are discrepancies e_i (K_Y = f^*K_X + sum e_i E_i);
 * meets_W defaults to true.
 */
inline NCPairData parse_nc_pair(const nlohmann::json& doc) {
    using detail::schema_error;
    if (!doc.is_object()) schema_error("$", "expected an object");
    NCPairData data;
    if (!doc.contains("ambient")) schema_error("$", "missing 'ambient'");
    data.ambient_class = detail::weight_field(doc["ambient"], "ambient");

    const auto& comps = doc.value("components", nlohmann::json::array());
    if (!comps.is_array()) schema_error("components", "expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string at = "components[" + std::to_string(i) + "]";
        const auto& c = comps[i];
        if (!c.is_object() || !c.contains("id") || !c["id"].is_string()) schema_error(at, "expected {\"id\": string, ...}");
        if (!c.contains("coefficient")) schema_error(at, "missing 'coefficient'");
        NCComponent comp{c["id"].get<std::string>(), detail::rational_field(c["coefficient"], at + ".coefficient"), true};
        if (c.contains("meets_W")) {
            if (!c["meets_W"].is_boolean()) schema_error(at + ".meets_W", "expected a boolean");
            comp.meets_W = c["meets_W"].get<bool>();
        }
        data.components.push_back(std::move(comp));
    }

    if (!doc.contains("strata") || !doc["strata"].is_array()) schema_error("strata", "expected an array");
    const auto& strata = doc["strata"];
    for (std::size_t i = 0; i < strata.size(); ++i) {
        const std::string at = "strata[" + std::to_string(i) + "]";
        const auto& s = strata[i];
        if (!s.is_object() || !s.contains("subset") || !s["subset"].is_array() || !s.contains("class"))
            schema_error(at, "expected {\"subset\": [...], \"class\": string}");
        NCStratum stratum;
        for (const auto& id : s["subset"]) {
            if (!id.is_string()) schema_error(at + ".subset", "expected component ids");
            stratum.subset.push_back(id.get<std::string>());
        }
        stratum.open_class = detail::weight_field(s["class"], at + ".class");
        data.strata.push_back(std::move(stratum));
    }
    return data;
}

}  // namespace omk::cli
