#pragma once

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "omk/cli/input.hpp"
#include "omk/invariants/invariants.hpp"

namespace omk::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "omk/1";

/// Stable content hash of a canonical input description.
inline std::string digest(std::string_view canonical) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

struct JobResult {
    std::string command;
    std::string inputs_digest;
    Json outputs = Json::object();
    std::vector<std::string> warnings;
    std::string text;  ///< human-readable rendering

    static JobResult start(std::string command, std::string inputs_digest) {
        JobResult r;
        r.command = std::move(command);
        r.inputs_digest = std::move(inputs_digest);
        return r;
    }

    Json to_json() const {
        Json j;
        j["schema"] = schema_version;
        j["command"] = command;
        j["inputs_digest"] = inputs_digest;
        j["outputs"] = outputs;
        j["warnings"] = warnings;
        return j;
    }
};

namespace detail {

/// Generators after lifting and sorting, which is what both preset and explicit specs reduce to.
inline std::string group_digest(const FiniteMatrixGroup& group) {
    std::string canonical = "group;d=" + std::to_string(group.degree());
    for (auto g : group.generators()) canonical += ";" + group.element(g).key();
    return digest(canonical);
}

inline Json matrix_json(const CycMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.degree(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.degree(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json group_summary(const FiniteMatrixGroup& group, bool special_linear) {
    Json j;
    j["degree"] = group.degree();
    j["cyclotomic_order"] = group.cyclotomic_order();
    j["order"] = group.size();
    j["class_count"] = group.class_count();
    j["special_linear"] = special_linear;
    return j;
}

inline std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

inline std::string group_header(const FiniteMatrixGroup& group, bool special_linear) {
    std::ostringstream os;
    os << "group: degree " << group.degree() << ", order " << group.size() << ", " << group.class_count()
       << " conjugacy classes, cyclotomic order " << group.cyclotomic_order()
       << (special_linear ? ", in SL" : ", not in SL") << "\n";
    return os.str();
}

}  // namespace detail

inline JobResult cmd_sectors(const FiniteMatrixGroup& group) {
    const auto sectors = inertia_decomposition(group);
    const bool sl = is_subgroup_of_SL(group);
    JobResult r = JobResult::start("sectors", detail::group_digest(group));
    r.outputs["group"] = detail::group_summary(group, sl);
    Json list = Json::array();
    std::ostringstream os;
    os << detail::group_header(group, sl);
    os << std::left << std::setw(6) << "class" << std::setw(6) << "size" << std::setw(7) << "order" << std::setw(8)
       << "age" << std::setw(8) << "shift" << std::setw(7) << "fixed" << std::setw(12) << "centralizer"
       << "multiplicities\n";
    for (const auto& s : sectors) {
        Json j;
        j["class_index"] = s.class_index;
        j["class_size"] = s.class_size;
        j["order"] = s.order;
        j["exponent_multiplicities"] = s.exponent_mult;
        j["age"] = s.age.get_str();
        j["shift"] = s.shift.get_str();
        j["fixed_dim"] = s.fixed_dim;
        j["centralizer_order"] = s.centralizer_order;
        j["representative"] = detail::matrix_json(group.element(s.representative));
        list.push_back(std::move(j));
        os << std::setw(6) << s.class_index << std::setw(6) << s.class_size << std::setw(7) << s.order << std::setw(8)
           << s.age.get_str() << std::setw(8) << s.shift.get_str() << std::setw(7) << s.fixed_dim << std::setw(12)
           << s.centralizer_order << detail::join(s.exponent_mult) << "\n";
    }
    r.outputs["sectors"] = std::move(list);
    r.text = os.str();
    return r;
}

inline JobResult cmd_mckay(const FiniteMatrixGroup& group) {
    const bool sl = is_subgroup_of_SL(group);
    const McKayTable table = mckay_betti(inertia_decomposition(group), sl);
    JobResult r = JobResult::start("mckay", detail::group_digest(group));
    r.outputs["group"] = detail::group_summary(group, sl);
    Json betti = Json::array();
    std::ostringstream os;
    os << detail::group_header(group, sl);
    for (const auto& [i, n] : table.counts) {
        betti.push_back(Json{{"i", i.get_str()}, {"n", n}});
        os << "n_" << i.get_str() << " = " << n << "\n";
    }
    os << "total = " << table.total() << "\n";
    r.outputs["betti"] = std::move(betti);
    r.outputs["total"] = table.total();
    r.outputs["special_linear"] = sl;
    if (!sl)
        r.warnings.push_back(
            "group is not in SL_d: the counts are well defined but do not describe the cohomology of a crepant "
            "resolution");
    r.text = os.str();
    return r;
}

inline JobResult cmd_discrepancy(const FiniteMatrixGroup& group) {
    const auto sectors = inertia_decomposition(group);
    const auto result = discrepancy(group, sectors);
    const bool sl = is_subgroup_of_SL(group);
    JobResult r = JobResult::start("discrepancy", detail::group_digest(group));
    r.outputs["group"] = detail::group_summary(group, sl);
    r.outputs["discrepancy"] = result.value.get_str();
    r.outputs["minimizing_class"] = result.minimizing_class;
    r.outputs["minimal_age"] = result.minimal_age.get_str();
    r.outputs["representative"] = detail::matrix_json(group.element(sectors[result.minimizing_class].representative));
    std::ostringstream os;
    os << detail::group_header(group, sl);
    os << "discrepancy = " << result.value.get_str() << " (minimal age " << result.minimal_age.get_str()
       << " at class " << result.minimizing_class << ")\n";
    r.text = os.str();
    return r;
}

inline Json coefficient_list(const MotivicWeight& w) {
    Json list = Json::array();
    const auto coeffs = w.poly_coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        list.push_back(Json{{"exponent", it->first.get_str()}, {"coefficient", it->second.get_str()}});
    return list;
}

inline JobResult cmd_orbifold_weight(const FiniteMatrixGroup& group) {
    const auto sectors = inertia_decomposition(group);
    const MotivicWeight w = orbifold_weight(sectors, group.degree());
    const bool sl = is_subgroup_of_SL(group);
    JobResult r = JobResult::start("orbifold-weight", detail::group_digest(group));
    r.outputs["group"] = detail::group_summary(group, sl);
    r.outputs["weight"] = w.to_string();
    r.outputs["dim"] = w.dim().to_string();
    r.outputs["euler"] = w.evaluate(1).get_str();
    r.outputs["coefficients"] = coefficient_list(w);
    std::ostringstream os;
    os << detail::group_header(group, sl);
    os << "weight = " << w.to_string() << "\ndim = " << w.dim().to_string() << "\nvalue at L = 1: "
       << w.evaluate(1).get_str() << "\n";
    r.text = os.str();
    return r;
}

inline std::string pair_digest(const NCPairData& data) {
    std::string canonical = "pair;ambient=" + data.ambient_class.to_string();
    for (const auto& c : data.components)
        canonical += ";component=" + c.id + ":" + c.coefficient.get_str() + ":" + (c.meets_W ? "1" : "0");
    for (const auto& s : data.strata) {
        canonical += ";stratum=";
        for (const auto& id : s.subset) canonical += id + ",";
        canonical += ":" + s.open_class.to_string();
    }
    return digest(canonical);
}

/// Components carry discrepancies e_i; the KLT verdicts use u_i = -e_i.
inline JobResult cmd_stringy(const NCPairData& data) {
    const MotivicWeight w = stringy_nc(data);
    const NCPairData boundary = as_boundary(data);
    const bool klt = klt_nc(boundary, false);
    const bool klt_w = klt_nc(boundary, true);
    JobResult r = JobResult::start("stringy", pair_digest(data));
    r.outputs["weight"] = w.to_string();
    r.outputs["dim"] = w.dim().to_string();
    r.outputs["klt"] = klt;
    r.outputs["klt_around_W"] = klt_w;
    std::optional<Rational> euler;
    if (w.is_polynomial()) euler = w.evaluate(1);
    r.outputs["euler"] = euler ? Json(euler->get_str()) : Json(nullptr);
    std::ostringstream os;
    os << "weight = " << w.to_string() << "\ndim = " << w.dim().to_string() << "\nKLT: " << (klt ? "true" : "false")
       << " (around W: " << (klt_w ? "true" : "false") << ")\n";
    if (euler) os << "value at L = 1: " << euler->get_str() << "\n";
    r.text = os.str();
    return r;
}

inline int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::input: return 2;
        case ErrorKind::hypothesis: return 3;
        case ErrorKind::resource: return 4;
        case ErrorKind::internal: break;
    }
    return 1;
}

inline const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::input: return "input";
        case ErrorKind::hypothesis: return "hypothesis";
        case ErrorKind::resource: return "resource";
        case ErrorKind::internal: break;
    }
    return "internal";
}

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"sectors", "mckay", "discrepancy", "orbifold-weight", "stringy"};
    return names;
}

struct Invocation {
    std::string command;
    std::string file;
    bool json = false;
    std::size_t cap = default_closure_cap;
};

struct Outcome {
    int exit_code = 0;
    std::string out;  ///< stdout
    std::string err;  ///< stderr
};

/// Runs one job end to end and renders it; never throws for library errors.
inline Outcome execute(const Invocation& inv) {
    Outcome o;
    try {
        JobResult result;
        if (inv.command == "stringy") {
            result = cmd_stringy(parse_nc_pair(read_json_file(inv.file)));
        } else {
            const GroupSpec spec = parse_group_spec(read_json_file(inv.file));
            const FiniteMatrixGroup group = build_group(spec, inv.cap);
            if (inv.command == "sectors")
                result = cmd_sectors(group);
            else if (inv.command == "mckay")
                result = cmd_mckay(group);
            else if (inv.command == "discrepancy")
                result = cmd_discrepancy(group);
            else if (inv.command == "orbifold-weight")
                result = cmd_orbifold_weight(group);
            else
                throw Error(ErrorKind::input, "UnknownCommand", "unknown command '" + inv.command + "'");
        }
        if (inv.json) {
            o.out = result.to_json().dump(2) + "\n";
        } else {
            o.out = result.text;
            for (const auto& w : result.warnings) o.err += "warning: " + w + "\n";
        }
    } catch (const Error& e) {
        o.exit_code = exit_code(e.kind());
        Json err;
        err["code"] = e.code();
        err["kind"] = kind_name(e.kind());
        err["message"] = e.what();
        if (const auto* located = dynamic_cast<const LocatedError*>(&e)) {
            err["location"] = located->location();
            if (located->position()) err["position"] = *located->position();
        } else if (const auto* parse = dynamic_cast<const ParseError*>(&e)) {
            err["position"] = parse->position();
        }
        if (inv.json) {
            Json j;
            j["schema"] = schema_version;
            j["command"] = inv.command;
            j["error"] = std::move(err);
            o.out = j.dump(2) + "\n";
        } else {
            o.err = "error [" + e.code() + "]: " + e.what() + "\n";
            if (e.code() == "HasReflections")
                o.err += "the discrepancy formula needs a group without reflections (elements fixing a hyperplane)\n";
            else if (e.code() == "TrivialGroup")
                o.err += "the quotient by the trivial group is smooth; there is no exceptional divisor to measure\n";
        }
    }
    return o;
}

}  // namespace omk::cli
