#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "omk/cli/commands.hpp"

namespace {

std::size_t cap_from_env(std::size_t fallback) {
    const char* raw = std::getenv("OMK_CAP");
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) {
        std::cerr << "warning: ignoring invalid OMK_CAP='" << raw << "'\n";
        return fallback;
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"omk: orbifold and motivic invariants of finite linear quotients"};
    app.require_subcommand(1);

    omk::cli::Invocation inv;
    inv.cap = cap_from_env(omk::default_closure_cap);
    std::size_t cap_flag = 0;

    const std::string descriptions[] = {
        "twisted sectors of [C^d/G]: ages, shifts, fixed dimensions, centralizers",
        "McKay counts n_i = #{classes with age i/2}",
        "discrepancy min{age(g) : g != 1} - 1 of C^d/G (reflection-free G)",
        "orbifold weight: sum over classes of L^(d - age)",
        "stringy invariant and KLT verdict of a normal-crossing pair (coefficients are discrepancies)",
    };
    const auto& names = omk::cli::command_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        CLI::App* sub = app.add_subcommand(names[i], descriptions[i]);
        sub->add_flag("--json", inv.json, "emit the omk/1 JSON document");
        sub->add_option("--cap", cap_flag, "group closure cap (default 100000, or OMK_CAP); unused by stringy")
            ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
        sub->add_option("FILE", inv.file, "job document (JSON)")->required();
        sub->callback([&inv, name = names[i]] { inv.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (cap_flag > 0) inv.cap = cap_flag;

    const omk::cli::Outcome outcome = omk::cli::execute(inv);
    std::cout << outcome.out;
    std::cerr << outcome.err;
    return outcome.exit_code;
}
