#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realizability/report.hpp"
#include "realizability/workspace.hpp"

namespace realizability {

struct CliFlags {
    std::uint64_t fuel = default_fuel;
    int samples = 200;
    std::uint64_t seed = 42;
    bool json = false;
};

// One command's outcome. fuel echoes the budget the command ran with.
struct Report {
    std::string command;
    TriState verdict;
    std::vector<Obligation> obligations;
    std::uint64_t fuel;
};

// Commands: normalize, compile, check-modest, check-per, check-tracker,
// subquotient, canonical-per, check-iso, check-equivalence, laws.
// Verdict-level outcomes (a failed check) land in the report; infrastructure
// problems (unknown names, parse errors) are thrown for the caller to turn
// into a usage error.
Report run_command(const std::string& command, const std::vector<std::string>& args,
                   const Workspace& ws, const CliFlags& flags);

std::string render_text(const Report& report);
std::string render_json(const Report& report);

// Holds -> 0, Fails -> 1, Unknown -> 2. (Usage and parse errors exit 3.)
int exit_code(const Report& report);

}  // namespace realizability
