#pragma once

#include <string>
#include <utility>
#include <vector>

#include "realizability/errors.hpp"
#include "realizability/term.hpp"

namespace realizability {

// One checked proof obligation. subject says what was checked, detail says
// how it came out (counterexamples and Unknown reasons end up here).
struct Obligation {
    std::string subject;
    std::string detail;
    TriState verdict;
};

// Verdict plus the obligations it aggregates. Used for tracker checks and
// for the larger instance checks (full faithfulness, law suites).
struct TrackerReport {
    TriState verdict;
    std::vector<Obligation> obligations;
};

inline TrackerReport make_report(std::vector<Obligation> obligations) {
    TriState v = TriState::holds();
    for (const Obligation& o : obligations) v = combine(v, o.verdict);
    return TrackerReport{std::move(v), std::move(obligations)};
}

std::string describe(const TrackerReport& report);

// A morphism constructor saw a tracking obligation decidedly fail.
struct NotTrackedError : Error {
    explicit NotTrackedError(TrackerReport report)
        : Error("tracker check failed: " + describe(report)), report(std::move(report)) {}
    TrackerReport report;
};

// A check needed a definite answer but some obligation ran out of fuel.
struct UndecidedError : Error {
    explicit UndecidedError(std::string reason)
        : Error("undecided: " + reason), reason(std::move(reason)) {}
    std::string reason;
};

}  // namespace realizability
