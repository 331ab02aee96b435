#pragma once

#include "realizability/subquotient.hpp"

namespace realizability {

// Modesty failed where a modest assembly was required.
struct NotModestError : Error {
    explicit NotModestError(ModestyReport report)
        : Error("assembly is not modest: elements " + report.counterexample->x + " and " +
                report.counterexample->y + " share realizer " +
                to_string(report.counterexample->realizer)),
          report(std::move(report)) {}
    ModestyReport report;
};

// The per a modest assembly presents: one block per element, generated by
// that element's realizers. NotModestError if modesty decidedly fails,
// UndecidedError if it cannot be decided at this fuel.
Per canonical_per(const Assembly& m, Fuel fuel);

// m -> subquotient(canonical_per(m)), identity on realizers (tracker i).
AsmMorphism forward_morphism(const Assembly& m, Fuel fuel);

// subquotient(canonical_per(m)) -> m, block i back to the i-th element
// (unique by modesty), tracker i again.
AsmMorphism backward_morphism(const Assembly& m, Fuel fuel);

struct IsoReport {
    ModestyReport modesty;
    TrackerReport forward_ok;
    TrackerReport backward_ok;
    TriState fb_identity;  // forward after backward = identity on the subquotient
    TriState bf_identity;  // backward after forward = identity on m
    TriState verdict;      // Holds iff all five hold
};

// The whole mutual-inverse package for one assembly. Never throws; failure
// to get off the ground (non-modest input) shows up in the report.
IsoReport check_iso(const Assembly& m, Fuel fuel);

}  // namespace realizability
