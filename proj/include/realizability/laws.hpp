#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realizability/report.hpp"
#include "realizability/term.hpp"

namespace realizability {

struct LawsConfig {
    std::uint64_t fuel = default_fuel;
    int samples = 200;
    std::uint64_t seed = 42;
};

// Outcome of one law checked over many generated instances.
struct LawResult {
    std::string law;
    int samples = 0;
    int holds = 0;
    int fails = 0;
    int unknowns = 0;
    std::string first_issue;  // describes the first non-holding instance
    bool unknown_ok = false;  // fuel-outs tolerated (law still passes)

    TriState verdict() const;
};

// Rewrite rules K a b = a and S a b c = a c (b c) over random normal triples,
// conditioned on the S redex normalizing (a diverging instance is Unknown at
// every fuel and says nothing about the rules).
std::vector<LawResult> combinator_laws(const LawsConfig& cfg);

// Identity, pairing, booleans, the fixed point on argument-discarding
// functions, Curry numeral laws, and the recursor against integer addition.
std::vector<LawResult> derived_combinator_laws(const LawsConfig& cfg);

// abstract(x, body) applied to a equals body[x := a], with substitution as
// the independent oracle.
std::vector<LawResult> abstraction_laws(const LawsConfig& cfg);

// Pers and tracked morphisms form a category: identities, associativity,
// and independence from the choice of tracker representative.
std::vector<LawResult> per_category_laws(const LawsConfig& cfg);

// Subquotient assemblies are modest, the construction is functorial, and
// perify/subquot_morphism round-trip; includes full-faithfulness instances.
std::vector<LawResult> subquotient_laws(const LawsConfig& cfg);

// Every modest assembly is isomorphic to the subquotient of its canonical
// per, with identity trackers both ways.
std::vector<LawResult> equivalence_laws(const LawsConfig& cfg);

std::vector<LawResult> all_laws(const LawsConfig& cfg);

TrackerReport to_report(const std::vector<LawResult>& results);

}  // namespace realizability
