#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "realizability/report.hpp"
#include "realizability/term.hpp"

namespace realizability {

// Partial equivalence relation on closed terms, presented by finitely many
// blocks of generators. Two terms are related when they are convertible into
// the same block; symmetry and transitivity are structural.
class Per {
public:
    const std::string& name() const { return name_; }
    const std::vector<std::vector<Term>>& blocks() const { return blocks_; }

    friend bool operator==(const Per& a, const Per& b);
    friend bool operator!=(const Per& a, const Per& b) { return !(a == b); }

private:
    friend Per make_per(std::string, std::vector<std::vector<Term>>, Fuel);
    std::string name_;
    std::vector<std::vector<Term>> blocks_;
};

// Validates: generators closed, blocks nonempty, and no generator of one
// block convertible to a generator of another (OverlappingBlocksError).
// UndecidedError when a cross-block comparison runs out of fuel. A per with
// no blocks is valid.
Per make_per(std::string name, std::vector<std::vector<Term>> blocks, Fuel fuel);

// Membership of t in block i of r, as an existential over generators.
TriState block_membership(const Per& r, const Term& t, std::size_t i, Fuel fuel);

// Are a and b related, i.e. convertible into the same block?
TriState related(const Per& r, const Term& a, const Term& b, Fuel fuel);

struct PerDomainElement {
    Term term;
    std::size_t block_index;
};

// All generators with their block index, in presentation order.
std::vector<PerDomainElement> per_domain(const Per& r);

// One obligation per unordered pair of generators (a, b) in the same source
// block, including a = b: tracker a and tracker b must be target-related.
TrackerReport check_tracker(const Term& tracker, const Per& source, const Per& target,
                            Fuel fuel);

// Do t and u track the same morphism? Checks related(target, t g, u g) for
// every source generator g.
TriState trackers_equivalent(const Term& t, const Term& u, const Per& source,
                             const Per& target, Fuel fuel);

// Morphism of pers: a tracker verified against source and target, up to
// tracker equivalence. Unlike assembly morphisms there is no element map;
// the tracker is the whole content.
class PerMorphism {
public:
    const Per& source() const { return source_; }
    const Per& target() const { return target_; }
    const Term& tracker() const { return tracker_; }
    const TrackerReport& verification() const { return verification_; }

private:
    friend PerMorphism make_per_morphism(Per, Per, Term, Fuel);
    PerMorphism(Per source, Per target, Term tracker, TrackerReport verification)
        : source_(std::move(source)), target_(std::move(target)),
          tracker_(std::move(tracker)), verification_(std::move(verification)) {}

    Per source_;
    Per target_;
    Term tracker_;
    TrackerReport verification_;
};

// Verifies the tracker; NotTrackedError / UndecidedError as for assemblies.
PerMorphism make_per_morphism(Per source, Per target, Term tracker, Fuel fuel);

PerMorphism per_identity(const Per& r, Fuel fuel);

// f : R -> S then g : S -> T, tracked by abstract(x, g.tracker (f.tracker x)).
PerMorphism per_compose(const PerMorphism& f, const PerMorphism& g, Fuel fuel);

}  // namespace realizability
