#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "realizability/report.hpp"
#include "realizability/term.hpp"

namespace realizability {

// Finite assembly: named elements, each with a nonempty list of closed
// realizers. A closed term realizes x when it is convertible to one of the
// listed realizers of x.
class Assembly {
public:
    const std::string& name() const { return name_; }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::vector<Term>& realizers(const std::string& element) const;
    bool contains(const std::string& element) const;
    std::size_t index_of(const std::string& element) const;

    friend bool operator==(const Assembly& a, const Assembly& b);
    friend bool operator!=(const Assembly& a, const Assembly& b) { return !(a == b); }

private:
    friend Assembly make_assembly(std::string, std::vector<std::string>,
                                  std::map<std::string, std::vector<Term>>);
    std::string name_;
    std::vector<std::string> elements_;  // presentation order
    std::map<std::string, std::vector<Term>> realizers_;
};

// Validates: no duplicate elements, every element has at least one realizer,
// realizers closed, no realizer entry for a missing element. An assembly with
// no elements is valid.
Assembly make_assembly(std::string name, std::vector<std::string> elements,
                       std::map<std::string, std::vector<Term>> realizers);

// Does t realize element x? Holds if t is convertible to some listed
// realizer, Fails if decidedly convertible to none, Unknown otherwise.
TriState realizes(const Assembly& a, const Term& t, const std::string& x, Fuel fuel);

struct ModestyCounterexample {
    std::string x;
    std::string y;
    Term realizer;  // realizes both x and y
};

struct ModestyReport {
    TriState verdict;
    std::optional<ModestyCounterexample> counterexample;  // present iff Fails
};

// Modesty: distinct elements share no realizer up to convertibility.
ModestyReport is_modest(const Assembly& a, Fuel fuel);

// One obligation per (element, listed realizer): t applied to the realizer
// must realize the image of the element.
TrackerReport check_tracker(const Assembly& source, const Assembly& target,
                            const std::map<std::string, std::string>& mapping,
                            const Term& tracker, Fuel fuel);

// Set-level map between assemblies together with a verified tracker.
class AsmMorphism {
public:
    const Assembly& source() const { return source_; }
    const Assembly& target() const { return target_; }
    const std::map<std::string, std::string>& mapping() const { return mapping_; }
    const std::string& apply(const std::string& element) const;
    const Term& tracker() const { return tracker_; }
    const TrackerReport& verification() const { return verification_; }

private:
    friend AsmMorphism make_asm_morphism(Assembly, Assembly,
                                         std::map<std::string, std::string>, Term, Fuel);
    AsmMorphism(Assembly source, Assembly target, std::map<std::string, std::string> mapping,
                Term tracker, TrackerReport verification)
        : source_(std::move(source)), target_(std::move(target)), mapping_(std::move(mapping)),
          tracker_(std::move(tracker)), verification_(std::move(verification)) {}

    Assembly source_;
    Assembly target_;
    std::map<std::string, std::string> mapping_;
    Term tracker_;
    TrackerReport verification_;
};

// Verifies the tracker and rejects the morphism unless every obligation
// holds: NotTrackedError on a failed obligation, UndecidedError on fuel.
// The mapping must be total on the source and land in the target.
AsmMorphism make_asm_morphism(Assembly source, Assembly target,
                              std::map<std::string, std::string> mapping, Term tracker,
                              Fuel fuel);

// Extensional equality: same source and target, equal element maps.
// Trackers are deliberately ignored.
bool morphisms_equal(const AsmMorphism& f, const AsmMorphism& g);

AsmMorphism asm_identity(const Assembly& a, Fuel fuel);

// Diagrammatic composition: f : A -> B, then g : B -> C. The composite
// tracker is abstract(x, g.tracker (f.tracker x)).
AsmMorphism asm_compose(const AsmMorphism& f, const AsmMorphism& g, Fuel fuel);

}  // namespace realizability
