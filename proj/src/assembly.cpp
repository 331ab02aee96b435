#include "realizability/assembly.hpp"

#include <algorithm>
#include <utility>

#include "realizability/combinators.hpp"
#include "realizability/errors.hpp"

namespace realizability {

const std::vector<Term>& Assembly::realizers(const std::string& element) const {
    auto it = realizers_.find(element);
    if (it == realizers_.end()) throw UnknownElementError(element);
    return it->second;
}

bool Assembly::contains(const std::string& element) const {
    return realizers_.count(element) != 0;
}

std::size_t Assembly::index_of(const std::string& element) const {
    auto it = std::find(elements_.begin(), elements_.end(), element);
    if (it == elements_.end()) throw UnknownElementError(element);
    return static_cast<std::size_t>(it - elements_.begin());
}

bool operator==(const Assembly& a, const Assembly& b) {
    return a.name_ == b.name_ && a.elements_ == b.elements_ && a.realizers_ == b.realizers_;
}

Assembly make_assembly(std::string name, std::vector<std::string> elements,
                       std::map<std::string, std::vector<Term>> realizers) {
    Assembly a;
    a.name_ = std::move(name);
    for (const std::string& x : elements) {
        if (std::count(elements.begin(), elements.end(), x) > 1) throw DuplicateElementError(x);
        auto it = realizers.find(x);
        if (it == realizers.end() || it->second.empty()) throw EmptyRealizerSetError(x);
        for (const Term& r : it->second) {
            if (!r.is_closed()) throw OpenTermError(to_string(r));
        }
    }
    for (const auto& [x, _] : realizers) {
        if (std::find(elements.begin(), elements.end(), x) == elements.end()) {
            throw UnknownElementError(x);
        }
    }
    a.elements_ = std::move(elements);
    a.realizers_ = std::move(realizers);
    return a;
}

TriState realizes(const Assembly& a, const Term& t, const std::string& x, Fuel fuel) {
    const std::vector<Term>& listed = a.realizers(x);  // throws UnknownElementError
    bool saw_unknown = false;
    std::string unknown_reason;
    for (const Term& r : listed) {
        TriState c = convertible(t, r, fuel);
        if (c.is_holds()) return TriState::holds();
        if (c.is_unknown() && !saw_unknown) {
            saw_unknown = true;
            unknown_reason = "against realizer " + to_string(r) + ": " + c.reason();
        }
    }
    if (saw_unknown) return TriState::unknown(unknown_reason);
    return TriState::fails();
}

ModestyReport is_modest(const Assembly& a, Fuel fuel) {
    bool saw_unknown = false;
    std::string unknown_reason;
    const auto& elems = a.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            for (const Term& rx : a.realizers(elems[i])) {
                for (const Term& ry : a.realizers(elems[j])) {
                    TriState c = convertible(rx, ry, fuel);
                    if (c.is_holds()) {
                        return ModestyReport{
                            TriState::fails(),
                            ModestyCounterexample{elems[i], elems[j], rx}};
                    }
                    if (c.is_unknown() && !saw_unknown) {
                        saw_unknown = true;
                        unknown_reason = "realizers " + to_string(rx) + " of " + elems[i] +
                                         " and " + to_string(ry) + " of " + elems[j] + ": " +
                                         c.reason();
                    }
                }
            }
        }
    }
    if (saw_unknown) return ModestyReport{TriState::unknown(unknown_reason), std::nullopt};
    return ModestyReport{TriState::holds(), std::nullopt};
}

TrackerReport check_tracker(const Assembly& source, const Assembly& target,
                            const std::map<std::string, std::string>& mapping,
                            const Term& tracker, Fuel fuel) {
    std::vector<Obligation> obligations;
    for (const std::string& x : source.elements()) {
        auto it = mapping.find(x);
        if (it == mapping.end()) throw UnknownElementError(x + " missing from mapping");
        const std::string& fx = it->second;
        if (!target.contains(fx)) throw UnknownElementError(fx);
        for (const Term& r : source.realizers(x)) {
            TriState v = realizes(target, app(tracker, r), fx, fuel);
            std::string detail = "tracker applied to " + to_string(r) +
                                 " must realize " + fx;
            if (!v.reason().empty()) detail += "; " + v.reason();
            obligations.push_back(Obligation{"element " + x, std::move(detail), v});
        }
    }
    return make_report(std::move(obligations));
}

const std::string& AsmMorphism::apply(const std::string& element) const {
    auto it = mapping_.find(element);
    if (it == mapping_.end()) throw UnknownElementError(element);
    return it->second;
}

AsmMorphism make_asm_morphism(Assembly source, Assembly target,
                              std::map<std::string, std::string> mapping, Term tracker,
                              Fuel fuel) {
    TrackerReport report = check_tracker(source, target, mapping, tracker, fuel);
    if (report.verdict.is_fails()) throw NotTrackedError(std::move(report));
    if (report.verdict.is_unknown()) throw UndecidedError(report.verdict.reason());
    return AsmMorphism(std::move(source), std::move(target), std::move(mapping),
                       std::move(tracker), std::move(report));
}

bool morphisms_equal(const AsmMorphism& f, const AsmMorphism& g) {
    if (f.source() != g.source() || f.target() != g.target()) {
        throw SignatureMismatchError("morphisms compared across different hom-sets");
    }
    return f.mapping() == g.mapping();
}

AsmMorphism asm_identity(const Assembly& a, Fuel fuel) {
    std::map<std::string, std::string> mapping;
    for (const std::string& x : a.elements()) mapping[x] = x;
    return make_asm_morphism(a, a, std::move(mapping), derived(Combinator::Identity), fuel);
}

AsmMorphism asm_compose(const AsmMorphism& f, const AsmMorphism& g, Fuel fuel) {
    if (f.target() != g.source()) {
        throw SignatureMismatchError("compose: target of first differs from source of second");
    }
    std::map<std::string, std::string> mapping;
    for (const std::string& x : f.source().elements()) {
        mapping[x] = g.apply(f.apply(x));
    }
    Term tracker = abstract("x", app(g.tracker(), app(f.tracker(), var("x"))));
    return make_asm_morphism(f.source(), g.target(), std::move(mapping), std::move(tracker),
                             fuel);
}

}  // namespace realizability
