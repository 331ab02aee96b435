#include "realizability/equivalence.hpp"

#include <utility>

#include "realizability/combinators.hpp"

namespace realizability {

Per canonical_per(const Assembly& m, Fuel fuel) {
    ModestyReport modesty = is_modest(m, fuel);
    if (modesty.verdict.is_fails()) throw NotModestError(std::move(modesty));
    if (modesty.verdict.is_unknown()) throw UndecidedError(modesty.verdict.reason());
    std::vector<std::vector<Term>> blocks;
    blocks.reserve(m.elements().size());
    for (const std::string& x : m.elements()) {
        blocks.push_back(m.realizers(x));
    }
    return make_per("canon(" + m.name() + ")", std::move(blocks), fuel);
}

AsmMorphism forward_morphism(const Assembly& m, Fuel fuel) {
    Per r = canonical_per(m, fuel);
    SubquotientAssembly sq = subquotient(r);
    std::map<std::string, std::string> mapping;
    for (std::size_t i = 0; i < m.elements().size(); ++i) {
        mapping[m.elements()[i]] = sq.underlying.elements()[i];
    }
    return make_asm_morphism(m, std::move(sq.underlying), std::move(mapping),
                             derived(Combinator::Identity), fuel);
}

AsmMorphism backward_morphism(const Assembly& m, Fuel fuel) {
    Per r = canonical_per(m, fuel);
    SubquotientAssembly sq = subquotient(r);
    std::map<std::string, std::string> mapping;
    for (std::size_t i = 0; i < m.elements().size(); ++i) {
        mapping[sq.underlying.elements()[i]] = m.elements()[i];
    }
    return make_asm_morphism(std::move(sq.underlying), m, std::move(mapping),
                             derived(Combinator::Identity), fuel);
}

IsoReport check_iso(const Assembly& m, Fuel fuel) {
    ModestyReport modesty = is_modest(m, fuel);
    TriState skipped = TriState::unknown("skipped: modesty did not hold");
    if (!modesty.verdict.is_holds()) {
        TriState overall = combine(modesty.verdict, skipped);
        return IsoReport{std::move(modesty), TrackerReport{skipped, {}},
                         TrackerReport{skipped, {}}, skipped, skipped, overall};
    }

    IsoReport out{std::move(modesty), TrackerReport{skipped, {}}, TrackerReport{skipped, {}},
                  skipped, skipped, TriState::holds()};
    try {
        AsmMorphism fwd = forward_morphism(m, fuel);
        AsmMorphism bwd = backward_morphism(m, fuel);
        out.forward_ok = fwd.verification();
        out.backward_ok = bwd.verification();
        // forward after backward should be the identity on the subquotient,
        // backward after forward the identity on m.
        AsmMorphism fb = asm_compose(bwd, fwd, fuel);
        AsmMorphism bf = asm_compose(fwd, bwd, fuel);
        out.fb_identity = morphisms_equal(fb, asm_identity(bwd.source(), fuel))
                              ? TriState::holds()
                              : TriState::fails();
        out.bf_identity = morphisms_equal(bf, asm_identity(m, fuel)) ? TriState::holds()
                                                                     : TriState::fails();
    } catch (const UndecidedError& e) {
        // Some realizer failed to normalize in fuel; leave the remaining
        // checks as Unknown rather than abort.
        TriState undecided = TriState::unknown(e.reason);
        if (out.forward_ok.verdict.is_unknown() && out.forward_ok.obligations.empty()) {
            out.forward_ok = TrackerReport{undecided, {}};
        }
        if (out.backward_ok.verdict.is_unknown() && out.backward_ok.obligations.empty()) {
            out.backward_ok = TrackerReport{undecided, {}};
        }
        if (out.fb_identity.is_unknown()) out.fb_identity = undecided;
        if (out.bf_identity.is_unknown()) out.bf_identity = undecided;
    }

    out.verdict = combine(combine(out.modesty.verdict, out.forward_ok.verdict),
                          combine(out.backward_ok.verdict,
                                  combine(out.fb_identity, out.bf_identity)));
    return out;
}

}  // namespace realizability
