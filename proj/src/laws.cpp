#include "realizability/laws.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "realizability/combinators.hpp"
#include "realizability/equivalence.hpp"
#include "realizability/generators.hpp"
#include "realizability/subquotient.hpp"

namespace realizability {

TriState LawResult::verdict() const {
    if (fails > 0) return TriState::fails();
    if (unknowns > 0 && !unknown_ok) {
        return TriState::unknown(std::to_string(unknowns) + " of " + std::to_string(samples) +
                                 " instances undecided; first: " + first_issue);
    }
    return TriState::holds();
}

namespace {

class LawRun {
public:
    explicit LawRun(std::string name, bool unknown_ok = false) {
        result_.law = std::move(name);
        result_.unknown_ok = unknown_ok;
    }

    void record(const TriState& v, const std::function<std::string()>& describe_instance) {
        ++result_.samples;
        if (v.is_holds()) {
            ++result_.holds;
            return;
        }
        if (v.is_fails()) ++result_.fails;
        else ++result_.unknowns;
        if (result_.first_issue.empty()) {
            result_.first_issue = std::string(to_string(v.verdict())) + ": " +
                                  describe_instance() +
                                  (v.reason().empty() ? "" : " [" + v.reason() + "]");
        }
    }

    void expect(bool ok, const std::function<std::string()>& describe_instance) {
        record(ok ? TriState::holds() : TriState::fails(), describe_instance);
    }

    LawResult take() { return std::move(result_); }

private:
    LawResult result_;
};

// Normal triple (a, b, c) such that S a b c reaches a normal form in fuel;
// by confluence the contractum a c (b c) then normalizes as well.
struct Triple {
    Term a, b, c;
};

Triple normalizing_triple(Rng& rng, int max_size, Fuel fuel) {
    // The probe rejects divergent candidates with a small budget; anything
    // it accepts normalizes within the real budget too, so the law checks
    // below can never come back Unknown. A divergent S a b c grows fast,
    // which makes probing at the full budget dominate the suite's runtime.
    Fuel probe{std::min<std::uint64_t>(1000, fuel.steps)};
    for (;;) {
        Term a = random_normal_term(rng, max_size);
        Term b = random_normal_term(rng, max_size);
        Term c = random_normal_term(rng, max_size);
        if (normalize(app(Term::s(), a, b, c), probe).is_normal) {
            return Triple{std::move(a), std::move(b), std::move(c)};
        }
    }
}

}  // namespace

std::vector<LawResult> combinator_laws(const LawsConfig& cfg) {
    Rng rng(cfg.seed);
    Fuel fuel{cfg.fuel};
    LawRun k_law("K a b = a");
    LawRun s_law("S a b c = a c (b c)");
    for (int i = 0; i < cfg.samples; ++i) {
        Triple t = normalizing_triple(rng, 12, fuel);
        auto show = [&] {
            return "a=" + to_string(t.a) + " b=" + to_string(t.b) + " c=" + to_string(t.c);
        };
        k_law.record(convertible(app(Term::k(), t.a, t.b), t.a, fuel), show);
        s_law.record(convertible(app(Term::s(), t.a, t.b, t.c),
                                 app(app(t.a, t.c), app(t.b, t.c)), fuel),
                     show);
    }
    std::vector<LawResult> out;
    out.push_back(k_law.take());
    out.push_back(s_law.take());
    return out;
}

std::vector<LawResult> derived_combinator_laws(const LawsConfig& cfg) {
    Rng rng(cfg.seed);
    Fuel fuel{cfg.fuel};
    const Term i = derived(Combinator::Identity);
    const Term pair = derived(Combinator::Pair);
    const Term pr1 = derived(Combinator::Pr1);
    const Term pr2 = derived(Combinator::Pr2);
    const Term truth = derived(Combinator::True);
    const Term falsity = derived(Combinator::False);
    const Term ite = derived(Combinator::IfThenElse);
    const Term fix = derived(Combinator::Fix);

    LawRun identity("i a = a");
    LawRun pairing1("pr1 (pair a b) = a");
    LawRun pairing2("pr2 (pair a b) = b");
    LawRun select_t("ifThenElse true t e = t");
    LawRun select_f("ifThenElse false t e = e");
    LawRun fixpoint("fix f = f (fix f) on discarding f");
    for (int n = 0; n < cfg.samples; ++n) {
        Term a = random_normal_term(rng, 10);
        Term b = random_normal_term(rng, 10);
        auto show = [&] { return "a=" + to_string(a) + " b=" + to_string(b); };
        identity.record(convertible(app(i, a), a, fuel), show);
        pairing1.record(convertible(app(pr1, app(pair, a, b)), a, fuel), show);
        pairing2.record(convertible(app(pr2, app(pair, a, b)), b, fuel), show);
        select_t.record(convertible(app(ite, truth, a, b), a, fuel), show);
        select_f.record(convertible(app(ite, falsity, a, b), b, fuel), show);
        // fix f has a normal form only when f discards its argument, so the
        // sampled f are constant-shaped; the law itself is f-generic.
        Term g = random_normal_term(rng, 8);
        Term f = rng.chance(0.5) ? app(Term::k(), g) : abstract("z", app(i, g));
        auto show_f = [&] { return "f=" + to_string(f); };
        fixpoint.record(convertible(app(fix, f), app(f, app(fix, f)), fuel), show_f);
    }

    LawRun zero_test("pr1 (numeral n) = (n == 0)");
    LawRun pred("pr2 (numeral (n+1)) = numeral n");
    LawRun distinct("numeral m != numeral n for m != n");
    for (unsigned n = 0; n <= 10; ++n) {
        auto show = [&] { return "n=" + std::to_string(n); };
        Term expected = n == 0 ? truth : falsity;
        zero_test.record(convertible(app(pr1, numeral(n)), expected, fuel), show);
        if (n > 0) pred.record(convertible(app(pr2, numeral(n)), numeral(n - 1), fuel), show);
    }
    for (unsigned m = 0; m <= 5; ++m) {
        for (unsigned n = 0; n <= 5; ++n) {
            if (m == n) continue;
            auto show = [&] { return std::to_string(m) + " vs " + std::to_string(n); };
            TriState v = convertible(numeral(m), numeral(n), fuel);
            distinct.record(v.is_fails()  ? TriState::holds()
                            : v.is_holds() ? TriState::fails()
                                           : v,
                            show);
        }
    }

    // Recursor: base and step laws plus addition against the integers.
    const Term succ_step = abstract("m", abstract("r", app(pair, falsity, var("r"))));
    const Term fst_step = abstract("m", abstract("r", var("m")));
    LawRun base("primrec c f 0 = c");
    LawRun step_law("primrec c f (n+1) = f n (primrec c f n)");
    LawRun addition("primrec (numeral n) succ (numeral m) = numeral (m+n)");
    for (unsigned n = 0; n <= 5; ++n) {
        Term c = random_normal_term(rng, 8);
        Term junk = random_normal_term(rng, 8);  // discarded by the base case
        auto show = [&] { return "n=" + std::to_string(n) + " c=" + to_string(c); };
        base.record(convertible(prim_rec(c, junk, numeral(0)), c, fuel), show);
        Term f = rng.chance(0.5) ? succ_step : fst_step;
        step_law.record(convertible(prim_rec(c, f, numeral(n + 1)),
                                    app(f, numeral(n), prim_rec(c, f, numeral(n))), fuel),
                        show);
    }
    for (unsigned m = 0; m <= 5; ++m) {
        for (unsigned n = 0; n <= 5; ++n) {
            auto show = [&] { return std::to_string(m) + " + " + std::to_string(n); };
            addition.record(
                convertible(prim_rec(numeral(n), succ_step, numeral(m)), numeral(m + n), fuel),
                show);
        }
    }

    std::vector<LawResult> out;
    for (LawRun* run : {&identity, &pairing1, &pairing2, &select_t, &select_f, &fixpoint,
                        &zero_test, &pred, &distinct, &base, &step_law, &addition}) {
        out.push_back(run->take());
    }
    return out;
}

std::vector<LawResult> abstraction_laws(const LawsConfig& cfg) {
    Rng rng(cfg.seed);
    Fuel fuel{cfg.fuel};
    // Unknowns happen when the instantiated body diverges; the law only
    // demands that decided instances agree with the substitution oracle.
    LawRun agrees("abstract(x, body) a = body[x := a]", /*unknown_ok=*/true);
    LawRun no_x("x not free in abstract(x, body)");
    for (int i = 0; i < cfg.samples; ++i) {
        Term body = random_open_body(rng, "x", 10);
        Term a = random_normal_term(rng, 8);
        Term compiled = abstract("x", body);
        auto show = [&] { return "body=" + to_string(body) + " a=" + to_string(a); };
        no_x.expect(!contains_var(compiled, "x"), show);
        agrees.record(convertible(app(compiled, a), substitute(body, "x", a), fuel), show);
    }
    std::vector<LawResult> out;
    out.push_back(agrees.take());
    out.push_back(no_x.take());
    return out;
}

namespace {

// Verified per morphism with a constant tracker into the given block.
PerMorphism constant_morphism(const Per& source, const Per& target, std::size_t block,
                              Fuel fuel) {
    return make_per_morphism(source, target, app(Term::k(), target.blocks()[block][0]), fuel);
}

// A tracker equivalent to t but syntactically different: \z. i (t z).
Term rewrapped(const Term& t) {
    return abstract("z", app(derived(Combinator::Identity), app(t, var("z"))));
}

}  // namespace

std::vector<LawResult> per_category_laws(const LawsConfig& cfg) {
    Rng rng(cfg.seed);
    Fuel fuel{cfg.fuel};
    LawRun left_id("id ; f = f");
    LawRun right_id("f ; id = f");
    LawRun assoc("(f ; g) ; h = f ; (g ; h)");
    LawRun representative("equivalent trackers compose to equivalent trackers");
    LawRun equivalence_refl("tracker equivalence is reflexive");
    LawRun equivalence_sym("tracker equivalence is symmetric");
    LawRun projection("pr1 tracks paired(R) -> R");

    int rounds = cfg.samples / 4 + 1;
    for (int i = 0; i < rounds; ++i) {
        Per r = random_per(rng, 3, 2, fuel);
        Per s = random_per(rng, 3, 2, fuel);
        Per t = random_per(rng, 3, 2, fuel);
        if (r.blocks().empty() || s.blocks().empty() || t.blocks().empty()) continue;

        std::size_t sb = static_cast<std::size_t>(rng.range(0, (int)s.blocks().size() - 1));
        std::size_t tb = static_cast<std::size_t>(rng.range(0, (int)t.blocks().size() - 1));
        PerMorphism f = constant_morphism(r, s, sb, fuel);
        PerMorphism g = constant_morphism(s, t, tb, fuel);

        auto show = [&] { return r.name() + " -> " + s.name() + " -> " + t.name(); };
        left_id.record(trackers_equivalent(per_compose(per_identity(r, fuel), f, fuel).tracker(),
                                           f.tracker(), r, s, fuel),
                       show);
        right_id.record(trackers_equivalent(per_compose(f, per_identity(s, fuel), fuel).tracker(),
                                            f.tracker(), r, s, fuel),
                        show);

        PerMorphism h = make_per_morphism(t, t, rng.chance(0.5)
                                                    ? derived(Combinator::Identity)
                                                    : app(Term::k(), t.blocks()[tb][0]),
                                          fuel);
        Term lhs = per_compose(per_compose(f, g, fuel), h, fuel).tracker();
        Term rhs = per_compose(f, per_compose(g, h, fuel), fuel).tracker();
        assoc.record(trackers_equivalent(lhs, rhs, r, t, fuel), show);

        PerMorphism f2 = make_per_morphism(r, s, rewrapped(f.tracker()), fuel);
        equivalence_refl.record(trackers_equivalent(f.tracker(), f.tracker(), r, s, fuel), show);
        TriState fwd = trackers_equivalent(f.tracker(), f2.tracker(), r, s, fuel);
        TriState bwd = trackers_equivalent(f2.tracker(), f.tracker(), r, s, fuel);
        equivalence_sym.record(combine(fwd, bwd), show);
        representative.record(
            trackers_equivalent(per_compose(f, g, fuel).tracker(),
                                per_compose(f2, g, fuel).tracker(), r, t, fuel),
            show);

        Per paired = paired_per(r, fuel);
        PerMorphism proj = make_per_morphism(paired, r, derived(Combinator::Pr1), fuel);
        projection.record(proj.verification().verdict, [&] { return paired.name(); });
    }

    std::vector<LawResult> out;
    for (LawRun* run : {&left_id, &right_id, &assoc, &representative, &equivalence_refl,
                        &equivalence_sym, &projection}) {
        out.push_back(run->take());
    }
    return out;
}

std::vector<LawResult> subquotient_laws(const LawsConfig& cfg) {
    Rng rng(cfg.seed);
    Fuel fuel{cfg.fuel};
    LawRun modest("subquotient(R) is modest");
    LawRun functor_id("subquot(id_R) = id_subquot(R)");
    LawRun functor_comp("subquot(f ; g) = subquot(f) ; subquot(g)");
    LawRun coherence("realizes(subquot R, t, ci) agrees with membership in block i");
    LawRun roundtrip("subquot(perify(subquot f)) = subquot f");
    LawRun faithful_full("full faithfulness instances report no violation");

    int rounds = cfg.samples / 4 + 1;
    for (int i = 0; i < rounds; ++i) {
        Per r = random_per(rng, 3, 2, fuel);
        auto show_r = [&] { return r.name(); };
        modest.record(check_subquotient_modest(r, fuel).verdict, show_r);

        SubquotientAssembly sq = subquotient(r);
        if (!r.blocks().empty()) {
            AsmMorphism lifted = subquot_morphism(per_identity(r, fuel), fuel);
            functor_id.expect(morphisms_equal(lifted, asm_identity(sq.underlying, fuel)),
                              show_r);

            Term probe = rng.chance(0.5) ? random_normal_term(rng, 9)
                                         : app(derived(Combinator::Identity),
                                               rng.pick(rng.pick(r.blocks())));
            std::size_t block = static_cast<std::size_t>(
                rng.range(0, (int)r.blocks().size() - 1));
            TriState via_asm = realizes(sq.underlying, probe, "c" + std::to_string(block), fuel);
            TriState via_per = block_membership(r, probe, block, fuel);
            coherence.expect(via_asm.verdict() == via_per.verdict(),
                             [&] { return "probe=" + to_string(probe); });
        }

        Per s = random_per(rng, 3, 2, fuel);
        Per t = random_per(rng, 3, 2, fuel);
        if (r.blocks().empty() || s.blocks().empty() || t.blocks().empty()) continue;
        std::size_t sb = static_cast<std::size_t>(rng.range(0, (int)s.blocks().size() - 1));
        std::size_t tb = static_cast<std::size_t>(rng.range(0, (int)t.blocks().size() - 1));
        PerMorphism f = constant_morphism(r, s, sb, fuel);
        PerMorphism g = constant_morphism(s, t, tb, fuel);
        auto show = [&] { return r.name() + " -> " + s.name() + " -> " + t.name(); };

        AsmMorphism left = subquot_morphism(per_compose(f, g, fuel), fuel);
        AsmMorphism right = asm_compose(subquot_morphism(f, fuel), subquot_morphism(g, fuel),
                                        fuel);
        functor_comp.expect(morphisms_equal(left, right), show);

        AsmMorphism lifted_f = subquot_morphism(f, fuel);
        PerMorphism back = perify(subquotient(r), subquotient(s), lifted_f, fuel);
        roundtrip.expect(morphisms_equal(subquot_morphism(back, fuel), lifted_f), show);

        std::vector<Term> candidates{f.tracker(), rewrapped(f.tracker()),
                                     app(Term::k(), s.blocks()[sb][0])};
        TrackerReport ff = check_fully_faithful(r, s, candidates, fuel);
        faithful_full.record(ff.verdict, show);
    }

    std::vector<LawResult> out;
    for (LawRun* run : {&modest, &functor_id, &functor_comp, &coherence, &roundtrip,
                        &faithful_full}) {
        out.push_back(run->take());
    }
    return out;
}

std::vector<LawResult> equivalence_laws(const LawsConfig& cfg) {
    Rng rng(cfg.seed);
    Fuel fuel{cfg.fuel};
    LawRun iso("modest M is isomorphic to subquot(canon M)");
    LawRun identity_trackers("forward and backward trackers are i");
    LawRun canon_valid("canon(M) validates as a per");

    int rounds = cfg.samples / 2 + 1;
    for (int i = 0; i < rounds; ++i) {
        Assembly m = random_modest_assembly(rng, 6, 3);
        auto show = [&] { return m.name(); };
        IsoReport report = check_iso(m, fuel);
        iso.record(report.verdict, show);
        AsmMorphism fwd = forward_morphism(m, fuel);
        AsmMorphism bwd = backward_morphism(m, fuel);
        identity_trackers.expect(fwd.tracker() == derived(Combinator::Identity) &&
                                     bwd.tracker() == derived(Combinator::Identity),
                                 show);
        Per canon = canonical_per(m, fuel);
        canon_valid.expect(canon.blocks().size() == m.elements().size(), show);
    }

    std::vector<LawResult> out;
    out.push_back(iso.take());
    out.push_back(identity_trackers.take());
    out.push_back(canon_valid.take());
    return out;
}

std::vector<LawResult> all_laws(const LawsConfig& cfg) {
    std::vector<LawResult> out;
    for (auto* suite : {&combinator_laws, &derived_combinator_laws, &abstraction_laws,
                        &per_category_laws, &subquotient_laws, &equivalence_laws}) {
        std::vector<LawResult> part = (*suite)(cfg);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

TrackerReport to_report(const std::vector<LawResult>& results) {
    std::vector<Obligation> obligations;
    for (const LawResult& r : results) {
        std::string detail = std::to_string(r.holds) + " hold, " + std::to_string(r.fails) +
                             " fail, " + std::to_string(r.unknowns) + " undecided of " +
                             std::to_string(r.samples);
        if (!r.first_issue.empty()) detail += "; " + r.first_issue;
        obligations.push_back(Obligation{r.law, std::move(detail), r.verdict()});
    }
    return make_report(std::move(obligations));
}

}  // namespace realizability
