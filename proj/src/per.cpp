#include "realizability/per.hpp"

#include <utility>

#include "realizability/combinators.hpp"
#include "realizability/errors.hpp"

namespace realizability {

bool operator==(const Per& a, const Per& b) {
    return a.name_ == b.name_ && a.blocks_ == b.blocks_;
}

Per make_per(std::string name, std::vector<std::vector<Term>> blocks, Fuel fuel) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty()) throw EmptyBlockError(i);
        for (const Term& g : blocks[i]) {
            if (!g.is_closed()) throw OpenTermError(to_string(g));
        }
    }
    bool saw_unknown = false;
    std::string unknown_reason;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            for (const Term& g : blocks[i]) {
                for (const Term& h : blocks[j]) {
                    TriState c = convertible(g, h, fuel);
                    if (c.is_holds()) throw OverlappingBlocksError(i, j, to_string(g));
                    if (c.is_unknown() && !saw_unknown) {
                        saw_unknown = true;
                        unknown_reason = "cannot separate " + to_string(g) + " (block " +
                                         std::to_string(i) + ") from " + to_string(h) +
                                         " (block " + std::to_string(j) + "): " + c.reason();
                    }
                }
            }
        }
    }
    if (saw_unknown) throw UndecidedError(unknown_reason);
    Per r;
    r.name_ = std::move(name);
    r.blocks_ = std::move(blocks);
    return r;
}

TriState block_membership(const Per& r, const Term& t, std::size_t i, Fuel fuel) {
    bool saw_unknown = false;
    std::string unknown_reason;
    for (const Term& g : r.blocks()[i]) {
        TriState c = convertible(t, g, fuel);
        if (c.is_holds()) return TriState::holds();
        if (c.is_unknown() && !saw_unknown) {
            saw_unknown = true;
            unknown_reason = c.reason();
        }
    }
    if (saw_unknown) return TriState::unknown(unknown_reason);
    return TriState::fails();
}

TriState related(const Per& r, const Term& a, const Term& b, Fuel fuel) {
    const std::size_t n = r.blocks().size();
    std::vector<TriState> ma;
    std::vector<TriState> mb;
    ma.reserve(n);
    mb.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ma.push_back(block_membership(r, a, i, fuel));
        mb.push_back(block_membership(r, b, i, fuel));
    }
    // Same block decidedly: related. Blocks of a valid per are disjoint, so a
    // term sits in at most one block; a decided membership on one side with a
    // decided non-membership on the other refutes relatedness outright.
    bool a_everywhere_out = true;
    bool b_everywhere_out = true;
    std::string pending;
    for (std::size_t i = 0; i < n; ++i) {
        if (ma[i].is_holds() && mb[i].is_holds()) return TriState::holds();
        if (ma[i].is_holds() && mb[i].is_fails()) return TriState::fails();
        if (mb[i].is_holds() && ma[i].is_fails()) return TriState::fails();
        if (!ma[i].is_fails()) a_everywhere_out = false;
        if (!mb[i].is_fails()) b_everywhere_out = false;
        if (pending.empty()) {
            if (ma[i].is_unknown()) pending = "membership of " + to_string(a) + " in block " +
                                              std::to_string(i) + ": " + ma[i].reason();
            else if (mb[i].is_unknown()) pending = "membership of " + to_string(b) +
                                                   " in block " + std::to_string(i) + ": " +
                                                   mb[i].reason();
        }
    }
    // Covers the empty per, which relates nothing.
    if (a_everywhere_out || b_everywhere_out) return TriState::fails();
    return TriState::unknown(pending.empty() ? "memberships undecided" : pending);
}

std::vector<PerDomainElement> per_domain(const Per& r) {
    std::vector<PerDomainElement> out;
    for (std::size_t i = 0; i < r.blocks().size(); ++i) {
        for (const Term& g : r.blocks()[i]) {
            out.push_back(PerDomainElement{g, i});
        }
    }
    return out;
}

TrackerReport check_tracker(const Term& tracker, const Per& source, const Per& target,
                            Fuel fuel) {
    if (!tracker.is_closed()) throw OpenTermError(to_string(tracker));
    std::vector<Obligation> obligations;
    for (std::size_t b = 0; b < source.blocks().size(); ++b) {
        const std::vector<Term>& gens = source.blocks()[b];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t j = i; j < gens.size(); ++j) {
                TriState v = related(target, app(tracker, gens[i]), app(tracker, gens[j]), fuel);
                std::string subject = "block " + std::to_string(b) + ": (" +
                                      to_string(gens[i]) + ", " + to_string(gens[j]) + ")";
                std::string detail = "images must be related in " + target.name();
                if (!v.reason().empty()) detail += "; " + v.reason();
                obligations.push_back(Obligation{std::move(subject), std::move(detail), v});
            }
        }
    }
    return make_report(std::move(obligations));
}

TriState trackers_equivalent(const Term& t, const Term& u, const Per& source,
                             const Per& target, Fuel fuel) {
    TriState out = TriState::holds();
    for (const PerDomainElement& d : per_domain(source)) {
        out = combine(out, related(target, app(t, d.term), app(u, d.term), fuel));
        if (out.is_fails()) break;
    }
    return out;
}

PerMorphism make_per_morphism(Per source, Per target, Term tracker, Fuel fuel) {
    TrackerReport report = check_tracker(tracker, source, target, fuel);
    if (report.verdict.is_fails()) throw NotTrackedError(std::move(report));
    if (report.verdict.is_unknown()) throw UndecidedError(report.verdict.reason());
    return PerMorphism(std::move(source), std::move(target), std::move(tracker),
                       std::move(report));
}

PerMorphism per_identity(const Per& r, Fuel fuel) {
    return make_per_morphism(r, r, derived(Combinator::Identity), fuel);
}

PerMorphism per_compose(const PerMorphism& f, const PerMorphism& g, Fuel fuel) {
    if (f.target() != g.source()) {
        throw SignatureMismatchError("compose: target of first differs from source of second");
    }
    Term tracker = abstract("x", app(g.tracker(), app(f.tracker(), var("x"))));
    return make_per_morphism(f.source(), g.target(), std::move(tracker), fuel);
}

}  // namespace realizability
