#include "realizability/subquotient.hpp"

#include <utility>

#include "realizability/errors.hpp"

namespace realizability {

namespace {

std::string block_label(std::size_t i) { return "c" + std::to_string(i); }

}  // namespace

SubquotientAssembly subquotient(const Per& r) {
    std::vector<std::string> elements;
    std::map<std::string, std::vector<Term>> realizers;
    for (std::size_t i = 0; i < r.blocks().size(); ++i) {
        elements.push_back(block_label(i));
        realizers[block_label(i)] = r.blocks()[i];
    }
    Assembly a = make_assembly("subquot(" + r.name() + ")", std::move(elements),
                               std::move(realizers));
    return SubquotientAssembly{std::move(a), r};
}

ModestyReport check_subquotient_modest(const Per& r, Fuel fuel) {
    return is_modest(subquotient(r).underlying, fuel);
}

AsmMorphism subquot_morphism(const PerMorphism& f, Fuel fuel) {
    SubquotientAssembly src = subquotient(f.source());
    SubquotientAssembly tgt = subquotient(f.target());
    std::map<std::string, std::string> mapping;
    const auto& src_blocks = f.source().blocks();
    for (std::size_t i = 0; i < src_blocks.size(); ++i) {
        Term image = app(f.tracker(), src_blocks[i][0]);
        bool found = false;
        bool undecided = false;
        std::string undecided_reason;
        for (std::size_t j = 0; j < f.target().blocks().size(); ++j) {
            TriState m = block_membership(f.target(), image, j, fuel);
            if (m.is_holds()) {
                mapping[block_label(i)] = block_label(j);
                found = true;
                break;
            }
            if (m.is_unknown() && !undecided) {
                undecided = true;
                undecided_reason = "image " + to_string(image) + " vs block " +
                                   std::to_string(j) + ": " + m.reason();
            }
        }
        if (found) continue;
        if (undecided) throw UndecidedError(undecided_reason);
        throw TargetBlockNotFoundError("image of block " + std::to_string(i) + " generator " +
                                       to_string(src_blocks[i][0]) +
                                       " lies in no block of " + f.target().name());
    }
    return make_asm_morphism(std::move(src.underlying), std::move(tgt.underlying),
                             std::move(mapping), f.tracker(), fuel);
}

PerMorphism perify(const SubquotientAssembly& a, const SubquotientAssembly& b,
                   const AsmMorphism& m, Fuel fuel) {
    if (m.source() != a.underlying || m.target() != b.underlying) {
        throw SignatureMismatchError("perify: morphism does not run between the subquotients");
    }
    return make_per_morphism(a.source, b.source, m.tracker(), fuel);
}

TrackerReport check_fully_faithful(const Per& source, const Per& target,
                                   const std::vector<Term>& candidates, Fuel fuel) {
    std::vector<Obligation> obligations;
    std::vector<std::optional<AsmMorphism>> induced;
    induced.reserve(candidates.size());
    SubquotientAssembly sq_src = subquotient(source);
    SubquotientAssembly sq_tgt = subquotient(target);

    // Candidates are supposed to track source -> target; a candidate that
    // does not is itself a reported violation, not an exception.
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        try {
            PerMorphism f = make_per_morphism(source, target, candidates[i], fuel);
            induced.push_back(subquot_morphism(f, fuel));
        } catch (const NotTrackedError& e) {
            induced.push_back(std::nullopt);
            obligations.push_back(Obligation{"candidate " + std::to_string(i),
                                             "does not track: " + std::string(e.what()),
                                             TriState::fails()});
        } catch (const UndecidedError& e) {
            induced.push_back(std::nullopt);
            obligations.push_back(Obligation{"candidate " + std::to_string(i),
                                             e.reason, TriState::unknown(e.reason)});
        }
    }

    // Faithfulness: equal induced morphisms force equivalent trackers.
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (!induced[i] || !induced[j]) continue;
            std::string subject = "faithful: candidates " + std::to_string(i) + ", " +
                                  std::to_string(j);
            if (!morphisms_equal(*induced[i], *induced[j])) {
                obligations.push_back(Obligation{std::move(subject),
                                                 "induced morphisms differ; vacuous",
                                                 TriState::holds()});
                continue;
            }
            TriState v = trackers_equivalent(candidates[i], candidates[j], source, target, fuel);
            std::string detail = "same induced morphism, trackers must be equivalent";
            if (!v.reason().empty()) detail += "; " + v.reason();
            obligations.push_back(Obligation{std::move(subject), std::move(detail), v});
        }
    }

    // Fullness round trip: perify the induced morphism and compare.
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!induced[i]) continue;
        PerMorphism back = perify(sq_src, sq_tgt, *induced[i], fuel);
        AsmMorphism again = subquot_morphism(back, fuel);
        std::string subject = "full: candidate " + std::to_string(i);
        if (!morphisms_equal(again, *induced[i])) {
            obligations.push_back(Obligation{std::move(subject),
                                             "round trip induced a different morphism",
                                             TriState::fails()});
            continue;
        }
        TriState v = trackers_equivalent(back.tracker(), candidates[i], source, target, fuel);
        std::string detail = "round-tripped tracker equivalent to the original";
        if (!v.reason().empty()) detail += "; " + v.reason();
        obligations.push_back(Obligation{std::move(subject), std::move(detail), v});
    }

    return make_report(std::move(obligations));
}

}  // namespace realizability
