#include "realizability/cli_runner.hpp"

#include <json.hpp>

#include "realizability/combinators.hpp"
#include "realizability/equivalence.hpp"
#include "realizability/laws.hpp"
#include "realizability/subquotient.hpp"

namespace realizability {

namespace {

void require_args(const std::string& command, const std::vector<std::string>& args,
                  std::size_t n) {
    if (args.size() != n) {
        throw UnknownCommandError(command + " expects " + std::to_string(n) + " argument(s)");
    }
}

Per per_from_decl(const PerDecl& decl, Fuel fuel) {
    return make_per(decl.name, decl.blocks, fuel);
}

const PerDecl& named_per(const Workspace& ws, const std::string& name) {
    const PerDecl* decl = ws.find_per(name);
    if (decl == nullptr) throw NameNotFoundError(name);
    return *decl;
}

const Assembly& named_assembly(const Workspace& ws, const std::string& name) {
    const Assembly* a = ws.find_assembly(name);
    if (a == nullptr) throw NameNotFoundError(name);
    return *a;
}

Report report_for(std::string command, std::vector<Obligation> obligations, Fuel fuel) {
    TrackerReport agg = make_report(std::move(obligations));
    return Report{std::move(command), agg.verdict, std::move(agg.obligations), fuel.steps};
}

Report run_normalize(const std::vector<std::string>& args, const Workspace& ws, Fuel fuel) {
    Term t = parse_term(args[0], &ws, false);
    NormalizeResult r = normalize(t, fuel);
    std::vector<Obligation> obs;
    if (r.is_normal) {
        obs.push_back(Obligation{to_string(t),
                                 "normal form " + to_string(r.term) + " in " +
                                     std::to_string(r.steps) + " step(s)",
                                 TriState::holds()});
    } else {
        obs.push_back(Obligation{
            to_string(t),
            "no normal form within " + std::to_string(r.steps) + " step(s); last reduct " +
                to_string(r.term),
            TriState::unknown("fuel exhausted")});
    }
    return report_for("normalize", std::move(obs), fuel);
}

Report run_compile(const std::vector<std::string>& args, const Workspace& ws, Fuel fuel) {
    Term t = parse_term(args[0], &ws, false);
    std::vector<Obligation> obs;
    obs.push_back(Obligation{args[0], to_string(t), TriState::holds()});
    return report_for("compile", std::move(obs), fuel);
}

Report run_check_modest(const std::vector<std::string>& args, const Workspace& ws, Fuel fuel) {
    const Assembly& a = named_assembly(ws, args[0]);
    ModestyReport r = is_modest(a, fuel);
    std::vector<Obligation> obs;
    std::string detail = "distinct elements share no realizer";
    if (r.counterexample) {
        detail = "elements " + r.counterexample->x + " and " + r.counterexample->y +
                 " share realizer " + to_string(r.counterexample->realizer);
    } else if (!r.verdict.reason().empty()) {
        detail = r.verdict.reason();
    }
    obs.push_back(Obligation{a.name() + " is modest", std::move(detail), r.verdict});
    return report_for("check-modest", std::move(obs), fuel);
}

Report run_check_per(const std::vector<std::string>& args, const Workspace& ws, Fuel fuel) {
    const PerDecl& decl = named_per(ws, args[0]);
    std::vector<Obligation> obs;
    try {
        Per r = per_from_decl(decl, fuel);
        obs.push_back(Obligation{decl.name + " is a valid per",
                                 std::to_string(r.blocks().size()) +
                                     " pairwise disjoint block(s)",
                                 TriState::holds()});
    } catch (const OverlappingBlocksError& e) {
        obs.push_back(Obligation{decl.name + " is a valid per", e.what(), TriState::fails()});
    } catch (const EmptyBlockError& e) {
        obs.push_back(Obligation{decl.name + " is a valid per", e.what(), TriState::fails()});
    } catch (const UndecidedError& e) {
        obs.push_back(Obligation{decl.name + " is a valid per", e.reason,
                                 TriState::unknown(e.reason)});
    }
    return report_for("check-per", std::move(obs), fuel);
}

Report run_check_tracker(const std::vector<std::string>& args, const Workspace& ws,
                         Fuel fuel) {
    const MorphismDecl* decl = ws.find_morphism(args[0]);
    if (decl == nullptr) throw NameNotFoundError(args[0]);

    const Assembly* src_asm = ws.find_assembly(decl->source);
    const Assembly* tgt_asm = ws.find_assembly(decl->target);
    const PerDecl* src_per = ws.find_per(decl->source);
    const PerDecl* tgt_per = ws.find_per(decl->target);

    if (src_asm != nullptr && tgt_asm != nullptr && (src_per || tgt_per)) {
        throw SignatureMismatchError(decl->source + " -> " + decl->target +
                                     ": ambiguous between assemblies and pers");
    }
    if (src_asm != nullptr && tgt_asm != nullptr) {
        std::map<std::string, std::string> mapping(decl->mapping.begin(), decl->mapping.end());
        TrackerReport r = check_tracker(*src_asm, *tgt_asm, mapping, decl->tracker, fuel);
        return Report{"check-tracker", r.verdict, std::move(r.obligations), fuel.steps};
    }
    if (src_per != nullptr && tgt_per != nullptr) {
        if (!decl->mapping.empty()) {
            throw UnknownCommandError("map " + decl->name +
                                      ": per morphisms carry no element entries");
        }
        std::vector<Obligation> obs;
        try {
            Per src = per_from_decl(*src_per, fuel);
            Per tgt = per_from_decl(*tgt_per, fuel);
            TrackerReport r = check_tracker(decl->tracker, src, tgt, fuel);
            return Report{"check-tracker", r.verdict, std::move(r.obligations), fuel.steps};
        } catch (const OverlappingBlocksError& e) {
            obs.push_back(Obligation{"endpoints of " + decl->name + " are valid pers",
                                     e.what(), TriState::fails()});
        } catch (const EmptyBlockError& e) {
            obs.push_back(Obligation{"endpoints of " + decl->name + " are valid pers",
                                     e.what(), TriState::fails()});
        } catch (const UndecidedError& e) {
            obs.push_back(Obligation{"endpoints of " + decl->name + " are valid pers",
                                     e.reason, TriState::unknown(e.reason)});
        }
        return report_for("check-tracker", std::move(obs), fuel);
    }
    throw NameNotFoundError(decl->source + " -> " + decl->target);
}

Report run_subquotient(const std::vector<std::string>& args, const Workspace& ws, Fuel fuel) {
    const PerDecl& decl = named_per(ws, args[0]);
    std::vector<Obligation> obs;
    try {
        SubquotientAssembly sq = subquotient(per_from_decl(decl, fuel));
        for (const std::string& el : sq.underlying.elements()) {
            std::string listing;
            for (const Term& r : sq.underlying.realizers(el)) {
                if (!listing.empty()) listing += ", ";
                listing += to_string(r);
            }
            obs.push_back(Obligation{sq.underlying.name() + "." + el,
                                     "realized by " + listing, TriState::holds()});
        }
        if (obs.empty()) {
            obs.push_back(Obligation{sq.underlying.name(), "empty assembly",
                                     TriState::holds()});
        }
    } catch (const OverlappingBlocksError& e) {
        obs.push_back(Obligation{decl.name + " is a valid per", e.what(), TriState::fails()});
    } catch (const EmptyBlockError& e) {
        obs.push_back(Obligation{decl.name + " is a valid per", e.what(), TriState::fails()});
    } catch (const UndecidedError& e) {
        obs.push_back(Obligation{decl.name + " is a valid per", e.reason,
                                 TriState::unknown(e.reason)});
    }
    return report_for("subquotient", std::move(obs), fuel);
}

Report run_canonical_per(const std::vector<std::string>& args, const Workspace& ws,
                         Fuel fuel) {
    const Assembly& m = named_assembly(ws, args[0]);
    std::vector<Obligation> obs;
    try {
        Per r = canonical_per(m, fuel);
        for (std::size_t i = 0; i < r.blocks().size(); ++i) {
            std::string listing;
            for (const Term& g : r.blocks()[i]) {
                if (!listing.empty()) listing += ", ";
                listing += to_string(g);
            }
            obs.push_back(Obligation{r.name() + " block " + std::to_string(i),
                                     "generated by " + listing, TriState::holds()});
        }
        if (obs.empty()) {
            obs.push_back(Obligation{r.name(), "empty per", TriState::holds()});
        }
    } catch (const NotModestError& e) {
        obs.push_back(Obligation{m.name() + " is modest", e.what(), TriState::fails()});
    } catch (const UndecidedError& e) {
        obs.push_back(Obligation{m.name() + " is modest", e.reason,
                                 TriState::unknown(e.reason)});
    }
    return report_for("canonical-per", std::move(obs), fuel);
}

void append_iso_obligations(const std::string& name, const IsoReport& r,
                            std::vector<Obligation>& obs) {
    std::string modesty_detail = "distinct elements share no realizer";
    if (r.modesty.counterexample) {
        modesty_detail = "elements " + r.modesty.counterexample->x + " and " +
                         r.modesty.counterexample->y + " share realizer " +
                         to_string(r.modesty.counterexample->realizer);
    } else if (!r.modesty.verdict.reason().empty()) {
        modesty_detail = r.modesty.verdict.reason();
    }
    obs.push_back(Obligation{name + ": modest", std::move(modesty_detail), r.modesty.verdict});
    obs.push_back(Obligation{name + ": forward tracked by i",
                             r.forward_ok.verdict.reason(), r.forward_ok.verdict});
    obs.push_back(Obligation{name + ": backward tracked by i",
                             r.backward_ok.verdict.reason(), r.backward_ok.verdict});
    obs.push_back(Obligation{name + ": forward after backward is the identity",
                             r.fb_identity.reason(), r.fb_identity});
    obs.push_back(Obligation{name + ": backward after forward is the identity",
                             r.bf_identity.reason(), r.bf_identity});
}

Report run_check_iso(const std::vector<std::string>& args, const Workspace& ws, Fuel fuel) {
    const Assembly& m = named_assembly(ws, args[0]);
    IsoReport r = check_iso(m, fuel);
    std::vector<Obligation> obs;
    append_iso_obligations(m.name(), r, obs);
    return report_for("check-iso", std::move(obs), fuel);
}

Report run_check_equivalence(const std::vector<std::string>& args, const Workspace& ws,
                             Fuel fuel) {
    if (args.empty()) throw UnknownCommandError("check-equivalence expects assembly names");
    std::vector<Obligation> obs;
    std::vector<const Assembly*> listed;
    for (const std::string& name : args) listed.push_back(&named_assembly(ws, name));

    for (const Assembly* m : listed) {
        IsoReport r = check_iso(*m, fuel);
        append_iso_obligations(m->name(), r, obs);
    }

    // Full-faithfulness instances between canonical pers. Candidate trackers:
    // the identity on a per with itself, plus any declared assembly morphism
    // between the listed assemblies (its tracker also tracks the canonical
    // pers, since canonical blocks are exactly the realizer sets).
    for (const Assembly* a : listed) {
        for (const Assembly* b : listed) {
            std::vector<Term> candidates;
            if (a == b) candidates.push_back(derived(Combinator::Identity));
            for (const MorphismDecl& decl : ws.morphisms) {
                if (decl.source == a->name() && decl.target == b->name()) {
                    candidates.push_back(decl.tracker);
                }
            }
            if (candidates.empty()) continue;
            std::string subject = "fully faithful on canon(" + a->name() + ") -> canon(" +
                                  b->name() + ")";
            try {
                Per ra = canonical_per(*a, fuel);
                Per rb = canonical_per(*b, fuel);
                TrackerReport ff = check_fully_faithful(ra, rb, candidates, fuel);
                std::string detail = std::to_string(candidates.size()) + " candidate(s)";
                if (!ff.verdict.reason().empty()) detail += "; " + ff.verdict.reason();
                for (const Obligation& o : ff.obligations) {
                    if (!o.verdict.is_holds()) detail += "; " + o.subject + ": " + o.detail;
                }
                obs.push_back(Obligation{std::move(subject), std::move(detail), ff.verdict});
            } catch (const NotModestError& e) {
                obs.push_back(Obligation{std::move(subject), e.what(), TriState::fails()});
            } catch (const UndecidedError& e) {
                obs.push_back(Obligation{std::move(subject), e.reason,
                                         TriState::unknown(e.reason)});
            }
        }
    }
    return report_for("check-equivalence", std::move(obs), fuel);
}

Report run_laws(const Workspace&, const CliFlags& flags) {
    LawsConfig cfg{flags.fuel, flags.samples, flags.seed};
    TrackerReport r = to_report(all_laws(cfg));
    return Report{"laws", r.verdict, std::move(r.obligations), flags.fuel};
}

}  // namespace

Report run_command(const std::string& command, const std::vector<std::string>& args,
                   const Workspace& ws, const CliFlags& flags) {
    Fuel fuel{flags.fuel};
    if (command == "normalize") {
        require_args(command, args, 1);
        return run_normalize(args, ws, fuel);
    }
    if (command == "compile") {
        require_args(command, args, 1);
        return run_compile(args, ws, fuel);
    }
    if (command == "check-modest") {
        require_args(command, args, 1);
        return run_check_modest(args, ws, fuel);
    }
    if (command == "check-per") {
        require_args(command, args, 1);
        return run_check_per(args, ws, fuel);
    }
    if (command == "check-tracker") {
        require_args(command, args, 1);
        return run_check_tracker(args, ws, fuel);
    }
    if (command == "subquotient") {
        require_args(command, args, 1);
        return run_subquotient(args, ws, fuel);
    }
    if (command == "canonical-per") {
        require_args(command, args, 1);
        return run_canonical_per(args, ws, fuel);
    }
    if (command == "check-iso") {
        require_args(command, args, 1);
        return run_check_iso(args, ws, fuel);
    }
    if (command == "check-equivalence") {
        return run_check_equivalence(args, ws, fuel);
    }
    if (command == "laws") {
        if (!args.empty()) throw UnknownCommandError("laws takes no positional arguments");
        return run_laws(ws, flags);
    }
    throw UnknownCommandError(command);
}

std::string render_text(const Report& report) {
    std::string out;
    out += "command: " + report.command + "\n";
    out += "verdict: " + std::string(to_string(report.verdict.verdict()));
    if (!report.verdict.reason().empty()) out += " (" + report.verdict.reason() + ")";
    out += "\n";
    out += "fuel: " + std::to_string(report.fuel) + "\n";
    for (const Obligation& o : report.obligations) {
        out += "  [" + std::string(to_string(o.verdict.verdict())) + "] " + o.subject;
        if (!o.detail.empty()) out += ": " + o.detail;
        out += "\n";
    }
    return out;
}

std::string render_json(const Report& report) {
    nlohmann::ordered_json obligations = nlohmann::ordered_json::array();
    for (const Obligation& o : report.obligations) {
        obligations.push_back({{"subject", o.subject},
                               {"verdict", to_string(o.verdict.verdict())},
                               {"detail", o.detail}});
    }
    nlohmann::ordered_json j{{"command", report.command},
                             {"verdict", to_string(report.verdict.verdict())},
                             {"fuel", report.fuel},
                             {"obligations", obligations}};
    return j.dump(2) + "\n";
}

int exit_code(const Report& report) {
    switch (report.verdict.verdict()) {
        case Verdict::Holds: return 0;
        case Verdict::Fails: return 1;
        case Verdict::Unknown: return 2;
    }
    return 3;
}

}  // namespace realizability
