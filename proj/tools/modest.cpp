// modest: batch checker for combinatory realizability workspaces.
//
//   modest normalize "(K S) K"
//   modest --workspace w.ws check-modest M
//   modest --format json check-per R --fuel 20000
//   modest laws --samples 50 --seed 7
//
// Exit codes: 0 the check holds, 1 it fails, 2 undecided at this fuel,
// 3 usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "realizability/cli_runner.hpp"
#include "realizability/workspace.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw realizability::Error("cannot open workspace file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatory realizability checker"};
    app.require_subcommand(1);

    realizability::CliFlags flags;
    std::string workspace_path;
    std::string format = "text";
    app.add_option("-w,--workspace", workspace_path, "workspace file to load");
    app.add_option("--fuel", flags.fuel, "reduction step budget per normalization");
    app.add_option("--samples", flags.samples, "sample count for the laws command");
    app.add_option("--seed", flags.seed, "rng seed for the laws command");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    struct Sub {
        const char* name;
        const char* help;
        int nargs;  // -1: one or more
    };
    const Sub subs[] = {
        {"normalize", "reduce a term to normal form", 1},
        {"compile", "show a term after lambda elimination", 1},
        {"check-modest", "check that an assembly is modest", 1},
        {"check-per", "check that a per declaration is valid", 1},
        {"check-tracker", "verify the tracker of a declared map", 1},
        {"subquotient", "print the subquotient assembly of a per", 1},
        {"canonical-per", "print the canonical per of a modest assembly", 1},
        {"check-iso", "check the canonical isomorphism for an assembly", 1},
        {"check-equivalence", "run the equivalence checks over assemblies", -1},
        {"laws", "run the generated law suites", 0},
    };
    std::vector<std::string> args;
    for (const Sub& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->fallthrough();  // lets --fuel and friends follow the subcommand
        if (s.nargs == 1) {
            sub->add_option("arg", args, "argument")->expected(1)->required();
        } else if (s.nargs == -1) {
            sub->add_option("arg", args, "arguments")->expected(-1)->required();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0 through CLI11; real errors land on 3.
        std::ostream& out = e.get_exit_code() == 0 ? std::cout : std::cerr;
        int code = app.exit(e, out, out);
        return code == 0 ? 0 : 3;
    }

    flags.json = format == "json";

    try {
        realizability::Workspace ws;
        if (!workspace_path.empty()) ws = realizability::parse_workspace(slurp(workspace_path));
        const std::string command = app.get_subcommands().front()->get_name();
        realizability::Report report = realizability::run_command(command, args, ws, flags);
        std::cout << (flags.json ? realizability::render_json(report)
                                 : realizability::render_text(report));
        return realizability::exit_code(report);
    } catch (const realizability::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
