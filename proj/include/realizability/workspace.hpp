#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "realizability/assembly.hpp"
#include "realizability/per.hpp"

namespace realizability {

// Raw per declaration. Validation is fuel-dependent, so it happens when a
// command needs the per, not at parse time; check-per exists to report it.
struct PerDecl {
    std::string name;
    std::vector<std::vector<Term>> blocks;
};

// map f : A -> B { x => y; ... tracker t; }. Whether this is an assembly or
// a per morphism is resolved from what A and B name; per morphisms carry no
// element entries.
struct MorphismDecl {
    std::string name;
    std::string source;
    std::string target;
    std::vector<std::pair<std::string, std::string>> mapping;
    Term tracker;
};

struct Workspace {
    std::vector<std::pair<std::string, Term>> definitions;  // let-bound, closed
    std::vector<std::pair<std::string, Assembly>> assemblies;
    std::vector<PerDecl> pers;
    std::vector<MorphismDecl> morphisms;

    const Term* find_definition(const std::string& name) const;
    const Assembly* find_assembly(const std::string& name) const;
    const PerDecl* find_per(const std::string& name) const;
    const MorphismDecl* find_morphism(const std::string& name) const;
};

// Grammar (comments run # to end of line; S and K are reserved):
//   workspace := item*
//   item      := 'let' IDENT '=' term ';'
//              | 'assembly' IDENT '{' ('element' IDENT '|-' '[' terms ']' ';')+ '}'
//              | 'per' IDENT '{' ('class' '[' terms ']' ';')* '}'
//              | 'map' IDENT ':' IDENT '->' IDENT '{' (IDENT '=>' IDENT ';')*
//                    'tracker' term ';' '}'
//   term      := 'S' | 'K' | IDENT | '(' term term ')' | '\' IDENT '.' term
//   terms     := (term (',' term)*)?
// Lambdas are eliminated by bracket abstraction while parsing; identifiers
// resolve to enclosing lambda binders first, then earlier let definitions.
// Assemblies are validated structurally here; errors: SyntaxError,
// UnboundNameError, DuplicateNameError, plus assembly construction errors.
Workspace parse_workspace(std::string_view text);

// One term in the same syntax. Identifiers resolve against ws definitions
// when given; unresolved identifiers are free variables if allow_free,
// otherwise UnboundNameError.
Term parse_term(std::string_view text, const Workspace* ws = nullptr,
                bool allow_free = false);

}  // namespace realizability
