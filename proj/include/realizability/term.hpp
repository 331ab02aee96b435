#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace realizability {

enum class TermKind : std::uint8_t { S, K, Var, App };

// Immutable applicative term over the atoms S and K plus named variables.
// Value type: copying shares the underlying nodes.
class Term {
public:
    static Term s();
    static Term k();
    static Term var(std::string name);
    static Term app(Term fun, Term arg);

    TermKind kind() const { return node_->kind; }
    bool is_app() const { return node_->kind == TermKind::App; }
    bool is_var() const { return node_->kind == TermKind::Var; }
    bool is_atom() const { return node_->kind == TermKind::S || node_->kind == TermKind::K; }

    const std::string& var_name() const;  // Var only
    Term fun() const;                     // App only
    Term arg() const;                     // App only

    // Node count; a single atom or variable has size 1.
    std::size_t size() const { return node_->size; }
    bool is_closed() const { return node_->closed; }
    // True iff some subterm is a fully applied K or S redex.
    bool has_redex() const { return node_->has_redex; }

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    struct Node {
        TermKind kind;
        std::string name;                 // Var
        std::shared_ptr<const Node> fun;  // App
        std::shared_ptr<const Node> arg;  // App
        std::uint32_t size = 1;
        bool closed = true;
        bool has_redex = false;
    };
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Left-fold application: app(f, a, b) builds ((f a) b).
inline Term app(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }

template <typename... Rest>
Term app(Term f, Term a, Term b, Rest... rest) {
    return app(app(std::move(f), std::move(a)), std::move(b), std::move(rest)...);
}

inline Term var(std::string name) { return Term::var(std::move(name)); }

bool contains_var(const Term& t, const std::string& name);

// Replaces every occurrence of the named variable. Terms carry no binders,
// so this is plain structural replacement; no capture can occur.
Term substitute(const Term& body, const std::string& name, const Term& replacement);

// Canonical surface syntax: S, K, names, and fully parenthesised application.
std::string to_string(const Term& t);

// Step budget for normalization; one unit per contracted redex.
struct Fuel {
    std::uint64_t steps;
};

inline constexpr std::uint64_t default_fuel = 10'000;

// Contracts the leftmost-outermost weak redex, or returns nullopt on a
// weak normal form. Only fully applied redexes count: (K a) and ((S a) b)
// are inert prefixes.
std::optional<Term> step(const Term& t);

struct NormalizeResult {
    Term term;            // normal form, or the last reduct on fuel exhaustion
    bool is_normal;
    std::uint64_t steps;  // redexes contracted
};

NormalizeResult normalize(Term t, Fuel fuel);

enum class Verdict : std::uint8_t { Holds, Fails, Unknown };

// Three-valued outcome of a fuel-bounded check. Unknown always carries the
// reason the check could not be decided.
class TriState {
public:
    static TriState holds() { return TriState(Verdict::Holds, {}); }
    static TriState fails() { return TriState(Verdict::Fails, {}); }
    static TriState unknown(std::string reason) {
        return TriState(Verdict::Unknown, std::move(reason));
    }

    Verdict verdict() const { return verdict_; }
    bool is_holds() const { return verdict_ == Verdict::Holds; }
    bool is_fails() const { return verdict_ == Verdict::Fails; }
    bool is_unknown() const { return verdict_ == Verdict::Unknown; }
    const std::string& reason() const { return reason_; }

private:
    TriState(Verdict v, std::string reason) : verdict_(v), reason_(std::move(reason)) {}
    Verdict verdict_;
    std::string reason_;
};

// Conjunctive aggregation: Fails dominates, then Unknown, then Holds.
TriState combine(const TriState& a, const TriState& b);

const char* to_string(Verdict v);

// Semi-decision of weak convertibility: normalize both sides and compare.
// Holds/Fails are definitive; Unknown means a side ran out of fuel.
// Both terms must be closed.
TriState convertible(const Term& a, const Term& b, Fuel fuel);

}  // namespace realizability
