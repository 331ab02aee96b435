#include "realizability/term.hpp"

#include <cassert>
#include <utility>

#include "realizability/errors.hpp"

namespace realizability {

namespace {

bool is_k_redex(const Term& t) {
    return t.is_app() && t.fun().is_app() && t.fun().fun().kind() == TermKind::K;
}

bool is_s_redex(const Term& t) {
    return t.is_app() && t.fun().is_app() && t.fun().fun().is_app() &&
           t.fun().fun().fun().kind() == TermKind::S;
}

}  // namespace

Term Term::s() {
    static const std::shared_ptr<const Node> node = [] {
        auto n = std::make_shared<Node>();
        n->kind = TermKind::S;
        return n;
    }();
    return Term(node);
}

Term Term::k() {
    static const std::shared_ptr<const Node> node = [] {
        auto n = std::make_shared<Node>();
        n->kind = TermKind::K;
        return n;
    }();
    return Term(node);
}

Term Term::var(std::string name) {
    auto node = std::make_shared<Node>();
    node->kind = TermKind::Var;
    node->name = std::move(name);
    node->closed = false;
    return Term(std::move(node));
}

Term Term::app(Term fun, Term arg) {
    // (fun arg) is itself a redex when fun = (K a) or fun = ((S a) b).
    bool redex_here = false;
    if (fun.is_app()) {
        redex_here = fun.fun().kind() == TermKind::K ||
                     (fun.fun().is_app() && fun.fun().fun().kind() == TermKind::S);
    }
    auto node = std::make_shared<Node>();
    node->kind = TermKind::App;
    node->size = 1 + fun.node_->size + arg.node_->size;
    node->closed = fun.node_->closed && arg.node_->closed;
    node->has_redex = redex_here || fun.node_->has_redex || arg.node_->has_redex;
    node->fun = std::move(fun.node_);
    node->arg = std::move(arg.node_);
    return Term(std::move(node));
}

const std::string& Term::var_name() const {
    assert(is_var());
    return node_->name;
}

Term Term::fun() const {
    assert(is_app());
    return Term(node_->fun);
}

Term Term::arg() const {
    assert(is_app());
    return Term(node_->arg);
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->kind != b.node_->kind) return false;
    if (a.node_->size != b.node_->size) return false;
    switch (a.node_->kind) {
        case TermKind::S:
        case TermKind::K:
            return true;
        case TermKind::Var:
            return a.node_->name == b.node_->name;
        case TermKind::App:
            return a.fun() == b.fun() && a.arg() == b.arg();
    }
    return false;
}

bool contains_var(const Term& t, const std::string& name) {
    if (t.is_closed()) return false;
    switch (t.kind()) {
        case TermKind::Var:
            return t.var_name() == name;
        case TermKind::App:
            return contains_var(t.fun(), name) || contains_var(t.arg(), name);
        default:
            return false;
    }
}

Term substitute(const Term& body, const std::string& name, const Term& replacement) {
    if (body.is_closed()) return body;
    switch (body.kind()) {
        case TermKind::Var:
            return body.var_name() == name ? replacement : body;
        case TermKind::App: {
            Term f = substitute(body.fun(), name, replacement);
            Term a = substitute(body.arg(), name, replacement);
            return app(std::move(f), std::move(a));
        }
        default:
            return body;
    }
}

std::string to_string(const Term& t) {
    switch (t.kind()) {
        case TermKind::S:
            return "S";
        case TermKind::K:
            return "K";
        case TermKind::Var:
            return t.var_name();
        case TermKind::App:
            return "(" + to_string(t.fun()) + " " + to_string(t.arg()) + ")";
    }
    return {};
}

std::optional<Term> step(const Term& t) {
    if (!t.has_redex()) return std::nullopt;
    if (is_k_redex(t)) return t.fun().arg();
    if (is_s_redex(t)) {
        Term a = t.fun().fun().arg();
        Term b = t.fun().arg();
        Term c = t.arg();
        return app(app(std::move(a), c), app(std::move(b), c));
    }
    // t has a redex but is not one itself, so it is an application and the
    // redex sits in a subterm; the function side comes first.
    if (auto f = step(t.fun())) return app(std::move(*f), t.arg());
    auto a = step(t.arg());
    assert(a.has_value());
    return app(t.fun(), std::move(*a));
}

NormalizeResult normalize(Term t, Fuel fuel) {
    std::uint64_t used = 0;
    while (t.has_redex()) {
        if (used == fuel.steps) return NormalizeResult{std::move(t), false, used};
        t = *step(t);
        ++used;
    }
    return NormalizeResult{std::move(t), true, used};
}

TriState combine(const TriState& a, const TriState& b) {
    if (a.is_fails() || b.is_fails()) return TriState::fails();
    if (a.is_unknown()) return a;
    if (b.is_unknown()) return b;
    return TriState::holds();
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds:
            return "Holds";
        case Verdict::Fails:
            return "Fails";
        case Verdict::Unknown:
            return "Unknown";
    }
    return "?";
}

namespace {

// Leftmost free variable of an open term, for error messages.
std::string some_free_var(Term t) {
    while (t.is_app()) t = t.fun().is_closed() ? t.arg() : t.fun();
    return t.var_name();
}

}  // namespace

TriState convertible(const Term& a, const Term& b, Fuel fuel) {
    if (!a.is_closed()) throw OpenTermError(some_free_var(a));
    if (!b.is_closed()) throw OpenTermError(some_free_var(b));
    NormalizeResult na = normalize(a, fuel);
    NormalizeResult nb = normalize(b, fuel);
    if (na.is_normal && nb.is_normal) {
        return na.term == nb.term ? TriState::holds() : TriState::fails();
    }
    std::string side = !na.is_normal ? "left" : "right";
    return TriState::unknown(side + " side has no normal form within " +
                             std::to_string(fuel.steps) + " steps");
}

}  // namespace realizability
