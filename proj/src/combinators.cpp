#include "realizability/combinators.hpp"

#include "realizability/errors.hpp"

namespace realizability {

Term abstract(const std::string& x, const Term& body) {
    if (body.is_var() && body.var_name() == x) {
        return app(app(Term::s(), Term::k()), Term::k());
    }
    if (!contains_var(body, x)) {
        return app(Term::k(), body);
    }
    // x occurs and body is not the bare variable, so body is an application.
    return app(app(Term::s(), abstract(x, body.fun())), abstract(x, body.arg()));
}

namespace {

Term build(Combinator which) {
    switch (which) {
        case Combinator::Identity:
            return abstract("x", var("x"));
        case Combinator::Pair:
            return abstract("a", abstract("b", abstract("f", app(var("f"), var("a"), var("b")))));
        case Combinator::Pr1:
            return abstract("p", app(var("p"), build(Combinator::True)));
        case Combinator::Pr2:
            return abstract("p", app(var("p"), build(Combinator::False)));
        case Combinator::True:
            return abstract("t", abstract("e", var("t")));
        case Combinator::False:
            return abstract("t", abstract("e", var("e")));
        case Combinator::IfThenElse:
            return abstract("b", abstract("t", abstract("e", app(var("b"), var("t"), var("e")))));
        case Combinator::Fix: {
            // Turing's theta: A A with A = \x.\f. f (x x f); unfolds by
            // reduction alone, fix f => f ((.. ) f) convertible to f (fix f).
            Term a = abstract("x", abstract("f", app(var("f"), app(var("x"), var("x"), var("f")))));
            return app(a, a);
        }
    }
    return Term::s();  // unreachable
}

}  // namespace

Term derived(Combinator which) {
    static const Term identity = build(Combinator::Identity);
    static const Term pair = build(Combinator::Pair);
    static const Term pr1 = build(Combinator::Pr1);
    static const Term pr2 = build(Combinator::Pr2);
    static const Term truth = build(Combinator::True);
    static const Term falsity = build(Combinator::False);
    static const Term ite = build(Combinator::IfThenElse);
    static const Term fix = build(Combinator::Fix);
    switch (which) {
        case Combinator::Identity: return identity;
        case Combinator::Pair: return pair;
        case Combinator::Pr1: return pr1;
        case Combinator::Pr2: return pr2;
        case Combinator::True: return truth;
        case Combinator::False: return falsity;
        case Combinator::IfThenElse: return ite;
        case Combinator::Fix: return fix;
    }
    return identity;
}

Term numeral(unsigned n) {
    const Term pair = derived(Combinator::Pair);
    Term t = app(pair, derived(Combinator::True), derived(Combinator::Identity));
    for (unsigned k = 0; k < n; ++k) {
        t = app(pair, derived(Combinator::False), std::move(t));
    }
    return t;
}

Term primrec_combinator() {
    static const Term t = [] {
        // \self.\c.\f.\n. ifThenElse (pr1 n) c (f (pr2 n) (self c f (pr2 n)))
        Term pred_n = app(derived(Combinator::Pr2), var("n"));
        Term recurse = app(var("self"), var("c"), var("f"), pred_n);
        Term body = app(derived(Combinator::IfThenElse),
                        app(derived(Combinator::Pr1), var("n")),
                        var("c"),
                        app(var("f"), pred_n, recurse));
        Term loop = abstract("self", abstract("c", abstract("f", abstract("n", body))));
        return app(derived(Combinator::Fix), loop);
    }();
    return t;
}

namespace {

void require_closed_arg(const Term& t, const char* what) {
    if (!t.is_closed()) {
        Term cur = t;
        while (cur.is_app()) cur = cur.fun().is_closed() ? cur.arg() : cur.fun();
        throw OpenTermError(cur.var_name() + std::string(" in ") + what);
    }
}

}  // namespace

Term prim_rec(const Term& base, const Term& step, const Term& n) {
    require_closed_arg(base, "primrec base");
    require_closed_arg(step, "primrec step");
    require_closed_arg(n, "primrec argument");
    return app(primrec_combinator(), base, step, n);
}

}  // namespace realizability
