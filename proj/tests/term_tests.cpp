#include <doctest.h>

#include "realizability/errors.hpp"
#include "realizability/term.hpp"

using namespace realizability;

namespace {

const Term S = Term::s();
const Term K = Term::k();
// I = S K K, the standard identity.
Term ident() { return app(S, K, K); }
// omega = (S I I)(S I I) loops forever under weak reduction.
Term omega() {
    Term w = app(S, ident(), ident());
    return app(w, w);
}

}  // namespace

TEST_CASE("application builds left-nested trees") {
    Term t = app(K, S, K);
    REQUIRE(t.is_app());
    CHECK(t.fun() == app(K, S));
    CHECK(t.arg() == K);
    CHECK(t == app(app(K, S), K));
    CHECK(t.size() == 5);
    CHECK(to_string(t) == "((K S) K)");
}

TEST_CASE("openness propagates through application") {
    CHECK(K.is_closed());
    CHECK_FALSE(var("x").is_closed());
    CHECK_FALSE(app(S, var("x")).is_closed());
    CHECK(app(S, K).is_closed());
}

TEST_CASE("structural equality distinguishes names and shapes") {
    CHECK(var("x") == var("x"));
    CHECK(var("x") != var("y"));
    CHECK(S != K);
    CHECK(app(S, K) != app(K, S));
}

TEST_CASE("step contracts one K redex") {
    // (K S) K => S
    auto r = step(app(K, S, K));
    REQUIRE(r.has_value());
    CHECK(*r == S);
}

TEST_CASE("step contracts one S redex") {
    // ((S K) K) S => (K S) (K S)
    auto r = step(app(S, K, K, S));
    REQUIRE(r.has_value());
    CHECK(*r == app(app(K, S), app(K, S)));
}

TEST_CASE("atoms and partial applications are normal") {
    CHECK_FALSE(step(S).has_value());
    CHECK_FALSE(step(K).has_value());
    CHECK_FALSE(step(var("x")).has_value());
    CHECK_FALSE(step(app(K, S)).has_value());
    CHECK_FALSE(step(app(S, K)).has_value());
    CHECK_FALSE(step(app(S, K, K)).has_value());
}

TEST_CASE("reduction reaches under an inert prefix") {
    // (S ((K S) K)) has its only redex inside the argument.
    auto r = step(app(S, app(K, S, K)));
    REQUIRE(r.has_value());
    CHECK(*r == app(S, S));
}

TEST_CASE("the function side reduces before the argument side") {
    // (((K K) S) ((K S) K)): the left redex fires first, leaving
    // (K ((K S) K)), whose argument then reduces. Normal form (K S).
    Term t = app(app(K, K, S), app(K, S, K));
    auto r1 = step(t);
    REQUIRE(r1.has_value());
    CHECK(*r1 == app(K, app(K, S, K)));
    NormalizeResult n = normalize(t, Fuel{10});
    CHECK(n.is_normal);
    CHECK(n.steps == 2);
    CHECK(n.term == app(K, S));
}

TEST_CASE("an outer redex beats a redex inside its argument") {
    // ((K K) ((K S) S)) is a K redex at the root; the argument is dropped
    // unreduced.
    NormalizeResult n = normalize(app(K, K, app(K, S, S)), Fuel{10});
    CHECK(n.is_normal);
    CHECK(n.steps == 1);
    CHECK(n.term == K);
}

TEST_CASE("normalize counts contracted redexes") {
    // (K S) K => S, one step.
    NormalizeResult a = normalize(app(K, S, K), Fuel{10});
    CHECK(a.is_normal);
    CHECK(a.term == S);
    CHECK(a.steps == 1);

    // S K K K => (K K) (K K) => K, two steps.
    NormalizeResult b = normalize(app(S, K, K, K), Fuel{10});
    CHECK(b.is_normal);
    CHECK(b.term == K);
    CHECK(b.steps == 2);
}

TEST_CASE("fuel exhaustion returns the last reduct") {
    NormalizeResult n = normalize(omega(), Fuel{100});
    CHECK_FALSE(n.is_normal);
    CHECK(n.steps == 100);
    CHECK(n.term.has_redex());
}

TEST_CASE("zero fuel decides nothing except normal forms") {
    NormalizeResult a = normalize(K, Fuel{0});
    CHECK(a.is_normal);
    CHECK(a.steps == 0);
    NormalizeResult b = normalize(app(K, S, K), Fuel{0});
    CHECK_FALSE(b.is_normal);
    CHECK(b.steps == 0);
    CHECK(b.term == app(K, S, K));
}

TEST_CASE("normalize is deterministic") {
    Term t = app(S, app(S, K, K), K, app(K, S, K));
    NormalizeResult a = normalize(t, Fuel{50});
    NormalizeResult b = normalize(t, Fuel{50});
    CHECK(a.term == b.term);
    CHECK(a.steps == b.steps);
    CHECK(a.is_normal == b.is_normal);
}

TEST_CASE("normal forms are irreducible") {
    Term probes[] = {app(K, S, K), app(S, K, K, K), app(S, K), app(S, app(K, S, K))};
    for (const Term& t : probes) {
        NormalizeResult n = normalize(t, Fuel{1000});
        REQUIRE(n.is_normal);
        CHECK_FALSE(step(n.term).has_value());
        CHECK_FALSE(n.term.has_redex());
    }
}

TEST_CASE("convertible decides both directions") {
    CHECK(convertible(app(K, S, K), S, Fuel{10}).is_holds());
    CHECK(convertible(S, app(K, S, K), Fuel{10}).is_holds());
    CHECK(convertible(K, S, Fuel{10}).is_fails());
}

TEST_CASE("convertible reports the exhausted side") {
    TriState left = convertible(omega(), K, Fuel{5});
    REQUIRE(left.is_unknown());
    CHECK(left.reason().find("left") != std::string::npos);
    TriState right = convertible(K, omega(), Fuel{5});
    REQUIRE(right.is_unknown());
    CHECK(right.reason().find("right") != std::string::npos);
}

TEST_CASE("convertible requires closed terms") {
    CHECK_THROWS_AS(convertible(var("x"), K, Fuel{10}), OpenTermError);
    CHECK_THROWS_AS(convertible(K, app(S, var("y")), Fuel{10}), OpenTermError);
}

TEST_CASE("Holds is an equivalence on terms that normalize") {
    Fuel fuel{1000};
    // All three normalize to K: themselves, via one K step, via S K K K.
    Term a = K;
    Term b = app(K, K, S);
    Term c = app(S, K, K, K);
    CHECK(convertible(a, a, fuel).is_holds());
    CHECK(convertible(a, b, fuel).is_holds());
    CHECK(convertible(b, a, fuel).is_holds());
    CHECK(convertible(a, c, fuel).is_holds());
    CHECK(convertible(b, c, fuel).is_holds());
}

TEST_CASE("substitute replaces every occurrence") {
    Term body = app(var("x"), app(var("x"), var("y")));
    Term r = substitute(body, "x", K);
    CHECK(r == app(K, app(K, var("y"))));
    CHECK(substitute(body, "z", K) == body);
    CHECK(substitute(K, "x", S) == K);
}

TEST_CASE("contains_var sees through applications") {
    Term body = app(S, app(var("x"), K));
    CHECK(contains_var(body, "x"));
    CHECK_FALSE(contains_var(body, "y"));
    CHECK_FALSE(contains_var(K, "x"));
}

TEST_CASE("combine lets Fails dominate and keeps the first Unknown reason") {
    TriState h = TriState::holds();
    TriState f = TriState::fails();
    TriState u1 = TriState::unknown("first");
    TriState u2 = TriState::unknown("second");
    CHECK(combine(h, h).is_holds());
    CHECK(combine(h, u1).is_unknown());
    CHECK(combine(u1, h).is_unknown());
    CHECK(combine(u1, f).is_fails());
    CHECK(combine(f, u1).is_fails());
    CHECK(combine(f, h).is_fails());
    CHECK(combine(u1, u2).reason() == "first");
}

TEST_CASE("verdict names render for reports") {
    CHECK(std::string(to_string(Verdict::Holds)) == "Holds");
    CHECK(std::string(to_string(Verdict::Fails)) == "Fails");
    CHECK(std::string(to_string(Verdict::Unknown)) == "Unknown");
}
