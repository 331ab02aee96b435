#pragma once

#include <cstdint>

#include "realizability/term.hpp"

namespace realizability {

// Bracket abstraction with the K optimization and no eta step:
//   abstract(x, x)            = (S K) K
//   abstract(x, t), x not free = (K t)
//   abstract(x, (m n))        = ((S abstract(x, m)) abstract(x, n))
// Result never contains x; other free variables pass through.
Term abstract(const std::string& x, const Term& body);

enum class Combinator {
    Identity,
    Pair,
    Pr1,
    Pr2,
    True,
    False,
    IfThenElse,
    Fix,  // Turing's theta
};

// The closed term for a derived combinator, built via abstract.
Term derived(Combinator which);

// Curry numerals: numeral(0) = pair true i, numeral(n+1) = pair false numeral(n).
// pr1 is the zero test, pr2 the predecessor.
Term numeral(unsigned n);

// The recursor as a closed term: primrec c f n computes c for numeral(0) and
// f (pred n) (primrec c f (pred n)) otherwise.
Term primrec_combinator();

// primrec applied to base, step and n. All three must be closed.
Term prim_rec(const Term& base, const Term& step, const Term& n);

}  // namespace realizability
