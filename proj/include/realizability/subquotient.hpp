#pragma once

#include <vector>

#include "realizability/assembly.hpp"
#include "realizability/per.hpp"

namespace realizability {

// The assembly carved out of a per: one element per block, labelled
// c0..c(n-1), realized by exactly that block's generators.
struct SubquotientAssembly {
    Assembly underlying;
    Per source;
};

SubquotientAssembly subquotient(const Per& r);

// Modesty of the subquotient assembly; Holds for every valid per, since
// block disjointness is literally the no-shared-realizer condition.
ModestyReport check_subquotient_modest(const Per& r, Fuel fuel);

// Functor action on morphisms: block i of the source goes to the block of
// the target containing tracker applied to its first generator (any
// generator gives the same block; the re-verification covers all of them).
// TargetBlockNotFoundError if the image decidedly lands outside every
// block, UndecidedError if fuel runs out before a block is found.
AsmMorphism subquot_morphism(const PerMorphism& f, Fuel fuel);

// Inverse direction: an assembly morphism between subquotients is already
// tracked as a morphism of the underlying pers, with the same tracker.
PerMorphism perify(const SubquotientAssembly& a, const SubquotientAssembly& b,
                   const AsmMorphism& m, Fuel fuel);

// Instance check of full faithfulness over a finite family of candidate
// trackers from source to target: any two candidates inducing the same
// assembly morphism must be equivalent trackers (faithfulness), and each
// candidate must survive the round trip through perify unchanged up to
// tracker equivalence and induced-morphism equality (fullness).
TrackerReport check_fully_faithful(const Per& source, const Per& target,
                                   const std::vector<Term>& candidates, Fuel fuel);

}  // namespace realizability
