#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "realizability/assembly.hpp"
#include "realizability/per.hpp"
#include "realizability/term.hpp"

namespace realizability {

// Deterministic source of randomness for property suites; same seed, same
// structures, on every platform (mt19937_64 is pinned by the standard).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi].
    int range(int lo, int hi);
    bool chance(double p);

    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(range(0, static_cast<int>(xs.size()) - 1))];
    }

private:
    std::mt19937_64 engine_;
};

// Random closed applicative term over S and K, at most max_size nodes.
Term random_closed_term(Rng& rng, int max_size);

// Random closed weak normal form: S, K, (K t), (S t) or ((S t) u) with
// normal subterms. At most max_size nodes.
Term random_normal_term(Rng& rng, int max_size);

// Random term whose only free variable is x, with at least one occurrence.
Term random_open_body(Rng& rng, const std::string& x, int max_size);

// Pairwise distinct normal forms; distinct normal terms are decidedly
// non-convertible, which is what the structure generators need.
std::vector<Term> distinct_normal_terms(Rng& rng, std::size_t count, int max_size);

// Valid per with 0..max_blocks blocks of 1..max_generators generators.
// Generators are distinct normal forms; occasionally a block also carries an
// identity-wrapped alias of its first generator to exercise conversion
// closure.
Per random_per(Rng& rng, std::size_t max_blocks, std::size_t max_generators, Fuel fuel);

// Per whose block i consists of pairs (pair g K) for each generator g of
// block i of s. pr1 then tracks it back onto s.
Per paired_per(const Per& s, Fuel fuel);

// Modest assembly with 1..max_elements elements, each holding up to
// max_realizers realizers with pairwise distinct normal forms throughout.
Assembly random_modest_assembly(Rng& rng, std::size_t max_elements,
                                std::size_t max_realizers);

}  // namespace realizability
