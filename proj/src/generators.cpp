#include "realizability/generators.hpp"

#include <set>
#include <string>

#include "realizability/combinators.hpp"

namespace realizability {

int Rng::range(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

bool Rng::chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p;
}

Term random_closed_term(Rng& rng, int max_size) {
    if (max_size < 3 || rng.chance(0.3)) {
        return rng.chance(0.5) ? Term::s() : Term::k();
    }
    int left = rng.range(1, max_size - 2);
    return app(random_closed_term(rng, left), random_closed_term(rng, max_size - 1 - left));
}

Term random_normal_term(Rng& rng, int max_size) {
    // Closed weak normal forms are exactly S, K, and underapplied spines
    // (K t), (S t), ((S t) u) with t, u normal.
    enum { AtomOnly = 0, OneArg = 1, TwoArgs = 2 };
    int shape = AtomOnly;
    if (max_size >= 5 && rng.chance(0.45)) shape = TwoArgs;
    else if (max_size >= 3 && rng.chance(0.55)) shape = OneArg;
    switch (shape) {
        case OneArg: {
            Term head = rng.chance(0.5) ? Term::s() : Term::k();
            return app(std::move(head), random_normal_term(rng, max_size - 2));
        }
        case TwoArgs: {
            int budget = max_size - 3;
            int left = rng.range(1, budget - 1);
            return app(Term::s(), random_normal_term(rng, left),
                       random_normal_term(rng, budget - left));
        }
        default:
            return rng.chance(0.5) ? Term::s() : Term::k();
    }
}

Term random_open_body(Rng& rng, const std::string& x, int max_size) {
    for (;;) {
        Term t = [&] {
            // Like random_closed_term but with variable leaves mixed in.
            auto gen = [&](auto&& self, int budget) -> Term {
                if (budget < 3 || rng.chance(0.3)) {
                    int c = rng.range(0, 2);
                    if (c == 0) return var(x);
                    return c == 1 ? Term::s() : Term::k();
                }
                int left = rng.range(1, budget - 2);
                return app(self(self, left), self(self, budget - 1 - left));
            };
            return gen(gen, max_size);
        }();
        if (contains_var(t, x)) return t;
    }
}

std::vector<Term> distinct_normal_terms(Rng& rng, std::size_t count, int max_size) {
    std::vector<Term> out;
    std::set<std::string> seen;
    while (out.size() < count) {
        Term t = random_normal_term(rng, max_size);
        if (seen.insert(to_string(t)).second) out.push_back(std::move(t));
    }
    return out;
}

Per random_per(Rng& rng, std::size_t max_blocks, std::size_t max_generators, Fuel fuel) {
    std::size_t nblocks = static_cast<std::size_t>(rng.range(0, static_cast<int>(max_blocks)));
    std::vector<Term> pool = distinct_normal_terms(rng, nblocks * max_generators, 9);
    std::vector<std::vector<Term>> blocks;
    std::size_t next = 0;
    for (std::size_t b = 0; b < nblocks; ++b) {
        std::size_t ngens = static_cast<std::size_t>(
            rng.range(1, static_cast<int>(max_generators)));
        std::vector<Term> block;
        for (std::size_t g = 0; g < ngens; ++g) block.push_back(pool[next++]);
        if (rng.chance(0.25)) {
            // Alias convertible to the first generator, not itself normal.
            block.push_back(app(derived(Combinator::Identity), block[0]));
        }
        blocks.push_back(std::move(block));
    }
    std::string name = "R" + std::to_string(rng.range(0, 99999));
    return make_per(std::move(name), std::move(blocks), fuel);
}

Per paired_per(const Per& s, Fuel fuel) {
    std::vector<std::vector<Term>> blocks;
    for (const std::vector<Term>& block : s.blocks()) {
        std::vector<Term> paired;
        for (const Term& g : block) {
            paired.push_back(app(derived(Combinator::Pair), g, Term::k()));
        }
        blocks.push_back(std::move(paired));
    }
    return make_per("paired(" + s.name() + ")", std::move(blocks), fuel);
}

Assembly random_modest_assembly(Rng& rng, std::size_t max_elements,
                                std::size_t max_realizers) {
    std::size_t nelems = static_cast<std::size_t>(rng.range(1, static_cast<int>(max_elements)));
    std::vector<Term> pool = distinct_normal_terms(rng, nelems * max_realizers, 9);
    std::vector<std::string> elements;
    std::map<std::string, std::vector<Term>> realizers;
    std::size_t next = 0;
    for (std::size_t i = 0; i < nelems; ++i) {
        std::string name = "e" + std::to_string(i);
        std::size_t n = static_cast<std::size_t>(rng.range(1, static_cast<int>(max_realizers)));
        std::vector<Term> rs;
        for (std::size_t r = 0; r < n; ++r) rs.push_back(pool[next++]);
        elements.push_back(name);
        realizers[name] = std::move(rs);
    }
    std::string name = "M" + std::to_string(rng.range(0, 99999));
    return make_assembly(std::move(name), std::move(elements), std::move(realizers));
}

}  // namespace realizability
