#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "rr/closure.hpp"
#include "rr/ideal.hpp"
#include "rr/semigroup.hpp"

namespace rrtest {

using rr::Int;
using rr::Monomial;
using rr::MonomialIdeal;

inline MonomialIdeal MI(const std::vector<std::pair<Int, Int>>& pairs) {
    std::vector<Monomial> gens;
    gens.reserve(pairs.size());
    for (auto [a, b] : pairs) gens.push_back(Monomial{a, b});
    return MonomialIdeal::from_generators(std::move(gens));
}

inline std::vector<std::pair<Int, Int>> gens_of(const MonomialIdeal& I) {
    std::vector<std::pair<Int, Int>> out;
    for (const Monomial& m : I.generators()) out.emplace_back(m.a, m.b);
    return out;
}

/* Exhaustive min-coin search, independent of the DP: enumerates
 * coefficient vectors coin by coin (largest first) with branch-and-bound
 * pruning.  Returns -1 when s is not representable. */
inline void lambda_dfs(const std::vector<Int>& coins, std::size_t idx, Int remaining,
                       Int used, Int& best) {
    if (remaining == 0) {
        if (best < 0 || used < best) best = used;
        return;
    }
    if (idx == coins.size()) return;
    if (best >= 0 && used + (remaining + coins[idx] - 1) / coins[idx] >= best) return;
    for (Int k = remaining / coins[idx]; k >= 0; --k)
        lambda_dfs(coins, idx + 1, remaining - k * coins[idx], used + k, best);
}

inline Int lambda_exhaustive(std::vector<Int> coins, Int s) {
    if (s < 0) return -1;
    std::sort(coins.begin(), coins.end(), std::greater<Int>());
    Int best = -1;
    lambda_dfs(coins, 0, s, 0, best);
    return best;
}

inline Int colength_brute(const MonomialIdeal& I) {
    Int max_a = 0, max_b = 0;
    for (const Monomial& g : I.generators()) {
        max_a = std::max(max_a, g.a);
        max_b = std::max(max_b, g.b);
    }
    Int count = 0;
    for (Int u = 0; u <= max_a; ++u)
        for (Int v = 0; v <= max_b; ++v)
            if (!I.contains_monomial(Monomial{u, v})) ++count;
    return count;
}

// Eq. (4) reference: I^l via all multinomial exponent combinations.
inline void multinomial_rec(const std::vector<Monomial>& gens, std::size_t idx, Int remaining,
                            Monomial acc, std::vector<Monomial>& out) {
    if (idx + 1 == gens.size()) {
        out.push_back(Monomial{acc.a + remaining * gens[idx].a, acc.b + remaining * gens[idx].b});
        return;
    }
    for (Int k = 0; k <= remaining; ++k)
        multinomial_rec(gens, idx + 1, remaining - k,
                        Monomial{acc.a + k * gens[idx].a, acc.b + k * gens[idx].b}, out);
}

inline MonomialIdeal power_multinomial(const MonomialIdeal& I, Int l) {
    if (l == 0) return MonomialIdeal::unit();
    if (I.is_zero()) return MonomialIdeal();
    std::vector<Monomial> out;
    multinomial_rec(I.generators(), 0, l, Monomial{0, 0}, out);
    return MonomialIdeal::from_generators(std::move(out));
}

inline Int rand_int(std::mt19937_64& rng, Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline MonomialIdeal random_equal_degree(std::mt19937_64& rng, Int dmin, Int dmax) {
    Int d = rand_int(rng, dmin, dmax);
    std::vector<Monomial> gens{Monomial{0, d}, Monomial{d, 0}};
    for (Int i = 1; i < d; ++i)
        if (rand_int(rng, 0, 1)) gens.push_back(Monomial{i, d - i});
    return MonomialIdeal::from_generators(std::move(gens));
}

// Exponents on the segment from (0, b_0) to (a_r, 0) with a_r != b_0.
inline MonomialIdeal random_slanted(std::mt19937_64& rng) {
    for (;;) {
        Int g0 = rand_int(rng, 2, 6);
        Int pa = rand_int(rng, 1, 5);
        Int pb = rand_int(rng, 1, 5);
        if (pa == pb) continue;
        Int a_r = g0 * pa, b_0 = g0 * pb;
        if (a_r > 26 || b_0 > 26) continue;
        std::vector<Monomial> gens{Monomial{0, b_0}, Monomial{a_r, 0}};
        bool any = false;
        for (Int k = 1; k < g0; ++k)
            if (rand_int(rng, 0, 9) < 6) {
                gens.push_back(Monomial{k * pa, b_0 - k * pb});
                any = true;
            }
        if (!any) continue;
        return MonomialIdeal::from_generators(std::move(gens));
    }
}

inline MonomialIdeal random_primary(std::mt19937_64& rng, Int emax) {
    Int A = rand_int(rng, 1, emax);
    Int B = rand_int(rng, 1, emax);
    std::vector<Monomial> gens{Monomial{0, B}, Monomial{A, 0}};
    Int extra = rand_int(rng, 0, 3);
    for (Int i = 0; i < extra; ++i) {
        if (A > 1 && B > 1)
            gens.push_back(Monomial{rand_int(rng, 1, A - 1), rand_int(rng, 1, B - 1)});
    }
    return MonomialIdeal::from_generators(std::move(gens));
}

inline std::vector<Int> random_semigroup_gens(std::mt19937_64& rng, Int lo, Int hi) {
    Int count = rand_int(rng, 2, 4);
    std::vector<Int> gens;
    for (Int i = 0; i < count; ++i) gens.push_back(rand_int(rng, lo, hi));
    return gens;
}

// (I^(l+1) : I^l), the colon-chain term.
inline MonomialIdeal chain_term(const MonomialIdeal& I, Int l) {
    MonomialIdeal P = rr::power(I, l);
    return rr::colon(rr::product(P, I), P);
}

}  // namespace rrtest
