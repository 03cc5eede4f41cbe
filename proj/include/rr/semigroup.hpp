#pragma once

#include <mutex>
#include <vector>

#include "rr/rational.hpp"

namespace rr {

/* Min-coin table over an arbitrary (not necessarily minimal) coin list:
 * table[n] = least number of coins summing to n, or -1 if n is not
 * representable.  Shared by NumericalSemigroup and the closure bounds,
 * which evaluate lambda over a presentation rather than the minimal
 * generating set. */
std::vector<Int> lambda_table(const std::vector<Int>& coins, Int hi);

/* A numerical semigroup <a_1,...,a_r>, stored via its minimal generating
 * set (strictly increasing, no generator representable by the others).
 * h = gcd of the generators; the semigroup need not be cofinite in Z>=0.
 *
 * Membership and lambda values are answered from a lazily grown min-coin
 * table; the cache is guarded so concurrent reads are safe. */
class NumericalSemigroup {
public:
    // Normalizes: strips zeros, sorts, removes redundant generators.
    explicit NumericalSemigroup(std::vector<Int> raw);

    NumericalSemigroup(const NumericalSemigroup& o);
    NumericalSemigroup& operator=(const NumericalSemigroup& o);

    const std::vector<Int>& generators() const { return gens_; }
    Int gcd() const { return h_; }
    Int max_generator() const { return gens_.back(); }

    bool contains(Int n) const;

    // lambda(s) = min{ sum of coefficients over representations of s }.
    Int lambda_min(Int s) const;

    // Coefficients (c_1,...,c_r) with sum c_i*a_i = s and sum c_i =
    // lambda(s).  Ties broken toward the largest generators.
    std::vector<Int> min_representation(Int s) const;

    // Coefficients (c_0, c_1, ..., c_r) with sum c_i = l exactly, where
    // c_0 counts copies of the zero element.  Exists iff s is a member
    // and lambda(s) <= l.
    std::vector<Int> representation_with_total(Int s, Int l) const;

    // g(S): greatest multiple of h not in S; -h if every one is a member.
    Int frobenius() const;

    // Lambda(S) = max{ lambda(s) : s in S, s <= g(S) + a_r }.
    Int big_lambda() const;

    // Least L >= 0 such that for all l >= L, every member
    // s <= a_r*alpha*l + beta has lambda(s) <= l.   Requires alpha < 1.
    Int bound_L(const Rational& alpha, const Rational& beta) const;

    bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }
    bool operator!=(const NumericalSemigroup& o) const { return gens_ != o.gens_; }

private:
    std::vector<Int> gens_;
    Int h_ = 0;

    mutable std::mutex mu_;
    mutable std::vector<Int> lam_;       // lam_[n] = lambda(n), -1 for non-members
    mutable Int frob_ = kFrobUnset;

    static constexpr Int kFrobUnset = -0x7fffffffffffffff;

    void ensure_locked(Int hi) const;
    Int frobenius_locked() const;
};

}  // namespace rr
