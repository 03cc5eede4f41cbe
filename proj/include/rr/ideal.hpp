#pragma once

#include <vector>

#include "rr/rational.hpp"

namespace rr {

struct Monomial {
    Int a = 0;  // exponent of x
    Int b = 0;  // exponent of y

    bool divides(const Monomial& m) const { return a <= m.a && b <= m.b; }
    Int degree() const { return a + b; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/* A monomial ideal of k[x,y] in canonical staircase form: generators
 * sorted with a strictly increasing and b strictly decreasing, so the
 * list is the unique minimal (antichain) generating set.  The zero
 * ideal is the empty list; the unit ideal is [(0,0)]. */
class MonomialIdeal {
public:
    MonomialIdeal() = default;  // zero ideal

    static MonomialIdeal unit() { return MonomialIdeal({Monomial{0, 0}}, Canonical{}); }
    static MonomialIdeal from_generators(std::vector<Monomial> raw);

    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0] == Monomial{0, 0}; }

    bool contains_monomial(const Monomial& m) const;
    bool contains_ideal(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    struct Canonical {};
    MonomialIdeal(std::vector<Monomial> gens, Canonical) : gens_(std::move(gens)) {}

    std::vector<Monomial> gens_;

    friend MonomialIdeal make_canonical(std::vector<Monomial> sorted_antichain);
};

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, Int l);

// I : J, undefined for zero J.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

// Splits I = m * I' with I' unit (principal case) or <x,y>-primary.
std::pair<Monomial, MonomialIdeal> extract_common_factor(const MonomialIdeal& I);

// True iff the generators include a pure x-power and a pure y-power.
bool is_m_primary(const MonomialIdeal& I);

// Number of monomials outside I (the staircase area).
Int colength(const MonomialIdeal& I);

// H_I(l) = colength(I^l); H_I(0) = 0.
Int hilbert_function(const MonomialIdeal& I, Int l);

struct HilbertPolynomial {
    Rational c2, c1, c0;
    bool verified = false;  // fit reproduces H at l_start+3 and l_start+4

    Rational eval(Int l) const {
        Rational x(l);
        return c2 * x * x + c1 * x + c0;
    }
    friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;
};

// Quadratic through H(l_start), H(l_start+1), H(l_start+2) by exact
// finite differences.  Callers raise l_start until verified.
HilbertPolynomial hilbert_polynomial(const MonomialIdeal& I, Int l_start);

}  // namespace rr
