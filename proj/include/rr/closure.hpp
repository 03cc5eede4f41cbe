#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rr/ideal.hpp"
#include "rr/semigroup.hpp"

namespace rr {

/* The two generator patterns with closed-form Ratliff-Rush closures:
 * equal-degree (all generators of total degree d) and slanted-line
 * (exponents on the segment from (0, b_0) to (a_r, 0)).  Equal-degree
 * takes precedence when both hold (a_r = b_0 = d). */
enum class IdealClassKind { EqualDegree, SlantedLine, General };

struct IdealClass {
    IdealClassKind kind = IdealClassKind::General;
    Int d = 0;           // EqualDegree
    Int a_r = 0, b_0 = 0;  // SlantedLine

    static IdealClass equal_degree(Int d) { return {IdealClassKind::EqualDegree, d, 0, 0}; }
    static IdealClass slanted_line(Int a_r, Int b_0) {
        return {IdealClassKind::SlantedLine, 0, a_r, b_0};
    }
    static IdealClass general() { return {}; }

    friend bool operator==(const IdealClass&, const IdealClass&) = default;
};

enum class ClosureMethod { ClosedForm, BruteForce };

struct ClosureResult {
    MonomialIdeal closure;
    ClosureMethod method = ClosureMethod::ClosedForm;
    std::optional<Int> reduction_number;  // set when certified
    Int l_used = 0;                       // largest colon index examined (brute force)
    bool certified = false;
};

// Requires an <x,y>-primary ideal.
IdealClass classify(const MonomialIdeal& I);

// S from the x-exponents, T from the y-exponents (zeros stripped).
// Requires class EqualDegree or SlantedLine.
std::pair<NumericalSemigroup, NumericalSemigroup> semigroups_of(const MonomialIdeal& I);

/* Equal-degree: I_S = <x^s y^(d-s) : s in S, s <= d>; slanted-line:
 * members s <= a_r whose companion exponent b_0*(a_r-s)/a_r is integral.
 * ideal_T is the mirror image. */
MonomialIdeal ideal_S(const MonomialIdeal& I);
MonomialIdeal ideal_T(const MonomialIdeal& I);

// tilde I = I_S intersect I_T, certified; fills the reduction number.
ClosureResult closure_closed_form(const MonomialIdeal& I);

/* Last term of the nondecreasing chain (I^(l+1) : I^l), l = 1..max_l.
 * Certified only for equal-degree ideals once max_l reaches
 * reduction_bound(I); otherwise a flagged lower approximation. */
ClosureResult closure_brute_force(const MonomialIdeal& I, Int max_l);

/* Front door: extracts the common monomial factor m (I = m * I'),
 * then dispatches on the class of I'.  Principal ideals are trivially
 * Ratliff-Rush; General-class ideals fall back to brute force with the
 * given cap.  tilde I = m * result.closure. */
std::pair<Monomial, ClosureResult> closure(const MonomialIdeal& I, Int brute_max_l = 12);

struct RRStatus {
    bool is_rr = false;
    bool certified = false;
};
RRStatus is_ratliff_rush(const MonomialIdeal& I, Int brute_max_l = 12);

// Least l >= 0 with (I^(l+1) : I^l) = result.closure; l = 0 iff I is
// already Ratliff-Rush.  Requires a certified result.
Int reduction_number(const MonomialIdeal& I, const ClosureResult& result);

/* Lambda-based a priori bounds, equal-degree only.  Lambda is taken
 * over the presentation by the ideal's own exponents on each axis
 * (members up to g+d), which both examples of the source construction
 * require; see the tests for the pinned values. */
Int reduction_bound(const MonomialIdeal& I);   // r(I) <= this
Int power_form_bound(const MonomialIdeal& I);  // powers are "on the form" from here on

/* Whether I^l equals the membership-sweep ideal
 * <x^s y^t : s in S, t in T, s + t = dl> (equal-degree) or its
 * slanted-line analogue s/a_r + t/b_0 = l. */
bool power_form_holds(const MonomialIdeal& I, Int l);

/* I^l = y^(d(l-1)) I_S + x^(d(l-1)) I_T + x^d y^d I_M with
 * I_M = I^l : <x^d y^d>.  s_part/t_part are the shifted summands;
 * i_m is unshifted.  m_is_max_power reports I_M == <x,y>^(d(l-2)). */
struct PowerDecomposition {
    MonomialIdeal s_part, t_part, i_m;
    bool holds = false;
    bool m_is_max_power = false;
};
PowerDecomposition power_decomposition(const MonomialIdeal& I, Int l);

/* Pairwise-sum criterion on the x-exponents (every a_i + a_j is another
 * exponent or >= d) and its mirror on y.  Either side passing implies
 * Ratliff-Rush; failing both decides nothing. */
struct SufficiencyCheck {
    bool on_x = false;
    bool on_y = false;
    bool either() const { return on_x || on_y; }
};
SufficiencyCheck sufficient_rr_check(const MonomialIdeal& I);

struct PowerStatus {
    Int l = 0;
    bool is_rr = false;
    bool certified = false;
};
std::vector<PowerStatus> all_powers_rr_check(const MonomialIdeal& I, Int l_max,
                                             Int brute_max_l = 12);

/* Named families: "I_d" (d >= 2), "I_dk" (d >= 2, 1 <= k < d),
 * "I_k" (k >= 1), "I_nk" (n >= 1, k >= 1). */
MonomialIdeal family_ideal(const std::string& name, const std::vector<Int>& params);

/* All 2^(d-1) equal-degree ideals: subsets of the middle monomials
 * x^i y^(d-i) joined with y^d, x^d.  half counts ideals with smallest
 * positive x- or y-exponent >= d/2.  Supported range 2 <= d <= 22. */
struct EnumerationSummary {
    Int total = 0;
    Int rr = 0;
    Int half = 0;
};
EnumerationSummary enumerate_equal_degree(
    Int d, const std::function<void(const MonomialIdeal&, bool)>& sink = {});

}  // namespace rr
