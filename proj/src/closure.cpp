#include "rr/closure.hpp"

#include <algorithm>

#include "rr/errors.hpp"

namespace rr {

namespace {

std::vector<Int> positive_x_exponents(const MonomialIdeal& I) {
    std::vector<Int> out;
    for (const Monomial& g : I.generators())
        if (g.a > 0) out.push_back(g.a);
    return out;  // canonical order keeps these strictly increasing
}

std::vector<Int> positive_y_exponents(const MonomialIdeal& I) {
    std::vector<Int> out;
    for (const Monomial& g : I.generators())
        if (g.b > 0) out.push_back(g.b);
    std::reverse(out.begin(), out.end());
    return out;
}

MonomialIdeal ideal_S_impl(const IdealClass& cls, const NumericalSemigroup& S) {
    std::vector<Monomial> gens;
    if (cls.kind == IdealClassKind::EqualDegree) {
        for (Int s = 0; s <= cls.d; ++s)
            if (S.contains(s)) gens.push_back(Monomial{s, cls.d - s});
    } else {
        for (Int s = 0; s <= cls.a_r; ++s) {
            if (!S.contains(s)) continue;
            Int num = cls.b_0 * (cls.a_r - s);
            if (num % cls.a_r != 0) continue;
            gens.push_back(Monomial{s, num / cls.a_r});
        }
    }
    return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal ideal_T_impl(const IdealClass& cls, const NumericalSemigroup& T) {
    std::vector<Monomial> gens;
    if (cls.kind == IdealClassKind::EqualDegree) {
        for (Int t = 0; t <= cls.d; ++t)
            if (T.contains(t)) gens.push_back(Monomial{cls.d - t, t});
    } else {
        for (Int t = 0; t <= cls.b_0; ++t) {
            if (!T.contains(t)) continue;
            Int num = cls.a_r * (cls.b_0 - t);
            if (num % cls.b_0 != 0) continue;
            gens.push_back(Monomial{num / cls.b_0, t});
        }
    }
    return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal closed_closure_impl(const MonomialIdeal& I, const IdealClass& cls) {
    NumericalSemigroup S(positive_x_exponents(I));
    NumericalSemigroup T(positive_y_exponents(I));
    return intersect(ideal_S_impl(cls, S), ideal_T_impl(cls, T));
}

constexpr Int kChainCap = 512;

// Smallest l with (I^(l+1) : I^l) = target; the l = 0 term is I itself.
Int chain_search(const MonomialIdeal& I, const MonomialIdeal& target) {
    if (I == target) return 0;
    MonomialIdeal P = I;
    MonomialIdeal Pn = product(I, I);
    for (Int l = 1; l <= kChainCap; ++l) {
        if (colon(Pn, P) == target) return l;
        P = Pn;
        Pn = product(Pn, I);
    }
    throw Error("colon chain did not reach the closure within the search cap");
}

/* One side of the lambda bound.  The coin set is the ideal's own listed
 * exponents (not reduced to minimal semigroup generators: the extra
 * coins are exactly what the source presentation sums over), g is the
 * Frobenius number of the semigroup they generate, and Lambda-hat is
 * the largest coin count among members up to g+d. */
Rational side_bound(const std::vector<Int>& exps, Int d, bool power_shape) {
    NumericalSemigroup generated(exps);
    Int g = generated.frobenius();
    auto table = lambda_table(exps, g + d);
    Int lam_hat = 0;
    for (Int v : table) lam_hat = std::max(lam_hat, v);
    Rational base(lam_hat + 2);
    if (power_shape) return base - Rational(3 + 2 * g, d);
    return base - Rational(g + 1, d);
}

Rational bound_value(const MonomialIdeal& I, bool power_shape) {
    IdealClass cls = classify(I);
    if (cls.kind != IdealClassKind::EqualDegree)
        throw WrongClass(power_shape ? "power_form_bound" : "reduction_bound");
    return std::max(side_bound(positive_x_exponents(I), cls.d, power_shape),
                    side_bound(positive_y_exponents(I), cls.d, power_shape));
}

}  // namespace

IdealClass classify(const MonomialIdeal& I) {
    if (!is_m_primary(I)) throw NotPrimary();
    const auto& gens = I.generators();
    Int d = gens.front().degree();
    bool equal = d > 0;
    for (const Monomial& g : gens)
        if (g.degree() != d) {
            equal = false;
            break;
        }
    if (equal) return IdealClass::equal_degree(d);

    Int a_r = gens.back().a;
    Int b_0 = gens.front().b;
    if (a_r > 0 && b_0 > 0) {
        bool on_line = true;
        for (const Monomial& g : gens)
            if (g.a * b_0 + g.b * a_r != a_r * b_0) {
                on_line = false;
                break;
            }
        if (on_line) return IdealClass::slanted_line(a_r, b_0);
    }
    return IdealClass::general();
}

std::pair<NumericalSemigroup, NumericalSemigroup> semigroups_of(const MonomialIdeal& I) {
    IdealClass cls = classify(I);
    if (cls.kind == IdealClassKind::General) throw WrongClass("semigroups_of");
    return {NumericalSemigroup(positive_x_exponents(I)),
            NumericalSemigroup(positive_y_exponents(I))};
}

MonomialIdeal ideal_S(const MonomialIdeal& I) {
    IdealClass cls = classify(I);
    if (cls.kind == IdealClassKind::General) throw WrongClass("ideal_S");
    return ideal_S_impl(cls, NumericalSemigroup(positive_x_exponents(I)));
}

MonomialIdeal ideal_T(const MonomialIdeal& I) {
    IdealClass cls = classify(I);
    if (cls.kind == IdealClassKind::General) throw WrongClass("ideal_T");
    return ideal_T_impl(cls, NumericalSemigroup(positive_y_exponents(I)));
}

ClosureResult closure_closed_form(const MonomialIdeal& I) {
    IdealClass cls = classify(I);
    if (cls.kind == IdealClassKind::General) throw WrongClass("closure_closed_form");
    ClosureResult res;
    res.closure = closed_closure_impl(I, cls);
    res.method = ClosureMethod::ClosedForm;
    res.certified = true;
    res.l_used = 0;
    res.reduction_number = chain_search(I, res.closure);
    return res;
}

ClosureResult closure_brute_force(const MonomialIdeal& I, Int max_l) {
    if (!is_m_primary(I)) throw NotPrimary();
    if (max_l < 1) throw BadBound(max_l);
    MonomialIdeal P = power(I, max_l);
    ClosureResult res;
    res.closure = colon(product(P, I), P);
    res.method = ClosureMethod::BruteForce;
    res.l_used = max_l;
    IdealClass cls = classify(I);
    if (cls.kind == IdealClassKind::EqualDegree && max_l >= reduction_bound(I)) {
        res.certified = true;
        res.reduction_number = chain_search(I, res.closure);
    }
    return res;
}

std::pair<Monomial, ClosureResult> closure(const MonomialIdeal& I, Int brute_max_l) {
    if (I.is_zero()) throw ZeroIdeal();
    auto [m, primary] = extract_common_factor(I);
    if (primary.is_unit()) {
        ClosureResult res;
        res.closure = primary;
        res.method = ClosureMethod::ClosedForm;
        res.certified = true;
        res.reduction_number = 0;
        return {m, res};
    }
    IdealClass cls = classify(primary);
    if (cls.kind == IdealClassKind::General)
        return {m, closure_brute_force(primary, brute_max_l)};
    return {m, closure_closed_form(primary)};
}

RRStatus is_ratliff_rush(const MonomialIdeal& I, Int brute_max_l) {
    auto [m, res] = closure(I, brute_max_l);
    MonomialIdeal shifted = product(MonomialIdeal::from_generators({m}), res.closure);
    return {shifted == I, res.certified};
}

Int reduction_number(const MonomialIdeal& I, const ClosureResult& result) {
    if (!result.certified) throw NotCertified();
    auto [m, primary] = extract_common_factor(I);
    return chain_search(primary, result.closure);
}

Int reduction_bound(const MonomialIdeal& I) {
    return std::max<Int>(0, rational_ceil(bound_value(I, false)) - 1);
}

Int power_form_bound(const MonomialIdeal& I) {
    return std::max<Int>(0, rational_ceil(bound_value(I, true)));
}

bool power_form_holds(const MonomialIdeal& I, Int l) {
    IdealClass cls = classify(I);
    if (cls.kind == IdealClassKind::General) throw WrongClass("power_form_holds");
    if (l < 1) throw BadParameters("power_form_holds: l must be >= 1");
    NumericalSemigroup S(positive_x_exponents(I));
    NumericalSemigroup T(positive_y_exponents(I));
    std::vector<Monomial> gens;
    if (cls.kind == IdealClassKind::EqualDegree) {
        Int dl = cls.d * l;
        for (Int s = 0; s <= dl; ++s)
            if (S.contains(s) && T.contains(dl - s)) gens.push_back(Monomial{s, dl - s});
    } else {
        for (Int s = 0; s <= cls.a_r * l; ++s) {
            if (!S.contains(s)) continue;
            Int num = cls.b_0 * (cls.a_r * l - s);
            if (num % cls.a_r != 0) continue;
            Int t = num / cls.a_r;
            if (T.contains(t)) gens.push_back(Monomial{s, t});
        }
    }
    return power(I, l) == MonomialIdeal::from_generators(std::move(gens));
}

PowerDecomposition power_decomposition(const MonomialIdeal& I, Int l) {
    IdealClass cls = classify(I);
    if (cls.kind != IdealClassKind::EqualDegree) throw WrongClass("power_decomposition");
    if (l < 2) throw BadParameters("power_decomposition: l must be >= 2");
    Int d = cls.d;
    NumericalSemigroup S(positive_x_exponents(I));
    NumericalSemigroup T(positive_y_exponents(I));
    MonomialIdeal Pl = power(I, l);
    MonomialIdeal corner = MonomialIdeal::from_generators({Monomial{d, d}});

    PowerDecomposition out;
    out.i_m = colon(Pl, corner);
    out.s_part = product(MonomialIdeal::from_generators({Monomial{0, d * (l - 1)}}),
                         ideal_S_impl(cls, S));
    out.t_part = product(MonomialIdeal::from_generators({Monomial{d * (l - 1), 0}}),
                         ideal_T_impl(cls, T));
    MonomialIdeal rhs = sum(sum(out.s_part, out.t_part), product(corner, out.i_m));
    out.holds = rhs == Pl;
    MonomialIdeal md = power(MonomialIdeal::from_generators({Monomial{1, 0}, Monomial{0, 1}}),
                             d * (l - 2));
    out.m_is_max_power = out.i_m == md;
    return out;
}

namespace {

bool pairwise_sum_condition(const std::vector<Int>& exps, Int d) {
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (std::size_t j = i; j < exps.size(); ++j) {
            Int s = exps[i] + exps[j];
            if (s >= d) continue;
            if (!std::binary_search(exps.begin(), exps.end(), s)) return false;
        }
    return true;
}

}  // namespace

SufficiencyCheck sufficient_rr_check(const MonomialIdeal& I) {
    IdealClass cls = classify(I);
    if (cls.kind != IdealClassKind::EqualDegree) throw WrongClass("sufficient_rr_check");
    std::vector<Int> xs = positive_x_exponents(I);
    std::vector<Int> ys = positive_y_exponents(I);
    return {pairwise_sum_condition(xs, cls.d), pairwise_sum_condition(ys, cls.d)};
}

std::vector<PowerStatus> all_powers_rr_check(const MonomialIdeal& I, Int l_max,
                                             Int brute_max_l) {
    if (!is_m_primary(I)) throw NotPrimary();
    if (l_max < 1) throw BadParameters("all_powers_rr_check: l_max must be >= 1");
    std::vector<PowerStatus> out;
    out.reserve(static_cast<std::size_t>(l_max));
    MonomialIdeal P = I;
    for (Int l = 1; l <= l_max; ++l) {
        RRStatus st = is_ratliff_rush(P, brute_max_l);
        out.push_back({l, st.is_rr, st.certified});
        if (l < l_max) P = product(P, I);
    }
    return out;
}

MonomialIdeal family_ideal(const std::string& name, const std::vector<Int>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw BadParameters("family " + name + ": expected " + std::to_string(n) +
                                " parameter(s), got " + std::to_string(params.size()));
    };
    std::vector<Monomial> gens;
    if (name == "I_d") {
        need(1);
        Int d = params[0];
        if (d < 2) throw BadParameters("family I_d: need d >= 2");
        gens = {Monomial{0, d}, Monomial{d - 1, 1}, Monomial{d, 0}};
    } else if (name == "I_dk") {
        need(2);
        Int d = params[0], k = params[1];
        if (d < 2 || k < 1 || k >= d) throw BadParameters("family I_dk: need d >= 2, 1 <= k < d");
        gens.push_back(Monomial{0, d});
        for (Int j = 0; j <= k; ++j) gens.push_back(Monomial{d - k + j, k - j});
    } else if (name == "I_k") {
        need(1);
        Int k = params[0];
        if (k < 1) throw BadParameters("family I_k: need k >= 1");
        gens.push_back(Monomial{0, 6 * k + 1});
        for (Int i = 0; i < k; ++i) gens.push_back(Monomial{2 * (k + i) + 1, 4 * k - 2 * i});
        for (Int i = 0; i <= 2 * k; ++i) gens.push_back(Monomial{4 * k + i + 1, 2 * k - i});
    } else if (name == "I_nk") {
        need(2);
        Int n = params[0], k = params[1];
        if (n < 1 || k < 1) throw BadParameters("family I_nk: need n >= 1, k >= 1");
        for (Int i = 0; i <= k; ++i) gens.push_back(Monomial{i * n, n * (k + 1 - i) - 1});
        for (Int j = 0; j < n; ++j) gens.push_back(Monomial{k * n + j, n - j - 1});
    } else {
        throw BadParameters("unknown family: " + name +
                            " (expected I_d, I_dk, I_k, or I_nk)");
    }
    return MonomialIdeal::from_generators(std::move(gens));
}

EnumerationSummary enumerate_equal_degree(
    Int d, const std::function<void(const MonomialIdeal&, bool)>& sink) {
    if (d < 2 || d > 22) throw BadParameters("enumerate_equal_degree: need 2 <= d <= 22");
    EnumerationSummary summary;
    Int subsets = Int{1} << (d - 1);
    for (Int bits = 0; bits < subsets; ++bits) {
        std::vector<Monomial> gens{Monomial{0, d}, Monomial{d, 0}};
        for (Int i = 1; i < d; ++i)
            if ((bits >> (i - 1)) & 1) gens.push_back(Monomial{i, d - i});
        MonomialIdeal I = MonomialIdeal::from_generators(std::move(gens));
        bool rr = closed_closure_impl(I, IdealClass::equal_degree(d)) == I;
        ++summary.total;
        summary.rr += rr ? 1 : 0;
        Int a1 = d, b1 = d;
        for (const Monomial& g : I.generators()) {
            if (g.a > 0) a1 = std::min(a1, g.a);
            if (g.b > 0) b1 = std::min(b1, g.b);
        }
        if (2 * a1 >= d || 2 * b1 >= d) ++summary.half;
        if (sink) sink(I, rr);
    }
    return summary;
}

}  // namespace rr
