#include "rr/ideal.hpp"

#include <algorithm>

#include "rr/errors.hpp"

namespace rr {

MonomialIdeal make_canonical(std::vector<Monomial> sorted_antichain) {
    return MonomialIdeal(std::move(sorted_antichain), MonomialIdeal::Canonical{});
}

MonomialIdeal MonomialIdeal::from_generators(std::vector<Monomial> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    // Sorted by (a, b); a generator survives iff its b is a new minimum,
    // which removes exactly the monomials divisible by an earlier one.
    std::vector<Monomial> kept;
    Int min_b = -1;
    for (const Monomial& m : raw) {
        if (min_b >= 0 && m.b >= min_b) continue;
        kept.push_back(m);
        min_b = m.b;
    }
    return make_canonical(std::move(kept));
}

bool MonomialIdeal::contains_monomial(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
    for (const Monomial& g : other.gens_)
        if (!contains_monomial(g)) return false;
    return true;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    std::vector<Monomial> all = I.generators();
    all.insert(all.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal::from_generators(std::move(all));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.is_zero() || J.is_zero()) return MonomialIdeal();
    std::vector<Monomial> prods;
    prods.reserve(I.generators().size() * J.generators().size());
    for (const Monomial& g : I.generators())
        for (const Monomial& h : J.generators())
            prods.push_back(Monomial{g.a + h.a, g.b + h.b});
    return MonomialIdeal::from_generators(std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& I, Int l) {
    if (l < 0) throw BadParameters("power: exponent must be >= 0");
    if (l == 0) return MonomialIdeal::unit();
    MonomialIdeal P = I;
    for (Int i = 1; i < l; ++i) P = product(P, I);
    return P;
}

static MonomialIdeal colon_monomial(const MonomialIdeal& I, const Monomial& m) {
    std::vector<Monomial> shifted;
    shifted.reserve(I.generators().size());
    for (const Monomial& g : I.generators())
        shifted.push_back(Monomial{std::max<Int>(g.a - m.a, 0), std::max<Int>(g.b - m.b, 0)});
    return MonomialIdeal::from_generators(std::move(shifted));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    std::vector<Monomial> lcms;
    lcms.reserve(I.generators().size() * J.generators().size());
    for (const Monomial& g : I.generators())
        for (const Monomial& h : J.generators())
            lcms.push_back(Monomial{std::max(g.a, h.a), std::max(g.b, h.b)});
    return MonomialIdeal::from_generators(std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (J.is_zero()) throw ZeroDivisor();
    bool first = true;
    MonomialIdeal result;
    for (const Monomial& m : J.generators()) {
        MonomialIdeal part = colon_monomial(I, m);
        result = first ? part : intersect(result, part);
        first = false;
    }
    return result;
}

std::pair<Monomial, MonomialIdeal> extract_common_factor(const MonomialIdeal& I) {
    if (I.is_zero()) throw ZeroIdeal();
    Monomial m{I.generators()[0].a, I.generators()[0].b};
    for (const Monomial& g : I.generators()) {
        m.a = std::min(m.a, g.a);
        m.b = std::min(m.b, g.b);
    }
    std::vector<Monomial> reduced;
    reduced.reserve(I.generators().size());
    for (const Monomial& g : I.generators())
        reduced.push_back(Monomial{g.a - m.a, g.b - m.b});
    return {m, MonomialIdeal::from_generators(std::move(reduced))};
}

bool is_m_primary(const MonomialIdeal& I) {
    if (I.is_zero()) return false;
    return I.generators().front().a == 0 && I.generators().back().b == 0;
}

Int colength(const MonomialIdeal& I) {
    if (!is_m_primary(I)) throw NotPrimary();
    const auto& g = I.generators();
    Int total = 0;
    for (std::size_t i = 1; i < g.size(); ++i)
        total += g[i].a * (g[i - 1].b - g[i].b);
    return total;
}

Int hilbert_function(const MonomialIdeal& I, Int l) {
    if (!is_m_primary(I)) throw NotPrimary();
    if (l < 0) throw BadParameters("hilbert_function: l must be >= 0");
    return colength(power(I, l));
}

HilbertPolynomial hilbert_polynomial(const MonomialIdeal& I, Int l_start) {
    if (!is_m_primary(I)) throw NotPrimary();
    if (l_start < 1) throw BadParameters("hilbert_polynomial: l_start must be >= 1");
    Rational h[5];
    for (Int i = 0; i < 5; ++i) h[i] = Rational(hilbert_function(I, l_start + i));

    HilbertPolynomial P;
    P.c2 = (h[2] - 2 * h[1] + h[0]) / 2;
    Rational l0(l_start);
    P.c1 = (h[1] - h[0]) - P.c2 * (2 * l0 + 1);
    P.c0 = h[0] - P.c2 * l0 * l0 - P.c1 * l0;
    P.verified = P.eval(l_start + 3) == h[3] && P.eval(l_start + 4) == h[4];
    return P;
}

}  // namespace rr
