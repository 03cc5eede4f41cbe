#include "rr/render.hpp"

#include <algorithm>
#include <sstream>

namespace rr {

std::string to_text(const Monomial& m) {
    if (m.a == 0 && m.b == 0) return "1";
    std::string out;
    if (m.a > 0) {
        out += "x";
        if (m.a > 1) out += "^" + std::to_string(m.a);
    }
    if (m.b > 0) {
        if (!out.empty()) out += "*";
        out += "y";
        if (m.b > 1) out += "^" + std::to_string(m.b);
    }
    return out;
}

std::string to_text(const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string out;
    for (const Monomial& g : I.generators()) {
        if (!out.empty()) out += ", ";
        out += to_text(g);
    }
    return out;
}

std::string to_text(const IdealClass& cls) {
    switch (cls.kind) {
        case IdealClassKind::EqualDegree:
            return "equal-degree (d = " + std::to_string(cls.d) + ")";
        case IdealClassKind::SlantedLine:
            return "slanted-line (a_r = " + std::to_string(cls.a_r) +
                   ", b_0 = " + std::to_string(cls.b_0) + ")";
        case IdealClassKind::General:
            return "general";
    }
    return "general";
}

nlohmann::json to_json(const MonomialIdeal& I) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Monomial& g : I.generators()) gens.push_back({g.a, g.b});
    return {{"generators", gens}};
}

nlohmann::json to_json(const IdealClass& cls) {
    switch (cls.kind) {
        case IdealClassKind::EqualDegree:
            return {{"class", "equal_degree"}, {"d", cls.d}};
        case IdealClassKind::SlantedLine:
            return {{"class", "slanted_line"}, {"a_r", cls.a_r}, {"b_0", cls.b_0}};
        case IdealClassKind::General:
            return {{"class", "general"}};
    }
    return {{"class", "general"}};
}

nlohmann::json to_json(const ClosureResult& res) {
    nlohmann::json j;
    j["closure"] = to_json(res.closure);
    j["method"] = res.method == ClosureMethod::ClosedForm ? "closed_form" : "brute_force";
    if (res.reduction_number)
        j["reduction_number"] = *res.reduction_number;
    else
        j["reduction_number"] = nullptr;
    j["certified"] = res.certified;
    j["l_used"] = res.l_used;
    return j;
}

std::string staircase(const MonomialIdeal& I, const MonomialIdeal* added) {
    constexpr Int kMax = 60;
    Int max_a = 0, max_b = 0;
    for (const Monomial& g : I.generators()) {
        max_a = std::max(max_a, g.a);
        max_b = std::max(max_b, g.b);
    }
    if (added)
        for (const Monomial& g : added->generators()) {
            max_a = std::max(max_a, g.a);
            max_b = std::max(max_b, g.b);
        }
    bool clipped = max_a >= kMax || max_b >= kMax;
    Int cols = std::min(max_a, kMax - 1);
    Int rows = std::min(max_b, kMax - 1);

    auto is_gen = [](const MonomialIdeal& J, Int a, Int b) {
        for (const Monomial& g : J.generators())
            if (g.a == a && g.b == b) return true;
        return false;
    };

    std::ostringstream out;
    for (Int b = rows; b >= 0; --b) {
        out.width(3);
        out << b << " |";
        for (Int a = 0; a <= cols; ++a) {
            char cell = '.';
            if (is_gen(I, a, b))
                cell = 'G';
            else if (added && added->contains_monomial(Monomial{a, b}) &&
                     !I.contains_monomial(Monomial{a, b}))
                cell = '+';
            else if (I.contains_monomial(Monomial{a, b}))
                cell = '#';
            out << ' ' << cell;
        }
        out << '\n';
    }
    out << "    +";
    for (Int a = 0; a <= cols; ++a) out << "--";
    out << "\n     x = 0.." << cols;
    if (clipped) out << "  (clipped to " << kMax << "x" << kMax << ")";
    out << '\n';
    return out.str();
}

}  // namespace rr
