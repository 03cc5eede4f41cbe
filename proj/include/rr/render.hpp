#pragma once

#include <string>

#include <json.hpp>

#include "rr/closure.hpp"
#include "rr/ideal.hpp"

namespace rr {

std::string to_text(const Monomial& m);

// Parseable generator list ("y^7, x^2*y^5, x^7"); "0" for the zero ideal.
std::string to_text(const MonomialIdeal& I);

std::string to_text(const IdealClass& cls);

nlohmann::json to_json(const MonomialIdeal& I);
nlohmann::json to_json(const IdealClass& cls);
nlohmann::json to_json(const ClosureResult& res);

/* ASCII staircase, y-axis up: 'G' marks generators, '#' the rest of the
 * ideal, '.' the complement; generators of `added` outside I print '+'.
 * Cells beyond 60 columns/rows are elided. */
std::string staircase(const MonomialIdeal& I, const MonomialIdeal* added = nullptr);

}  // namespace rr
