#pragma once

#include <string>

#include "rr/ideal.hpp"

namespace rr {

/* Grammar (whitespace-insensitive):
 *   ideal := gen ("," gen)*
 *   gen   := term ("*" term)*
 *   term  := "x" ["^" int] | "y" ["^" int] | "1"
 * or the tuple form "(a,b)" pairs, comma-separated.  Repeated variables
 * within a generator accumulate.  Throws ParseError with the offending
 * position. */
MonomialIdeal parse_ideal(const std::string& text);

}  // namespace rr
