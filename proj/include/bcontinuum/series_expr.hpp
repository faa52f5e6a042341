#pragma once

// A small expression grammar for user-defined series terms:
//   identifiers i, x; operators + - * / ^; functions sin, cos, exp;
//   integer and decimal literals; parentheses.
// Example: "sin(i*x)/i".

#include "bcontinuum/sumtheorem.hpp"

#include <string>

namespace bcontinuum {

// Parses an expression into a term function u_i(x). Throws ParseError.
Series parse_series(const std::string& expr, Interval interval, std::string label = {});

} // namespace bcontinuum
