#pragma once

#include <string>
#include <string_view>

#include "umbrella/ncpoly.hpp"

namespace umb {

// Polynomial literal syntax, e.g. "1/3 * x0 x0 x0 - y1 y2 + 2". Generators
// are matched case-sensitively against the alphabet; factors juxtapose or
// join with '*', "x0^3" repeats a letter, parentheses group, and a leading
// coefficient may be an integer or p/q. U+2212 is accepted as a minus sign.

/// Throws std::invalid_argument with the offending position on bad input.
NCPoly parse_polynomial(const AlphabetPtr& alphabet, std::string_view text);

/// Space separated generator names; "" and "1" denote the empty word.
Word parse_word(const Alphabet& alphabet, std::string_view text);

std::string format_word(const Alphabet& alphabet, const Word& w);

/// Terms in decreasing wlex order, e.g. "y1 y2 - 1/3 x0 x0 x0". Zero prints "0".
std::string format_polynomial(const NCPoly& f);

}  // namespace umb
