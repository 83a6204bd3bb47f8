#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace umb {

/// Exact rational coefficient. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Scalar& q) { return q.get_str(); }

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

}  // namespace umb
