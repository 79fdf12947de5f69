#ifndef GLS_NUMERIC_HPP
#define GLS_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gls {

/// Exact arbitrary-precision integer / rational used throughout.
/// All growth functions, ratios and thresholds are exact; no floating
/// point enters any certificate or report.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k) for arbitrary-precision n and small k.
/// Returns 0 when n < k (the convention used by all closed-form growth
/// functions here, so expressions like C(na-2+d+1, d+1) vanish cleanly
/// for small n).
Int binomial(const Int& n, unsigned k);

/// gcd helper on nonnegative Int.
Int gcd(Int a, Int b);

/// Parses an exact rational from "p/q", an integer string, or a plain
/// decimal like "0.05" (converted exactly to 1/20). Throws
/// std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

/// Parses a (possibly huge) decimal integer.
Int parse_int(const std::string& text);

/// Canonical rational rendering: reduced "p/q", or just "p" when the
/// denominator is 1. This format is frozen by the golden files.
std::string to_string(const Rat& r);
std::string to_string(const Int& n);

/// Int -> int64 when it fits.
std::optional<std::int64_t> to_int64(const Int& n);

inline Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

} // namespace gls

#endif
