#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellgrad {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rat_to_string(const Rat& q);

/// Parses "p" or "p/q" (optionally signed, surrounding spaces allowed).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

inline bool rat_is_integer(const Rat& q) { return denominator(q) == 1; }

/// True for odd multiples of 1/2.
inline bool rat_is_half_odd(const Rat& q) { return denominator(q) == 2; }

/// Exact conversion to a machine integer; throws if not an integer or out of range.
long long rat_to_ll(const Rat& q);

}  // namespace ellgrad
