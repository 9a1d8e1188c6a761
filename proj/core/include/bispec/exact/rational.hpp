#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bispec {

/// Arbitrary-precision rational, always canonical (gcd 1, positive denominator).
using Rat = mpq_class;
using BigInt = mpz_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

/// Accepts "p", "-p", "p/q".
Rat parse_rat(std::string_view text);

Rat pow(const Rat& base, unsigned exp);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace bispec
