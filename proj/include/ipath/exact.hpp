#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ipath {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(const BigInt& base, unsigned exp);
Rational rpow(const Rational& base, unsigned exp);

// floor(n^(1/k)) for n >= 0, k >= 1.
BigInt iroot(const BigInt& n, unsigned k);

// Number of bits of n (0 for n = 0).
unsigned bit_length(const BigInt& n);

// ceil(log2 n) for n >= 1.
unsigned ceil_log2(const BigInt& n);

unsigned to_exponent(const Rational& r);  // throws unless a small nonnegative integer

/// Rational bounds lo <= log2(n) <= hi with hi - lo <= 2^-bits (exact when
/// n is a power of two). Squaring-based digit extraction with directed
/// rounding, so both bounds are sound.
struct Log2Bounds {
  Rational lo;
  Rational hi;
  bool exact = false;
};
Log2Bounds log2_bounds(const BigInt& n, unsigned bits);

// Sign of a - c * (log2 n)^e with a >= 0, c > 0, e >= 0 rational, n >= 1,
// resolved by refining the log bounds. nullopt when undecided within the
// refinement budget.
std::optional<int> compare_with_log_power(const Rational& a, const Rational& c, const Rational& e,
                                          const BigInt& n);

// Whether b >= n^(1 / (log2 n)^eps) for 0 < eps < 1, n >= 2, b >= 1. Only
// certified answers count as true, so borderline values report false.
bool at_least_log_threshold(const BigInt& b, const BigInt& n, const Rational& eps);

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

}  // namespace ipath
