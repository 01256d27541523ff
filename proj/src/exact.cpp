#include "ipath/exact.hpp"

#include <algorithm>
#include <cctype>

#include "ipath/errors.hpp"

namespace ipath {

namespace mp = boost::multiprecision;

BigInt ipow(const BigInt& base, unsigned exp) { return mp::pow(base, exp); }

Rational rpow(const Rational& base, unsigned exp) {
  return Rational(mp::pow(mp::numerator(base), exp), mp::pow(mp::denominator(base), exp));
}

unsigned bit_length(const BigInt& n) {
  if (n <= 0) return 0;
  return static_cast<unsigned>(mp::msb(n)) + 1;
}

unsigned ceil_log2(const BigInt& n) {
  if (n < 1) throw InputError("log2 of a non-positive integer");
  return n == 1 ? 0 : bit_length(n - 1);
}

BigInt iroot(const BigInt& n, unsigned k) {
  if (k == 0) throw InputError("zeroth root");
  if (n < 0) throw InputError("root of a negative integer");
  if (n < 2 || k == 1) return n;
  // Binary search on [0, 2^(bits/k + 1)].
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bit_length(n) / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (ipow(mid, k) <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

unsigned to_exponent(const Rational& r) {
  if (mp::denominator(r) != 1 || r < 0 || r > 1'000'000) {
    throw InputError("expected a small nonnegative integer, got " + to_string(r));
  }
  return static_cast<unsigned>(mp::numerator(r));
}

Log2Bounds log2_bounds(const BigInt& n, unsigned bits) {
  if (n < 1) throw InputError("log2 of a non-positive integer");
  const unsigned e = bit_length(n) - 1;
  if (n == (BigInt(1) << e)) return {Rational(e), Rational(e), true};

  // y = n / 2^e in (1, 2) held exactly in fixed point with F fraction bits.
  const unsigned frac = std::max(bits + 32, e + 1);
  const BigInt one = BigInt(1) << frac;
  const BigInt two = one << 1;
  BigInt lo_y = n << (frac - e);
  BigInt hi_y = lo_y;
  BigInt lo_bits = 0;
  BigInt hi_bits = 0;
  for (unsigned i = 0; i < bits; ++i) {
    lo_y = (lo_y * lo_y) >> frac;
    hi_y = (hi_y * hi_y + one - 1) >> frac;
    lo_bits <<= 1;
    hi_bits <<= 1;
    if (lo_y >= two) {
      lo_bits += 1;
      lo_y >>= 1;
    }
    if (hi_y >= two) {
      hi_bits += 1;
      hi_y = (hi_y + 1) >> 1;
    }
  }
  const BigInt scale = BigInt(1) << bits;
  return {Rational(e) + Rational(lo_bits, scale), Rational(e) + Rational(hi_bits + 1, scale),
          false};
}

namespace {

constexpr unsigned kStartBits = 48;
constexpr unsigned kMaxBits = 3072;

}  // namespace

std::optional<int> compare_with_log_power(const Rational& a, const Rational& c, const Rational& e,
                                          const BigInt& n) {
  if (a < 0 || c <= 0 || e < 0 || n < 1) throw InputError("compare_with_log_power: bad arguments");
  if (e == 0) return a > c ? 1 : (a < c ? -1 : 0);
  if (n == 1) return a > 0 ? 1 : 0;  // (log2 1)^e = 0
  // a >= c L^(p/q)  <=>  (a/c)^q >= L^p
  const unsigned p = static_cast<unsigned>(mp::numerator(e));
  const unsigned q = static_cast<unsigned>(mp::denominator(e));
  const Rational lhs = rpow(a / c, q);
  for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    const auto b = log2_bounds(n, bits);
    if (b.exact) {
      const Rational rhs = rpow(b.lo, p);
      return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    }
    if (lhs >= rpow(b.hi, p)) return 1;
    if (lhs < rpow(b.lo, p)) return -1;
  }
  return std::nullopt;
}

bool at_least_log_threshold(const BigInt& b, const BigInt& n, const Rational& eps) {
  if (n < 2 || b < 1 || eps <= 0 || eps >= 1) throw InputError("at_least_log_threshold: bad arguments");
  // b >= n^(1/(log n)^eps)  <=>  log b * (log n)^eps >= log n  <=>  (log b)^q >= (log n)^(q-p)
  const unsigned p = static_cast<unsigned>(mp::numerator(eps));
  const unsigned q = static_cast<unsigned>(mp::denominator(eps));
  for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    const auto lb = log2_bounds(b, bits);
    const auto ln = log2_bounds(n, bits);
    if (lb.exact && ln.exact) return rpow(lb.lo, q) >= rpow(ln.lo, q - p);
    if (rpow(lb.lo, q) >= rpow(ln.hi, q - p)) return true;
    if (rpow(lb.hi, q) < rpow(ln.lo, q - p)) return false;
  }
  return false;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& t) {
    if (t.empty()) throw InputError("malformed rational '" + s + "'");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw InputError("malformed rational '" + s + "'");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw InputError("malformed rational '" + s + "'");
    return BigInt(t);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + s + "'");
  return Rational(parse_int(s.substr(0, slash)), den);
}

std::string to_string(const Rational& r) {
  if (mp::denominator(r) == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ipath
