#ifndef NAD_RATIONAL_HPP
#define NAD_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nad {

// Exact rational. GMP keeps denominators positive and fractions reduced,
// which is exactly the normal form we need (zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

using Prime = unsigned long;

/// Deterministic primality test for the value/alphabet primes used here.
bool is_prime(unsigned long n);

/// Throws std::invalid_argument unless n is prime.
void require_prime(unsigned long n);

/// l-adic valuation of a nonzero integer.
long valuation(const Integer& n, Prime l);

/// v_l(x) for rational x; std::nullopt encodes v_l(0) = +infinity.
std::optional<long> valuation(const Rational& x, Prime l);

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& x);

// An element of {l^z : z in Z} union {0}. The stored exponent e denotes the
// value l^{-e}; an empty exponent is the zero norm. Every norm produced by
// the measures in this library lies in this set, so no floating point is
// involved until output.
class UltraNorm {
 public:
  UltraNorm() : prime_(0) {}  // zero norm, prime irrelevant
  UltraNorm(Prime l, long exponent) : prime_(l), exponent_(exponent) {}

  static UltraNorm zero() { return UltraNorm(); }
  static UltraNorm one(Prime l) { return UltraNorm(l, 0); }

  /// |x|_l = l^{-v_l(x)}.
  static UltraNorm abs(const Rational& x, Prime l);

  bool is_zero() const { return !exponent_.has_value(); }
  Prime prime() const { return prime_; }
  /// Exponent e with value l^{-e}; only valid when nonzero.
  long exponent() const { return *exponent_; }

  UltraNorm operator*(const UltraNorm& o) const;

  // Zero is the minimum; otherwise compare exponents (larger e = smaller value).
  bool operator<(const UltraNorm& o) const;
  bool operator==(const UltraNorm& o) const;
  bool operator!=(const UltraNorm& o) const { return !(*this == o); }
  bool operator<=(const UltraNorm& o) const { return *this < o || *this == o; }
  bool operator>(const UltraNorm& o) const { return o < *this; }
  bool operator>=(const UltraNorm& o) const { return o <= *this; }

  static UltraNorm max(const UltraNorm& a, const UltraNorm& b) { return a < b ? b : a; }
  static UltraNorm min(const UltraNorm& a, const UltraNorm& b) { return a < b ? a : b; }

  /// Exact rational value l^{-e}; zero norm gives 0.
  Rational to_rational() const;
  double to_double() const;
  std::string to_string() const;

 private:
  Prime prime_;
  std::optional<long> exponent_;
};

}  // namespace nad

#endif
