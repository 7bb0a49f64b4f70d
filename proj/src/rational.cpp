#include "nad/rational.hpp"

#include <cassert>
#include <cmath>

namespace nad {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n < (1ul << 32)) {
    // trial division up to 2^16 settles everything below 2^32
    for (unsigned long d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

void require_prime(unsigned long n) {
  if (!is_prime(n)) {
    throw std::invalid_argument("not a prime: " + std::to_string(n));
  }
}

long valuation(const Integer& n, Prime l) {
  if (n == 0) throw std::invalid_argument("valuation of zero integer");
  Integer m = ::abs(n);
  Integer lz(static_cast<unsigned long>(l));
  long v = 0;
  Integer q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), lz.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

std::optional<long> valuation(const Rational& x, Prime l) {
  require_prime(l);
  if (x == 0) return std::nullopt;
  return valuation(Integer(x.get_num()), l) - valuation(Integer(x.get_den()), l);
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational: '" + s + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

UltraNorm UltraNorm::abs(const Rational& x, Prime l) {
  auto v = valuation(x, l);
  if (!v) return UltraNorm::zero();
  return UltraNorm(l, *v);
}

UltraNorm UltraNorm::operator*(const UltraNorm& o) const {
  if (is_zero() || o.is_zero()) return zero();
  assert(prime_ == o.prime_);
  return UltraNorm(prime_, *exponent_ + *o.exponent_);
}

bool UltraNorm::operator<(const UltraNorm& o) const {
  if (is_zero()) return !o.is_zero();
  if (o.is_zero()) return false;
  assert(prime_ == o.prime_);
  return *exponent_ > *o.exponent_;
}

bool UltraNorm::operator==(const UltraNorm& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  assert(prime_ == o.prime_);
  return *exponent_ == *o.exponent_;
}

Rational UltraNorm::to_rational() const {
  if (is_zero()) return Rational(0);
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), prime_, static_cast<unsigned long>(std::labs(*exponent_)));
  if (*exponent_ >= 0) return Rational(1) / Rational(p);
  return Rational(p);
}

double UltraNorm::to_double() const {
  if (is_zero()) return 0.0;
  return std::pow(static_cast<double>(prime_), -static_cast<double>(*exponent_));
}

std::string UltraNorm::to_string() const {
  if (is_zero()) return "0";
  if (*exponent_ == 0) return "1";
  return std::to_string(prime_) + "^" + std::to_string(-*exponent_);
}

}  // namespace nad
