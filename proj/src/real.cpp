#include "nad/real.hpp"

#include <cstdlib>
#include <stdexcept>

namespace nad {

Real Real::log2_of(const Integer& z) {
  if (z <= 0) throw std::invalid_argument("log2 of nonpositive integer");
  Real r;
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  mpfr_log2(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real Real::power(unsigned long base, long exp) {
  Real r;
  mpfr_set_ui(r.v_, base, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, exp, MPFR_RNDN);
  return r;
}

Real Real::operator+(const Real& o) const {
  Real r;
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-(const Real& o) const {
  Real r;
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator*(const Real& o) const {
  Real r;
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator/(const Real& o) const {
  Real r;
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

bool Real::approx_equal(const Real& o) const {
  Real diff = *this - o;
  mpfr_abs(diff.v_, diff.v_, MPFR_RNDN);
  return mpfr_cmp_d(diff.v_, kTolerance) < 0;
}

bool Real::operator<=(const Real& o) const { return compare(o) <= 0 || approx_equal(o); }

std::string Real::str(int significant_digits) const {
  char* s = nullptr;
  // %.*Rg gives significant digits in the shortest of fixed/scientific form
  if (mpfr_asprintf(&s, "%.*Rg", significant_digits, v_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace nad
