#ifndef NAD_REAL_HPP
#define NAD_REAL_HPP

#include <string>

#include <mpfr.h>

#include "nad/rational.hpp"

namespace nad {

// Small RAII wrapper around mpfr_t at 384-bit precision, used for the
// real-valued side of the theory (entropy values, Fekete ratios) and for
// decimal rendering at output boundaries. Exact equalities stay in
// Rational / UltraNorm; Real only enters where logarithms do.
class Real {
 public:
  static constexpr mpfr_prec_t kPrec = 384;
  static constexpr double kTolerance = 1e-30;

  Real() { mpfr_init2(v_, kPrec), mpfr_set_zero(v_, 1); }
  explicit Real(double d) { mpfr_init2(v_, kPrec), mpfr_set_d(v_, d, MPFR_RNDN); }
  explicit Real(const Integer& z) {
    mpfr_init2(v_, kPrec), mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  explicit Real(const Rational& q) {
    mpfr_init2(v_, kPrec), mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Real& o) { mpfr_init2(v_, kPrec), mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real log2_of(const Integer& z);
  /// base^exp for integer exp (base a small positive integer).
  static Real power(unsigned long base, long exp);

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;

  int compare(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  /// Equality within kTolerance (absolute).
  bool approx_equal(const Real& o) const;
  bool operator<=(const Real& o) const;
  bool operator<(const Real& o) const { return compare(o) < 0 && !approx_equal(o); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Decimal string with the given number of significant digits.
  std::string str(int significant_digits = 50) const;

 private:
  mpfr_t v_;
};

}  // namespace nad

#endif
