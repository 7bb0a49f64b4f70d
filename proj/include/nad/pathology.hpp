#ifndef NAD_PATHOLOGY_HPP
#define NAD_PATHOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nad/rational.hpp"

namespace nad {

// x = sum a_i p^{-i} in X_p = [0,1] minus the p-power rationals; digits are
// an explicit prefix followed by a repeating block. Eventually constant
// digit streams are the excluded p-power rationals and are rejected.
class DigitStream {
 public:
  DigitStream(Prime base, std::vector<std::uint8_t> prefix, std::vector<std::uint8_t> period);
  /// "PREFIX,period=PER" or "period=PER".
  static DigitStream parse(const std::string& text, Prime base);

  Prime base() const { return base_; }
  /// a_n, 1-based as in the partial sums.
  std::uint8_t digit(unsigned n) const;
  /// r = sum_{i<=n} a_i p^{-i}.
  Rational partial_sum(unsigned n) const;

 private:
  Prime base_;
  std::vector<std::uint8_t> prefix_;
  std::vector<std::uint8_t> period_;
};

// J_{r,s} = (r,s) intersected with X_p, endpoints n/p^k.
struct DyadicInterval {
  Prime base;
  Rational r, s;

  DyadicInterval(Prime base, Rational r, Rational s);
};

/// upsilon(J_{r,s}) = 1/s - 1/r, or 1/s when r = 0.
Rational upsilon(const DyadicInterval& j);

/// J_n(x): (partial sum, partial sum + p^{-n}).
DyadicInterval enclosing_interval(const DigitStream& x, unsigned n);

struct DecayRow {
  unsigned n;
  long k_n;             // max{k <= n : a_k != p-1}
  long abs_exponent;    // |upsilon(J_n)|_p = p^{-abs_exponent}
  Rational upsilon_value;
};

struct DecaySequence {
  std::vector<DecayRow> rows;
  std::vector<unsigned> skipped_zero_digit;   // n with a_n = 0, where the formula is not claimed
  std::vector<unsigned> skipped_all_top;      // n with every digit <= n equal to p-1
  bool formula_confirmed = true;              // exact |.|_p matched p^{-k_n} everywhere
  bool norm_decays = true;                    // k_n is eventually strictly increasing
};

/// Evaluates upsilon(J_n(x)) exactly for admissible n <= N and reconciles
/// the digit formula k_n against the exact p-adic absolute value.
DecaySequence decay_sequence(const DigitStream& x, unsigned N);

}  // namespace nad

#endif
