#ifndef NAD_STEP_FUNCTION_HPP
#define NAD_STEP_FUNCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "nad/measure.hpp"
#include "nad/rational.hpp"
#include "nad/shift_space.hpp"
#include "nad/transform.hpp"

namespace nad {

// A step function in canonical form: pairwise disjoint nonempty supports,
// nonzero coefficients, terms sorted; the zero function has no terms.
class StepFunction {
 public:
  struct Term {
    Rational coeff;
    ClopenSet support;
  };

  explicit StepFunction(const Alphabet& a) : alphabet_(a) {}
  /// Canonicalizes an arbitrary term list (overlaps and zeros allowed).
  StepFunction(const Alphabet& a, const std::vector<Term>& raw_terms);

  static StepFunction indicator(const ClopenSet& A);
  static StepFunction zero(const Alphabet& a) { return StepFunction(a); }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// All coefficients in {0,1}, i.e. the function is an indicator.
  bool is_indicator() const;
  /// Union of supports (for indicators: the indicated set).
  ClopenSet support() const;

  Rational value_on_word(const std::vector<std::uint8_t>& prefix) const;

  StepFunction operator+(const StepFunction& o) const;
  StepFunction operator-(const StepFunction& o) const;
  StepFunction operator*(const StepFunction& o) const;  // pointwise
  StepFunction scaled(const Rational& c) const;

  /// U_T f = f o T; supports become T-preimages.
  StepFunction compose_with(const Transformation& T) const;

  bool operator==(const StepFunction& o) const;
  bool operator!=(const StepFunction& o) const { return !(*this == o); }
  std::string str() const;

 private:
  Alphabet alphabet_;
  std::vector<Term> terms_;
};

/// Integral: sum of coeff * mu(support).
Rational integrate(const BernoulliMeasure& mu, const StepFunction& f);

/// ||f||_mu = max over terms of |coeff| * ||support||.
UltraNorm step_norm(const BernoulliMeasure& mu, const StepFunction& f);

// A linear map on step functions given by the images of all depth-N
// cylinders; images of shallower cylinders follow by additivity.
class LinearOnSteps {
 public:
  LinearOnSteps(const Alphabet& domain, unsigned depth, std::vector<StepFunction> images);

  /// U_phi for a measure algebra iso restricted to its depth.
  static LinearOnSteps from_iso(const MeasureAlgebraIso& iso);

  const Alphabet& domain_alphabet() const { return domain_; }
  unsigned depth() const { return depth_; }
  /// Image of chi of a depth-n cylinder, n <= depth.
  StepFunction image_of_cylinder(unsigned n, WordCode w) const;
  /// Image of an indicator step function supported at depth <= depth().
  StepFunction apply_indicator(const ClopenSet& A) const;

 private:
  Alphabet domain_;
  unsigned depth_;
  std::vector<StepFunction> images_;  // indexed by depth-N word code
};

struct SpectralCheckResult {
  bool ok = true;
  std::vector<std::string> failures;
  std::optional<MeasureAlgebraIso> iso;
  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

/// Checks that W is multiplicative and integral-preserving on indicators of
/// cylinders to depth, and extracts the induced measure algebra isomorphism.
SpectralCheckResult check_spectral_conditions(const BernoulliMeasure& mu,
                                              const BernoulliMeasure& nu, const LinearOnSteps& W);

}  // namespace nad

#endif
