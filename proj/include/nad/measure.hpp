#ifndef NAD_MEASURE_HPP
#define NAD_MEASURE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "nad/rational.hpp"
#include "nad/shift_space.hpp"

namespace nad {

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

// Shift-invariant Bernoulli measure mu_q on Omega with values in Q_l:
// mu(U_w) is the product of the weights along w. Weights sum to 1 and all
// have |q_i|_l <= 1, so every cylinder norm is just |mu(U_w)|_l.
class BernoulliMeasure {
 public:
  BernoulliMeasure(const Alphabet& a, Prime value_prime, std::vector<Rational> weights);

  /// All weights 1/p; a measure iff l does not divide p.
  static BernoulliMeasure haar(const Alphabet& a, Prime value_prime);

  const Alphabet& alphabet() const { return alphabet_; }
  Prime value_prime() const { return value_prime_; }
  const std::vector<Rational>& weights() const { return weights_; }
  /// v_l(q_s); nullopt when q_s = 0.
  std::optional<long> weight_valuation(unsigned s) const { return weight_val_[s]; }

  Rational measure(const ClopenSet& A) const;
  Rational cylinder_measure(const std::vector<std::uint8_t>& word) const;

  /// ||A|| = sup |mu(B)| over B inside A; closed form: max over the words of
  /// A's canonical decomposition of |mu(U_w)|.
  UltraNorm norm(const ClopenSet& A) const;

  /// N_mu(x) along the cylinder chain of x; 0 exactly when the period of x
  /// visits a symbol with |q_s| < 1.
  UltraNorm point_norm(const PointWord& x) const;

  bool is_negligible(const ClopenSet& A) const { return norm(A).is_zero(); }

  /// Finite-depth additivity / boundedness / continuity-proxy checks.
  VerifyReport verify_axioms(unsigned depth, std::uint64_t seed = 1) const;

 private:
  Alphabet alphabet_;
  Prime value_prime_;
  std::vector<Rational> weights_;
  std::vector<std::optional<long>> weight_val_;
};

// Weighted counting measure A -> sum of h(a) over a in A, on the algebra of
// all subsets of a small explicit ground set. Subsets are bitmasks.
class CountingMeasure {
 public:
  CountingMeasure(std::vector<std::string> labels, std::vector<Rational> h, Prime value_prime);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Rational>& h() const { return h_; }
  Prime value_prime() const { return value_prime_; }
  std::size_t size() const { return labels_.size(); }

  std::uint32_t subset_from_labels(const std::vector<std::string>& names) const;

  Rational measure(std::uint32_t subset) const;
  /// Exhaustive sup of |mu(B)| over all subsets B of `subset`.
  UltraNorm norm(std::uint32_t subset) const;
  /// N_kappa(a) = |h(a)|.
  UltraNorm point_norm(std::size_t index) const;
  bool is_negligible(std::uint32_t subset) const { return norm(subset).is_zero(); }

  VerifyReport verify_axioms(std::uint64_t seed = 1) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> h_;
  Prime value_prime_;
};

using MeasureContext = std::variant<BernoulliMeasure, CountingMeasure>;

/// Uniform random clopen set: each depth-`depth` word kept with probability 1/2.
ClopenSet random_clopen(std::mt19937_64& rng, const Alphabet& a, unsigned depth);

}  // namespace nad

#endif
