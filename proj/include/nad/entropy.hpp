#ifndef NAD_ENTROPY_HPP
#define NAD_ENTROPY_HPP

#include <string>
#include <vector>

#include "nad/measure.hpp"
#include "nad/real.hpp"
#include "nad/shift_space.hpp"
#include "nad/transform.hpp"

namespace nad {

// Finite clopen partition of Omega: disjoint nonempty cells covering X.
class Partition {
 public:
  Partition(const Alphabet& a, std::vector<ClopenSet> cells);

  static Partition trivial(const Alphabet& a);
  /// Depth-1 cylinder partition {U_0,...,U_{p-1}}.
  static Partition depth_one(const Alphabet& a);
  /// Atom partition alpha(C_1,...,C_k): nonempty intersections of the C_i
  /// and their complements. k <= 16.
  static Partition from_sets(const Alphabet& a, const std::vector<ClopenSet>& sets);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<ClopenSet>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  Partition join(const Partition& o) const;
  /// alpha v T^{-1}alpha v ... v T^{-(n-1)}alpha.
  Partition dynamical_join(const Transformation& T, unsigned n) const;
  /// Preimage partition T^{-1}alpha.
  Partition preimage_under(const Transformation& T) const;

  /// alpha refines this (each of our cells is a union of alpha's cells).
  bool is_refined_by(const Partition& alpha) const;

  bool operator==(const Partition& o) const;

 private:
  Alphabet alphabet_;
  std::vector<ClopenSet> cells_;
};

// Finite clopen cover (overlaps allowed).
class Cover {
 public:
  Cover(const Alphabet& a, std::vector<ClopenSet> members);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<ClopenSet>& members() const { return members_; }

  Cover join(const Cover& o) const;
  Cover preimage_under(const Transformation& T) const;
  Cover dynamical_join(const Transformation& T, unsigned n) const;

  /// W refines this cover (every member of W is inside some member of ours).
  bool is_refined_by(const Cover& w) const;
  /// Atom partition alpha(U).
  Partition to_partition() const;

 private:
  Alphabet alphabet_;
  std::vector<ClopenSet> members_;
};

/// Exact minimum cardinality of a subfamily that still covers Omega.
/// Disjoint covers short-circuit; otherwise exact search, <= 24 members.
std::size_t min_subcover_size(const Cover& u);

// H = l^{-e} log2(M) where M counts significant cells and l^{-e} is the
// smallest significant-cell norm; H = 0 when M <= 1 or all cells are
// negligible (all_negligible flags the latter).
struct EntropyValue {
  Prime prime = 2;
  long min_norm_exponent = 0;
  Integer significant_count{0};
  bool all_negligible = false;

  Real value() const;
  bool is_zero() const;
  std::string str() const;
};

EntropyValue measure_entropy(const BernoulliMeasure& mu, const Partition& alpha);

struct EntropySequence {
  Prime prime;
  unsigned alphabet_size;
  std::vector<EntropyValue> terms;  // terms[i] is a_{i+1}

  const EntropyValue& a(unsigned n) const { return terms.at(n - 1); }
  unsigned length() const { return static_cast<unsigned>(terms.size()); }
  /// a_{n+m} <= a_n + a_m on all computed index pairs; empty if subadditive.
  std::vector<std::string> subadditivity_violations() const;
};

/// a_n = H_mu of the n-fold dynamical join, n = 1..N.
EntropySequence measure_entropy_sequence(const BernoulliMeasure& mu, const Transformation& T,
                                         const Partition& alpha, unsigned N);

/// b_n = log2 N(n-fold join) encoded as EntropyValues with unit norm factor.
EntropySequence topological_entropy_sequence(const Transformation& T, const Cover& u, unsigned N);

enum class FeketeClass { Exact, ExtrapolatedZero, Bracket };

struct FeketeEstimate {
  Real upper;       // min a_n/n, a true upper bound for the limit
  Real last_ratio;  // a_N/N
  FeketeClass classification;
  Real limit;  // the reported limit for Exact / ExtrapolatedZero; = upper for Bracket

  std::string classification_name() const;
};

FeketeEstimate fekete_estimate(const EntropySequence& seq);

struct EntropyComparison {
  EntropySequence measure_seq;
  EntropySequence top_seq;
  bool termwise_le = true;       // a_n <= b_n
  bool unit_norm_measure = false;  // all weights are l-adic units
  bool termwise_eq = true;       // only meaningful when unit_norm_measure
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// h_mu <= h_top comparison on a partition used both as partition and cover.
EntropyComparison compare_entropies(const BernoulliMeasure& mu, const Transformation& T,
                                    const Partition& alpha, unsigned N);

}  // namespace nad

#endif
