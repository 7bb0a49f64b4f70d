#ifndef NAD_TRANSFORM_HPP
#define NAD_TRANSFORM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nad/measure.hpp"
#include "nad/shift_space.hpp"

namespace nad {

// The transformations representable here: the one-sided shift, symbolwise
// permutations, and the add-one-with-carry odometer (digits little-endian).
class Transformation {
 public:
  enum class Kind { Shift, Permutation, Odometer };

  static Transformation shift(const Alphabet& a);
  static Transformation permutation(const Alphabet& a, std::vector<std::uint8_t> pi);
  static Transformation odometer(const Alphabet& a);

  Kind kind() const { return kind_; }
  const Alphabet& alphabet() const { return alphabet_; }
  bool invertible() const { return kind_ != Kind::Shift; }
  const std::vector<std::uint8_t>& perm() const { return pi_; }
  std::string name() const;

  ClopenSet preimage(const ClopenSet& A) const;
  /// Forward image; defined for every kind (the shift image is the prefix drop).
  ClopenSet image(const ClopenSet& A) const;
  PointWord apply(const PointWord& x) const;

 private:
  Transformation(Kind k, const Alphabet& a, std::vector<std::uint8_t> pi)
      : kind_(k), alphabet_(a), pi_(std::move(pi)) {}

  Kind kind_;
  Alphabet alphabet_;
  std::vector<std::uint8_t> pi_;  // permutation kind only (inverse derived)
};

// Finite-depth data of a measure algebra isomorphism: for each n <= depth,
// the image of every depth-n cylinder. Validation checks that each level is
// a bijection of the cylinder algebra (images partition Omega) and that
// levels are compatible (image of a word = union of images of its children).
class MeasureAlgebraIso {
 public:
  MeasureAlgebraIso(const Alphabet& domain, const Alphabet& codomain, unsigned depth,
                    std::map<std::pair<unsigned, WordCode>, ClopenSet> images);

  static MeasureAlgebraIso from_permutation(const Alphabet& a, std::vector<std::uint8_t> pi,
                                            unsigned depth);
  static MeasureAlgebraIso identity(const Alphabet& a, unsigned depth);

  unsigned depth() const { return depth_; }
  const Alphabet& domain_alphabet() const { return domain_; }
  const Alphabet& codomain_alphabet() const { return codomain_; }

  /// Image of a depth-n cylinder, n <= depth().
  const ClopenSet& cylinder_image(unsigned n, WordCode w) const;
  /// Image of any clopen set of depth <= depth(), by unions of cylinder images.
  ClopenSet apply(const ClopenSet& A) const;

  /// nu(Phi(B)) = mu(B) on all cylinders to depth().
  bool preserves_measure(const BernoulliMeasure& mu, const BernoulliMeasure& nu,
                         std::string* witness = nullptr) const;

  bool operator==(const MeasureAlgebraIso& o) const;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  unsigned depth_;
  std::map<std::pair<unsigned, WordCode>, ClopenSet> images_;
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

/// mu(T^{-1}A) = mu(A) on all cylinders to `depth` plus seeded random clopens;
/// invertible kinds also get the forward check mu(TA) = mu(A).
CheckReport check_measure_preserving(const BernoulliMeasure& mu, const Transformation& T,
                                     unsigned depth, std::uint64_t seed = 1);

/// Phi(T^{-1}B) = S^{-1}(Phi(B)) on all cylinders B to `depth`.
/// Phi must be consistent to depth+1 when preimages deepen words.
CheckReport check_conjugacy(const MeasureAlgebraIso& Phi, const Transformation& T,
                            const Transformation& S, unsigned depth);

/// Point map phi(x) = intersection of Phi-images of the cylinder chain of x;
/// returns the unique length-`output_depth` prefix, or throws.
FiniteWord point_map_from_iso(const MeasureAlgebraIso& Phi, const BernoulliMeasure& mu,
                              const PointWord& x, unsigned output_depth);

/// Isomorphy check for a symbol-permutation point map: measure preservation
/// of phi plus the set-level intertwining with T and S.
CheckReport check_iso_of_systems(const std::vector<std::uint8_t>& phi, const Transformation& T,
                                 const Transformation& S, const BernoulliMeasure& mu,
                                 const BernoulliMeasure& nu, unsigned depth);

}  // namespace nad

#endif
