#ifndef NAD_SHIFT_SPACE_HPP
#define NAD_SHIFT_SPACE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nad {

// Alphabet {0,...,p-1} of the full one-sided shift Omega = {0,...,p-1}^N.
struct Alphabet {
  unsigned p;
  explicit Alphabet(unsigned size);
  bool operator==(const Alphabet& o) const { return p == o.p; }
};

// A finite word of length n is stored as its base-p value with the first
// symbol most significant, so numeric order on codes is lexicographic order
// on words of equal length.
using WordCode = std::uint64_t;

struct FiniteWord {
  std::vector<std::uint8_t> symbols;

  FiniteWord() = default;
  explicit FiniteWord(std::vector<std::uint8_t> s) : symbols(std::move(s)) {}
  /// Parse a digit string like "021"; validates digits against p.
  static FiniteWord parse(const std::string& digits, const Alphabet& a);
  static FiniteWord from_code(WordCode code, unsigned length, const Alphabet& a);

  unsigned length() const { return static_cast<unsigned>(symbols.size()); }
  WordCode code(const Alphabet& a) const;
  std::string str() const;
};

std::uint64_t pow_u64(std::uint64_t base, unsigned exp);

// A clopen subset of Omega in canonical form: a sorted set of distinct
// length-`depth` word codes, with depth minimal (the set cannot be written
// uniformly at depth-1, i.e. not every word's full sibling family is
// present). Omega is (0, {epsilon}); the empty set is (0, {}).
class ClopenSet {
 public:
  static ClopenSet empty(const Alphabet& a);
  static ClopenSet full(const Alphabet& a);
  static ClopenSet cylinder(const Alphabet& a, const FiniteWord& w);
  /// Canonicalizes an arbitrary word-code set given at a uniform depth.
  static ClopenSet from_words(const Alphabet& a, unsigned depth, std::vector<WordCode> words);

  const Alphabet& alphabet() const { return alphabet_; }
  unsigned depth() const { return depth_; }
  const std::vector<WordCode>& words() const { return words_; }
  bool is_empty() const { return words_.empty(); }
  bool is_full() const { return depth_ == 0 && !words_.empty(); }

  /// The unique depth-n word list denoting the same set; n >= depth().
  std::vector<WordCode> refine_to_depth(unsigned n) const;
  /// Number of depth-n words, without materializing them.
  std::uint64_t count_at_depth(unsigned n) const;

  ClopenSet unite(const ClopenSet& o) const;
  ClopenSet intersect(const ClopenSet& o) const;
  ClopenSet subtract(const ClopenSet& o) const;
  ClopenSet complement() const;

  /// Preimage under the k-fold shift: prepend every length-k word.
  ClopenSet shift_preimage(unsigned k = 1) const;
  /// Forward image under the shift (drop the first symbol).
  ClopenSet shift_image() const;

  bool contains_word_prefix(const std::vector<std::uint8_t>& prefix) const;
  bool is_subset_of(const ClopenSet& o) const;

  bool operator==(const ClopenSet& o) const;
  bool operator!=(const ClopenSet& o) const { return !(*this == o); }
  bool operator<(const ClopenSet& o) const;  // lexicographic, for sorted containers

  std::vector<FiniteWord> word_list() const;
  std::string str() const;  // set expression, re-parseable

 private:
  ClopenSet(const Alphabet& a, unsigned depth, std::vector<WordCode> words)
      : alphabet_(a), depth_(depth), words_(std::move(words)) {}
  void canonicalize();

  Alphabet alphabet_;
  unsigned depth_;
  std::vector<WordCode> words_;
};

// An eventually periodic infinite word u . v v v ..., canonical: v has
// minimal length and u is shortest possible.
class PointWord {
 public:
  PointWord(const Alphabet& a, std::vector<std::uint8_t> preperiod,
            std::vector<std::uint8_t> period);
  /// "PRE:PER" with base-p digit strings; preperiod may be empty ("(01)^inf" is ":01").
  static PointWord parse(const std::string& text, const Alphabet& a);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::uint8_t>& preperiod() const { return preperiod_; }
  const std::vector<std::uint8_t>& period() const { return period_; }

  std::uint8_t symbol_at(std::size_t i) const;
  std::vector<std::uint8_t> prefix(std::size_t n) const;
  /// Drop the first symbol (the shift action on points).
  PointWord shifted() const;

  bool operator==(const PointWord& o) const;
  std::string str() const;

 private:
  Alphabet alphabet_;
  std::vector<std::uint8_t> preperiod_;
  std::vector<std::uint8_t> period_;
};

bool contains_point(const ClopenSet& A, const PointWord& x);

}  // namespace nad

#endif
