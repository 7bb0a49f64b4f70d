#include "nad/measure.hpp"

#include <algorithm>
#include <stdexcept>

namespace nad {

BernoulliMeasure::BernoulliMeasure(const Alphabet& a, Prime value_prime,
                                   std::vector<Rational> weights)
    : alphabet_(a), value_prime_(value_prime), weights_(std::move(weights)) {
  require_prime(value_prime_);
  if (weights_.size() != alphabet_.p) {
    throw std::invalid_argument("need exactly p weights");
  }
  Rational sum(0);
  for (const auto& q : weights_) sum += q;
  if (sum != 1) throw std::invalid_argument("weights must sum to 1");
  weight_val_.reserve(weights_.size());
  for (const auto& q : weights_) {
    auto v = valuation(q, value_prime_);
    if (v && *v < 0) {
      throw std::invalid_argument("weight " + to_string(q) + " has |.|_" +
                                  std::to_string(value_prime_) + " > 1");
    }
    weight_val_.push_back(v);
  }
}

BernoulliMeasure BernoulliMeasure::haar(const Alphabet& a, Prime value_prime) {
  std::vector<Rational> w(a.p, Rational(1, static_cast<unsigned long>(a.p)));
  return BernoulliMeasure(a, value_prime, std::move(w));
}

Rational BernoulliMeasure::cylinder_measure(const std::vector<std::uint8_t>& word) const {
  Rational m(1);
  for (auto s : word) {
    if (s >= alphabet_.p) throw std::invalid_argument("symbol out of range");
    m *= weights_[s];
  }
  return m;
}

Rational BernoulliMeasure::measure(const ClopenSet& A) const {
  if (!(A.alphabet() == alphabet_)) throw std::invalid_argument("alphabet mismatch");
  Rational sum(0);
  for (const auto& w : A.word_list()) sum += cylinder_measure(w.symbols);
  return sum;
}

UltraNorm BernoulliMeasure::norm(const ClopenSet& A) const {
  if (!(A.alphabet() == alphabet_)) throw std::invalid_argument("alphabet mismatch");
  std::optional<long> best;  // min exponent over words
  for (const auto& w : A.word_list()) {
    long e = 0;
    bool zero = false;
    for (auto s : w.symbols) {
      if (!weight_val_[s]) {
        zero = true;
        break;
      }
      e += *weight_val_[s];
    }
    if (zero) continue;
    if (!best || e < *best) best = e;
  }
  if (!best) return UltraNorm::zero();
  return UltraNorm(value_prime_, *best);
}

UltraNorm BernoulliMeasure::point_norm(const PointWord& x) const {
  if (!(x.alphabet() == alphabet_)) throw std::invalid_argument("alphabet mismatch");
  for (auto s : x.period()) {
    if (!weight_val_[s] || *weight_val_[s] > 0) return UltraNorm::zero();
  }
  long e = 0;
  for (auto s : x.preperiod()) {
    if (!weight_val_[s]) return UltraNorm::zero();
    e += *weight_val_[s];
  }
  return UltraNorm(value_prime_, e);
}

ClopenSet random_clopen(std::mt19937_64& rng, const Alphabet& a, unsigned depth) {
  std::uint64_t span = pow_u64(a.p, depth);
  std::vector<WordCode> words;
  for (std::uint64_t w = 0; w < span; ++w) {
    if (rng() & 1) words.push_back(w);
  }
  return ClopenSet::from_words(a, depth, std::move(words));
}

VerifyReport BernoulliMeasure::verify_axioms(unsigned depth, std::uint64_t seed) const {
  if (depth > 10) throw std::invalid_argument("verify depth capped at 10");
  VerifyReport rep;
  std::mt19937_64 rng(seed);

  // (a) additivity over random disjoint pairs
  for (int i = 0; i < 100; ++i) {
    ClopenSet a = random_clopen(rng, alphabet_, depth);
    ClopenSet b = random_clopen(rng, alphabet_, depth).subtract(a);
    if (measure(a.unite(b)) != measure(a) + measure(b)) {
      rep.fail("additivity violated: A=" + a.str() + " B=" + b.str());
    }
  }

  // (b) boundedness: ||Omega|| finite, monotone / convex / minimum norm laws
  if (norm(ClopenSet::full(alphabet_)) != UltraNorm::one(value_prime_)) {
    rep.fail("||Omega|| != 1");
  }
  for (int i = 0; i < 100; ++i) {
    ClopenSet a = random_clopen(rng, alphabet_, depth);
    ClopenSet b = random_clopen(rng, alphabet_, depth);
    UltraNorm na = norm(a), nb = norm(b);
    if (!(norm(a.intersect(b)) <= na)) rep.fail("monotone violated: " + a.str());
    if (!(norm(a.unite(b)) <= UltraNorm::max(na, nb)))
      rep.fail("convex violated: A=" + a.str() + " B=" + b.str());
    if (!(norm(a.intersect(b)) <= UltraNorm::min(na, nb)))
      rep.fail("minimum violated: A=" + a.str() + " B=" + b.str());
  }

  // (c) continuity proxy: cylinder chain along a point in the negligible set
  std::optional<unsigned> heavy;
  for (unsigned s = 0; s < alphabet_.p; ++s) {
    if (!weight_val_[s] || *weight_val_[s] > 0) {
      heavy = s;
      break;
    }
  }
  if (heavy) {
    PointWord x(alphabet_, {}, {static_cast<std::uint8_t>(*heavy)});
    UltraNorm first = UltraNorm::one(value_prime_);
    UltraNorm prev = first;
    for (unsigned n = 1; n <= depth; ++n) {
      ClopenSet c = ClopenSet::cylinder(alphabet_, FiniteWord(x.prefix(n)));
      UltraNorm cur = norm(c);
      if (!(cur <= prev)) {
        rep.fail("chain norm not monotone at n=" + std::to_string(n));
      }
      prev = cur;
    }
    if (!(prev < first)) rep.fail("chain norm did not decrease along " + x.str());
    rep.notes.push_back("continuity proxy chain along " + x.str() + " decreases to exponent " +
                        (prev.is_zero() ? std::string("inf") : std::to_string(prev.exponent())));
  } else {
    rep.notes.push_back("all weights are units: negligible set is empty, continuity proxy vacuous");
  }

  // (d) countable-additivity instance on a full cylinder split
  {
    ClopenSet c = ClopenSet::cylinder(alphabet_, FiniteWord({0}));
    Rational total(0);
    for (WordCode w : c.refine_to_depth(depth)) {
      total += cylinder_measure(FiniteWord::from_code(w, depth, alphabet_).symbols);
    }
    if (total != measure(c)) rep.fail("countable additivity instance failed on U_0");
  }
  return rep;
}

CountingMeasure::CountingMeasure(std::vector<std::string> labels, std::vector<Rational> h,
                                 Prime value_prime)
    : labels_(std::move(labels)), h_(std::move(h)), value_prime_(value_prime) {
  require_prime(value_prime_);
  if (labels_.size() != h_.size()) throw std::invalid_argument("labels/h size mismatch");
  if (labels_.size() > 20) throw std::length_error("counting ground set capped at 20");
  auto sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate label");
  }
}

std::uint32_t CountingMeasure::subset_from_labels(const std::vector<std::string>& names) const {
  std::uint32_t mask = 0;
  for (const auto& n : names) {
    auto it = std::find(labels_.begin(), labels_.end(), n);
    if (it == labels_.end()) throw std::invalid_argument("unknown label '" + n + "'");
    mask |= 1u << (it - labels_.begin());
  }
  return mask;
}

Rational CountingMeasure::measure(std::uint32_t subset) const {
  Rational sum(0);
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (subset & (1u << i)) sum += h_[i];
  }
  return sum;
}

UltraNorm CountingMeasure::norm(std::uint32_t subset) const {
  UltraNorm best = UltraNorm::zero();
  // all nonempty submasks
  for (std::uint32_t b = subset; b != 0; b = (b - 1) & subset) {
    best = UltraNorm::max(best, UltraNorm::abs(measure(b), value_prime_));
  }
  return best;
}

UltraNorm CountingMeasure::point_norm(std::size_t index) const {
  return UltraNorm::abs(h_.at(index), value_prime_);
}

VerifyReport CountingMeasure::verify_axioms(std::uint64_t seed) const {
  VerifyReport rep;
  std::mt19937_64 rng(seed);
  std::uint32_t all = (size() >= 32) ? ~0u : ((1u << size()) - 1);
  for (int i = 0; i < 200; ++i) {
    std::uint32_t a = static_cast<std::uint32_t>(rng()) & all;
    std::uint32_t b = static_cast<std::uint32_t>(rng()) & all & ~a;
    if (measure(a | b) != measure(a) + measure(b)) rep.fail("additivity violated");
    std::uint32_t c = static_cast<std::uint32_t>(rng()) & all;
    if (!(norm(a & c) <= UltraNorm::min(norm(a), norm(c)))) rep.fail("minimum violated");
    if (!(norm(a | c) <= UltraNorm::max(norm(a), norm(c)))) rep.fail("convex violated");
  }
  return rep;
}

}  // namespace nad
