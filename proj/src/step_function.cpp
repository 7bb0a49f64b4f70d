#include "nad/step_function.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nad {

StepFunction::StepFunction(const Alphabet& a, const std::vector<Term>& raw_terms) : alphabet_(a) {
  unsigned d = 0;
  for (const auto& t : raw_terms) {
    if (!(t.support.alphabet() == a)) throw std::invalid_argument("alphabet mismatch");
    d = std::max(d, t.support.depth());
  }
  std::map<WordCode, Rational> per_word;
  for (const auto& t : raw_terms) {
    for (WordCode w : t.support.refine_to_depth(d)) per_word[w] += t.coeff;
  }
  std::map<Rational, std::vector<WordCode>> by_coeff;
  for (auto& [w, c] : per_word) {
    if (c != 0) by_coeff[c].push_back(w);
  }
  for (auto& [c, words] : by_coeff) {
    terms_.push_back({c, ClopenSet::from_words(a, d, std::move(words))});
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return x.support < y.support; });
}

StepFunction StepFunction::indicator(const ClopenSet& A) {
  StepFunction f(A.alphabet());
  if (!A.is_empty()) f.terms_.push_back({Rational(1), A});
  return f;
}

bool StepFunction::is_indicator() const {
  for (const auto& t : terms_) {
    if (t.coeff != 1) return false;
  }
  return true;
}

ClopenSet StepFunction::support() const {
  ClopenSet s = ClopenSet::empty(alphabet_);
  for (const auto& t : terms_) s = s.unite(t.support);
  return s;
}

Rational StepFunction::value_on_word(const std::vector<std::uint8_t>& prefix) const {
  for (const auto& t : terms_) {
    if (t.support.contains_word_prefix(prefix)) return t.coeff;
  }
  return Rational(0);
}

StepFunction StepFunction::operator+(const StepFunction& o) const {
  std::vector<Term> raw = terms_;
  raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
  return StepFunction(alphabet_, raw);
}

StepFunction StepFunction::operator-(const StepFunction& o) const {
  return *this + o.scaled(Rational(-1));
}

StepFunction StepFunction::scaled(const Rational& c) const {
  if (c == 0) return zero(alphabet_);
  StepFunction f(alphabet_);
  for (const auto& t : terms_) f.terms_.push_back({c * t.coeff, t.support});
  return f;
}

StepFunction StepFunction::operator*(const StepFunction& o) const {
  if (!(alphabet_ == o.alphabet_)) throw std::invalid_argument("alphabet mismatch");
  std::vector<Term> raw;
  for (const auto& s : terms_) {
    for (const auto& t : o.terms_) {
      ClopenSet both = s.support.intersect(t.support);
      if (!both.is_empty()) raw.push_back({s.coeff * t.coeff, both});
    }
  }
  return StepFunction(alphabet_, raw);
}

StepFunction StepFunction::compose_with(const Transformation& T) const {
  std::vector<Term> raw;
  for (const auto& t : terms_) raw.push_back({t.coeff, T.preimage(t.support)});
  return StepFunction(alphabet_, raw);
}

bool StepFunction::operator==(const StepFunction& o) const {
  if (!(alphabet_ == o.alphabet_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].support != o.terms_[i].support) {
      return false;
    }
  }
  return true;
}

std::string StepFunction::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += to_string(t.coeff) + "*chi(" + t.support.str() + ")";
  }
  return s;
}

Rational integrate(const BernoulliMeasure& mu, const StepFunction& f) {
  Rational sum(0);
  for (const auto& t : f.terms()) sum += t.coeff * mu.measure(t.support);
  return sum;
}

UltraNorm step_norm(const BernoulliMeasure& mu, const StepFunction& f) {
  UltraNorm best = UltraNorm::zero();
  for (const auto& t : f.terms()) {
    best = UltraNorm::max(best, UltraNorm::abs(t.coeff, mu.value_prime()) * mu.norm(t.support));
  }
  return best;
}

LinearOnSteps::LinearOnSteps(const Alphabet& domain, unsigned depth,
                             std::vector<StepFunction> images)
    : domain_(domain), depth_(depth), images_(std::move(images)) {
  if (depth_ == 0) throw std::invalid_argument("depth must be >= 1");
  if (images_.size() != pow_u64(domain_.p, depth_)) {
    throw std::invalid_argument("need one image per depth-N cylinder");
  }
}

LinearOnSteps LinearOnSteps::from_iso(const MeasureAlgebraIso& iso) {
  const Alphabet& a = iso.domain_alphabet();
  unsigned N = iso.depth();
  std::vector<StepFunction> images;
  std::uint64_t span = pow_u64(a.p, N);
  images.reserve(span);
  for (WordCode w = 0; w < span; ++w) {
    images.push_back(StepFunction::indicator(iso.cylinder_image(N, w)));
  }
  return LinearOnSteps(a, N, std::move(images));
}

StepFunction LinearOnSteps::image_of_cylinder(unsigned n, WordCode w) const {
  if (n > depth_) throw std::length_error("cylinder deeper than operator data");
  std::uint64_t fan = pow_u64(domain_.p, depth_ - n);
  StepFunction sum = StepFunction::zero(domain_);
  for (std::uint64_t s = 0; s < fan; ++s) sum = sum + images_[w * fan + s];
  return sum;
}

StepFunction LinearOnSteps::apply_indicator(const ClopenSet& A) const {
  if (A.depth() > depth_) throw std::length_error("set deeper than operator data");
  StepFunction sum = StepFunction::zero(domain_);
  for (WordCode w : A.refine_to_depth(depth_)) sum = sum + images_[w];
  return sum;
}

SpectralCheckResult check_spectral_conditions(const BernoulliMeasure& mu,
                                              const BernoulliMeasure& nu,
                                              const LinearOnSteps& W) {
  SpectralCheckResult res;
  const Alphabet& a = W.domain_alphabet();
  unsigned N = W.depth();

  struct Cyl {
    unsigned n;
    WordCode w;
    ClopenSet set;
    StepFunction img;
  };
  std::vector<Cyl> cyls;
  for (unsigned n = 1; n <= N; ++n) {
    std::uint64_t span = pow_u64(a.p, n);
    for (WordCode w = 0; w < span; ++w) {
      ClopenSet c = ClopenSet::cylinder(a, FiniteWord::from_code(w, n, a));
      cyls.push_back({n, w, c, W.image_of_cylinder(n, w)});
    }
  }

  // (a) W(chi_B)^2 = W(chi_B): images must be indicators
  for (const auto& c : cyls) {
    if (!c.img.is_indicator()) {
      res.fail("W(chi_" + c.set.str() + ") is not an indicator: " + c.img.str());
    }
  }
  // (b) multiplicativity on indicator pairs
  for (const auto& b : cyls) {
    for (const auto& c : cyls) {
      ClopenSet both = b.set.intersect(c.set);
      StepFunction lhs =
          both.is_empty() ? StepFunction::zero(a) : W.apply_indicator(both);
      if (lhs != b.img * c.img) {
        res.fail("W(chi_B chi_C) != W(chi_B) W(chi_C) for B = " + b.set.str() +
                 ", C = " + c.set.str());
      }
    }
  }
  // (c) integral preservation
  for (const auto& c : cyls) {
    if (integrate(nu, c.img) != mu.measure(c.set)) {
      res.fail("integral not preserved on " + c.set.str());
    }
  }
  if (!res.ok) return res;

  // extract Phi from the supports; the iso constructor checks that it
  // preserves unions and complements (images partition, levels compatible)
  std::map<std::pair<unsigned, WordCode>, ClopenSet> images;
  for (const auto& c : cyls) images.emplace(std::make_pair(c.n, c.w), c.img.support());
  try {
    MeasureAlgebraIso iso(a, a, N, std::move(images));
    std::string witness;
    if (!iso.preserves_measure(mu, nu, &witness)) {
      res.fail("extracted map not measure preserving at " + witness);
      return res;
    }
    res.iso = std::move(iso);
  } catch (const std::invalid_argument& e) {
    res.fail(std::string("extracted set map is not an algebra isomorphism: ") + e.what());
  }
  return res;
}

}  // namespace nad
