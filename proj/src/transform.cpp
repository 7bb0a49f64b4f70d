#include "nad/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace nad {

namespace {

std::vector<std::uint8_t> invert_perm(const std::vector<std::uint8_t>& pi) {
  std::vector<std::uint8_t> inv(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) inv[pi[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

// +-1 with carry on the first `n` digits, digits[0] least significant.
std::vector<std::uint8_t> add_one_mod(const std::vector<std::uint8_t>& digits, unsigned p,
                                      int direction) {
  std::vector<std::uint8_t> out = digits;
  for (auto& d : out) {
    if (direction > 0) {
      if (d + 1u < p) {
        ++d;
        return out;
      }
      d = 0;
    } else {
      if (d > 0) {
        --d;
        return out;
      }
      d = static_cast<std::uint8_t>(p - 1);
    }
  }
  return out;  // full wrap
}

}  // namespace

Transformation Transformation::shift(const Alphabet& a) {
  return Transformation(Kind::Shift, a, {});
}

Transformation Transformation::permutation(const Alphabet& a, std::vector<std::uint8_t> pi) {
  if (pi.size() != a.p) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(a.p, false);
  for (auto s : pi) {
    if (s >= a.p || seen[s]) throw std::invalid_argument("not a permutation");
    seen[s] = true;
  }
  return Transformation(Kind::Permutation, a, std::move(pi));
}

Transformation Transformation::odometer(const Alphabet& a) {
  return Transformation(Kind::Odometer, a, {});
}

std::string Transformation::name() const {
  switch (kind_) {
    case Kind::Shift:
      return "shift";
    case Kind::Odometer:
      return "odometer";
    case Kind::Permutation: {
      std::string s = "perm[";
      for (std::size_t i = 0; i < pi_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(pi_[i]);
      }
      return s + "]";
    }
  }
  return "?";
}

ClopenSet Transformation::preimage(const ClopenSet& A) const {
  if (!(A.alphabet() == alphabet_)) throw std::invalid_argument("alphabet mismatch");
  switch (kind_) {
    case Kind::Shift:
      return A.shift_preimage(1);
    case Kind::Permutation: {
      auto inv = invert_perm(pi_);
      std::vector<WordCode> out;
      out.reserve(A.words().size());
      for (const auto& w : A.word_list()) {
        std::vector<std::uint8_t> s = w.symbols;
        for (auto& d : s) d = inv[d];
        out.push_back(FiniteWord(std::move(s)).code(alphabet_));
      }
      return ClopenSet::from_words(alphabet_, A.depth(), std::move(out));
    }
    case Kind::Odometer: {
      std::vector<WordCode> out;
      out.reserve(A.words().size());
      for (const auto& w : A.word_list()) {
        out.push_back(FiniteWord(add_one_mod(w.symbols, alphabet_.p, -1)).code(alphabet_));
      }
      return ClopenSet::from_words(alphabet_, A.depth(), std::move(out));
    }
  }
  throw std::logic_error("unreachable");
}

ClopenSet Transformation::image(const ClopenSet& A) const {
  if (!(A.alphabet() == alphabet_)) throw std::invalid_argument("alphabet mismatch");
  switch (kind_) {
    case Kind::Shift:
      return A.shift_image();
    case Kind::Permutation: {
      std::vector<WordCode> out;
      out.reserve(A.words().size());
      for (const auto& w : A.word_list()) {
        std::vector<std::uint8_t> s = w.symbols;
        for (auto& d : s) d = pi_[d];
        out.push_back(FiniteWord(std::move(s)).code(alphabet_));
      }
      return ClopenSet::from_words(alphabet_, A.depth(), std::move(out));
    }
    case Kind::Odometer: {
      std::vector<WordCode> out;
      out.reserve(A.words().size());
      for (const auto& w : A.word_list()) {
        out.push_back(FiniteWord(add_one_mod(w.symbols, alphabet_.p, +1)).code(alphabet_));
      }
      return ClopenSet::from_words(alphabet_, A.depth(), std::move(out));
    }
  }
  throw std::logic_error("unreachable");
}

PointWord Transformation::apply(const PointWord& x) const {
  if (!(x.alphabet() == alphabet_)) throw std::invalid_argument("alphabet mismatch");
  switch (kind_) {
    case Kind::Shift:
      return x.shifted();
    case Kind::Permutation: {
      auto pre = x.preperiod();
      auto per = x.period();
      for (auto& d : pre) d = pi_[d];
      for (auto& d : per) d = pi_[d];
      return PointWord(alphabet_, std::move(pre), std::move(per));
    }
    case Kind::Odometer: {
      auto pre = x.preperiod();
      for (auto& d : pre) {
        if (d + 1u < alphabet_.p) {
          ++d;
          return PointWord(alphabet_, std::move(pre), x.period());
        }
        d = 0;
      }
      // carry enters the cycle
      auto per = x.period();
      for (std::size_t j = 0; j < per.size(); ++j) {
        if (per[j] + 1u < alphabet_.p) {
          std::vector<std::uint8_t> head(per.begin(), per.begin() + j + 1);
          head[j] = static_cast<std::uint8_t>(head[j] + 1);
          for (std::size_t i = 0; i < j; ++i) head[i] = 0;
          pre.insert(pre.end(), head.begin(), head.end());
          std::vector<std::uint8_t> rot(per.begin() + j + 1, per.end());
          rot.insert(rot.end(), per.begin(), per.begin() + j + 1);
          return PointWord(alphabet_, std::move(pre), std::move(rot));
        }
      }
      // period is constant p-1: the carry never stops, everything becomes 0
      return PointWord(alphabet_, std::move(pre), {0});
    }
  }
  throw std::logic_error("unreachable");
}

MeasureAlgebraIso::MeasureAlgebraIso(const Alphabet& domain, const Alphabet& codomain,
                                     unsigned depth,
                                     std::map<std::pair<unsigned, WordCode>, ClopenSet> images)
    : domain_(domain), codomain_(codomain), depth_(depth), images_(std::move(images)) {
  if (depth_ == 0) throw std::invalid_argument("iso depth must be >= 1");
  for (unsigned n = 1; n <= depth_; ++n) {
    std::uint64_t span = pow_u64(domain_.p, n);
    ClopenSet total = ClopenSet::empty(codomain_);
    std::uint64_t count = 0;
    unsigned cd = 0;
    for (WordCode w = 0; w < span; ++w) {
      auto it = images_.find({n, w});
      if (it == images_.end()) {
        throw std::invalid_argument("missing image at depth " + std::to_string(n));
      }
      cd = std::max(cd, it->second.depth());
    }
    for (WordCode w = 0; w < span; ++w) {
      const ClopenSet& img = images_.at({n, w});
      count += img.count_at_depth(cd);
      total = total.unite(img);
    }
    if (!total.is_full() || count != pow_u64(codomain_.p, cd)) {
      throw std::invalid_argument("depth-" + std::to_string(n) +
                                  " images do not partition the codomain");
    }
    if (n > 1) {
      std::uint64_t prev_span = span / domain_.p;
      for (WordCode w = 0; w < prev_span; ++w) {
        ClopenSet u = ClopenSet::empty(codomain_);
        for (unsigned j = 0; j < domain_.p; ++j) u = u.unite(images_.at({n, w * domain_.p + j}));
        if (u != images_.at({n - 1, w})) {
          throw std::invalid_argument("images not compatible across depths at depth " +
                                      std::to_string(n));
        }
      }
    }
  }
}

MeasureAlgebraIso MeasureAlgebraIso::from_permutation(const Alphabet& a,
                                                      std::vector<std::uint8_t> pi,
                                                      unsigned depth) {
  Transformation t = Transformation::permutation(a, std::move(pi));
  std::map<std::pair<unsigned, WordCode>, ClopenSet> images;
  for (unsigned n = 1; n <= depth; ++n) {
    std::uint64_t span = pow_u64(a.p, n);
    for (WordCode w = 0; w < span; ++w) {
      ClopenSet c = ClopenSet::cylinder(a, FiniteWord::from_code(w, n, a));
      images.emplace(std::make_pair(n, w), t.image(c));
    }
  }
  return MeasureAlgebraIso(a, a, depth, std::move(images));
}

MeasureAlgebraIso MeasureAlgebraIso::identity(const Alphabet& a, unsigned depth) {
  std::vector<std::uint8_t> id(a.p);
  for (unsigned i = 0; i < a.p; ++i) id[i] = static_cast<std::uint8_t>(i);
  return from_permutation(a, std::move(id), depth);
}

const ClopenSet& MeasureAlgebraIso::cylinder_image(unsigned n, WordCode w) const {
  auto it = images_.find({n, w});
  if (it == images_.end()) throw std::invalid_argument("no image stored at this depth");
  return it->second;
}

ClopenSet MeasureAlgebraIso::apply(const ClopenSet& A) const {
  if (!(A.alphabet() == domain_)) throw std::invalid_argument("alphabet mismatch");
  if (A.is_empty()) return ClopenSet::empty(codomain_);
  if (A.is_full()) return ClopenSet::full(codomain_);
  if (A.depth() > depth_) throw std::length_error("set deeper than iso data");
  ClopenSet out = ClopenSet::empty(codomain_);
  for (WordCode w : A.words()) out = out.unite(cylinder_image(A.depth(), w));
  return out;
}

bool MeasureAlgebraIso::preserves_measure(const BernoulliMeasure& mu, const BernoulliMeasure& nu,
                                          std::string* witness) const {
  for (unsigned n = 1; n <= depth_; ++n) {
    std::uint64_t span = pow_u64(domain_.p, n);
    for (WordCode w = 0; w < span; ++w) {
      ClopenSet c = ClopenSet::cylinder(domain_, FiniteWord::from_code(w, n, domain_));
      if (mu.measure(c) != nu.measure(cylinder_image(n, w))) {
        if (witness) *witness = c.str();
        return false;
      }
    }
  }
  return true;
}

bool MeasureAlgebraIso::operator==(const MeasureAlgebraIso& o) const {
  return domain_ == o.domain_ && codomain_ == o.codomain_ && depth_ == o.depth_ &&
         images_ == o.images_;
}

CheckReport check_measure_preserving(const BernoulliMeasure& mu, const Transformation& T,
                                     unsigned depth, std::uint64_t seed) {
  if (depth > 10) throw std::invalid_argument("check depth capped at 10");
  CheckReport rep;
  const Alphabet& a = mu.alphabet();
  for (unsigned n = 1; n <= depth; ++n) {
    std::uint64_t span = pow_u64(a.p, n);
    for (WordCode w = 0; w < span; ++w) {
      ClopenSet c = ClopenSet::cylinder(a, FiniteWord::from_code(w, n, a));
      if (mu.measure(T.preimage(c)) != mu.measure(c)) {
        rep.fail("mu(T^-1 A) != mu(A) for A = " + c.str());
      }
      if (T.invertible() && mu.measure(T.image(c)) != mu.measure(c)) {
        rep.fail("mu(T A) != mu(A) for A = " + c.str());
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i) {
    ClopenSet c = random_clopen(rng, a, depth);
    if (mu.measure(T.preimage(c)) != mu.measure(c)) {
      rep.fail("mu(T^-1 A) != mu(A) for random A = " + c.str());
    }
  }
  return rep;
}

CheckReport check_conjugacy(const MeasureAlgebraIso& Phi, const Transformation& T,
                            const Transformation& S, unsigned depth) {
  if (Phi.depth() < depth + 1) {
    throw std::length_error("iso data shallower than depth+1");
  }
  CheckReport rep;
  const Alphabet& a = Phi.domain_alphabet();
  for (unsigned n = 1; n <= depth; ++n) {
    std::uint64_t span = pow_u64(a.p, n);
    for (WordCode w = 0; w < span; ++w) {
      ClopenSet b = ClopenSet::cylinder(a, FiniteWord::from_code(w, n, a));
      if (Phi.apply(T.preimage(b)) != S.preimage(Phi.apply(b))) {
        rep.fail("Phi(T^-1 B) != S^-1(Phi B) for B = " + b.str());
      }
    }
  }
  return rep;
}

FiniteWord point_map_from_iso(const MeasureAlgebraIso& Phi, const BernoulliMeasure& mu,
                              const PointWord& x, unsigned output_depth) {
  if (mu.point_norm(x).is_zero()) {
    throw std::domain_error("point is negligible; the reconstruction lives on X+");
  }
  if (output_depth > Phi.depth()) throw std::length_error("output depth exceeds iso data");
  const Alphabet& a = Phi.domain_alphabet();
  ClopenSet inter = ClopenSet::full(Phi.codomain_alphabet());
  for (unsigned n = 1; n <= Phi.depth(); ++n) {
    ClopenSet b = ClopenSet::cylinder(a, FiniteWord(x.prefix(n)));
    inter = inter.intersect(Phi.apply(b));
  }
  if (inter.is_empty()) throw std::runtime_error("empty intersection (invalid iso data)");
  if (inter.depth() < output_depth) {
    throw std::runtime_error("ambiguous prefix: needs more depth");
  }
  std::uint64_t fan = pow_u64(Phi.codomain_alphabet().p, inter.depth() - output_depth);
  WordCode prefix = inter.words().front() / fan;
  for (WordCode w : inter.words()) {
    if (w / fan != prefix) throw std::runtime_error("ambiguous prefix: needs more depth");
  }
  return FiniteWord::from_code(prefix, output_depth, Phi.codomain_alphabet());
}

CheckReport check_iso_of_systems(const std::vector<std::uint8_t>& phi, const Transformation& T,
                                 const Transformation& S, const BernoulliMeasure& mu,
                                 const BernoulliMeasure& nu, unsigned depth) {
  CheckReport rep;
  const Alphabet& a = mu.alphabet();
  Transformation phi_t = Transformation::permutation(a, phi);
  for (unsigned n = 1; n <= depth; ++n) {
    std::uint64_t span = pow_u64(a.p, n);
    for (WordCode w = 0; w < span; ++w) {
      ClopenSet b = ClopenSet::cylinder(a, FiniteWord::from_code(w, n, a));
      if (mu.measure(phi_t.preimage(b)) != nu.measure(b)) {
        rep.fail("phi not measure preserving at B = " + b.str());
      }
      if (T.preimage(phi_t.preimage(b)) != phi_t.preimage(S.preimage(b))) {
        rep.fail("intertwining fails at B = " + b.str());
      }
    }
  }
  return rep;
}

}  // namespace nad
