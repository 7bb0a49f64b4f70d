#include "nad/entropy.hpp"

#include <algorithm>
#include <stdexcept>

namespace nad {

namespace {
constexpr std::size_t kMaxCells = 1u << 20;

void check_alphabet(const Alphabet& a, const ClopenSet& s) {
  if (!(s.alphabet() == a)) throw std::invalid_argument("alphabet mismatch");
}
}  // namespace

Partition::Partition(const Alphabet& a, std::vector<ClopenSet> cells)
    : alphabet_(a), cells_(std::move(cells)) {
  unsigned d = 0;
  for (const auto& c : cells_) {
    check_alphabet(a, c);
    if (c.is_empty()) throw std::invalid_argument("partition cell is empty");
    d = std::max(d, c.depth());
  }
  std::vector<WordCode> all;
  for (const auto& c : cells_) {
    auto ws = c.refine_to_depth(d);
    all.insert(all.end(), ws.begin(), ws.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("partition cells overlap");
  }
  if (all.size() != pow_u64(a.p, d)) {
    throw std::invalid_argument("partition cells do not cover the space");
  }
  std::sort(cells_.begin(), cells_.end());
}

Partition Partition::trivial(const Alphabet& a) { return Partition(a, {ClopenSet::full(a)}); }

Partition Partition::depth_one(const Alphabet& a) {
  std::vector<ClopenSet> cells;
  for (unsigned i = 0; i < a.p; ++i) {
    cells.push_back(ClopenSet::cylinder(a, FiniteWord({static_cast<std::uint8_t>(i)})));
  }
  return Partition(a, std::move(cells));
}

Partition Partition::from_sets(const Alphabet& a, const std::vector<ClopenSet>& sets) {
  if (sets.size() > 16) throw std::length_error("atom partition capped at 16 generators");
  std::vector<ClopenSet> cells{ClopenSet::full(a)};
  for (const auto& s : sets) {
    check_alphabet(a, s);
    std::vector<ClopenSet> next;
    for (const auto& c : cells) {
      ClopenSet in = c.intersect(s);
      ClopenSet out = c.subtract(s);
      if (!in.is_empty()) next.push_back(in);
      if (!out.is_empty()) next.push_back(out);
    }
    cells = std::move(next);
  }
  return Partition(a, std::move(cells));
}

Partition Partition::join(const Partition& o) const {
  if (!(alphabet_ == o.alphabet_)) throw std::invalid_argument("alphabet mismatch");
  std::vector<ClopenSet> cells;
  for (const auto& a : cells_) {
    for (const auto& b : o.cells_) {
      ClopenSet both = a.intersect(b);
      if (!both.is_empty()) cells.push_back(both);
      if (cells.size() > kMaxCells) {
        throw std::length_error("join cell budget exceeded at " + std::to_string(cells.size()) +
                                " cells");
      }
    }
  }
  return Partition(alphabet_, std::move(cells));
}

Partition Partition::preimage_under(const Transformation& T) const {
  std::vector<ClopenSet> cells;
  cells.reserve(cells_.size());
  for (const auto& c : cells_) cells.push_back(T.preimage(c));
  return Partition(alphabet_, std::move(cells));
}

Partition Partition::dynamical_join(const Transformation& T, unsigned n) const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Partition acc = *this;
  Partition pre = *this;
  for (unsigned i = 1; i < n; ++i) {
    pre = pre.preimage_under(T);
    acc = acc.join(pre);
  }
  return acc;
}

bool Partition::is_refined_by(const Partition& alpha) const {
  for (const auto& fine : alpha.cells_) {
    bool inside = false;
    for (const auto& coarse : cells_) {
      if (fine.is_subset_of(coarse)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

bool Partition::operator==(const Partition& o) const {
  return alphabet_ == o.alphabet_ && cells_ == o.cells_;
}

Cover::Cover(const Alphabet& a, std::vector<ClopenSet> members)
    : alphabet_(a), members_(std::move(members)) {
  ClopenSet total = ClopenSet::empty(a);
  for (const auto& m : members_) {
    check_alphabet(a, m);
    total = total.unite(m);
  }
  if (!total.is_full()) throw std::invalid_argument("members do not cover the space");
}

Cover Cover::join(const Cover& o) const {
  if (!(alphabet_ == o.alphabet_)) throw std::invalid_argument("alphabet mismatch");
  std::vector<ClopenSet> members;
  for (const auto& u : members_) {
    for (const auto& w : o.members_) {
      ClopenSet both = u.intersect(w);
      if (!both.is_empty()) members.push_back(both);
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() > kMaxCells) throw std::length_error("cover join budget exceeded");
  return Cover(alphabet_, std::move(members));
}

Cover Cover::preimage_under(const Transformation& T) const {
  std::vector<ClopenSet> members;
  members.reserve(members_.size());
  for (const auto& m : members_) members.push_back(T.preimage(m));
  return Cover(alphabet_, std::move(members));
}

Cover Cover::dynamical_join(const Transformation& T, unsigned n) const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Cover acc = *this;
  Cover pre = *this;
  for (unsigned i = 1; i < n; ++i) {
    pre = pre.preimage_under(T);
    acc = acc.join(pre);
  }
  return acc;
}

bool Cover::is_refined_by(const Cover& w) const {
  for (const auto& fine : w.members_) {
    bool inside = false;
    for (const auto& coarse : members_) {
      if (fine.is_subset_of(coarse)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

Partition Cover::to_partition() const { return Partition::from_sets(alphabet_, members_); }

std::size_t min_subcover_size(const Cover& u) {
  // drop empties and non-maximal members; any subcover using a non-maximal
  // member can swap in its superset without growing
  std::vector<ClopenSet> ms;
  for (const auto& m : u.members()) {
    if (!m.is_empty()) ms.push_back(m);
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<ClopenSet> maximal;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < ms.size() && !dominated; ++j) {
      if (i != j && ms[i].is_subset_of(ms[j]) && ms[i] != ms[j]) dominated = true;
    }
    if (!dominated) maximal.push_back(ms[i]);
  }

  // pairwise disjoint cover: every member is forced
  bool disjoint = true;
  for (std::size_t i = 0; i < maximal.size() && disjoint; ++i) {
    for (std::size_t j = i + 1; j < maximal.size() && disjoint; ++j) {
      if (!maximal[i].intersect(maximal[j]).is_empty()) disjoint = false;
    }
  }
  if (disjoint) return maximal.size();

  if (maximal.size() > 24) throw std::length_error("min subcover search capped at 24 members");

  unsigned d = 0;
  for (const auto& m : maximal) d = std::max(d, m.depth());
  // membership signature per atom; identical signatures are equivalent
  std::uint64_t span = pow_u64(u.alphabet().p, d);
  std::vector<std::uint32_t> signatures;
  {
    std::vector<std::vector<WordCode>> refined;
    for (const auto& m : maximal) refined.push_back(m.refine_to_depth(d));
    for (std::uint64_t wc = 0; wc < span; ++wc) {
      std::uint32_t sig = 0;
      for (std::size_t i = 0; i < refined.size(); ++i) {
        if (std::binary_search(refined[i].begin(), refined[i].end(), wc)) sig |= 1u << i;
      }
      signatures.push_back(sig);
    }
    std::sort(signatures.begin(), signatures.end());
    signatures.erase(std::unique(signatures.begin(), signatures.end()), signatures.end());
  }

  std::size_t best = maximal.size();
  // branch on the atom covered by the fewest remaining members
  auto dfs = [&](auto&& self, std::uint32_t chosen, std::size_t used) -> void {
    if (used >= best) return;
    std::uint32_t pivot = 0;
    int pivot_count = -1;
    for (std::uint32_t sig : signatures) {
      if (sig & chosen) continue;  // atom already covered
      int cnt = __builtin_popcount(sig);
      if (pivot_count < 0 || cnt < pivot_count) {
        pivot = sig;
        pivot_count = cnt;
      }
    }
    if (pivot_count < 0) {
      best = used;
      return;
    }
    for (std::uint32_t rest = pivot; rest != 0; rest &= rest - 1) {
      std::uint32_t member = rest & -rest;
      self(self, chosen | member, used + 1);
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

Real EntropyValue::value() const {
  if (is_zero()) return Real();
  return Real::power(prime, -min_norm_exponent) * Real::log2_of(significant_count);
}

bool EntropyValue::is_zero() const { return all_negligible || significant_count <= 1; }

std::string EntropyValue::str() const {
  if (all_negligible) return "0 (all cells negligible)";
  return std::to_string(prime) + "^" + std::to_string(-min_norm_exponent) + " * log2(" +
         significant_count.get_str() + ")";
}

EntropyValue measure_entropy(const BernoulliMeasure& mu, const Partition& alpha) {
  EntropyValue h;
  h.prime = mu.value_prime();
  long max_e = 0;
  unsigned long count = 0;
  bool any = false;
  for (const auto& cell : alpha.cells()) {
    UltraNorm n = mu.norm(cell);
    if (n.is_zero()) continue;
    ++count;
    if (!any || n.exponent() > max_e) max_e = n.exponent();
    any = true;
  }
  h.all_negligible = !any;
  h.min_norm_exponent = any ? max_e : 0;
  h.significant_count = Integer(count);
  return h;
}

std::vector<std::string> EntropySequence::subadditivity_violations() const {
  std::vector<std::string> out;
  for (unsigned n = 1; n <= length(); ++n) {
    for (unsigned m = 1; n + m <= length(); ++m) {
      if (!(a(n + m).value() <= a(n).value() + a(m).value())) {
        out.push_back("a_" + std::to_string(n + m) + " > a_" + std::to_string(n) + " + a_" +
                      std::to_string(m));
      }
    }
  }
  return out;
}

EntropySequence measure_entropy_sequence(const BernoulliMeasure& mu, const Transformation& T,
                                         const Partition& alpha, unsigned N) {
  EntropySequence seq{mu.value_prime(), mu.alphabet().p, {}};
  Partition acc = alpha;
  Partition pre = alpha;
  for (unsigned n = 1; n <= N; ++n) {
    if (n > 1) {
      pre = pre.preimage_under(T);
      acc = acc.join(pre);
    }
    seq.terms.push_back(measure_entropy(mu, acc));
  }
  return seq;
}

EntropySequence topological_entropy_sequence(const Transformation& T, const Cover& u, unsigned N) {
  EntropySequence seq{2, u.alphabet().p, {}};
  Cover acc = u;
  Cover pre = u;
  for (unsigned n = 1; n <= N; ++n) {
    if (n > 1) {
      pre = pre.preimage_under(T);
      acc = acc.join(pre);
    }
    EntropyValue b;
    b.prime = 2;
    b.min_norm_exponent = 0;  // unit norm factor: b_n is just log2 N(join)
    b.significant_count = Integer(static_cast<unsigned long>(min_subcover_size(acc)));
    seq.terms.push_back(b);
  }
  return seq;
}

std::string FeketeEstimate::classification_name() const {
  switch (classification) {
    case FeketeClass::Exact:
      return "exact";
    case FeketeClass::ExtrapolatedZero:
      return "extrapolated-zero";
    case FeketeClass::Bracket:
      return "bracket";
  }
  return "?";
}

FeketeEstimate fekete_estimate(const EntropySequence& seq) {
  if (seq.terms.empty()) throw std::invalid_argument("empty entropy sequence");
  auto violations = seq.subadditivity_violations();
  if (!violations.empty()) {
    throw std::invalid_argument("sequence is not subadditive: " + violations.front());
  }
  unsigned N = seq.length();
  std::vector<Real> ratios;
  ratios.reserve(N);
  for (unsigned n = 1; n <= N; ++n) {
    ratios.push_back(seq.a(n).value() / Real(static_cast<double>(n)));
  }
  Real upper = ratios[0];
  for (const auto& r : ratios) {
    if (r < upper) upper = r;
  }

  FeketeEstimate est{upper, ratios.back(), FeketeClass::Bracket, upper};

  // constant ratio on a tail of >= 3 terms: the limit is that constant
  if (N >= 3 && ratios[N - 1].approx_equal(ratios[N - 2]) &&
      ratios[N - 2].approx_equal(ratios[N - 3])) {
    est.classification = FeketeClass::Exact;
    est.limit = ratios.back();
    return est;
  }

  // norm factor decays geometrically while the count stays <= p^n: limit 0
  if (N >= 3) {
    bool e_increasing = true;
    for (unsigned n = N - 2; n < N; ++n) {
      if (seq.a(n).all_negligible || seq.a(n + 1).all_negligible ||
          seq.a(n + 1).min_norm_exponent <= seq.a(n).min_norm_exponent) {
        e_increasing = false;
        break;
      }
    }
    bool counts_bounded = true;
    double c = 0;
    if (e_increasing) {
      c = static_cast<double>(seq.a(1).min_norm_exponent);
      for (unsigned n = 1; n <= N; ++n) {
        c = std::min(c, static_cast<double>(seq.a(n).min_norm_exponent) / n);
        Integer cap;
        mpz_ui_pow_ui(cap.get_mpz_t(), seq.alphabet_size, n);
        if (seq.a(n).significant_count > cap) counts_bounded = false;
      }
    }
    if (e_increasing && c > 0 && counts_bounded) {
      est.classification = FeketeClass::ExtrapolatedZero;
      est.limit = Real();
      return est;
    }
  }
  return est;
}

EntropyComparison compare_entropies(const BernoulliMeasure& mu, const Transformation& T,
                                    const Partition& alpha, unsigned N) {
  EntropyComparison cmp{measure_entropy_sequence(mu, T, alpha, N),
                        topological_entropy_sequence(T, Cover(alpha.alphabet(), alpha.cells()), N)};
  cmp.unit_norm_measure = true;
  for (unsigned s = 0; s < mu.alphabet().p; ++s) {
    auto v = mu.weight_valuation(s);
    if (!v || *v != 0) cmp.unit_norm_measure = false;
  }
  for (unsigned n = 1; n <= N; ++n) {
    Real a = cmp.measure_seq.a(n).value();
    Real b = cmp.top_seq.a(n).value();
    if (!(a <= b)) {
      cmp.termwise_le = false;
      cmp.failures.push_back("a_" + std::to_string(n) + " > b_" + std::to_string(n));
    }
    if (!a.approx_equal(b)) {
      cmp.termwise_eq = false;
      if (cmp.unit_norm_measure) {
        cmp.failures.push_back("unit-norm case but a_" + std::to_string(n) +
                               " != b_" + std::to_string(n));
      }
    }
  }
  return cmp;
}

}  // namespace nad
