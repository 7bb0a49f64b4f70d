#include "nad/acceptance.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "nad/entropy.hpp"
#include "nad/measure.hpp"
#include "nad/pathology.hpp"
#include "nad/rational.hpp"
#include "nad/real.hpp"
#include "nad/shift_space.hpp"
#include "nad/step_function.hpp"
#include "nad/transform.hpp"

namespace nad::acceptance {
namespace {

struct Checker {
  bool ok = true;
  std::string first_failure;
  unsigned cases = 0;

  void require(bool cond, const std::string& msg) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      first_failure = msg;
    }
  }
};

std::string done(const Checker& c, const std::string& summary) {
  if (c.ok) return summary + " (" + std::to_string(c.cases) + " checks)";
  return c.first_failure;
}

BernoulliMeasure example_mu2() {
  return BernoulliMeasure(Alphabet(2), 3, {Rational(-2), Rational(3)});
}

BernoulliMeasure example_mu3() {
  return BernoulliMeasure(Alphabet(3), 5, {Rational(-2), Rational(-2), Rational(5)});
}

CriterionResult criterion_cylinder_norms() {
  Checker c;
  Alphabet a(2);
  BernoulliMeasure mu = example_mu2();
  for (unsigned n = 1; n <= 8; ++n) {
    std::uint64_t span = pow_u64(2, n);
    for (WordCode w = 0; w < span; ++w) {
      ClopenSet cyl = ClopenSet::cylinder(a, FiniteWord::from_code(w, n, a));
      UltraNorm got = mu.norm(cyl);
      long ones = std::popcount(w);
      c.require(!got.is_zero() && got.prime() == 3 && got.exponent() == ones,
                "norm of U_" + FiniteWord::from_code(w, n, a).str() + " is " + got.to_string() +
                    ", expected 3^-" + std::to_string(ones));
    }
  }
  return {1, "cylinder norm formula, all words to length 8", c.ok,
          done(c, "norm(U_w) = 3^-#1s(w) on all 510 words")};
}

CriterionResult criterion_entropy_fine() {
  Checker c;
  Alphabet a(3);
  BernoulliMeasure mu = example_mu3();
  Transformation shift = Transformation::shift(a);
  EntropySequence seq = measure_entropy_sequence(mu, shift, Partition::depth_one(a), 6);
  for (unsigned n = 1; n <= 6; ++n) {
    const EntropyValue& h = seq.a(n);
    c.require(!h.all_negligible && h.min_norm_exponent == static_cast<long>(n),
              "a_" + std::to_string(n) + " has e != " + std::to_string(n));
    c.require(h.significant_count == Integer(pow_u64(3, n)),
              "a_" + std::to_string(n) + " has M != 3^" + std::to_string(n));
  }
  FeketeEstimate est = fekete_estimate(seq);
  c.require(est.classification == FeketeClass::ExtrapolatedZero,
            "fekete classification is " + est.classification_name() +
                ", expected extrapolated-zero");
  c.require(est.limit.approx_equal(Real(0.0)), "extrapolated limit is not 0");
  return {2, "entropy of the depth-1 partition decays to zero", c.ok,
          done(c, "a_n = 5^-n n log2(3), limit classified extrapolated-zero")};
}

CriterionResult criterion_entropy_coarse() {
  Checker c;
  Alphabet a(3);
  BernoulliMeasure mu = example_mu3();
  Transformation shift = Transformation::shift(a);
  ClopenSet u0 = ClopenSet::cylinder(a, FiniteWord::parse("0", a));
  ClopenSet u12 = ClopenSet::cylinder(a, FiniteWord::parse("1", a))
                      .unite(ClopenSet::cylinder(a, FiniteWord::parse("2", a)));
  Partition beta(a, {u0, u12});
  EntropySequence seq = measure_entropy_sequence(mu, shift, beta, 8);
  for (unsigned n = 1; n <= 8; ++n) {
    const EntropyValue& h = seq.a(n);
    c.require(!h.all_negligible && h.min_norm_exponent == 0 &&
                  h.significant_count == Integer(pow_u64(2, n)),
              "a_" + std::to_string(n) + " != log2(2^" + std::to_string(n) + ")");
  }
  FeketeEstimate est = fekete_estimate(seq);
  c.require(est.classification == FeketeClass::Exact,
            "fekete classification is " + est.classification_name() + ", expected exact");
  c.require(est.limit.approx_equal(Real(1.0)), "exact limit is not log2(2)");

  EntropySequence fine = measure_entropy_sequence(mu, shift, Partition::depth_one(a), 6);
  Real h_fine = fekete_estimate(fine).limit;
  c.require(h_fine < est.limit, "coarse partition entropy does not exceed the refined one");
  return {3, "coarser partition has strictly larger entropy", c.ok,
          done(c, "a_n = n exactly, h = log2(2) > 0 = h(finer partition)")};
}

CriterionResult criterion_shift_invariance() {
  Checker c;
  for (const BernoulliMeasure& mu : {example_mu2(), example_mu3()}) {
    Transformation shift = Transformation::shift(mu.alphabet());
    CheckReport rep = check_measure_preserving(mu, shift, 6, 20240817);
    c.require(rep.ok, rep.ok ? "" : rep.failures.front());
    c.cases += 200;  // the seeded random clopens inside the check
  }
  return {4, "shift invariance of both example measures", c.ok,
          done(c, "mu(shift^-1 A) = mu(A) on all cylinders to depth 6 and random clopens")};
}

CriterionResult criterion_point_norms() {
  Checker c;
  Alphabet a(2);
  BernoulliMeasure mu = example_mu2();
  UltraNorm n1 = mu.point_norm(PointWord(a, {1}, {0}));
  UltraNorm n0 = mu.point_norm(PointWord(a, {}, {0}));
  UltraNorm nalt = mu.point_norm(PointWord(a, {}, {0, 1}));
  c.require(n1 == UltraNorm(3, 1), "N(1 0^inf) = " + n1.to_string() + ", expected 3^-1");
  c.require(n0 == UltraNorm::one(3), "N(0^inf) = " + n0.to_string() + ", expected 1");
  c.require(n0.to_rational() == n1.to_rational() * 3, "N(shift w) != 3 N(w) on w = 1 0^inf");
  c.require(nalt.is_zero(), "N((01)^inf) is nonzero");
  return {5, "pointwise norms of eventually periodic words", c.ok,
          done(c, "N(1 0^inf) = 1/3, N(0^inf) = 1, N((01)^inf) = 0")};
}

CriterionResult criterion_entropy_comparison() {
  Checker c;
  {
    BernoulliMeasure mu = example_mu3();
    Transformation shift = Transformation::shift(mu.alphabet());
    EntropyComparison cmp = compare_entropies(mu, shift, Partition::depth_one(mu.alphabet()), 6);
    c.require(cmp.ok() && cmp.termwise_le,
              cmp.failures.empty() ? "termwise a_n <= b_n failed" : cmp.failures.front());
    c.require(!cmp.unit_norm_measure, "(-2,-2,5) misclassified as unit-norm");
  }
  {
    BernoulliMeasure mu(Alphabet(2), 5, {Rational(-2), Rational(3)});
    Transformation shift = Transformation::shift(mu.alphabet());
    EntropyComparison cmp = compare_entropies(mu, shift, Partition::depth_one(mu.alphabet()), 6);
    c.require(cmp.ok() && cmp.unit_norm_measure && cmp.termwise_eq,
              cmp.failures.empty() ? "unit-norm case not termwise equal" : cmp.failures.front());
    for (unsigned n = 1; n <= 6; ++n) {
      const EntropyValue& h = cmp.measure_seq.a(n);
      const EntropyValue& b = cmp.top_seq.a(n);
      c.require(h.min_norm_exponent == 0 && h.significant_count == Integer(pow_u64(2, n)),
                "a_" + std::to_string(n) + " != n in the unit-norm case");
      c.require(b.significant_count == Integer(pow_u64(2, n)),
                "b_" + std::to_string(n) + " != n");
    }
    Real hm = fekete_estimate(cmp.measure_seq).limit;
    Real ht = fekete_estimate(cmp.top_seq).limit;
    c.require(hm.approx_equal(Real(1.0)) && ht.approx_equal(Real(1.0)),
              "limits in the unit-norm case differ from log2(2)");
  }
  return {6, "measure entropy bounded by topological entropy", c.ok,
          done(c, "a_n <= b_n termwise; equality with limit log2(2) in the unit-norm case")};
}

CriterionResult criterion_interval_charge() {
  Checker c;
  {
    DigitStream x(2, {}, {0, 1});
    DecaySequence seq = decay_sequence(x, 30);
    c.require(seq.formula_confirmed, "|upsilon(J_n)|_2 != 2^-k_n for some n");
    c.require(seq.norm_decays, "k_n does not grow along n <= 30");
    bool found = false;
    for (const auto& row : seq.rows) {
      if (row.n == 4) {
        found = true;
        c.require(row.k_n == 3 && row.upsilon_value == Rational(-8, 15),
                  "upsilon(J_4) mismatch for the (01)-repeating stream");
      }
    }
    c.require(found, "row n = 4 missing");
  }
  {
    DigitStream x(3, {}, {0, 1, 2});
    DecaySequence seq = decay_sequence(x, 30);
    c.require(seq.formula_confirmed, "|upsilon(J_n)|_3 != 3^-k_n for some n");
    c.require(seq.norm_decays, "k_n does not grow along n <= 30");
    bool found = false;
    for (const auto& row : seq.rows) {
      if (row.n == 3) {
        found = true;
        c.require(row.k_n == 2 && row.upsilon_value == Rational(-9, 10),
                  "upsilon(J_3) mismatch for the (012)-repeating stream");
      }
    }
    c.require(found, "row n = 3 missing");
  }
  return {7, "interval charge decays pointwise without a continuous extension", c.ok,
          done(c, "exact |upsilon(J_n)|_p = p^-k_n for both digit streams, n <= 30")};
}

CriterionResult criterion_norm_oracle() {
  Checker c;
  Alphabet a(2);
  BernoulliMeasure mu = example_mu2();
  const Prime l = 3;

  // Depth-4 atom measures and incremental subset sums over all 2^16 masks.
  std::vector<Rational> atom4(16);
  for (WordCode w = 0; w < 16; ++w) {
    atom4[w] = mu.cylinder_measure(FiniteWord::from_code(w, 4, a).symbols);
  }
  std::vector<Rational> sum(1u << 16);
  std::vector<std::optional<long>> val(1u << 16);
  sum[0] = Rational(0);
  for (std::uint32_t m = 1; m < (1u << 16); ++m) {
    std::uint32_t low = m & (~m + 1);
    sum[m] = sum[m ^ low] + atom4[std::countr_zero(low)];
    val[m] = valuation(sum[m], l);
  }

  std::vector<long> val7(128);
  for (WordCode w = 0; w < 128; ++w) {
    auto v = valuation(mu.cylinder_measure(FiniteWord::from_code(w, 7, a).symbols), l);
    val7[w] = *v;
  }

  for (std::uint32_t m = 1; m < (1u << 16); ++m) {
    std::vector<WordCode> words;
    for (unsigned i = 0; i < 16; ++i) {
      if (m & (1u << i)) words.push_back(i);
    }
    ClopenSet A = ClopenSet::from_words(a, 4, words);
    UltraNorm closed = mu.norm(A);

    // Brute force over every sub-union of depth-4 atoms.
    std::optional<long> best;
    for (std::uint32_t b = m; b; b = (b - 1) & m) {
      if (val[b] && (!best || *val[b] < *best)) best = *val[b];
    }
    c.require(best && !closed.is_zero() && *best == closed.exponent(),
              "depth-4 sub-union sup disagrees with the closed form on mask " +
                  std::to_string(m));

    // Maximum over single depth-7 atoms inside A.
    long best7 = val7[0] + 1000;
    for (unsigned i = 0; i < 16; ++i) {
      if (!(m & (1u << i))) continue;
      for (WordCode t = 0; t < 8; ++t) best7 = std::min(best7, val7[i * 8 + t]);
    }
    c.require(best7 == closed.exponent(),
              "depth-7 atom sup disagrees with the closed form on mask " + std::to_string(m));
  }

  // Random depth-7 sub-unions never beat the closed-form norm.
  std::mt19937_64 rng(711);
  for (int iter = 0; iter < 200; ++iter) {
    std::uint32_t m = static_cast<std::uint32_t>(rng() & 0xffff);
    if (m == 0) m = 1;
    std::vector<WordCode> words;
    for (unsigned i = 0; i < 16; ++i) {
      if (m & (1u << i)) words.push_back(i);
    }
    ClopenSet A = ClopenSet::from_words(a, 4, words);
    Rational s(0);
    bool any = false;
    for (WordCode i : words) {
      for (WordCode t = 0; t < 8; ++t) {
        if (rng() & 1) {
          s += mu.cylinder_measure(FiniteWord::from_code(i * 8 + t, 7, a).symbols);
          any = true;
        }
      }
    }
    if (!any) continue;
    auto v = valuation(s, l);
    c.require(!v || *v >= mu.norm(A).exponent(),
              "a depth-7 sub-union exceeds the closed-form norm on mask " + std::to_string(m));
  }
  return {8, "closed-form norm equals brute-force supremum", c.ok,
          done(c, "sup over sub-unions matches the closed form on all depth-4 clopens")};
}

CriterionResult criterion_iso_conjugacy() {
  Checker c;
  Alphabet a(2);
  BernoulliMeasure mu(a, 3, {Rational(1, 2), Rational(1, 2)});
  Transformation shift = Transformation::shift(a);
  std::vector<std::uint8_t> swap{1, 0};

  CheckReport sys = check_iso_of_systems(swap, shift, shift, mu, mu, 5);
  c.require(sys.ok, sys.ok ? "" : sys.failures.front());

  MeasureAlgebraIso iso = MeasureAlgebraIso::from_permutation(a, swap, 5);
  CheckReport conj = check_conjugacy(iso, shift, shift, 4);
  c.require(conj.ok, conj.ok ? "" : conj.failures.front());
  c.require(iso.preserves_measure(mu, mu), "swap iso does not preserve the symmetric measure");

  for (WordCode w = 0; w < 16; ++w) {
    FiniteWord word = FiniteWord::from_code(w, 4, a);
    PointWord x(a, word.symbols, {0});
    FiniteWord image = point_map_from_iso(iso, mu, x, 4);
    FiniteWord expect = FiniteWord::from_code(w ^ 0xf, 4, a);
    c.require(image.symbols == expect.symbols,
              "point map sends " + word.str() + " to " + image.str() + ", expected " +
                  expect.str());
  }
  return {9, "isomorphy and conjugacy agree for the symbol swap", c.ok,
          done(c, "system check, conjugacy check and point-map recovery all pass")};
}

CriterionResult criterion_spectral() {
  Checker c;
  Alphabet a(2);
  BernoulliMeasure mu(a, 3, {Rational(1, 2), Rational(1, 2)});
  MeasureAlgebraIso iso = MeasureAlgebraIso::from_permutation(a, {1, 0}, 4);
  LinearOnSteps W = LinearOnSteps::from_iso(iso);

  SpectralCheckResult res = check_spectral_conditions(mu, mu, W);
  c.require(res.ok, res.ok ? "" : res.failures.front());
  c.require(res.iso.has_value() && *res.iso == iso,
            "extracted iso differs from the permutation iso");

  {  // one image scaled by 2: no longer an indicator
    std::vector<StepFunction> images;
    for (WordCode w = 0; w < 16; ++w) images.push_back(W.image_of_cylinder(4, w));
    images[0] = images[0].scaled(Rational(2));
    SpectralCheckResult bad = check_spectral_conditions(mu, mu, LinearOnSteps(a, 4, images));
    c.require(!bad.ok && !bad.failures.empty(), "scaled image was not rejected");
  }
  {  // two cylinders mapped onto the same set: multiplicativity breaks
    std::vector<StepFunction> images;
    for (WordCode w = 0; w < 16; ++w) images.push_back(W.image_of_cylinder(4, w));
    images[1] = images[0];
    SpectralCheckResult bad = check_spectral_conditions(mu, mu, LinearOnSteps(a, 4, images));
    c.require(!bad.ok && !bad.failures.empty(), "overlapping images were not rejected");
  }
  return {10, "spectral conditions extract the underlying isomorphism", c.ok,
          done(c, "composition operator accepted, both mutations rejected with witnesses")};
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Partition random_partition(std::mt19937_64& rng, const Alphabet& a) {
  std::uniform_int_distribution<unsigned> depth_d(1, 3);
  std::uniform_int_distribution<unsigned> labels_d(2, 4);
  unsigned depth = depth_d(rng);
  unsigned k = labels_d(rng);
  std::uint64_t span = pow_u64(a.p, depth);
  std::vector<std::vector<WordCode>> buckets(k);
  for (WordCode w = 0; w < span; ++w) buckets[rng() % k].push_back(w);
  std::vector<ClopenSet> cells;
  for (auto& b : buckets) {
    if (!b.empty()) cells.push_back(ClopenSet::from_words(a, depth, b));
  }
  return Partition(a, cells);
}

Cover random_cover(std::mt19937_64& rng, const Alphabet& a) {
  std::uniform_int_distribution<unsigned> count_d(1, 3);
  std::vector<ClopenSet> members;
  ClopenSet covered = ClopenSet::empty(a);
  unsigned k = count_d(rng);
  for (unsigned i = 0; i < k; ++i) {
    ClopenSet m = random_clopen(rng, a, 3);
    if (m.is_empty()) continue;
    members.push_back(m);
    covered = covered.unite(m);
  }
  ClopenSet rest = covered.complement();
  if (!rest.is_empty()) members.push_back(rest);
  if (members.empty()) members.push_back(ClopenSet::full(a));
  return Cover(a, members);
}

CriterionResult criterion_property_suites() {
  Checker c;
  std::ostringstream parts;

  {  // ultrametric laws of |.|_l on random rationals
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
      Prime l = (i % 2 == 0) ? 3 : 5;
      Rational x = random_rational(rng), y = random_rational(rng);
      UltraNorm ax = UltraNorm::abs(x, l), ay = UltraNorm::abs(y, l);
      c.require(UltraNorm::abs(x + y, l) <= UltraNorm::max(ax, ay),
                "ultrametric inequality failed");
      c.require(UltraNorm::abs(x * y, l) == ax * ay, "multiplicativity failed");
      if (ax != ay) {
        c.require(UltraNorm::abs(x + y, l) == UltraNorm::max(ax, ay),
                  "strict case of the ultrametric inequality failed");
      }
    }
  }

  {  // boolean ring laws on random clopen triples
    std::mt19937_64 rng(102);
    for (int i = 0; i < 200; ++i) {
      Alphabet a(i % 2 == 0 ? 2 : 3);
      unsigned d = 1 + static_cast<unsigned>(rng() % 4);
      ClopenSet A = random_clopen(rng, a, d);
      ClopenSet B = random_clopen(rng, a, d);
      ClopenSet C = random_clopen(rng, a, 1 + static_cast<unsigned>(rng() % 4));
      c.require(A.unite(B) == B.unite(A) && A.intersect(B) == B.intersect(A),
                "commutativity failed");
      c.require(A.unite(B).unite(C) == A.unite(B.unite(C)), "associativity failed");
      c.require(A.intersect(B.unite(C)) == A.intersect(B).unite(A.intersect(C)),
                "distributivity failed");
      c.require(A.unite(B).complement() == A.complement().intersect(B.complement()),
                "De Morgan failed");
      c.require(A.subtract(B) == A.intersect(B.complement()), "difference identity failed");
      c.require(ClopenSet::from_words(a, d + 1, A.refine_to_depth(d + 1)) == A,
                "canonical form is not stable under refinement");
    }
  }

  {  // measure axioms for the example measures, Haar, and a counting measure
    for (unsigned seed : {1u, 2u}) {
      for (const BernoulliMeasure& mu :
           {example_mu2(), example_mu3(), BernoulliMeasure::haar(Alphabet(2), 3)}) {
        VerifyReport rep = mu.verify_axioms(6, seed);
        c.require(rep.ok, rep.ok ? "" : rep.failures.front());
        c.cases += 100;
      }
    }
    CountingMeasure kappa({"a", "b", "c", "d"},
                          {Rational(1, 3), Rational(3), Rational(-9), Rational(0)}, 3);
    VerifyReport rep = kappa.verify_axioms(3);
    c.require(rep.ok, rep.ok ? "" : rep.failures.front());
  }

  {  // monotone / convex / minimum norm properties
    std::mt19937_64 rng(103);
    BernoulliMeasure mu = example_mu3();
    for (int i = 0; i < 200; ++i) {
      ClopenSet A = random_clopen(rng, mu.alphabet(), 4);
      ClopenSet B = random_clopen(rng, mu.alphabet(), 4);
      UltraNorm na = mu.norm(A), nb = mu.norm(B);
      c.require(mu.norm(A.unite(B)) <= UltraNorm::max(na, nb), "union norm bound failed");
      c.require(na <= mu.norm(A.unite(B)), "norm monotonicity failed");
      c.require(mu.norm(A.intersect(B)) <= UltraNorm::min(na, nb),
                "intersection norm bound failed");
    }
    c.require(mu.norm(ClopenSet::empty(mu.alphabet())).is_zero(), "norm of empty set not 0");
  }

  {  // negligibility <=> the measure ignores the set, exhaustively on counting measures
    std::mt19937_64 rng(104);
    for (int i = 0; i < 200; ++i) {
      unsigned k = 3 + static_cast<unsigned>(rng() % 4);
      std::vector<std::string> labels;
      std::vector<Rational> h;
      for (unsigned j = 0; j < k; ++j) {
        labels.push_back("x" + std::to_string(j));
        long raw = static_cast<long>(rng() % 7) - 3;
        Rational w = rng() % 3 == 0 ? Rational(0) : Rational(raw, 1 + static_cast<long>(rng() % 4));
        w.canonicalize();
        h.push_back(w);
      }
      CountingMeasure kappa(labels, h, 3);
      std::uint32_t A = static_cast<std::uint32_t>(rng() % (1u << k));
      bool negligible = kappa.norm(A).is_zero();
      bool ignored = true;
      for (std::uint32_t B = 0; B < (1u << k); ++B) {
        if (kappa.measure(A & B) != kappa.measure(A)) {
          ignored = false;
          break;
        }
      }
      bool null_parts = true;
      for (std::uint32_t B = A;; B = (B - 1) & A) {
        if (kappa.measure(B) != 0) null_parts = false;
        if (B == 0) break;
      }
      c.require(negligible == null_parts, "norm zero does not match all-null sub-unions");
      c.require(ignored == (kappa.measure(A) == 0 && null_parts),
                "mu(A n B) = mu(A) equivalence failed");
    }
  }

  {  // H subadditivity and invariance under the shift preimage
    std::mt19937_64 rng(105);
    BernoulliMeasure mu2 = example_mu2();
    BernoulliMeasure mu3 = example_mu3();
    for (int i = 0; i < 200; ++i) {
      const BernoulliMeasure& mu = (i % 2 == 0) ? mu2 : mu3;
      Transformation shift = Transformation::shift(mu.alphabet());
      Partition alpha = random_partition(rng, mu.alphabet());
      Partition beta = random_partition(rng, mu.alphabet());
      EntropyValue ha = measure_entropy(mu, alpha);
      EntropyValue hb = measure_entropy(mu, beta);
      EntropyValue hj = measure_entropy(mu, alpha.join(beta));
      c.require(hj.value() <= ha.value() + hb.value(), "H subadditivity failed");
      EntropyValue hp = measure_entropy(mu, alpha.preimage_under(shift));
      bool same = ha.all_negligible == hp.all_negligible &&
                  ha.significant_count == hp.significant_count &&
                  (ha.all_negligible || ha.min_norm_exponent == hp.min_norm_exponent);
      c.require(same, "H changed under the shift preimage");
      c.require(hj.significant_count <= ha.significant_count * hb.significant_count,
                "M submultiplicativity failed");
    }
  }

  {  // atoms of a joined cover are the join of the atom partitions
    std::mt19937_64 rng(106);
    for (int i = 0; i < 200; ++i) {
      Alphabet a(i % 2 == 0 ? 2 : 3);
      Cover u = random_cover(rng, a);
      Cover w = random_cover(rng, a);
      c.require(u.join(w).to_partition() == u.to_partition().join(w.to_partition()),
                "atom partition of a joined cover mismatched");
    }
  }

  return {11, "algebraic and measure-theoretic property suites", c.ok,
          done(c, "ultrametric, ring, measure, norm, entropy and cover laws all hold")};
}

}  // namespace

std::vector<CriterionResult> run_all() {
  return {criterion_cylinder_norms(), criterion_entropy_fine(),   criterion_entropy_coarse(),
          criterion_shift_invariance(), criterion_point_norms(),  criterion_entropy_comparison(),
          criterion_interval_charge(),  criterion_norm_oracle(),  criterion_iso_conjugacy(),
          criterion_spectral(),         criterion_property_suites()};
}

bool run_and_report(std::ostream& out) {
  bool all = true;
  for (const CriterionResult& r : run_all()) {
    out << (r.passed ? "PASS" : "FAIL") << "  [" << r.number << "] " << r.name << ": "
        << r.detail << "\n";
    all = all && r.passed;
  }
  out << (all ? "selftest: all criteria passed\n" : "selftest: FAILURES present\n");
  return all;
}

}  // namespace nad::acceptance
