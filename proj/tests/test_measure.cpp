#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nad/json_io.hpp"
#include "nad/measure.hpp"
#include "nad/set_expr.hpp"

using namespace nad;

namespace {

BernoulliMeasure mu23() { return BernoulliMeasure(Alphabet(2), 3, {Rational(-2), Rational(3)}); }

BernoulliMeasure mu35() {
  return BernoulliMeasure(Alphabet(3), 5, {Rational(-2), Rational(-2), Rational(5)});
}

}  // namespace

TEST_CASE("bernoulli construction validates the weights") {
  Alphabet a(2);
  CHECK_THROWS_AS(BernoulliMeasure(a, 3, {Rational(1), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(BernoulliMeasure(a, 3, {Rational(1, 3), Rational(2, 3)}),
                  std::invalid_argument);  // |1/3|_3 = 3 > 1
  CHECK_THROWS_AS(BernoulliMeasure(a, 4, {Rational(1, 2), Rational(1, 2)}),
                  std::invalid_argument);  // 4 is not prime
  CHECK_THROWS_AS(BernoulliMeasure(a, 3, {Rational(1)}), std::invalid_argument);
  CHECK_NOTHROW(BernoulliMeasure(a, 3, {Rational(0), Rational(1)}));
}

TEST_CASE("cylinder measures multiply the weights") {
  BernoulliMeasure mu = mu23();
  Alphabet a(2);
  CHECK(mu.measure(parse_set_expr("U:01", a)) == Rational(-6));
  CHECK(mu.measure(parse_set_expr("U:11", a)) == Rational(9));
  CHECK(mu.measure(parse_set_expr("U:0 + U:1", a)) == Rational(1));
  CHECK(mu.measure(ClopenSet::full(a)) == Rational(1));
  CHECK(mu.measure(ClopenSet::empty(a)) == Rational(0));
  CHECK(mu.cylinder_measure({1, 0, 1}) == Rational(-18));
}

TEST_CASE("haar measure") {
  BernoulliMeasure h = BernoulliMeasure::haar(Alphabet(2), 3);
  Alphabet a(2);
  CHECK(h.measure(parse_set_expr("U:01", a)) == Rational(1, 4));
  CHECK(h.norm(parse_set_expr("U:01", a)) == UltraNorm::one(3));
  // |1/p|_l must stay <= 1, so l dividing p is rejected
  CHECK_THROWS_AS(BernoulliMeasure::haar(Alphabet(2), 2), std::invalid_argument);
}

TEST_CASE("norm closed form") {
  BernoulliMeasure mu = mu23();
  Alphabet a(2);
  CHECK(mu.norm(ClopenSet::full(a)) == UltraNorm::one(3));
  CHECK(mu.norm(parse_set_expr("U:11", a)) == UltraNorm(3, 2));
  CHECK(mu.norm(parse_set_expr("U:11 + U:00", a)) == UltraNorm::one(3));
  CHECK(mu.norm(parse_set_expr("U:01 + U:10", a)) == UltraNorm(3, 1));
  CHECK(mu.norm(ClopenSet::empty(a)).is_zero());
  CHECK_FALSE(mu.is_negligible(parse_set_expr("U:11", a)));

  BernoulliMeasure nu = mu35();
  Alphabet b(3);
  CHECK(nu.norm(parse_set_expr("U:22", b)) == UltraNorm(5, 2));
  CHECK(nu.norm(parse_set_expr("U:2 & U:22", b)) == UltraNorm(5, 2));
}

TEST_CASE("norm against a brute-force subset-sum oracle") {
  std::mt19937_64 rng(5);
  BernoulliMeasure mu = mu23();
  BernoulliMeasure nu = mu35();
  for (int i = 0; i < 200; ++i) {
    const BernoulliMeasure& m = (i % 2 == 0) ? mu : nu;
    ClopenSet A = random_clopen(rng, m.alphabet(), 3);
    auto words = A.refine_to_depth(3);
    UltraNorm best = UltraNorm::zero();
    for (std::uint64_t mask = 1; mask < (1ull << words.size()); ++mask) {
      Rational sum(0);
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (mask & (1ull << j)) {
          sum += m.cylinder_measure(FiniteWord::from_code(words[j], 3, m.alphabet()).symbols);
        }
      }
      best = UltraNorm::max(best, UltraNorm::abs(sum, m.value_prime()));
    }
    CHECK(m.norm(A) == best);
  }
}

TEST_CASE("point norms") {
  BernoulliMeasure mu = mu23();
  Alphabet a(2);
  CHECK(mu.point_norm(PointWord::parse("1:0", a)) == UltraNorm(3, 1));
  CHECK(mu.point_norm(PointWord::parse(":0", a)) == UltraNorm::one(3));
  CHECK(mu.point_norm(PointWord::parse(":01", a)).is_zero());
  CHECK(mu.point_norm(PointWord::parse("111:0", a)) == UltraNorm(3, 3));
  CHECK(mu.point_norm(PointWord::parse(":1", a)).is_zero());

  BernoulliMeasure nu = mu35();
  Alphabet b(3);
  CHECK(nu.point_norm(PointWord::parse(":2", b)).is_zero());
  CHECK(nu.point_norm(PointWord::parse("2:01", b)) == UltraNorm(5, 1));
}

TEST_CASE("additivity on random disjoint pairs") {
  std::mt19937_64 rng(9);
  BernoulliMeasure mu = mu35();
  for (int i = 0; i < 200; ++i) {
    ClopenSet A = random_clopen(rng, mu.alphabet(), 3);
    ClopenSet B = random_clopen(rng, mu.alphabet(), 3).subtract(A);
    CHECK(mu.measure(A.unite(B)) == mu.measure(A) + mu.measure(B));
    CHECK(mu.measure(A) == mu.measure(A.intersect(ClopenSet::full(mu.alphabet()))));
  }
}

TEST_CASE("axiom verification passes for the example measures") {
  CHECK(mu23().verify_axioms(5).ok);
  CHECK(mu35().verify_axioms(4).ok);
  CHECK(BernoulliMeasure::haar(Alphabet(2), 3).verify_axioms(5).ok);
  CHECK_THROWS_AS(mu23().verify_axioms(11), std::invalid_argument);
}

TEST_CASE("counting measure") {
  CountingMeasure kappa({"a", "b"}, {Rational(0), Rational(5)}, 5);
  std::uint32_t a_only = kappa.subset_from_labels({"a"});
  std::uint32_t both = kappa.subset_from_labels({"a", "b"});
  CHECK(kappa.measure(a_only) == 0);
  CHECK(kappa.measure(both) == Rational(5));
  CHECK(kappa.norm(a_only).is_zero());
  CHECK(kappa.is_negligible(a_only));
  CHECK(kappa.norm(both) == UltraNorm(5, 1));
  CHECK(kappa.point_norm(0).is_zero());
  CHECK(kappa.point_norm(1) == UltraNorm(5, 1));
  CHECK(kappa.verify_axioms().ok);
  CHECK_THROWS_AS(kappa.subset_from_labels({"z"}), std::invalid_argument);
  CHECK_THROWS_AS(CountingMeasure({"a", "a"}, {Rational(1), Rational(1)}, 3),
                  std::invalid_argument);
}

TEST_CASE("counting norm sees cancellation") {
  // h = (1, -1): the whole set has measure 0 but is not negligible
  CountingMeasure kappa({"a", "b"}, {Rational(1), Rational(-1)}, 3);
  std::uint32_t both = kappa.subset_from_labels({"a", "b"});
  CHECK(kappa.measure(both) == 0);
  CHECK(kappa.norm(both) == UltraNorm::one(3));
}

TEST_CASE("measure json round trip") {
  for (const char* text :
       {R"({"kind":"bernoulli","p":2,"value_prime":3,"weights":["-2","3"]})",
        R"({"kind":"counting","labels":["a","b"],"h":["0","5"],"value_prime":5})"}) {
    Json j = Json::parse(text);
    MeasureContext m = measure_from_json(j);
    CHECK(measure_from_json(measure_to_json(m)).index() == m.index());
  }
  Json haar = Json::parse(R"({"kind":"haar","p":3,"value_prime":5})");
  const auto& h = std::get<BernoulliMeasure>(measure_from_json(haar));
  CHECK(h.weights() == std::vector<Rational>(3, Rational(1, 3)));
  CHECK_THROWS_AS(measure_from_json(Json::parse(R"({"kind":"dirac"})")), std::invalid_argument);
}

TEST_CASE("clopen and norm json round trip") {
  Alphabet a(3);
  ClopenSet s = parse_set_expr("U:0 + U:12", a);
  CHECK(clopen_from_json(clopen_to_json(s)) == s);
  for (UltraNorm n : {UltraNorm::zero(), UltraNorm::one(3), UltraNorm(5, -2)}) {
    CHECK(norm_from_json(norm_to_json(n)) == n);
  }
}
