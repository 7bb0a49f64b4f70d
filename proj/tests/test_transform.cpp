#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nad/json_io.hpp"
#include "nad/measure.hpp"
#include "nad/set_expr.hpp"
#include "nad/transform.hpp"

using namespace nad;

namespace {

BernoulliMeasure mu23() { return BernoulliMeasure(Alphabet(2), 3, {Rational(-2), Rational(3)}); }

BernoulliMeasure sym2() {
  return BernoulliMeasure(Alphabet(2), 3, {Rational(1, 2), Rational(1, 2)});
}

}  // namespace

TEST_CASE("shift set action") {
  Alphabet a(2);
  Transformation T = Transformation::shift(a);
  CHECK(T.preimage(parse_set_expr("U:0", a)) == parse_set_expr("U:00 + U:10", a));
  CHECK(T.image(parse_set_expr("U:01", a)) == parse_set_expr("U:1", a));
  CHECK_FALSE(T.invertible());
  CHECK(T.apply(PointWord::parse("1:0", a)) == PointWord::parse(":0", a));
}

TEST_CASE("permutation set action") {
  Alphabet a(3);
  Transformation T = Transformation::permutation(a, {1, 2, 0});
  CHECK(T.invertible());
  CHECK(T.image(parse_set_expr("U:0", a)) == parse_set_expr("U:1", a));
  CHECK(T.preimage(parse_set_expr("U:1", a)) == parse_set_expr("U:0", a));
  CHECK(T.preimage(parse_set_expr("U:02", a)) == parse_set_expr("U:21", a));
  CHECK(T.apply(PointWord::parse("0:12", a)) == PointWord::parse("1:20", a));
  CHECK_THROWS_AS(Transformation::permutation(a, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Transformation::permutation(a, {1, 0}), std::invalid_argument);
}

TEST_CASE("odometer set action") {
  Alphabet a(2);
  Transformation T = Transformation::odometer(a);
  // adding one to a word starting 11 carries twice: preimage of U_00 is U_11
  CHECK(T.preimage(parse_set_expr("U:00", a)) == parse_set_expr("U:11", a));
  CHECK(T.preimage(parse_set_expr("U:0", a)) == parse_set_expr("U:1", a));
  CHECK(T.image(parse_set_expr("U:11", a)) == parse_set_expr("U:00", a));
  CHECK(T.preimage(parse_set_expr("U:01", a)) == parse_set_expr("U:10", a));

  Alphabet b(3);
  Transformation S = Transformation::odometer(b);
  CHECK(S.preimage(parse_set_expr("U:0", b)) == parse_set_expr("U:2", b));
  CHECK(S.preimage(parse_set_expr("U:1", b)) == parse_set_expr("U:0", b));
}

TEST_CASE("odometer point action") {
  Alphabet a(2);
  Transformation T = Transformation::odometer(a);
  CHECK(T.apply(PointWord::parse(":0", a)) == PointWord::parse("1:0", a));
  CHECK(T.apply(PointWord::parse("11:0", a)) == PointWord::parse("001:0", a));
  // every digit is 1: adding one carries forever and lands on 0^inf
  CHECK(T.apply(PointWord::parse(":1", a)) == PointWord::parse(":0", a));
  // the carry enters the periodic tail
  CHECK(T.apply(PointWord::parse("1:10", a)) == PointWord::parse("001:10", a));
}

TEST_CASE("set action is a boolean homomorphism") {
  std::mt19937_64 rng(21);
  Alphabet a(2);
  std::vector<Transformation> ts = {Transformation::shift(a), Transformation::odometer(a),
                                    Transformation::permutation(a, {1, 0})};
  for (int i = 0; i < 200; ++i) {
    const Transformation& T = ts[i % ts.size()];
    ClopenSet A = random_clopen(rng, a, 3);
    ClopenSet B = random_clopen(rng, a, 3);
    CHECK(T.preimage(A.unite(B)) == T.preimage(A).unite(T.preimage(B)));
    CHECK(T.preimage(A.complement()) == T.preimage(A).complement());
    CHECK(T.preimage(A.intersect(B)) == T.preimage(A).intersect(T.preimage(B)));
    if (T.invertible()) {
      CHECK(T.preimage(T.image(A)) == A);
      CHECK(T.image(T.preimage(A)) == A);
    }
  }
}

TEST_CASE("measure preservation checks") {
  CHECK(check_measure_preserving(mu23(), Transformation::shift(Alphabet(2)), 5).ok);
  BernoulliMeasure haar = BernoulliMeasure::haar(Alphabet(2), 3);
  CHECK(check_measure_preserving(haar, Transformation::odometer(Alphabet(2)), 5).ok);
  CHECK(check_measure_preserving(haar, Transformation::permutation(Alphabet(2), {1, 0}), 5).ok);

  CheckReport bad = check_measure_preserving(mu23(), Transformation::odometer(Alphabet(2)), 4);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.failures.empty());
  CheckReport swap_bad =
      check_measure_preserving(mu23(), Transformation::permutation(Alphabet(2), {1, 0}), 4);
  CHECK_FALSE(swap_bad.ok);
}

TEST_CASE("iso construction validates partitions and compatibility") {
  Alphabet a(2);
  MeasureAlgebraIso iso = MeasureAlgebraIso::from_permutation(a, {1, 0}, 3);
  CHECK(iso.depth() == 3);
  CHECK(iso.cylinder_image(2, 0) == parse_set_expr("U:11", a));
  CHECK(iso.apply(parse_set_expr("U:0 + U:10", a)) == parse_set_expr("U:1 + U:01", a));

  std::map<std::pair<unsigned, WordCode>, ClopenSet> images;
  images.emplace(std::make_pair(1u, WordCode(0)), parse_set_expr("U:0", a));
  images.emplace(std::make_pair(1u, WordCode(1)), parse_set_expr("U:0", a));  // not a partition
  CHECK_THROWS_AS(MeasureAlgebraIso(a, a, 1, std::move(images)), std::invalid_argument);

  std::map<std::pair<unsigned, WordCode>, ClopenSet> inc;
  inc.emplace(std::make_pair(1u, WordCode(0)), parse_set_expr("U:0", a));
  inc.emplace(std::make_pair(1u, WordCode(1)), parse_set_expr("U:1", a));
  inc.emplace(std::make_pair(2u, WordCode(0)), parse_set_expr("U:10", a));  // outside U_0
  inc.emplace(std::make_pair(2u, WordCode(1)), parse_set_expr("U:00", a));
  inc.emplace(std::make_pair(2u, WordCode(2)), parse_set_expr("U:01", a));
  inc.emplace(std::make_pair(2u, WordCode(3)), parse_set_expr("U:11", a));
  CHECK_THROWS_AS(MeasureAlgebraIso(a, a, 2, std::move(inc)), std::invalid_argument);
}

TEST_CASE("norm and negligibility are iso invariants") {
  Alphabet a(2);
  BernoulliMeasure mu = sym2();
  MeasureAlgebraIso iso = MeasureAlgebraIso::from_permutation(a, {1, 0}, 4);
  CHECK(iso.preserves_measure(mu, mu));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    ClopenSet A = random_clopen(rng, a, 4);
    CHECK(mu.norm(iso.apply(A)) == mu.norm(A));
    CHECK(mu.is_negligible(iso.apply(A)) == mu.is_negligible(A));
  }
  std::string witness;
  CHECK_FALSE(MeasureAlgebraIso::from_permutation(a, {1, 0}, 3)
                  .preserves_measure(mu23(), mu23(), &witness));
  CHECK_FALSE(witness.empty());
}

TEST_CASE("conjugacy checks") {
  Alphabet a(2);
  MeasureAlgebraIso swap = MeasureAlgebraIso::from_permutation(a, {1, 0}, 4);
  Transformation shift = Transformation::shift(a);
  CHECK(check_conjugacy(swap, shift, shift, 3).ok);
  CHECK(check_conjugacy(MeasureAlgebraIso::identity(a, 4), shift, shift, 3).ok);

  CheckReport bad =
      check_conjugacy(MeasureAlgebraIso::identity(a, 4), shift, Transformation::odometer(a), 3);
  CHECK_FALSE(bad.ok);
  CHECK_THROWS_AS(check_conjugacy(swap, shift, shift, 4), std::length_error);
}

TEST_CASE("point maps from isomorphisms") {
  Alphabet a(2);
  BernoulliMeasure mu = sym2();
  MeasureAlgebraIso swap = MeasureAlgebraIso::from_permutation(a, {1, 0}, 5);
  MeasureAlgebraIso id = MeasureAlgebraIso::identity(a, 5);
  for (WordCode w = 0; w < 16; ++w) {
    PointWord x(a, FiniteWord::from_code(w, 4, a).symbols, {0});
    CHECK(point_map_from_iso(swap, mu, x, 4).code(a) == (w ^ 0xf));
    CHECK(point_map_from_iso(id, mu, x, 4).code(a) == w);
  }
  // negligible points are outside the construction's domain
  BernoulliMeasure degenerate(a, 3, {Rational(1), Rational(0)});
  CHECK_THROWS_AS(point_map_from_iso(swap, degenerate, PointWord::parse(":1", a), 2),
                  std::domain_error);
}

TEST_CASE("point norm invariance under invertible maps") {
  Alphabet a(2);
  BernoulliMeasure mu = mu23();
  Transformation odo = Transformation::odometer(a);
  Transformation swap = Transformation::permutation(a, {1, 0});
  BernoulliMeasure swapped(a, 3, {Rational(3), Rational(-2)});
  BernoulliMeasure haar = BernoulliMeasure::haar(a, 3);
  for (const char* text : {"1:0", ":0", ":01", "110:1", ":10"}) {
    PointWord x = PointWord::parse(text, a);
    // invariance holds for measure-preserving invertible maps
    CHECK(haar.point_norm(odo.apply(x)) == haar.point_norm(x));
    CHECK(swapped.point_norm(swap.apply(x)) == mu.point_norm(x));
  }
  // the one-sided shift is not invertible and scales N at this point
  PointWord w = PointWord::parse("1:0", a);
  CHECK(mu.point_norm(w.shifted()).to_rational() == mu.point_norm(w).to_rational() * 3);
}

TEST_CASE("system isomorphy for representable point maps") {
  Alphabet a(2);
  Transformation shift = Transformation::shift(a);
  CHECK(check_iso_of_systems({1, 0}, shift, shift, sym2(), sym2(), 4).ok);
  CHECK_FALSE(check_iso_of_systems({1, 0}, shift, shift, mu23(), mu23(), 4).ok);
  BernoulliMeasure haar = BernoulliMeasure::haar(Alphabet(2), 3);
  Transformation odo = Transformation::odometer(a);
  CHECK(check_iso_of_systems({0, 1}, odo, odo, haar, haar, 4).ok);
  // swapping symbols conjugates the odometer to the subtract-one map, not itself
  CHECK_FALSE(check_iso_of_systems({1, 0}, odo, odo, haar, haar, 4).ok);
}

TEST_CASE("transformation and iso json round trips") {
  Alphabet a(2);
  for (const Transformation& T :
       {Transformation::shift(a), Transformation::odometer(a),
        Transformation::permutation(a, {1, 0})}) {
    Transformation back = transform_from_json(transform_to_json(T), a);
    CHECK(back.kind() == T.kind());
    CHECK(back.perm() == T.perm());
  }
  CHECK(parse_transform("perm:1,0", a).kind() == Transformation::Kind::Permutation);
  CHECK_THROWS_AS(parse_transform("rotation", a), std::invalid_argument);

  MeasureAlgebraIso iso = MeasureAlgebraIso::from_permutation(a, {1, 0}, 3);
  CHECK(iso_from_json(iso_to_json(iso)) == iso);
}
