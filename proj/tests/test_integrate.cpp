#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nad/json_io.hpp"
#include "nad/measure.hpp"
#include "nad/set_expr.hpp"
#include "nad/step_function.hpp"

using namespace nad;

namespace {

BernoulliMeasure mu23() { return BernoulliMeasure(Alphabet(2), 3, {Rational(-2), Rational(3)}); }

StepFunction random_step(std::mt19937_64& rng, const Alphabet& a) {
  std::vector<StepFunction::Term> terms;
  unsigned k = 1 + static_cast<unsigned>(rng() % 3);
  std::uniform_int_distribution<long> coeff(-6, 6);
  for (unsigned i = 0; i < k; ++i) {
    terms.push_back({Rational(coeff(rng)), random_clopen(rng, a, 3)});
  }
  return StepFunction(a, terms);
}

}  // namespace

TEST_CASE("canonical form resolves overlaps and drops zeros") {
  Alphabet a(2);
  ClopenSet u0 = parse_set_expr("U:0", a);
  ClopenSet u01 = parse_set_expr("U:01", a);
  StepFunction f(a, {{Rational(2), u0}, {Rational(1), u01}, {Rational(0), u0.complement()}});
  CHECK(f.terms().size() == 2);
  CHECK(f.value_on_word({0, 1}) == Rational(3));
  CHECK(f.value_on_word({0, 0}) == Rational(2));
  CHECK(f.value_on_word({1, 1}) == Rational(0));
  CHECK(f.support() == u0);

  StepFunction cancel(a, {{Rational(1), u0}, {Rational(-1), u0}});
  CHECK(cancel.is_zero());
  CHECK(StepFunction::zero(a) == cancel);
}

TEST_CASE("indicators") {
  Alphabet a(2);
  ClopenSet s = parse_set_expr("U:00 + U:1", a);
  StepFunction chi = StepFunction::indicator(s);
  CHECK(chi.is_indicator());
  CHECK(chi.support() == s);
  CHECK_FALSE(chi.scaled(Rational(2)).is_indicator());
  CHECK(StepFunction::indicator(ClopenSet::empty(a)).is_zero());
}

TEST_CASE("pointwise arithmetic") {
  Alphabet a(2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    StepFunction f = random_step(rng, a);
    StepFunction g = random_step(rng, a);
    std::vector<std::uint8_t> w = FiniteWord::from_code(rng() % 8, 3, a).symbols;
    CHECK((f + g).value_on_word(w) == f.value_on_word(w) + g.value_on_word(w));
    CHECK((f - g).value_on_word(w) == f.value_on_word(w) - g.value_on_word(w));
    CHECK((f * g).value_on_word(w) == f.value_on_word(w) * g.value_on_word(w));
    CHECK(f.scaled(Rational(5)).value_on_word(w) == Rational(5) * f.value_on_word(w));
    CHECK(f + g == g + f);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("integration") {
  BernoulliMeasure mu = mu23();
  Alphabet a(2);
  StepFunction f(a, {{Rational(2), parse_set_expr("U:01 + U:10", a)},
                     {Rational(-1, 3), parse_set_expr("U:0", a)}});
  CHECK(integrate(mu, f) == Rational(-70, 3));
  CHECK(integrate(mu, StepFunction::indicator(ClopenSet::full(a))) == 1);
  CHECK(integrate(mu, StepFunction::zero(a)) == 0);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    StepFunction g = random_step(rng, a);
    StepFunction h = random_step(rng, a);
    CHECK(integrate(mu, g + h) == integrate(mu, g) + integrate(mu, h));
    CHECK(integrate(mu, g.scaled(Rational(-7))) == Rational(-7) * integrate(mu, g));
    ClopenSet A = random_clopen(rng, a, 3);
    CHECK(integrate(mu, StepFunction::indicator(A)) == mu.measure(A));
  }
}

TEST_CASE("step function seminorm") {
  BernoulliMeasure mu = mu23();
  Alphabet a(2);
  StepFunction f(a, {{Rational(2), parse_set_expr("U:01 + U:10", a)},
                     {Rational(-1, 3), parse_set_expr("U:0", a)}});
  CHECK(step_norm(mu, f) == UltraNorm(3, -1));
  CHECK(step_norm(mu, StepFunction::zero(a)).is_zero());

  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    StepFunction g = random_step(rng, a);
    StepFunction h = random_step(rng, a);
    CHECK(step_norm(mu, g + h) <= UltraNorm::max(step_norm(mu, g), step_norm(mu, h)));
    CHECK(UltraNorm::abs(integrate(mu, g), 3) <= step_norm(mu, g));
    ClopenSet A = random_clopen(rng, a, 3);
    CHECK(step_norm(mu, StepFunction::indicator(A)) == mu.norm(A));
  }
}

TEST_CASE("composition with a transformation") {
  BernoulliMeasure mu = mu23();
  Alphabet a(2);
  Transformation shift = Transformation::shift(a);
  Transformation swap = Transformation::permutation(a, {1, 0});
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    StepFunction f = random_step(rng, a);
    StepFunction g = random_step(rng, a);
    const Transformation& T = (i % 2 == 0) ? shift : swap;
    CHECK((f * g).compose_with(T) == f.compose_with(T) * g.compose_with(T));
    CHECK((f + g).compose_with(T) == f.compose_with(T) + g.compose_with(T));
    // invariance of the integral under the shift
    CHECK(integrate(mu, f.compose_with(shift)) == integrate(mu, f));
  }
  StepFunction chi = StepFunction::indicator(parse_set_expr("U:0", a));
  CHECK(chi.compose_with(shift).support() == parse_set_expr("U:00 + U:10", a));
  CHECK(chi.compose_with(swap).support() == parse_set_expr("U:1", a));
}

TEST_CASE("linear maps from isomorphisms") {
  Alphabet a(2);
  BernoulliMeasure mu(a, 3, {Rational(1, 2), Rational(1, 2)});
  MeasureAlgebraIso iso = MeasureAlgebraIso::from_permutation(a, {1, 0}, 3);
  LinearOnSteps W = LinearOnSteps::from_iso(iso);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    ClopenSet A = random_clopen(rng, a, 3);
    CHECK(W.apply_indicator(A) == StepFunction::indicator(iso.apply(A)));
  }
  CHECK(W.image_of_cylinder(1, 0).support() == parse_set_expr("U:1", a));
}

TEST_CASE("spectral conditions accept the swap operator") {
  Alphabet a(2);
  BernoulliMeasure mu(a, 3, {Rational(1, 2), Rational(1, 2)});
  MeasureAlgebraIso iso = MeasureAlgebraIso::from_permutation(a, {1, 0}, 3);
  SpectralCheckResult res = check_spectral_conditions(mu, mu, LinearOnSteps::from_iso(iso));
  CHECK(res.ok);
  REQUIRE(res.iso.has_value());
  CHECK(*res.iso == iso);
}

TEST_CASE("spectral conditions reject mutations") {
  Alphabet a(2);
  BernoulliMeasure mu(a, 3, {Rational(1, 2), Rational(1, 2)});
  LinearOnSteps W = LinearOnSteps::from_iso(MeasureAlgebraIso::from_permutation(a, {1, 0}, 2));
  std::vector<StepFunction> images;
  for (WordCode w = 0; w < 4; ++w) images.push_back(W.image_of_cylinder(2, w));

  auto scaled = images;
  scaled[2] = scaled[2].scaled(Rational(2));
  SpectralCheckResult r1 = check_spectral_conditions(mu, mu, LinearOnSteps(a, 2, scaled));
  CHECK_FALSE(r1.ok);
  CHECK_FALSE(r1.failures.empty());

  auto overlapping = images;
  overlapping[1] = overlapping[0];
  SpectralCheckResult r2 = check_spectral_conditions(mu, mu, LinearOnSteps(a, 2, overlapping));
  CHECK_FALSE(r2.ok);
  CHECK_FALSE(r2.failures.empty());
}

TEST_CASE("step function json round trip") {
  Alphabet a(2);
  StepFunction f(a, {{Rational(2), parse_set_expr("U:01 + U:10", a)},
                     {Rational(-1, 3), parse_set_expr("U:0", a)}});
  CHECK(step_from_json(step_to_json(f), a) == f);
  CHECK(step_from_json(Json::parse(R"({"terms":[]})"), a).is_zero());
}
