#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nad/measure.hpp"
#include "nad/set_expr.hpp"
#include "nad/shift_space.hpp"

using namespace nad;

TEST_CASE("alphabet bounds") {
  CHECK_THROWS_AS(Alphabet(1), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet(11), std::invalid_argument);
  CHECK(Alphabet(2).p == 2);
  CHECK(Alphabet(10).p == 10);
}

TEST_CASE("finite words") {
  Alphabet a(3);
  FiniteWord w = FiniteWord::parse("021", a);
  CHECK(w.length() == 3);
  CHECK(w.code(a) == 7);
  CHECK(FiniteWord::from_code(7, 3, a).str() == "021");
  CHECK(FiniteWord::parse("", a).length() == 0);
  CHECK_THROWS_AS(FiniteWord::parse("031", a), std::invalid_argument);
  CHECK_THROWS_AS(FiniteWord::parse("0a", a), std::invalid_argument);
}

TEST_CASE("canonical form collapses full sibling families") {
  Alphabet a(2);
  ClopenSet s = ClopenSet::from_words(a, 2, {0, 1});  // U_00 + U_01
  CHECK(s.depth() == 1);
  CHECK(s == ClopenSet::cylinder(a, FiniteWord::parse("0", a)));
  CHECK(ClopenSet::from_words(a, 3, {0, 1, 2, 3, 4, 5, 6, 7}).is_full());
  CHECK(ClopenSet::from_words(a, 2, {}).is_empty());

  // U_0 + U_10: no uniform-depth representation is shallower
  ClopenSet t = ClopenSet::from_words(a, 2, {0, 1, 2});
  CHECK(t.depth() == 2);
  CHECK(t.words() == std::vector<WordCode>{0, 1, 2});
}

TEST_CASE("boolean operations") {
  Alphabet a(2);
  ClopenSet u0 = parse_set_expr("U:0", a);
  ClopenSet u01 = parse_set_expr("U:01", a);
  ClopenSet u1 = parse_set_expr("U:1", a);
  CHECK(u0.unite(u1).is_full());
  CHECK(u0.intersect(u1).is_empty());
  CHECK(u0.intersect(u01) == u01);
  CHECK(u0.subtract(u01) == parse_set_expr("U:00", a));
  CHECK(u0.complement() == u1);
  CHECK(ClopenSet::full(a).complement().is_empty());
  CHECK(u0.is_subset_of(ClopenSet::full(a)));
  CHECK_FALSE(u0.is_subset_of(u01));
  CHECK(u01.is_subset_of(u0));
}

TEST_CASE("shift preimage and image") {
  Alphabet a(2);
  ClopenSet u0 = parse_set_expr("U:0", a);
  CHECK(u0.shift_preimage() == parse_set_expr("U:00 + U:10", a));
  CHECK(u0.shift_preimage(2).count_at_depth(3) == 4);
  CHECK(parse_set_expr("U:00 + U:10", a).shift_image() == u0);
  CHECK(parse_set_expr("U:01", a).shift_image() == u0.complement());
  CHECK(ClopenSet::full(a).shift_preimage().is_full());
  // image can grow: sigma(U_00 + U_11) = everything
  CHECK(parse_set_expr("U:00 + U:11", a).shift_image().is_full());
}

TEST_CASE("counting and refinement") {
  Alphabet a(3);
  ClopenSet s = parse_set_expr("U:0 + U:12", a);
  CHECK(s.count_at_depth(2) == 4);
  CHECK(s.count_at_depth(4) == 36);
  CHECK(s.refine_to_depth(2) == std::vector<WordCode>{0, 1, 2, 5});
  CHECK(ClopenSet::from_words(a, 2, s.refine_to_depth(2)) == s);
}

TEST_CASE("set expression parser") {
  Alphabet a(2);
  CHECK(parse_set_expr("ALL", a).is_full());
  CHECK(parse_set_expr("EMPTY", a).is_empty());
  CHECK(parse_set_expr("~U:0", a) == parse_set_expr("U:1", a));
  // precedence: ~ binds tighter than &, & tighter than + and -
  CHECK(parse_set_expr("~U:0 & U:10 + U:0", a) == parse_set_expr("U:0 + U:10", a));
  CHECK(parse_set_expr("ALL - U:1 & U:10", a) == parse_set_expr("~U:10", a));
  CHECK(parse_set_expr("(U:0 + U:1) & U:01", a) == parse_set_expr("U:01", a));
  CHECK_THROWS_AS(parse_set_expr("U:2", a), std::invalid_argument);
  CHECK_THROWS_AS(parse_set_expr("U:0 +", a), ParseError);
  CHECK_THROWS_AS(parse_set_expr("(U:0", a), ParseError);
  CHECK_THROWS_AS(parse_set_expr("", a), ParseError);
  try {
    parse_set_expr("U:0 @ U:1", a);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("expression round trip on random sets") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Alphabet a(i % 2 == 0 ? 2 : 3);
    ClopenSet s = random_clopen(rng, a, 1 + static_cast<unsigned>(rng() % 4));
    CHECK(parse_set_expr(s.str(), a) == s);
  }
}

TEST_CASE("point words canonicalize") {
  Alphabet a(2);
  PointWord x(a, {}, {0, 1, 0, 1});
  CHECK(x.period() == std::vector<std::uint8_t>{0, 1});
  PointWord y(a, {0}, {0});  // preperiod absorbed into the period
  CHECK(y.preperiod().empty());
  CHECK(y == PointWord(a, {}, {0}));
  PointWord z(a, {0, 1}, {1});
  CHECK(z.preperiod() == std::vector<std::uint8_t>{0});
  CHECK(PointWord::parse("1:0", a).str() == "1:0");
  CHECK(PointWord::parse(":01", a).symbol_at(3) == 1);
  CHECK_THROWS_AS(PointWord::parse(":", a), std::invalid_argument);
  CHECK_THROWS_AS(PointWord(a, {0}, {}), std::invalid_argument);
}

TEST_CASE("point membership and shifting") {
  Alphabet a(2);
  PointWord x = PointWord::parse("1:0", a);
  CHECK(contains_point(parse_set_expr("U:10", a), x));
  CHECK_FALSE(contains_point(parse_set_expr("U:11", a), x));
  CHECK(contains_point(ClopenSet::full(a), x));
  CHECK_FALSE(contains_point(ClopenSet::empty(a), x));
  CHECK(x.shifted() == PointWord::parse(":0", a));
  CHECK(PointWord::parse(":01", a).shifted() == PointWord::parse(":10", a));
  CHECK(x.prefix(4) == std::vector<std::uint8_t>{1, 0, 0, 0});
}

TEST_CASE("ring laws on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Alphabet a(i % 2 == 0 ? 2 : 3);
    unsigned d = 1 + static_cast<unsigned>(rng() % 4);
    ClopenSet A = random_clopen(rng, a, d);
    ClopenSet B = random_clopen(rng, a, 1 + static_cast<unsigned>(rng() % 4));
    ClopenSet C = random_clopen(rng, a, 2);
    CHECK(A.unite(B) == B.unite(A));
    CHECK(A.intersect(B.intersect(C)) == A.intersect(B).intersect(C));
    CHECK(A.unite(B.intersect(C)) == A.unite(B).intersect(A.unite(C)));
    CHECK(A.intersect(B.unite(C)) == A.intersect(B).unite(A.intersect(C)));
    CHECK(A.subtract(B) == A.intersect(B.complement()));
    CHECK(A.intersect(B).complement() == A.complement().unite(B.complement()));
    CHECK(A.complement().complement() == A);
    CHECK(A.unite(A) == A);
    CHECK(A.subtract(A).is_empty());
  }
}
