#include "nad/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace nad {

Json norm_to_json(const UltraNorm& n) {
  if (n.is_zero()) return Json{{"zero", true}};
  return Json{{"prime", n.prime()}, {"exponent", n.exponent()}};
}

UltraNorm norm_from_json(const Json& j) {
  if (j.contains("zero") && j.at("zero").get<bool>()) return UltraNorm::zero();
  return UltraNorm(j.at("prime").get<Prime>(), j.at("exponent").get<long>());
}

Json clopen_to_json(const ClopenSet& s) {
  Json words = Json::array();
  for (const auto& w : s.word_list()) words.push_back(w.str());
  return Json{{"p", s.alphabet().p}, {"depth", s.depth()}, {"words", words}};
}

ClopenSet clopen_from_json(const Json& j) {
  Alphabet a(j.at("p").get<unsigned>());
  unsigned depth = j.at("depth").get<unsigned>();
  std::vector<WordCode> words;
  for (const auto& w : j.at("words")) {
    FiniteWord fw = FiniteWord::parse(w.get<std::string>(), a);
    if (fw.length() != depth) throw std::invalid_argument("word length != depth");
    words.push_back(fw.code(a));
  }
  return ClopenSet::from_words(a, depth, std::move(words));
}

Json measure_to_json(const MeasureContext& m) {
  if (const auto* b = std::get_if<BernoulliMeasure>(&m)) {
    Json weights = Json::array();
    for (const auto& q : b->weights()) weights.push_back(to_string(q));
    return Json{{"kind", "bernoulli"},
                {"p", b->alphabet().p},
                {"value_prime", b->value_prime()},
                {"weights", weights}};
  }
  const auto& c = std::get<CountingMeasure>(m);
  Json h = Json::array();
  for (const auto& q : c.h()) h.push_back(to_string(q));
  return Json{{"kind", "counting"},
              {"labels", c.labels()},
              {"h", h},
              {"value_prime", c.value_prime()}};
}

MeasureContext measure_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "bernoulli") {
    Alphabet a(j.at("p").get<unsigned>());
    std::vector<Rational> weights;
    for (const auto& w : j.at("weights")) weights.push_back(parse_rational(w.get<std::string>()));
    return BernoulliMeasure(a, j.at("value_prime").get<Prime>(), std::move(weights));
  }
  if (kind == "haar") {
    Alphabet a(j.at("p").get<unsigned>());
    return BernoulliMeasure::haar(a, j.at("value_prime").get<Prime>());
  }
  if (kind == "counting") {
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<Rational> h;
    for (const auto& x : j.at("h")) h.push_back(parse_rational(x.get<std::string>()));
    return CountingMeasure(std::move(labels), std::move(h), j.at("value_prime").get<Prime>());
  }
  throw std::invalid_argument("unknown measure kind '" + kind + "'");
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

MeasureContext load_measure(const std::string& path) {
  return measure_from_json(load_json_file(path));
}

Json step_to_json(const StepFunction& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    terms.push_back(Json{{"coeff", to_string(t.coeff)}, {"set", clopen_to_json(t.support)}});
  }
  return Json{{"p", f.alphabet().p}, {"terms", terms}};
}

StepFunction step_from_json(const Json& j, const Alphabet& a) {
  std::vector<StepFunction::Term> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back({parse_rational(t.at("coeff").get<std::string>()),
                     clopen_from_json(t.at("set"))});
  }
  for (const auto& t : terms) {
    if (!(t.support.alphabet() == a)) throw std::invalid_argument("alphabet mismatch in terms");
  }
  return StepFunction(a, terms);
}

Json transform_to_json(const Transformation& t) {
  switch (t.kind()) {
    case Transformation::Kind::Shift:
      return Json{{"kind", "shift"}};
    case Transformation::Kind::Odometer:
      return Json{{"kind", "odometer"}};
    case Transformation::Kind::Permutation: {
      Json pi = Json::array();
      for (auto s : t.perm()) pi.push_back(static_cast<unsigned>(s));
      return Json{{"kind", "perm"}, {"pi", pi}};
    }
  }
  throw std::logic_error("unreachable");
}

Transformation transform_from_json(const Json& j, const Alphabet& a) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "shift") return Transformation::shift(a);
  if (kind == "odometer") return Transformation::odometer(a);
  if (kind == "perm") {
    std::vector<std::uint8_t> pi;
    for (const auto& x : j.at("pi")) pi.push_back(x.get<std::uint8_t>());
    return Transformation::permutation(a, std::move(pi));
  }
  throw std::invalid_argument("unknown transform kind '" + kind + "'");
}

Transformation parse_transform(const std::string& text, const Alphabet& a) {
  if (text == "shift") return Transformation::shift(a);
  if (text == "odometer") return Transformation::odometer(a);
  if (text.rfind("perm:", 0) == 0) {
    std::vector<std::uint8_t> pi;
    std::string rest = text.substr(5);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t next = rest.find(',', pos);
      if (next == std::string::npos) next = rest.size();
      pi.push_back(static_cast<std::uint8_t>(std::stoul(rest.substr(pos, next - pos))));
      pos = next + 1;
    }
    return Transformation::permutation(a, std::move(pi));
  }
  if (text.size() > 5 && text.substr(text.size() - 5) == ".json") {
    return transform_from_json(load_json_file(text), a);
  }
  throw std::invalid_argument("unknown transform '" + text + "'");
}

Json iso_to_json(const MeasureAlgebraIso& iso) {
  const Alphabet& a = iso.domain_alphabet();
  Json levels = Json::array();
  for (unsigned n = 1; n <= iso.depth(); ++n) {
    Json images = Json::array();
    std::uint64_t span = pow_u64(a.p, n);
    for (WordCode w = 0; w < span; ++w) {
      images.push_back(Json{{"word", FiniteWord::from_code(w, n, a).str()},
                            {"set", clopen_to_json(iso.cylinder_image(n, w))}});
    }
    levels.push_back(Json{{"depth", n}, {"images", images}});
  }
  return Json{{"p", a.p}, {"codomain_p", iso.codomain_alphabet().p}, {"depth", iso.depth()},
              {"levels", levels}};
}

MeasureAlgebraIso iso_from_json(const Json& j) {
  Alphabet dom(j.at("p").get<unsigned>());
  Alphabet cod(j.contains("codomain_p") ? j.at("codomain_p").get<unsigned>()
                                        : j.at("p").get<unsigned>());
  unsigned depth = j.at("depth").get<unsigned>();
  std::map<std::pair<unsigned, WordCode>, ClopenSet> images;
  for (const auto& level : j.at("levels")) {
    unsigned n = level.at("depth").get<unsigned>();
    for (const auto& img : level.at("images")) {
      FiniteWord w = FiniteWord::parse(img.at("word").get<std::string>(), dom);
      if (w.length() != n) throw std::invalid_argument("word length != level depth");
      images.emplace(std::make_pair(n, w.code(dom)), clopen_from_json(img.at("set")));
    }
  }
  return MeasureAlgebraIso(dom, cod, depth, std::move(images));
}

LinearOnSteps linear_from_json(const Json& j) {
  Alphabet a(j.at("p").get<unsigned>());
  unsigned depth = j.at("depth").get<unsigned>();
  std::uint64_t span = pow_u64(a.p, depth);
  std::vector<StepFunction> images(span, StepFunction::zero(a));
  std::vector<bool> seen(span, false);
  for (const auto& entry : j.at("images")) {
    FiniteWord w = FiniteWord::parse(entry.at("word").get<std::string>(), a);
    if (w.length() != depth) throw std::invalid_argument("image word length != depth");
    WordCode c = w.code(a);
    if (seen[c]) throw std::invalid_argument("duplicate image for word " + w.str());
    seen[c] = true;
    images[c] = step_from_json(entry.at("fn"), a);
  }
  for (std::uint64_t c = 0; c < span; ++c) {
    if (!seen[c]) {
      throw std::invalid_argument("missing image for word " +
                                  FiniteWord::from_code(c, depth, a).str());
    }
  }
  return LinearOnSteps(a, depth, std::move(images));
}

}  // namespace nad
