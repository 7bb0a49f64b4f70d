#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nad/acceptance.hpp"
#include "nad/entropy.hpp"
#include "nad/json_io.hpp"
#include "nad/measure.hpp"
#include "nad/pathology.hpp"
#include "nad/set_expr.hpp"
#include "nad/step_function.hpp"
#include "nad/transform.hpp"

namespace {

using namespace nad;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BernoulliMeasure as_bernoulli(const MeasureContext& m) {
  if (const auto* b = std::get_if<BernoulliMeasure>(&m)) return *b;
  throw UsageError("this command needs a bernoulli or haar measure spec");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

Partition parse_partition(const std::string& text, const Alphabet& a) {
  std::vector<ClopenSet> cells;
  for (const auto& part : split(text, '|')) cells.push_back(parse_set_expr(part, a));
  return Partition(a, cells);
}

Cover parse_cover(const std::string& text, const Alphabet& a) {
  std::vector<ClopenSet> members;
  for (const auto& part : split(text, '|')) members.push_back(parse_set_expr(part, a));
  return Cover(a, members);
}

int report_check(const std::vector<std::string>& failures) {
  if (failures.empty()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const auto& f : failures) std::cerr << "witness: " << f << "\n";
  std::cout << "failed (" << failures.size() << " witnesses)\n";
  return kExitCheckFailed;
}

void print_entropy_csv(const EntropySequence& seq) {
  std::cout << "n,e_n,M_n,a_n_decimal,ratio\n";
  for (unsigned n = 1; n <= seq.length(); ++n) {
    const EntropyValue& h = seq.a(n);
    std::cout << n << ",";
    if (h.all_negligible) {
      std::cout << "inf,0,0,0\n";
      continue;
    }
    std::cout << h.min_norm_exponent << "," << h.significant_count.get_str() << ","
              << h.value().str() << "," << (h.value() / Real(static_cast<double>(n))).str()
              << "\n";
  }
}

void print_fekete_summary(const EntropySequence& seq) {
  FeketeEstimate est = fekete_estimate(seq);
  Json j{{"upper", est.upper.str()},
         {"classification", est.classification_name()},
         {"limit", est.limit.str()}};
  std::cout << j.dump() << "\n";
}

int cmd_measure(const std::string& sub, const std::string& spec_path, const std::string& set_expr,
                const std::string& point_text, unsigned depth, std::uint64_t seed) {
  MeasureContext m = load_measure(spec_path);
  if (const auto* kappa = std::get_if<CountingMeasure>(&m)) {
    if (sub == "eval" || sub == "norm") {
      std::uint32_t subset =
          set_expr == "ALL"
              ? (1u << kappa->size()) - 1
              : kappa->subset_from_labels(set_expr == "EMPTY" ? std::vector<std::string>{}
                                                              : split(set_expr, ','));
      if (sub == "eval") {
        std::cout << to_string(kappa->measure(subset)) << "\n";
      } else {
        std::cout << norm_to_json(kappa->norm(subset)).dump() << "\n";
      }
      return kExitOk;
    }
    if (sub == "nmu") {
      auto subset = kappa->subset_from_labels({point_text});
      std::size_t index = 0;
      while (!(subset & (1u << index))) ++index;
      std::cout << norm_to_json(kappa->point_norm(index)).dump() << "\n";
      return kExitOk;
    }
    std::cout << "seed: " << seed << "\n";
    VerifyReport rep = kappa->verify_axioms(seed);
    return report_check(rep.failures);
  }
  const BernoulliMeasure& mu = std::get<BernoulliMeasure>(m);
  if (sub == "eval") {
    std::cout << to_string(mu.measure(parse_set_expr(set_expr, mu.alphabet()))) << "\n";
    return kExitOk;
  }
  if (sub == "norm") {
    std::cout << norm_to_json(mu.norm(parse_set_expr(set_expr, mu.alphabet()))).dump() << "\n";
    return kExitOk;
  }
  if (sub == "nmu") {
    PointWord x = PointWord::parse(point_text, mu.alphabet());
    std::cout << norm_to_json(mu.point_norm(x)).dump() << "\n";
    return kExitOk;
  }
  std::cout << "seed: " << seed << "\n";
  VerifyReport rep = mu.verify_axioms(depth, seed);
  for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
  return report_check(rep.failures);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact p-adic-valued measures, dynamics and entropy on full shift spaces"};
  app.require_subcommand(1);

  std::string spec_path, target_spec_path, set_expr, point_text, fn_path, w_path, iso_path;
  std::string transform_text = "shift", target_transform_text, partition_text, cover_text;
  std::string perm_text, digits_text;
  unsigned depth = 6, nmax = 6, prime_p = 2;
  std::uint64_t seed = 1;

  auto* measure = app.add_subcommand("measure", "evaluate, bound and verify measures");
  measure->require_subcommand(1);
  for (const char* name : {"eval", "norm", "nmu", "verify"}) {
    auto* sub = measure->add_subcommand(name);
    sub->add_option("--spec", spec_path)->required();
    if (std::string(name) == "eval" || std::string(name) == "norm") {
      sub->add_option("--set", set_expr)->required();
    }
    if (std::string(name) == "nmu") sub->add_option("--point", point_text)->required();
    if (std::string(name) == "verify") {
      sub->add_option("--depth", depth);
      sub->add_option("--seed", seed);
    }
  }

  auto* integrate_cmd = app.add_subcommand("integrate", "integrate a step function");
  integrate_cmd->add_option("--spec", spec_path)->required();
  integrate_cmd->add_option("--fn", fn_path)->required();

  auto* stepnorm_cmd = app.add_subcommand("stepnorm", "L1 seminorm of a step function");
  stepnorm_cmd->add_option("--spec", spec_path)->required();
  stepnorm_cmd->add_option("--fn", fn_path)->required();

  auto* spectral_cmd =
      app.add_subcommand("spectral-check", "verify spectral conditions, extract the isomorphism");
  spectral_cmd->add_option("--spec", spec_path)->required();
  spectral_cmd->add_option("--target", target_spec_path);
  spectral_cmd->add_option("--W", w_path)->required();

  auto* dynamics = app.add_subcommand("dynamics", "measure-preserving maps and conjugacy");
  dynamics->require_subcommand(1);
  {
    auto* sub = dynamics->add_subcommand("check-preserving");
    sub->add_option("--spec", spec_path)->required();
    sub->add_option("--transform", transform_text);
    sub->add_option("--depth", depth);
    sub->add_option("--seed", seed);
  }
  {
    auto* sub = dynamics->add_subcommand("check-conjugacy");
    sub->add_option("--iso", iso_path)->required();
    sub->add_option("--transform", transform_text);
    sub->add_option("--target-transform", target_transform_text);
    sub->add_option("--depth", depth);
  }
  {
    auto* sub = dynamics->add_subcommand("point-map");
    sub->add_option("--iso", iso_path)->required();
    sub->add_option("--spec", spec_path)->required();
    sub->add_option("--point", point_text)->required();
    sub->add_option("--depth", depth);
  }
  {
    auto* sub = dynamics->add_subcommand("check-iso");
    sub->add_option("--perm", perm_text)->required();
    sub->add_option("--spec", spec_path)->required();
    sub->add_option("--target", target_spec_path);
    sub->add_option("--transform", transform_text);
    sub->add_option("--target-transform", target_transform_text);
    sub->add_option("--depth", depth);
  }

  auto* entropy = app.add_subcommand("entropy", "measure and topological entropy sequences");
  entropy->require_subcommand(1);
  {
    auto* sub = entropy->add_subcommand("measure");
    sub->add_option("--spec", spec_path)->required();
    sub->add_option("--partition", partition_text)->required();
    sub->add_option("--transform", transform_text);
    sub->add_option("--n", nmax);
  }
  {
    auto* sub = entropy->add_subcommand("top");
    sub->add_option("--p", prime_p)->required();
    sub->add_option("--cover", cover_text)->required();
    sub->add_option("--transform", transform_text);
    sub->add_option("--n", nmax);
  }
  {
    auto* sub = entropy->add_subcommand("compare");
    sub->add_option("--spec", spec_path)->required();
    sub->add_option("--partition", partition_text)->required();
    sub->add_option("--transform", transform_text);
    sub->add_option("--n", nmax);
  }

  auto* pathology = app.add_subcommand("pathology", "the interval charge non-example");
  {
    auto* sub = pathology->add_subcommand("upsilon");
    sub->add_option("--p", prime_p)->required();
    sub->add_option("--digits", digits_text)->required();
    sub->add_option("--n", nmax)->required();
  }
  pathology->require_subcommand(1);

  app.add_subcommand("selftest", "run the full built-in verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(measure)) {
      return cmd_measure(measure->get_subcommands().front()->get_name(), spec_path, set_expr,
                         point_text, depth, seed);
    }
    if (app.got_subcommand("integrate") || app.got_subcommand("stepnorm")) {
      const BernoulliMeasure mu = as_bernoulli(load_measure(spec_path));
      StepFunction f = step_from_json(load_json_file(fn_path), mu.alphabet());
      if (app.got_subcommand("integrate")) {
        std::cout << to_string(integrate(mu, f)) << "\n";
      } else {
        std::cout << norm_to_json(step_norm(mu, f)).dump() << "\n";
      }
      return kExitOk;
    }
    if (app.got_subcommand("spectral-check")) {
      const BernoulliMeasure mu = as_bernoulli(load_measure(spec_path));
      const BernoulliMeasure nu = as_bernoulli(
          load_measure(target_spec_path.empty() ? spec_path : target_spec_path));
      LinearOnSteps W = linear_from_json(load_json_file(w_path));
      SpectralCheckResult res = check_spectral_conditions(mu, nu, W);
      if (res.ok && res.iso) std::cout << iso_to_json(*res.iso).dump() << "\n";
      return report_check(res.failures);
    }
    if (app.got_subcommand(dynamics)) {
      std::string sub = dynamics->get_subcommands().front()->get_name();
      if (sub == "check-preserving") {
        const BernoulliMeasure mu = as_bernoulli(load_measure(spec_path));
        Transformation T = parse_transform(transform_text, mu.alphabet());
        std::cout << "seed: " << seed << "\n";
        return report_check(check_measure_preserving(mu, T, depth, seed).failures);
      }
      if (sub == "check-conjugacy") {
        MeasureAlgebraIso iso = iso_from_json(load_json_file(iso_path));
        Transformation T = parse_transform(transform_text, iso.domain_alphabet());
        Transformation S = parse_transform(
            target_transform_text.empty() ? transform_text : target_transform_text,
            iso.codomain_alphabet());
        return report_check(check_conjugacy(iso, T, S, depth).failures);
      }
      if (sub == "point-map") {
        MeasureAlgebraIso iso = iso_from_json(load_json_file(iso_path));
        const BernoulliMeasure mu = as_bernoulli(load_measure(spec_path));
        PointWord x = PointWord::parse(point_text, iso.domain_alphabet());
        std::cout << point_map_from_iso(iso, mu, x, depth).str() << "\n";
        return kExitOk;
      }
      const BernoulliMeasure mu = as_bernoulli(load_measure(spec_path));
      const BernoulliMeasure nu = as_bernoulli(
          load_measure(target_spec_path.empty() ? spec_path : target_spec_path));
      Transformation T = parse_transform(transform_text, mu.alphabet());
      Transformation S = parse_transform(
          target_transform_text.empty() ? transform_text : target_transform_text, nu.alphabet());
      std::vector<std::uint8_t> phi;
      for (const auto& part : split(perm_text, ',')) {
        phi.push_back(static_cast<std::uint8_t>(std::stoul(part)));
      }
      return report_check(check_iso_of_systems(phi, T, S, mu, nu, depth).failures);
    }
    if (app.got_subcommand(entropy)) {
      std::string sub = entropy->get_subcommands().front()->get_name();
      if (sub == "top") {
        Alphabet a(prime_p);
        Cover u = parse_cover(cover_text, a);
        Transformation T = parse_transform(transform_text, a);
        EntropySequence seq = topological_entropy_sequence(T, u, nmax);
        print_entropy_csv(seq);
        print_fekete_summary(seq);
        return kExitOk;
      }
      const BernoulliMeasure mu = as_bernoulli(load_measure(spec_path));
      Partition alpha = parse_partition(partition_text, mu.alphabet());
      Transformation T = parse_transform(transform_text, mu.alphabet());
      if (sub == "measure") {
        EntropySequence seq = measure_entropy_sequence(mu, T, alpha, nmax);
        print_entropy_csv(seq);
        print_fekete_summary(seq);
        return kExitOk;
      }
      EntropyComparison cmp = compare_entropies(mu, T, alpha, nmax);
      std::cout << "measure entropy sequence:\n";
      print_entropy_csv(cmp.measure_seq);
      print_fekete_summary(cmp.measure_seq);
      std::cout << "topological entropy sequence:\n";
      print_entropy_csv(cmp.top_seq);
      print_fekete_summary(cmp.top_seq);
      std::cout << "termwise a_n <= b_n: " << (cmp.termwise_le ? "yes" : "no") << "\n";
      if (cmp.unit_norm_measure) {
        std::cout << "unit-norm measure, termwise equality: " << (cmp.termwise_eq ? "yes" : "no")
                  << "\n";
      }
      return report_check(cmp.failures);
    }
    if (app.got_subcommand(pathology)) {
      DigitStream x = DigitStream::parse(digits_text, prime_p);
      DecaySequence seq = decay_sequence(x, nmax);
      std::cout << "n,k_n,abs\n";
      for (const auto& row : seq.rows) {
        std::cout << row.n << "," << row.k_n << "," << prime_p << "^-" << row.k_n << "\n";
      }
      for (unsigned n : seq.skipped_zero_digit) std::cout << "# skipped n=" << n << " (a_n=0)\n";
      for (unsigned n : seq.skipped_all_top) {
        std::cout << "# skipped n=" << n << " (all digits p-1)\n";
      }
      bool violated = seq.formula_confirmed && seq.norm_decays;
      std::cout << "continuity violated: " << (violated ? "yes" : "no") << "\n";
      return violated ? kExitOk : kExitCheckFailed;
    }
    bool ok = nad::acceptance::run_and_report(std::cout);
    return ok ? kExitOk : kExitCheckFailed;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
