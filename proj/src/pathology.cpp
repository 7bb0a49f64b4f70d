#include "nad/pathology.hpp"

#include <algorithm>
#include <stdexcept>

namespace nad {

DigitStream::DigitStream(Prime base, std::vector<std::uint8_t> prefix,
                         std::vector<std::uint8_t> period)
    : base_(base), prefix_(std::move(prefix)), period_(std::move(period)) {
  require_prime(base_);
  if (period_.empty()) throw std::invalid_argument("digit stream needs a period");
  for (auto d : prefix_)
    if (d >= base_) throw std::invalid_argument("digit out of range");
  for (auto d : period_)
    if (d >= base_) throw std::invalid_argument("digit out of range");
  bool constant = std::all_of(period_.begin(), period_.end(),
                              [&](std::uint8_t d) { return d == period_.front(); });
  if (constant) {
    throw std::invalid_argument(
        "eventually constant digits give a p-power rational, which is not in X_p");
  }
}

DigitStream DigitStream::parse(const std::string& text, Prime base) {
  auto parse_digits = [&](const std::string& s) {
    std::vector<std::uint8_t> out;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad digit in '" + s + "'");
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
  };
  std::string prefix_part, period_part;
  auto comma = text.find(',');
  std::string rest = text;
  if (comma != std::string::npos) {
    prefix_part = text.substr(0, comma);
    rest = text.substr(comma + 1);
  }
  const std::string key = "period=";
  if (rest.rfind(key, 0) != 0) throw std::invalid_argument("expected 'period=...'");
  period_part = rest.substr(key.size());
  return DigitStream(base, parse_digits(prefix_part), parse_digits(period_part));
}

std::uint8_t DigitStream::digit(unsigned n) const {
  if (n < 1) throw std::invalid_argument("digits are 1-based");
  std::size_t i = n - 1;
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

Rational DigitStream::partial_sum(unsigned n) const {
  Rational sum(0);
  Rational scale(1);
  Rational inv_p(1, base_);
  for (unsigned i = 1; i <= n; ++i) {
    scale *= inv_p;
    sum += Rational(static_cast<unsigned long>(digit(i))) * scale;
  }
  return sum;
}

DyadicInterval::DyadicInterval(Prime b, Rational r_, Rational s_)
    : base(b), r(std::move(r_)), s(std::move(s_)) {
  require_prime(base);
  if (!(0 <= r && r < s && s <= 1)) throw std::invalid_argument("need 0 <= r < s <= 1");
  for (const Rational* q : {&r, &s}) {
    Integer den = q->get_den();
    while (den % static_cast<unsigned long>(base) == 0) den /= static_cast<unsigned long>(base);
    if (den != 1) throw std::invalid_argument("endpoint is not of the form n/p^k");
  }
}

Rational upsilon(const DyadicInterval& j) {
  if (j.r == 0) return Rational(1) / j.s;
  return Rational(1) / j.s - Rational(1) / j.r;
}

DyadicInterval enclosing_interval(const DigitStream& x, unsigned n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Rational r = x.partial_sum(n);
  Rational t(1);
  for (unsigned i = 0; i < n; ++i) t /= static_cast<unsigned long>(x.base());
  return DyadicInterval(x.base(), r, r + t);
}

DecaySequence decay_sequence(const DigitStream& x, unsigned N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  DecaySequence out;
  const Prime p = x.base();
  for (unsigned n = 1; n <= N; ++n) {
    if (x.digit(n) == 0) {
      out.skipped_zero_digit.push_back(n);
      continue;
    }
    long k = -1;
    for (unsigned i = n; i >= 1; --i) {
      if (x.digit(i) != p - 1) {
        k = static_cast<long>(i);
        break;
      }
    }
    if (k < 0) {
      out.skipped_all_top.push_back(n);
      continue;
    }
    Rational u = upsilon(enclosing_interval(x, n));
    auto v = valuation(u, p);
    if (!v) throw std::logic_error("upsilon vanished on a nonempty interval");
    out.rows.push_back({n, k, *v, u});
    if (*v != k) out.formula_confirmed = false;
  }
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    if (out.rows[i].k_n < out.rows[i - 1].k_n) out.norm_decays = false;
  }
  if (out.rows.size() < 2 || out.rows.back().k_n <= out.rows.front().k_n) {
    out.norm_decays = false;
  }
  return out;
}

}  // namespace nad
