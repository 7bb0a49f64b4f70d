#include "nad/shift_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace nad {

namespace {
constexpr std::uint64_t kMaxMaterializedWords = 1ull << 26;
}

Alphabet::Alphabet(unsigned size) : p(size) {
  if (size < 2) throw std::invalid_argument("alphabet size must be >= 2");
  if (size > 10) throw std::invalid_argument("alphabet size must be <= 10");
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > kMaxMaterializedWords * 16) throw std::length_error("word budget exceeded");
    r *= base;
  }
  return r;
}

FiniteWord FiniteWord::parse(const std::string& digits, const Alphabet& a) {
  std::vector<std::uint8_t> s;
  s.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit '" + std::string(1, c) + "'");
    unsigned d = static_cast<unsigned>(c - '0');
    if (d >= a.p) {
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for p=" +
                                  std::to_string(a.p));
    }
    s.push_back(static_cast<std::uint8_t>(d));
  }
  return FiniteWord(std::move(s));
}

FiniteWord FiniteWord::from_code(WordCode code, unsigned length, const Alphabet& a) {
  std::vector<std::uint8_t> s(length);
  for (unsigned i = length; i-- > 0;) {
    s[i] = static_cast<std::uint8_t>(code % a.p);
    code /= a.p;
  }
  return FiniteWord(std::move(s));
}

WordCode FiniteWord::code(const Alphabet& a) const {
  WordCode c = 0;
  for (auto s : symbols) {
    if (s >= a.p) throw std::invalid_argument("symbol out of range");
    c = c * a.p + s;
  }
  return c;
}

std::string FiniteWord::str() const {
  std::string s;
  s.reserve(symbols.size());
  for (auto d : symbols) s.push_back(static_cast<char>('0' + d));
  return s;
}

ClopenSet ClopenSet::empty(const Alphabet& a) { return ClopenSet(a, 0, {}); }

ClopenSet ClopenSet::full(const Alphabet& a) { return ClopenSet(a, 0, {0}); }

ClopenSet ClopenSet::cylinder(const Alphabet& a, const FiniteWord& w) {
  return ClopenSet(a, w.length(), {w.code(a)});
}

ClopenSet ClopenSet::from_words(const Alphabet& a, unsigned depth, std::vector<WordCode> words) {
  std::uint64_t span = pow_u64(a.p, depth);
  for (WordCode w : words) {
    if (w >= span) throw std::invalid_argument("word code out of range for depth");
  }
  ClopenSet s(a, depth, std::move(words));
  s.canonicalize();
  return s;
}

void ClopenSet::canonicalize() {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  if (words_.empty()) {
    depth_ = 0;
    return;
  }
  const std::uint64_t p = alphabet_.p;
  // Depth drops while every present word has its full sibling family present.
  while (depth_ > 0) {
    if (words_.size() % p != 0) break;
    bool reducible = true;
    for (std::size_t i = 0; i < words_.size(); i += p) {
      if (words_[i] % p != 0 || words_[i + p - 1] != words_[i] + p - 1) {
        reducible = false;
        break;
      }
    }
    if (!reducible) break;
    for (std::size_t i = 0; i < words_.size() / p; ++i) words_[i] = words_[i * p] / p;
    words_.resize(words_.size() / p);
    --depth_;
  }
}

std::vector<WordCode> ClopenSet::refine_to_depth(unsigned n) const {
  if (n < depth_) throw std::invalid_argument("refine_to_depth below stored depth");
  std::uint64_t fan = pow_u64(alphabet_.p, n - depth_);
  std::uint64_t total = words_.size() * fan;
  if (total > kMaxMaterializedWords) throw std::length_error("word budget exceeded");
  std::vector<WordCode> out;
  out.reserve(total);
  for (WordCode w : words_) {
    WordCode base = w * fan;
    for (std::uint64_t s = 0; s < fan; ++s) out.push_back(base + s);
  }
  return out;
}

std::uint64_t ClopenSet::count_at_depth(unsigned n) const {
  if (n < depth_) throw std::invalid_argument("count_at_depth below stored depth");
  return words_.size() * pow_u64(alphabet_.p, n - depth_);
}

namespace {
void check_same_alphabet(const ClopenSet& a, const ClopenSet& b) {
  if (!(a.alphabet() == b.alphabet())) throw std::invalid_argument("alphabet mismatch");
}
}  // namespace

ClopenSet ClopenSet::unite(const ClopenSet& o) const {
  check_same_alphabet(*this, o);
  unsigned d = std::max(depth_, o.depth_);
  auto a = refine_to_depth(d);
  auto b = o.refine_to_depth(d);
  std::vector<WordCode> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return from_words(alphabet_, d, std::move(out));
}

ClopenSet ClopenSet::intersect(const ClopenSet& o) const {
  check_same_alphabet(*this, o);
  unsigned d = std::max(depth_, o.depth_);
  auto a = refine_to_depth(d);
  auto b = o.refine_to_depth(d);
  std::vector<WordCode> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return from_words(alphabet_, d, std::move(out));
}

ClopenSet ClopenSet::subtract(const ClopenSet& o) const {
  check_same_alphabet(*this, o);
  unsigned d = std::max(depth_, o.depth_);
  auto a = refine_to_depth(d);
  auto b = o.refine_to_depth(d);
  std::vector<WordCode> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return from_words(alphabet_, d, std::move(out));
}

ClopenSet ClopenSet::complement() const { return full(alphabet_).subtract(*this); }

ClopenSet ClopenSet::shift_preimage(unsigned k) const {
  if (is_empty()) return *this;
  std::uint64_t fan = pow_u64(alphabet_.p, k);
  std::uint64_t span = pow_u64(alphabet_.p, depth_);
  if (words_.size() * fan > kMaxMaterializedWords) throw std::length_error("word budget exceeded");
  std::vector<WordCode> out;
  out.reserve(words_.size() * fan);
  for (std::uint64_t t = 0; t < fan; ++t) {
    for (WordCode w : words_) out.push_back(t * span + w);
  }
  return from_words(alphabet_, depth_ + k, std::move(out));
}

ClopenSet ClopenSet::shift_image() const {
  if (is_empty()) return *this;
  unsigned d = std::max(depth_, 1u);
  auto ws = refine_to_depth(d);
  std::uint64_t tail = pow_u64(alphabet_.p, d - 1);
  for (WordCode& w : ws) w %= tail;
  return from_words(alphabet_, d - 1, std::move(ws));
}

bool ClopenSet::contains_word_prefix(const std::vector<std::uint8_t>& prefix) const {
  if (prefix.size() < depth_) throw std::invalid_argument("prefix shorter than depth");
  WordCode c = 0;
  for (unsigned i = 0; i < depth_; ++i) c = c * alphabet_.p + prefix[i];
  return std::binary_search(words_.begin(), words_.end(), c);
}

bool ClopenSet::is_subset_of(const ClopenSet& o) const {
  check_same_alphabet(*this, o);
  unsigned d = std::max(depth_, o.depth_);
  auto a = refine_to_depth(d);
  auto b = o.refine_to_depth(d);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool ClopenSet::operator==(const ClopenSet& o) const {
  return alphabet_ == o.alphabet_ && depth_ == o.depth_ && words_ == o.words_;
}

bool ClopenSet::operator<(const ClopenSet& o) const {
  if (depth_ != o.depth_) return depth_ < o.depth_;
  return words_ < o.words_;
}

std::vector<FiniteWord> ClopenSet::word_list() const {
  std::vector<FiniteWord> out;
  out.reserve(words_.size());
  for (WordCode w : words_) out.push_back(FiniteWord::from_code(w, depth_, alphabet_));
  return out;
}

std::string ClopenSet::str() const {
  if (is_empty()) return "EMPTY";
  if (is_full()) return "ALL";
  std::string s;
  bool first = true;
  for (const auto& w : word_list()) {
    if (!first) s += " + ";
    s += "U:" + w.str();
    first = false;
  }
  return s;
}

PointWord::PointWord(const Alphabet& a, std::vector<std::uint8_t> preperiod,
                     std::vector<std::uint8_t> period)
    : alphabet_(a), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("period must be nonempty");
  for (auto s : preperiod_)
    if (s >= alphabet_.p) throw std::invalid_argument("symbol out of range");
  for (auto s : period_)
    if (s >= alphabet_.p) throw std::invalid_argument("symbol out of range");
  // minimal period
  for (std::size_t q = 1; q < period_.size(); ++q) {
    if (period_.size() % q != 0) continue;
    bool ok = true;
    for (std::size_t i = q; i < period_.size() && ok; ++i) ok = period_[i] == period_[i % q];
    if (ok) {
      period_.resize(q);
      break;
    }
  }
  // minimal preperiod: absorb trailing preperiod symbols into the cycle
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    period_.insert(period_.begin(), period_.back());
    period_.pop_back();
    preperiod_.pop_back();
  }
}

PointWord PointWord::parse(const std::string& text, const Alphabet& a) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("point must be 'PRE:PER'");
  auto pre = FiniteWord::parse(text.substr(0, colon), a);
  auto per = FiniteWord::parse(text.substr(colon + 1), a);
  return PointWord(a, pre.symbols, per.symbols);
}

std::uint8_t PointWord::symbol_at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

std::vector<std::uint8_t> PointWord::prefix(std::size_t n) const {
  std::vector<std::uint8_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = symbol_at(i);
  return out;
}

PointWord PointWord::shifted() const {
  if (!preperiod_.empty()) {
    return PointWord(alphabet_, {preperiod_.begin() + 1, preperiod_.end()}, period_);
  }
  std::vector<std::uint8_t> per(period_.begin() + 1, period_.end());
  per.push_back(period_.front());
  return PointWord(alphabet_, {}, per);
}

bool PointWord::operator==(const PointWord& o) const {
  return alphabet_ == o.alphabet_ && preperiod_ == o.preperiod_ && period_ == o.period_;
}

std::string PointWord::str() const {
  return FiniteWord(preperiod_).str() + ":" + FiniteWord(period_).str();
}

bool contains_point(const ClopenSet& A, const PointWord& x) {
  if (!(A.alphabet() == x.alphabet())) throw std::invalid_argument("alphabet mismatch");
  return A.contains_word_prefix(x.prefix(A.depth()));
}

}  // namespace nad
