#include "fiberforge/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fiberforge {

std::string Generator::str() const {
  if (!index) return name;
  return name + "_" + std::to_string(*index);
}

std::vector<Letter> freely_reduce_letters(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto& l : letters) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(std::move(l));
    }
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(freely_reduce_letters(std::move(letters))) {}

Word::Word(std::initializer_list<Letter> letters)
    : letters_(freely_reduce_letters(std::vector<Letter>(letters))) {}

Word Word::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) rev.push_back(it->inverse());
  Word w;
  w.letters_ = std::move(rev);  // inverse of a reduced word is reduced
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(cat));
}

Word Word::pow(int k) const {
  Word base = k >= 0 ? *this : inverse();
  int n = k >= 0 ? k : -k;
  Word acc;
  for (int i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long run = static_cast<long>(j - i) * letters_[i].sign;
    if (!first) os << "*";
    os << letters_[i].gen.str();
    if (run != 1) os << "^" << run;
    first = false;
    i = j;
  }
  return os.str();
}

Word freely_reduce(const Word& w) { return w; }

Word cyclically_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> mid(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                          ls.begin() + static_cast<std::ptrdiff_t>(hi));
  return Word(std::move(mid));
}

bool is_cyclically_reduced(const Word& w) {
  const auto& ls = w.letters();
  if (ls.size() < 2) return true;
  return !(ls.front() == ls.back().inverse());
}

Word commutator(const Word& u, const Word& v) { return u.inverse() * v.inverse() * u * v; }

namespace alpha {
Generator a() { return Generator("a"); }
Generator b() { return Generator("b"); }
Generator x() { return Generator("x"); }
Generator s() { return Generator("s"); }
Generator t() { return Generator("t"); }
Generator c(std::uint32_t index) { return Generator("c", index); }
bool is_c(const Generator& g) { return g.name == "c" && g.index.has_value(); }
}  // namespace alpha

bool is_nu_source_word(const Word& w) {
  for (const auto& l : w.letters()) {
    if (alpha::is_c(l.gen)) continue;
    if (l.gen == alpha::x() || l.gen == alpha::s() || l.gen == alpha::t()) continue;
    return false;
  }
  return true;
}

bool is_nu_target_word(const Word& w) {
  for (const auto& l : w.letters()) {
    if (l.gen == alpha::a() || l.gen == alpha::b() || l.gen == alpha::x() ||
        l.gen == alpha::s() || l.gen == alpha::t())
      continue;
    return false;
  }
  return true;
}

Word nu_encode(const Word& w) {
  if (!is_nu_source_word(w)) throw std::invalid_argument("nu_encode: word not over {c_i, x, s, t}");
  std::vector<Letter> out;
  out.reserve(w.length() * 3);
  for (const auto& l : w.letters()) {
    if (alpha::is_c(l.gen)) {
      const auto n = *l.gen.index;
      for (std::uint32_t i = 0; i < n; ++i) out.emplace_back(alpha::b(), 1);
      out.emplace_back(alpha::a(), l.sign);
      for (std::uint32_t i = 0; i < n; ++i) out.emplace_back(alpha::b(), -1);
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

namespace {

// Decodes one maximal {a,b}-syllable.  For the i-th occurrence a^e with
// prefix P_i, emit c_{beta_i}^e where beta_i is the b-exponent sum of P_i;
// the syllable is in the image iff the residual
// U^-1 * prod_i b^{beta_i} a^{e_i} b^{-beta_i} reduces to the empty word.
bool decode_ab_syllable(const std::vector<Letter>& syll, std::vector<Letter>& out) {
  std::vector<Letter> residual;
  for (auto it = syll.rbegin(); it != syll.rend(); ++it) residual.push_back(it->inverse());
  long beta = 0;
  std::vector<std::pair<long, int>> occurrences;  // (b-exponent sum, sign of a)
  for (const auto& l : syll) {
    if (l.gen == alpha::b()) {
      beta += l.sign;
    } else {
      occurrences.emplace_back(beta, l.sign);
    }
  }
  for (auto [bi, ei] : occurrences) {
    if (bi < 0) return false;  // indices are naturals
    for (long i = 0; i < bi; ++i) residual.emplace_back(alpha::b(), 1);
    residual.emplace_back(alpha::a(), ei);
    for (long i = 0; i < bi; ++i) residual.emplace_back(alpha::b(), -1);
  }
  if (!freely_reduce_letters(std::move(residual)).empty()) return false;
  for (auto [bi, ei] : occurrences)
    out.emplace_back(alpha::c(static_cast<std::uint32_t>(bi)), ei);
  return true;
}

}  // namespace

std::optional<Word> nu_decode(const Word& W) {
  if (!is_nu_target_word(W)) return std::nullopt;
  std::vector<Letter> out;
  std::vector<Letter> syll;
  auto flush = [&]() -> bool {
    if (syll.empty()) return true;
    bool ok = decode_ab_syllable(syll, out);
    syll.clear();
    return ok;
  };
  for (const auto& l : W.letters()) {
    if (l.gen == alpha::a() || l.gen == alpha::b()) {
      syll.push_back(l);
    } else {
      if (!flush()) return std::nullopt;
      out.push_back(l);
    }
  }
  if (!flush()) return std::nullopt;
  return Word(std::move(out));
}

std::optional<std::uint32_t> max_c_index(const Word& w) {
  std::optional<std::uint32_t> best;
  for (const auto& l : w.letters()) {
    if (alpha::is_c(l.gen)) {
      if (!best || *l.gen.index > *best) best = *l.gen.index;
    }
  }
  return best;
}

}  // namespace fiberforge
