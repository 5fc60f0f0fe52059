#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace fiberforge {

// A generator symbol: either a plain named symbol ("x", "a3") or a member of
// an indexed family ("c_7" is family "c" with index 7).  Two generators are
// equal iff name and index agree.
struct Generator {
  std::string name;
  std::optional<std::uint32_t> index;

  Generator() = default;
  explicit Generator(std::string n) : name(std::move(n)) {}
  Generator(std::string n, std::uint32_t i) : name(std::move(n)), index(i) {}

  auto operator<=>(const Generator&) const = default;

  // "x" or "c_7"
  std::string str() const;
};

struct Letter {
  Generator gen;
  int sign = 1;  // +1 or -1

  Letter() = default;
  Letter(Generator g, int s) : gen(std::move(g)), sign(s) {}

  Letter inverse() const { return Letter(gen, -sign); }
  auto operator<=>(const Letter&) const = default;
};

// A freely reduced word over generator symbols.  Construction reduces
// eagerly, so a Word never holds an adjacent letter/inverse pair; the empty
// word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(int k) const;

  auto operator<=>(const Word&) const = default;

  // Rendered in the shared word syntax, e.g. "a^2*b^-1"; the empty word
  // renders as "1".
  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

// Free reduction of a raw letter sequence (cancels adjacent inverse pairs
// until none remain).
std::vector<Letter> freely_reduce_letters(std::vector<Letter> letters);

// Identity on Word values (they are stored reduced); kept as the named
// operation so callers can reduce without knowing the class invariant.
Word freely_reduce(const Word& w);

// Shortest conjugate of a reduced word: strips matching first/last letters.
Word cyclically_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

// [u, v] = u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);

// ---------------------------------------------------------------------------
// The nu encoding between words over the infinite alphabet {c_0, c_1, ..., x,
// s, t} and words over the finite alphabet {a, b, x, s, t}:
//
//   c_n^e  <->  b^n a^e b^-n        (n a natural number)
//   x, s, t fixed.

namespace alpha {
Generator a();
Generator b();
Generator x();
Generator s();
Generator t();
Generator c(std::uint32_t index);
bool is_c(const Generator& g);
}  // namespace alpha

// True when every letter of w lies in {c_i, x, s, t}.
bool is_nu_source_word(const Word& w);
// True when every letter lies in {a, b, x, s, t}.
bool is_nu_target_word(const Word& w);

Word nu_encode(const Word& w);

// Inverse of nu_encode on reduced words.  Returns nullopt when W is not the
// image of any word (including the case of a negative required c-index).
std::optional<Word> nu_decode(const Word& W);

// Largest c-index occurring in a word over {c_i, x, s, t}; nullopt when the
// word has no c-letters.
std::optional<std::uint32_t> max_c_index(const Word& w);

}  // namespace fiberforge
