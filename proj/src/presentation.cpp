#include "fiberforge/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fiberforge/errors.hpp"

namespace fiberforge {

FinitePresentation::FinitePresentation(std::vector<Generator> generators,
                                       std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::set<Generator> seen;
  for (const auto& g : generators_) {
    if (!seen.insert(g).second)
      throw std::invalid_argument("duplicate generator: " + g.str());
  }
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    for (const auto& l : r.letters()) {
      if (!seen.count(l.gen))
        throw std::invalid_argument("relator uses undeclared generator: " + l.gen.str());
    }
    relators_.push_back(cyclically_reduce(r));
  }
}

std::optional<std::size_t> FinitePresentation::generator_position(const Generator& g) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == g) return i;
  return std::nullopt;
}

std::vector<int> FinitePresentation::encode(const Word& w) const {
  std::vector<int> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    auto pos = generator_position(l.gen);
    if (!pos) throw IncompatibleInputError("word uses undeclared generator: " + l.gen.str());
    out.push_back(l.sign * static_cast<int>(*pos + 1));
  }
  return out;
}

Word FinitePresentation::decode(std::span<const int> codes) const {
  std::vector<Letter> ls;
  ls.reserve(codes.size());
  for (int c : codes) {
    std::size_t pos = static_cast<std::size_t>(c < 0 ? -c : c) - 1;
    if (pos >= generators_.size()) throw IncompatibleInputError("letter code out of range");
    ls.emplace_back(generators_[pos], c < 0 ? -1 : 1);
  }
  return Word(std::move(ls));
}

// --- Parser -----------------------------------------------------------------

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }
  std::size_t position() const { return pos_; }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    auto isword = [&](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '\'';
    };
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected identifier");
    while (pos_ < text_.size() && isword(text_[pos_])) ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    if (pos_ < text_.size() && text_[pos_] == '_') {
      std::size_t save = pos_;
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) {
        pos_ = save;  // bare underscore is not part of an identifier
      } else {
        return name + text_.substr(dstart, pos_ - dstart) + "\x01";  // tagged below
      }
    }
    return name;
  }

  Generator generator() {
    std::string id = identifier();
    if (!id.empty() && id.back() == '\x01') {
      id.pop_back();
      std::size_t us = id.find_last_not_of("0123456789");
      std::string digits = id.substr(us + 1);
      std::string base = id.substr(0, us + 1);
      return Generator(base, static_cast<std::uint32_t>(std::stoul(digits)));
    }
    return Generator(id);
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t dstart = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == dstart) fail("expected integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

bool starts_atom(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '1';
}

Word parse_word_at(Cursor& cur);

Word parse_atom(Cursor& cur) {
  char c = cur.peek();
  if (c == '(') {
    cur.expect('(');
    Word w = parse_word_at(cur);
    cur.expect(')');
    return w;
  }
  if (c == '[') {
    cur.expect('[');
    Word u = parse_word_at(cur);
    cur.expect(',');
    Word v = parse_word_at(cur);
    cur.expect(']');
    return commutator(u, v);
  }
  if (c == '1') {
    cur.accept('1');
    return Word();
  }
  Generator g = cur.generator();
  return Word({Letter(g, 1)});
}

Word parse_word_at(Cursor& cur) {
  Word acc;
  while (true) {
    char c = cur.peek();
    if (!starts_atom(c)) break;
    Word atom = parse_atom(cur);
    if (cur.accept('^')) atom = atom.pow(static_cast<int>(cur.integer()));
    acc = acc * atom;
    cur.accept('*');
  }
  return acc;
}

Word parse_relation_at(Cursor& cur) {
  Word lhs = parse_word_at(cur);
  if (cur.accept('=')) {
    Word rhs = parse_word_at(cur);
    return lhs * rhs.inverse();
  }
  return lhs;
}

}  // namespace

FinitePresentation parse_presentation(const std::string& text) {
  Cursor cur(text);
  cur.expect('<');
  std::vector<Generator> gens;
  if (cur.peek() != '|' && cur.peek() != '>') {
    gens.push_back(cur.generator());
    while (cur.accept(',')) gens.push_back(cur.generator());
  }
  std::vector<Word> relators;
  if (cur.accept('|')) {
    if (cur.peek() != '>') {
      relators.push_back(parse_relation_at(cur));
      while (cur.accept(',')) relators.push_back(parse_relation_at(cur));
    }
  }
  cur.expect('>');
  if (!cur.done()) cur.fail("trailing input after presentation");
  try {
    return FinitePresentation(std::move(gens), std::move(relators));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), cur.position());
  }
}

std::string render_presentation(const FinitePresentation& p) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i) os << ", ";
    os << p.generators()[i].str();
  }
  os << " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    os << (i ? ", " : " ") << p.relators()[i].str();
  }
  os << ">";
  return os.str();
}

Word parse_word(const std::string& text) {
  Cursor cur(text);
  Word w = parse_word_at(cur);
  if (!cur.done()) cur.fail("trailing input after word");
  return w;
}

Word parse_word(const std::string& text, const FinitePresentation& alphabet) {
  Word w = parse_word(text);
  for (const auto& l : w.letters()) {
    if (!alphabet.has_generator(l.gen))
      throw ParseError("undeclared generator: " + l.gen.str(), 0);
  }
  return w;
}

// --- Builders ---------------------------------------------------------------

Generator product_factor_generator(const Generator& g, int factor) {
  Generator out = g;
  out.name += (factor == 1 ? "1" : "2");
  return out;
}

Word product_factor_word(const Word& w, int factor) {
  std::vector<Letter> ls;
  ls.reserve(w.length());
  for (const auto& l : w.letters())
    ls.emplace_back(product_factor_generator(l.gen, factor), l.sign);
  return Word(std::move(ls));
}

FinitePresentation direct_product(const FinitePresentation& p, const FinitePresentation& q) {
  std::vector<Generator> gens;
  gens.reserve(p.rank() + q.rank());
  for (const auto& g : p.generators()) gens.push_back(product_factor_generator(g, 1));
  for (const auto& g : q.generators()) gens.push_back(product_factor_generator(g, 2));

  std::vector<Word> rels;
  rels.reserve(p.relators().size() + q.relators().size() + p.rank() * q.rank());
  for (const auto& r : p.relators()) rels.push_back(product_factor_word(r, 1));
  for (const auto& r : q.relators()) rels.push_back(product_factor_word(r, 2));
  for (const auto& g : p.generators()) {
    Word u({Letter(product_factor_generator(g, 1), 1)});
    for (const auto& h : q.generators()) {
      Word v({Letter(product_factor_generator(h, 2), 1)});
      rels.push_back(commutator(u, v));
    }
  }
  return FinitePresentation(std::move(gens), std::move(rels));
}

Generator recursify_generator(const FinitePresentation& p) {
  std::string name = "zeta";
  while (p.has_generator(Generator(name))) name += "z";
  return Generator(name);
}

FinitePresentation recursify(const FinitePresentation& p, unsigned n) {
  if (n < 1) throw std::invalid_argument("recursify requires n >= 1");
  Generator zeta = recursify_generator(p);
  auto gens = p.generators();
  gens.push_back(zeta);
  auto rels = p.relators();
  Word z({Letter(zeta, 1)});
  rels.push_back(z.pow(static_cast<int>(n)));
  rels.push_back(z);
  return FinitePresentation(std::move(gens), std::move(rels));
}

}  // namespace fiberforge
