#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fiberforge/word.hpp"

namespace fiberforge {

// A finite presentation <generators | relators>.  Generator names are unique,
// relators use only declared generators and are stored cyclically reduced.
// Trivial (empty) relators are kept: relator counts are meaningful data for
// the constructions built on top of this type.
class FinitePresentation {
 public:
  FinitePresentation() = default;
  FinitePresentation(std::vector<Generator> generators, std::vector<Word> relators);

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t rank() const { return generators_.size(); }

  std::optional<std::size_t> generator_position(const Generator& g) const;
  bool has_generator(const Generator& g) const { return generator_position(g).has_value(); }

  // Letters encoded as signed 1-based generator positions: generator number i
  // (0-based) becomes +(i+1), its inverse -(i+1).
  std::vector<int> encode(const Word& w) const;
  Word decode(std::span<const int> codes) const;

  bool operator==(const FinitePresentation&) const = default;

 private:
  std::vector<Generator> generators_;
  std::vector<Word> relators_;
};

// --- Text grammar -----------------------------------------------------------
//
//   presentation := '<' gen-list '|' rel-list '>'
//   gen-list     := (identifier (',' identifier)*)?
//   rel-list     := (relation (',' relation)*)?
//   relation     := word ('=' word)?          -- "u = v" is stored as u v^-1
//   word         := term*                     -- juxtaposition, optional '*'
//   term         := atom ('^' integer)?
//   atom         := identifier | '(' word ')' | '[' word ',' word ']'
//   identifier   := letter (letter|digit|')* ('_' digits)?
//
// "[u,v]" denotes u^-1 v^-1 u v; "c_12" is the indexed generator c with
// index 12; "1" by itself is the empty word.

FinitePresentation parse_presentation(const std::string& text);
std::string render_presentation(const FinitePresentation& p);

// Word parsing against a declared alphabet (errors on undeclared generators)
// or standalone (any identifier becomes a generator).
Word parse_word(const std::string& text, const FinitePresentation& alphabet);
Word parse_word(const std::string& text);

// --- Builders ---------------------------------------------------------------

// Presentation of P x P': disjoint (renamed) generators, both relator sets,
// and one commutator relator for each cross pair.  Factor-1 generators get a
// "1" suffix on the name, factor-2 generators a "2" suffix.
FinitePresentation direct_product(const FinitePresentation& p, const FinitePresentation& q);

// The words of P's generators inside direct_product(P, Q) (factor = 1) or
// direct_product(Q, P) (factor = 2).
Generator product_factor_generator(const Generator& g, int factor);
Word product_factor_word(const Word& w, int factor);

// Adds a fresh generator z together with the relators z^n and z, leaving the
// presented group unchanged up to isomorphism.  Requires n >= 1.
FinitePresentation recursify(const FinitePresentation& p, unsigned n);

// Name of the generator recursify introduced (fresh relative to p).
Generator recursify_generator(const FinitePresentation& p);

}  // namespace fiberforge
