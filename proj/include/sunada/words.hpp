#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sunada {

/// One signed generator occurrence. `code = 2*generator + (inverse ? 1 : 0)`,
/// so inversion is `code ^ 1` and letters order a < a^-1 < b < b^-1 < ...
struct Letter {
  int code = 0;

  int generator() const { return code >> 1; }
  bool inverse() const { return code & 1; }
  Letter inverted() const { return {code ^ 1}; }
  static Letter make(int generator, bool inverse) { return {generator * 2 + (inverse ? 1 : 0)}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Ordered list of distinct single-letter generator names.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string names);

  int size() const { return static_cast<int>(names_.size()); }
  char name(int generator) const { return names_.at(generator); }
  std::optional<int> find(char name) const;
  const std::string& names() const { return names_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string names_;
};

using Word = std::vector<Letter>;

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Grammar (whitespace optional between terms):
///   word ::= term* ; term ::= atom ("^" "-"? digits)? ;
///   atom ::= letter | "(" word ")" | "[" word "," word "]"
/// where [u,v] expands to u v u^-1 v^-1. Output is flattened, unreduced.
Word parse_word(const std::string& text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word free_reduce(const Word& w);
bool is_reduced(const Word& w);

/// Cyclically reduced word, stored as the lexicographically least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  /// Cyclically reduces and canonicalizes.
  explicit CyclicWord(const Word& w);

  const Word& letters() const { return letters_; }  // canonical rotation
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  Letter at(int i) const;  // cyclic indexing, any integer
  CyclicWord inverted() const { return CyclicWord(inverse(letters_)); }
  bool is_primitive() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  Word letters_;
};

Word cyclic_reduce(const Word& w);

/// Exponent-sum vector, one entry per generator.
using HomologyClass = std::vector<long>;
HomologyClass abelianize(const Word& w, int rank);

/// Map from each generator to an image word; applies by substitution
/// followed by free reduction.
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(std::vector<Word> images) : images_(std::move(images)) {}
  static Endomorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const Word& image(int generator) const { return images_.at(generator); }
  Word apply(const Word& w) const;

 private:
  std::vector<Word> images_;
};

/// Dehn's algorithm for the one-relator surface group <gens | relator>.
/// dehn_reduce repeatedly replaces any cyclic subword that is more than half
/// of a symmetrized relator by the shorter complement. surface_conjugate then
/// decides conjugacy of Dehn-reduced forms by closing under cyclic rotation
/// and exact-half relator swaps (length-preserving).
class SurfaceGroup {
 public:
  explicit SurfaceGroup(const Word& relator);

  Word dehn_reduce(Word w) const;
  bool conjugate(const Word& a, const Word& b) const;

 private:
  std::vector<Word> symmetrized_;
  int relator_length_;
  bool step(Word& w) const;
};

bool surface_conjugate(const Word& w1, const Word& w2, const Word& relator);

}  // namespace sunada
