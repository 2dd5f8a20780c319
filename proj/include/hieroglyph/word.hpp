#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hieroglyph/error.hpp"

namespace hieroglyph {

using Letter = std::uint32_t;
using Position = std::size_t;

// A hieroglyph: cyclic word of length 2n in which each of the letters
// 0..n-1 occurs exactly twice. Position 2n-1 is adjacent to position 0.
// Labels need not be in first-occurrence order; normalized() provides that.
class Word {
 public:
  Word() = default;

  // Throws Error(OddLength | BadMultiplicity).
  static Word from_symbols(std::vector<Letter> symbols);

  const std::vector<Letter>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t loops() const noexcept { return symbols_.size() / 2; }
  bool empty() const noexcept { return symbols_.empty(); }
  Letter operator[](Position p) const { return symbols_[p]; }

  // Letters relabeled 0, 1, 2, ... in order of first occurrence.
  Word normalized() const;
  Word rotated(std::size_t shift) const;
  Word reversed() const;
  // letter x becomes mapping[x]; mapping must be a permutation of 0..n-1.
  Word relabeled(std::span<const Letter> mapping) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.symbols_ <=> b.symbols_; }

 private:
  explicit Word(std::vector<Letter> symbols) : symbols_(std::move(symbols)) {}
  std::vector<Letter> symbols_;
};

// Chord-diagram view: partner[p] is the other position carrying symbols[p].
using PositionPairing = std::vector<Position>;

// Either a run of [a-z] letters, or comma separated non-negative integers.
// Surrounding whitespace is ignored; an empty (or blank) string is the empty
// word. Letters are relabeled densely in order of first occurrence.
Word parse_word(std::string_view text);

// Letters a..z when n <= 26, integer tokens otherwise.
std::string format_word(const Word& w);

PositionPairing to_pairing(const Word& w);

// Subsequence of the symbols whose letter is in keep, relabeled in
// first-occurrence order. Throws Error(UnknownLetter).
Word restrict_letters(const Word& w, std::span<const Letter> keep);

struct CanonicalForm {
  Word word;
  bool reflection_included = true;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// Lexicographically least first-occurrence relabeling over all rotations
// (and reversals when include_reflection is set).
CanonicalForm canonical_form(const Word& w, bool include_reflection = true);

bool equivalent(const Word& a, const Word& b, bool include_reflection = true);

inline constexpr std::size_t kDefaultEnumerationBound = 8;

// Streams every perfect matching on 2n positions as a word in first-occurrence
// labeling, (2n-1)!! words in lexicographic order. With dedupe set, only
// words that are their own canonical form (with reflection) are produced.
class DiagramStream {
 public:
  // Throws Error(BoundExceeded) when n > max_n.
  explicit DiagramStream(std::size_t n, bool dedupe = false,
                         std::size_t max_n = kDefaultEnumerationBound);

  // Only the matchings pairing position 0 with first_partner (1..2n-1);
  // the 2n-1 shards partition the full stream in order.
  DiagramStream(std::size_t n, Position first_partner, bool dedupe,
                std::size_t max_n = kDefaultEnumerationBound);

  std::optional<Word> next();

 private:
  bool advance();
  bool descend_from(std::size_t depth);

  std::size_t n_;
  bool dedupe_;
  bool started_ = false;
  bool done_ = false;
  std::optional<Position> pinned_partner_;
  std::vector<Letter> slots_;
  // Per depth: the open position and its current partner.
  std::vector<std::pair<Position, Position>> frames_;
};

std::vector<Word> enumerate_diagrams(std::size_t n, bool dedupe = false,
                                     std::size_t max_n = kDefaultEnumerationBound);

// (2n-1)!!
std::uint64_t matching_count(std::size_t n);

// Uniform random perfect matching of 2n positions (shuffle and pair),
// returned in first-occurrence labeling.
Word random_word(std::size_t n, std::mt19937_64& rng);

}  // namespace hieroglyph
