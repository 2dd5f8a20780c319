#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hieroglyph/word.hpp"

namespace hieroglyph {

// The four genus-2 hieroglyphs on four loops whose absence characterizes
// torus embeddability, with their canonical forms precomputed.
struct ForbiddenSet {
  static constexpr std::array<const char*, 4> kPatternText = {"ababcdcd", "abcdabcd", "abacdcbd",
                                                               "abcadbdc"};

  std::array<Word, 4> patterns;
  // Canonical forms under rotation, relabeling and reversal, with the index
  // of the base pattern each one came from. Sorted, deduplicated.
  std::vector<std::pair<Word, std::size_t>> closure;
  // Same, without reversal: the rotation-only canonical forms of every
  // pattern and of its reversal.
  std::vector<std::pair<Word, std::size_t>> oriented_closure;

  // Index of the base pattern matching a 4-loop word, if any.
  std::optional<std::size_t> match(const Word& w, bool include_reflection = true) const;
};

struct Witness {
  std::vector<Letter> letters;
  std::size_t pattern_index = 0;

  std::string pattern() const { return ForbiddenSet::kPatternText[pattern_index]; }
};

struct ConditionB {
  bool holds = true;
  std::optional<Witness> witness;
};

// Computed once, immutable afterwards.
const ForbiddenSet& forbidden_closure();

// Scans every 4-letter subset; the first (lexicographically) subset whose
// restriction matches a pattern is returned as the witness.
ConditionB is_condition_B(const Word& w, bool include_reflection = true);

}  // namespace hieroglyph
