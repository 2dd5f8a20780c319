#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hieroglyph/word.hpp"

namespace hieroglyph {

enum class StepKind { Alpha, Beta };

// Alpha deletes a loop whose two ends are cyclically adjacent ("aa...").
// Beta merges two parallel loops ("xy...yx...") by deleting both ends of one
// of them; merged_into names the surviving loop.
struct ReductionStep {
  StepKind kind = StepKind::Alpha;
  std::vector<Position> positions;
  std::vector<Letter> letters;
  std::optional<Letter> merged_into;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

// Steps and residual of a reduction run. Positions and letters in the steps
// refer to the input word; the residual is relabeled in first-occurrence
// order and read from its smallest surviving input position.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Word residual;
  std::vector<Position> residual_positions;
  // Pair examinations plus deletions; linear in the word length.
  std::uint64_t work = 0;
};

enum class ResidualClass { Empty, Abab, Abcabc, Other };

std::string_view to_string(ResidualClass c) noexcept;

inline constexpr std::size_t kDefaultOracleBound = 6;

// Both return a word with the surviving letters relabeled densely, keeping
// their relative order. Throw Error(NotApplicable).
Word apply_alpha(const Word& w, Position pos);
Word apply_beta(const Word& w, Letter x, Letter y);

Word apply_step(const Word& w, const ReductionStep& step);

// Every applicable alpha and beta step, with positions in w. A parallel pair
// is listed twice, once for each choice of the deleted loop.
std::vector<ReductionStep> applicable_steps(const Word& w);

// Reduces to a word admitting no step anywhere, cyclically. Works on a
// circular doubly-linked list of positions; after each deletion only the
// adjacencies it created are examined again.
ReductionTrace fully_reduce_linear(const Word& w);

// A single left-to-right pass that examines each adjacency (prev(p), p) once
// as p is reached and never revisits it. Kept as a probe for whether one pass
// suffices; its residual may still be reducible.
ReductionTrace reduce_single_pass(const Word& w);

// Replays steps given in input-word coordinates, checking each is applicable
// at the moment it is applied. Returns the residual in first-occurrence
// labeling. Throws Error(NotApplicable).
Word replay(const Word& w, const std::vector<ReductionStep>& steps);

// Intended for words admitting no step; any other word is accepted and
// classified by equivalence only.
ResidualClass classify_residual(const Word& w);

bool is_condition_D(const Word& w);

// Canonical forms (with reflection) of every irreducible word reachable by
// any sequence of steps, sorted. Throws Error(BoundExceeded) when w has more
// than max_n loops.
std::vector<Word> oracle_reduce_all(const Word& w, std::size_t max_n = kDefaultOracleBound);

}  // namespace hieroglyph
