#include "hieroglyph/reduce.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace hieroglyph {

namespace {

const Word& abab() {
  static const Word w = parse_word("abab");
  return w;
}

const Word& abcabc() {
  static const Word w = parse_word("abcabc");
  return w;
}

// Drops the positions flagged in `removed` and closes the gaps in the
// letter ids, keeping their relative order.
Word remove_positions(const Word& w, const std::vector<bool>& removed) {
  std::vector<bool> gone(w.loops(), false);
  for (Position p = 0; p < w.size(); ++p) {
    if (removed[p]) gone[w[p]] = true;
  }
  std::vector<Letter> shift(w.loops(), 0);
  Letter dropped = 0;
  for (Letter x = 0; x < w.loops(); ++x) {
    shift[x] = dropped;
    dropped += gone[x];
  }
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Position p = 0; p < w.size(); ++p) {
    if (!removed[p]) out.push_back(w[p] - shift[w[p]]);
  }
  return Word::from_symbols(std::move(out));
}

// Circular doubly-linked list over the positions of a word.
class PositionRing {
 public:
  explicit PositionRing(const Word& w)
      : word_(w), partner_(to_pairing(w)), next_(w.size()), prev_(w.size()), alive_(w.size(), true),
        count_(w.size()) {
    const std::size_t m = w.size();
    for (Position p = 0; p < m; ++p) {
      next_[p] = (p + 1) % m;
      prev_[p] = (p + m - 1) % m;
    }
  }

  std::size_t count() const { return count_; }
  bool alive(Position p) const { return alive_[p]; }
  Position next(Position p) const { return next_[p]; }
  Position prev(Position p) const { return prev_[p]; }
  Position partner(Position p) const { return partner_[p]; }
  Letter letter(Position p) const { return word_[p]; }

  void unlink(Position p) {
    next_[prev_[p]] = next_[p];
    prev_[next_[p]] = prev_[p];
    alive_[p] = false;
    --count_;
  }

  // Alpha at the adjacency (p, next(p)).
  bool alpha_at(Position p) const { return next_[p] == partner_[p]; }

  // Beta at (p, next(p)): the pattern x y ... y x. The condition is symmetric:
  // it holds at (p, next(p)) iff it holds at (partner(next(p)), partner(p)).
  bool beta_at(Position p) const {
    const Position q = next_[p];
    return q != partner_[p] && q != p && next_[partner_[q]] == partner_[p];
  }

  // Deletes both ends of the loop at position q. Returns the position whose
  // successor changed last, i.e. the left end of the adjacency created by
  // removing partner(q).
  Position delete_loop(Position q) {
    const Position u = partner_[q];
    unlink(q);
    const Position left = prev_[u];
    unlink(u);
    return left;
  }

  ReductionTrace finish(ReductionTrace trace) const {
    std::vector<Letter> symbols;
    if (count_ > 0) {
      Position start = 0;
      while (!alive_[start]) ++start;
      Position p = start;
      do {
        trace.residual_positions.push_back(p);
        symbols.push_back(word_[p]);
        p = next_[p];
      } while (p != start);
    }
    // The surviving letters are arbitrary ids; renumber by first occurrence.
    std::vector<Letter> map(word_.loops(), static_cast<Letter>(-1));
    Letter fresh = 0;
    for (Letter& x : symbols) {
      if (map[x] == static_cast<Letter>(-1)) map[x] = fresh++;
      x = map[x];
    }
    trace.residual = Word::from_symbols(std::move(symbols));
    return trace;
  }

 private:
  const Word& word_;
  PositionPairing partner_;
  std::vector<Position> next_;
  std::vector<Position> prev_;
  std::vector<bool> alive_;
  std::size_t count_;
};

ReductionStep alpha_step(Position p, Position q, Letter x) {
  return ReductionStep{StepKind::Alpha, {p, q}, {x}, std::nullopt};
}

ReductionStep beta_step(Position q, Position u, Letter removed, Letter kept) {
  return ReductionStep{StepKind::Beta, {q, u}, {removed}, kept};
}

}  // namespace

std::string_view to_string(ResidualClass c) noexcept {
  switch (c) {
    case ResidualClass::Empty: return "empty";
    case ResidualClass::Abab: return "abab";
    case ResidualClass::Abcabc: return "abcabc";
    case ResidualClass::Other: return "other";
  }
  return "other";
}

Word apply_alpha(const Word& w, Position pos) {
  if (pos >= w.size() || w[pos] != w[(pos + 1) % w.size()]) {
    throw Error(ErrorCode::NotApplicable,
                "no isolated loop at position " + std::to_string(pos));
  }
  std::vector<bool> removed(w.size(), false);
  removed[pos] = removed[(pos + 1) % w.size()] = true;
  return remove_positions(w, removed);
}

Word apply_beta(const Word& w, Letter x, Letter y) {
  if (x != y && x < w.loops() && y < w.loops()) {
    const std::size_t m = w.size();
    const PositionPairing partner = to_pairing(w);
    for (Position p = 0; p < m; ++p) {
      const Position q = (p + 1) % m;
      if (w[p] == x && w[q] == y && (partner[q] + 1) % m == partner[p]) {
        std::vector<bool> removed(m, false);
        removed[q] = removed[partner[q]] = true;
        return remove_positions(w, removed);
      }
    }
  }
  throw Error(ErrorCode::NotApplicable, "loops " + std::to_string(x) + " and " +
                                            std::to_string(y) + " are not parallel");
}

Word apply_step(const Word& w, const ReductionStep& step) {
  if (step.kind == StepKind::Alpha) {
    if (step.positions.empty()) throw Error(ErrorCode::NotApplicable, "alpha step without position");
    return apply_alpha(w, step.positions.front());
  }
  if (step.letters.empty() || !step.merged_into) {
    throw Error(ErrorCode::NotApplicable, "beta step without letters");
  }
  return apply_beta(w, *step.merged_into, step.letters.front());
}

std::vector<ReductionStep> applicable_steps(const Word& w) {
  std::vector<ReductionStep> steps;
  const std::size_t m = w.size();
  if (m == 0) return steps;
  const PositionPairing partner = to_pairing(w);
  for (Position p = 0; p < m; ++p) {
    const Position q = (p + 1) % m;
    if (w[p] == w[q]) {
      if (m > 2 || p == 0) steps.push_back(alpha_step(p, q, w[p]));
    } else if ((partner[q] + 1) % m == partner[p]) {
      steps.push_back(beta_step(q, partner[q], w[q], w[p]));
    }
  }
  return steps;
}

ReductionTrace fully_reduce_linear(const Word& w) {
  PositionRing ring(w);
  ReductionTrace trace;
  const std::size_t m = w.size();

  std::vector<Position> pending;
  pending.reserve(m);
  for (Position p = m; p-- > 0;) pending.push_back(p);

  while (!pending.empty()) {
    const Position p = pending.back();
    pending.pop_back();
    ++trace.work;
    if (!ring.alive(p) || ring.count() == 0) continue;

    if (ring.alpha_at(p)) {
      const Position q = ring.next(p);
      trace.steps.push_back(alpha_step(p, q, ring.letter(p)));
      const Position left = ring.prev(p);
      ring.unlink(p);
      ring.unlink(q);
      ++trace.work;
      if (ring.count() > 0) pending.push_back(left);
    } else if (ring.beta_at(p)) {
      const Position q = ring.next(p);
      const Position u = ring.partner(q);
      trace.steps.push_back(beta_step(q, u, ring.letter(q), ring.letter(p)));
      const Position left = ring.delete_loop(q);
      ++trace.work;
      pending.push_back(left);
      pending.push_back(p);
    }
  }
  return ring.finish(std::move(trace));
}

ReductionTrace reduce_single_pass(const Word& w) {
  PositionRing ring(w);
  ReductionTrace trace;
  for (Position p = 0; p < w.size(); ++p) {
    ++trace.work;
    if (!ring.alive(p) || ring.count() < 2) continue;
    const Position r = ring.prev(p);
    if (ring.alpha_at(r)) {
      trace.steps.push_back(alpha_step(r, p, ring.letter(p)));
      ring.unlink(r);
      ring.unlink(p);
    } else if (ring.beta_at(r)) {
      // The appended symbol survives; the loop ending the processed part goes.
      trace.steps.push_back(beta_step(r, ring.partner(r), ring.letter(r), ring.letter(p)));
      ring.delete_loop(r);
    }
  }
  return ring.finish(std::move(trace));
}

Word replay(const Word& w, const std::vector<ReductionStep>& steps) {
  // Current word kept in input coordinates.
  std::vector<Position> alive(w.size());
  for (Position p = 0; p < w.size(); ++p) alive[p] = p;
  const PositionPairing partner = to_pairing(w);

  for (const ReductionStep& step : steps) {
    const std::size_t m = alive.size();
    if (step.positions.size() != 2 || m < 2) {
      throw Error(ErrorCode::NotApplicable, "malformed step");
    }
    auto index_of = [&](Position p) -> std::size_t {
      auto it = std::find(alive.begin(), alive.end(), p);
      if (it == alive.end()) throw Error(ErrorCode::NotApplicable, "position already removed");
      return static_cast<std::size_t>(it - alive.begin());
    };
    const std::size_t i = index_of(step.positions[0]);
    const std::size_t j = index_of(step.positions[1]);
    if (partner[alive[i]] != alive[j]) {
      throw Error(ErrorCode::NotApplicable, "step positions are not one loop");
    }
    if (step.kind == StepKind::Alpha) {
      if ((i + 1) % m != j) throw Error(ErrorCode::NotApplicable, "loop is not isolated");
    } else {
      // The deleted loop y sits at i and j; some other loop x must have one
      // end beside each end of y without crossing it.
      auto at = [&](std::size_t k) { return alive[k % m]; };
      const bool outer = w[at(i + m - 1)] != w[alive[i]] && partner[at(i + m - 1)] == at(j + 1);
      const bool inner = w[at(i + 1)] != w[alive[i]] && partner[at(i + 1)] == at(j + m - 1);
      if (!outer && !inner) throw Error(ErrorCode::NotApplicable, "loops are not parallel");
    }
    std::erase_if(alive, [&](Position p) { return p == step.positions[0] || p == step.positions[1]; });
  }

  std::vector<Letter> symbols;
  for (Position p : alive) symbols.push_back(w[p]);
  std::vector<Letter> map(w.loops(), static_cast<Letter>(-1));
  Letter fresh = 0;
  for (Letter& x : symbols) {
    if (map[x] == static_cast<Letter>(-1)) map[x] = fresh++;
    x = map[x];
  }
  return Word::from_symbols(std::move(symbols));
}

ResidualClass classify_residual(const Word& w) {
  switch (w.size()) {
    case 0: return ResidualClass::Empty;
    case 4: return equivalent(w, abab()) ? ResidualClass::Abab : ResidualClass::Other;
    case 6: return equivalent(w, abcabc()) ? ResidualClass::Abcabc : ResidualClass::Other;
    default: return ResidualClass::Other;
  }
}

bool is_condition_D(const Word& w) {
  return classify_residual(fully_reduce_linear(w).residual) != ResidualClass::Other;
}

std::vector<Word> oracle_reduce_all(const Word& w, std::size_t max_n) {
  if (w.loops() > max_n) {
    throw Error(ErrorCode::BoundExceeded, "loop count " + std::to_string(w.loops()) +
                                              " exceeds the oracle bound " + std::to_string(max_n));
  }
  std::set<Word> seen;
  std::set<Word> residuals;
  std::deque<Word> frontier;
  const Word start = canonical_form(w).word;
  seen.insert(start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    const Word current = std::move(frontier.front());
    frontier.pop_front();
    const std::vector<ReductionStep> steps = applicable_steps(current);
    if (steps.empty()) {
      residuals.insert(current);
      continue;
    }
    for (const ReductionStep& step : steps) {
      Word successor = canonical_form(apply_step(current, step)).word;
      if (seen.insert(successor).second) frontier.push_back(std::move(successor));
    }
  }
  return {residuals.begin(), residuals.end()};
}

}  // namespace hieroglyph
