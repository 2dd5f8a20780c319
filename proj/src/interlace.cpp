#include "hieroglyph/interlace.hpp"

#include <algorithm>

namespace hieroglyph {

void InterlaceGraph::connect(Letter x, Letter y) {
  adjacency_[x * n_ + y] = true;
  adjacency_[y * n_ + x] = true;
}

std::size_t InterlaceGraph::degree(Letter x) const {
  std::size_t d = 0;
  for (Letter y = 0; y < n_; ++y) d += adjacent(x, y);
  return d;
}

std::vector<std::pair<Letter, Letter>> InterlaceGraph::edges() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (Letter x = 0; x < n_; ++x) {
    for (Letter y = x + 1; y < n_; ++y) {
      if (adjacent(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

InterlaceGraph InterlaceGraph::relabeled(const std::vector<Letter>& mapping) const {
  InterlaceGraph out(n_);
  for (auto [x, y] : edges()) out.connect(mapping[x], mapping[y]);
  return out;
}

InterlaceGraph interlace_graph(const Word& w) {
  const std::size_t n = w.loops();
  std::vector<Position> first(n, w.size());
  std::vector<Position> second(n, w.size());
  for (Position p = 0; p < w.size(); ++p) {
    (first[w[p]] == w.size() ? first[w[p]] : second[w[p]]) = p;
  }
  // x and y cross iff exactly one occurrence of y lies strictly between the
  // two occurrences of x.
  InterlaceGraph graph(n);
  for (Letter x = 0; x < n; ++x) {
    for (Letter y = x + 1; y < n; ++y) {
      const bool a = first[x] < first[y] && first[y] < second[x];
      const bool b = first[x] < second[y] && second[y] < second[x];
      if (a != b) graph.connect(x, y);
    }
  }
  return graph;
}

MultipartiteDecomposition decompose(const InterlaceGraph& graph) {
  MultipartiteDecomposition out;
  const std::size_t n = graph.size();
  std::vector<Letter> core;
  for (Letter x = 0; x < n; ++x) {
    (graph.degree(x) == 0 ? out.isolated : core).push_back(x);
  }

  // Non-adjacency must be an equivalence relation on the core; its classes
  // are the parts.
  std::vector<int> part_of(n, -1);
  for (Letter x : core) {
    if (part_of[x] >= 0) continue;
    part_of[x] = static_cast<int>(out.parts.size());
    std::vector<Letter>& part = out.parts.emplace_back(1, x);
    for (Letter y : core) {
      if (part_of[y] < 0 && !graph.adjacent(x, y)) {
        part_of[y] = part_of[x];
        part.push_back(y);
      }
    }
  }

  out.valid = out.parts.size() <= 3;
  for (Letter x : core) {
    for (Letter y : core) {
      if (x == y) continue;
      const bool same_part = part_of[x] == part_of[y];
      if (same_part == graph.adjacent(x, y)) out.valid = false;
    }
  }
  return out;
}

MultipartiteDecomposition is_condition_C(const Word& w) { return decompose(interlace_graph(w)); }

}  // namespace hieroglyph
