#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hieroglyph/word.hpp"

namespace hieroglyph {

// Loop graph: one vertex per letter, an edge when the two loops cross.
class InterlaceGraph {
 public:
  InterlaceGraph() = default;
  explicit InterlaceGraph(std::size_t n) : n_(n), adjacency_(n * n, false) {}

  std::size_t size() const noexcept { return n_; }
  bool adjacent(Letter x, Letter y) const { return adjacency_[x * n_ + y]; }
  void connect(Letter x, Letter y);
  std::size_t degree(Letter x) const;
  // Edges as (x, y) with x < y, lexicographically ordered.
  std::vector<std::pair<Letter, Letter>> edges() const;
  // The graph with vertex x renamed to mapping[x].
  InterlaceGraph relabeled(const std::vector<Letter>& mapping) const;

  friend bool operator==(const InterlaceGraph&, const InterlaceGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> adjacency_;
};

struct MultipartiteDecomposition {
  std::vector<Letter> isolated;
  // Each part sorted; parts ordered by smallest member.
  std::vector<std::vector<Letter>> parts;
  bool valid = false;
};

InterlaceGraph interlace_graph(const Word& w);

// Valid iff, after removing isolated vertices, the graph is complete
// multipartite with at most three parts.
MultipartiteDecomposition is_condition_C(const Word& w);
MultipartiteDecomposition decompose(const InterlaceGraph& graph);

}  // namespace hieroglyph
