#pragma once

#include <cstddef>
#include <vector>

#include "hieroglyph/word.hpp"

namespace hieroglyph {

// Boundary circles of the disk with ribbons. Each orbit lists positions in
// the order the boundary walk visits them.
struct BoundaryTrace {
  std::vector<std::vector<Position>> orbits;
  std::size_t F = 1;
};

struct GenusReport {
  std::size_t n = 0;
  std::size_t F = 1;
  std::size_t g = 0;
  bool torus_embeddable = true;
};

// Orbits of p -> partner(p) + 1 (mod 2n). The empty word is the bare disk:
// no orbits, F = 1.
BoundaryTrace boundary_components(const Word& w);

// Genus of the closed surface obtained by capping every boundary circle:
// 2g = n + 1 - F.
GenusReport genus(const Word& w);

bool is_torus_embeddable_A(const Word& w);

}  // namespace hieroglyph
