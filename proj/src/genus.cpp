#include "hieroglyph/genus.hpp"

#include <stdexcept>
#include <string>

namespace hieroglyph {

BoundaryTrace boundary_components(const Word& w) {
  BoundaryTrace trace;
  if (w.empty()) return trace;

  const PositionPairing partner = to_pairing(w);
  const std::size_t m = w.size();
  std::vector<bool> seen(m, false);
  for (Position start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<Position>& orbit = trace.orbits.emplace_back();
    for (Position p = start; !seen[p]; p = (partner[p] + 1) % m) {
      seen[p] = true;
      orbit.push_back(p);
    }
  }
  trace.F = trace.orbits.size();
  return trace;
}

GenusReport genus(const Word& w) {
  GenusReport report;
  report.n = w.loops();
  report.F = boundary_components(w).F;
  const std::size_t euler_deficit = report.n + 1 - report.F;
  if (report.F > report.n + 1 || euler_deficit % 2 != 0) {
    throw std::logic_error("boundary trace parity violated: n = " + std::to_string(report.n) +
                           ", F = " + std::to_string(report.F));
  }
  report.g = euler_deficit / 2;
  report.torus_embeddable = report.g <= 1;
  return report;
}

bool is_torus_embeddable_A(const Word& w) { return genus(w).g <= 1; }

}  // namespace hieroglyph
