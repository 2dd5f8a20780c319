#include "hieroglyph/forbidden.hpp"

#include <algorithm>

namespace hieroglyph {

namespace {

void sort_unique(std::vector<std::pair<Word, std::size_t>>& forms) {
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              forms.end());
}

ForbiddenSet build_forbidden_set() {
  ForbiddenSet set;
  for (std::size_t i = 0; i < set.patterns.size(); ++i) {
    set.patterns[i] = parse_word(ForbiddenSet::kPatternText[i]);
    set.closure.emplace_back(canonical_form(set.patterns[i], true).word, i);
    set.oriented_closure.emplace_back(canonical_form(set.patterns[i], false).word, i);
    set.oriented_closure.emplace_back(canonical_form(set.patterns[i].reversed(), false).word, i);
  }
  sort_unique(set.closure);
  sort_unique(set.oriented_closure);
  return set;
}

}  // namespace

std::optional<std::size_t> ForbiddenSet::match(const Word& w, bool include_reflection) const {
  if (w.loops() != 4) return std::nullopt;
  const auto& forms = include_reflection ? closure : oriented_closure;
  const Word key = canonical_form(w, include_reflection).word;
  auto it = std::lower_bound(forms.begin(), forms.end(), key,
                             [](const auto& entry, const Word& k) { return entry.first < k; });
  if (it == forms.end() || it->first != key) return std::nullopt;
  return it->second;
}

const ForbiddenSet& forbidden_closure() {
  static const ForbiddenSet set = build_forbidden_set();
  return set;
}

ConditionB is_condition_B(const Word& w, bool include_reflection) {
  ConditionB result;
  const std::size_t n = w.loops();
  if (n < 4) return result;

  const ForbiddenSet& set = forbidden_closure();
  std::vector<std::array<Position, 2>> occurrences(n, {w.size(), w.size()});
  for (Position p = 0; p < w.size(); ++p) {
    auto& occ = occurrences[w[p]];
    (occ[0] == w.size() ? occ[0] : occ[1]) = p;
  }

  // Restriction to a 4-subset built from its 8 sorted positions: O(1) each.
  std::array<std::pair<Position, Letter>, 8> picked;
  std::vector<Letter> sub(8);
  for (Letter a = 0; a < n; ++a) {
    for (Letter b = a + 1; b < n; ++b) {
      for (Letter c = b + 1; c < n; ++c) {
        for (Letter d = c + 1; d < n; ++d) {
          const std::array<Letter, 4> letters = {a, b, c, d};
          for (std::size_t i = 0; i < 4; ++i) {
            picked[2 * i] = {occurrences[letters[i]][0], static_cast<Letter>(i)};
            picked[2 * i + 1] = {occurrences[letters[i]][1], static_cast<Letter>(i)};
          }
          std::sort(picked.begin(), picked.end());
          for (std::size_t i = 0; i < 8; ++i) sub[i] = picked[i].second;
          if (auto index = set.match(Word::from_symbols(sub), include_reflection)) {
            result.holds = false;
            result.witness = Witness{{a, b, c, d}, *index};
            return result;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace hieroglyph
