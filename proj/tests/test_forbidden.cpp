#include <doctest.h>

#include <random>
#include <set>

#include "hieroglyph/forbidden.hpp"
#include "hieroglyph/genus.hpp"
#include "oracles.hpp"

using namespace hieroglyph;

TEST_CASE("forbidden closure") {
  const ForbiddenSet& set = forbidden_closure();
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(set.patterns[i].symbols() == oracle::forbidden_words()[i]);
  }
  CHECK(equivalent(set.patterns[0], set.patterns[0].reversed()));

  // Pairwise inequivalent, so one canonical form per pattern.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      CHECK_FALSE(oracle::same_hieroglyph(set.patterns[i].symbols(), set.patterns[j].symbols()));
    }
  }
  CHECK(set.closure.size() == 4);

  // Without reversal, each pattern contributes its own class plus that of its
  // mirror image when the two differ.
  std::set<oracle::Symbols> oriented;
  for (const Word& p : set.patterns) {
    oriented.insert(*oracle::orbit(p.symbols(), false).begin());
    oriented.insert(*oracle::orbit(p.reversed().symbols(), false).begin());
  }
  CHECK(set.oriented_closure.size() == oriented.size());

  for (const auto& [form, index] : set.closure) {
    CHECK(form.loops() == 4);
    CHECK(genus(form).g == 2);
    CHECK(genus(form).F == 1);
    CHECK(canonical_form(form).word == form);
    CHECK(oracle::same_hieroglyph(form.symbols(), set.patterns[index].symbols()));
  }
  for (const auto& [form, index] : set.oriented_closure) {
    CHECK(genus(form).g == 2);
    CHECK(oracle::same_hieroglyph(form.symbols(), set.patterns[index].symbols()));
  }
}

TEST_CASE("closure is closed under the symmetry group") {
  const ForbiddenSet& set = forbidden_closure();
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t i = t % 4;
    const Word scrambled = oracle::scramble(set.patterns[i], rng);
    REQUIRE(set.match(scrambled).has_value());
    CHECK(*set.match(scrambled) == i);
    const Word rotated = set.patterns[i].rotated(t % 8);
    CHECK(set.match(rotated, false) == std::optional<std::size_t>(i));
    CHECK(set.match(set.patterns[i].reversed(), false) == std::optional<std::size_t>(i));
  }
}

TEST_CASE("condition B examples") {
  CHECK(is_condition_B(parse_word("abab")).holds);
  CHECK_FALSE(is_condition_B(parse_word("abab")).witness.has_value());

  const ConditionB k4 = is_condition_B(parse_word("abcdabcd"));
  CHECK_FALSE(k4.holds);
  REQUIRE(k4.witness.has_value());
  CHECK(k4.witness->letters == std::vector<Letter>{0, 1, 2, 3});
  CHECK(k4.witness->pattern() == "abcdabcd");

  // e inserted into ababcdcd without crossing anything.
  const Word w = parse_word("eabaebcdcd");
  const std::vector<Letter> abcd = {1, 2, 3, 4};
  CHECK(restrict_letters(w, abcd) == parse_word("ababcdcd"));
  const ConditionB r = is_condition_B(w);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  // e crosses b, so {e,b,c,d} is found before {a,b,c,d}; both restrict to
  // the two-disjoint-edges pattern.
  CHECK(r.witness->letters == std::vector<Letter>{0, 2, 3, 4});
  CHECK(r.witness->pattern() == "ababcdcd");

  CHECK(is_condition_B(parse_word("abcdbadc")).holds);
}

TEST_CASE("witness restricts to its pattern") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const Word w = random_word(7, rng);
    const ConditionB r = is_condition_B(w);
    if (!r.witness) continue;
    const Word sub = restrict_letters(w, r.witness->letters);
    CHECK(equivalent(sub, parse_word(r.witness->pattern())));
  }
}

TEST_CASE("condition B agrees with brute-force containment") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Word& w : enumerate_diagrams(n)) {
      const bool holds = is_condition_B(w).holds;
      CHECK(holds == !oracle::contains_forbidden(w.symbols()));
      CHECK(is_condition_B(w, false).holds == holds);
    }
  }
}

TEST_CASE("condition B is invariant under symmetries") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 500; ++t) {
    const Word w = random_word(4 + t % 5, rng);
    CHECK(is_condition_B(oracle::scramble(w, rng)).holds == is_condition_B(w).holds);
  }
}

TEST_CASE("containment is monotone under adding loops") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 4; n <= 5; ++n) {
    for (const Word& w : enumerate_diagrams(n)) {
      if (is_condition_B(w).holds) continue;
      // Insert a fresh loop at two random cut points.
      for (int t = 0; t < 3; ++t) {
        std::vector<Letter> s = w.symbols();
        const Letter fresh = static_cast<Letter>(n);
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(rng() % (s.size() + 1)), fresh);
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(rng() % (s.size() + 1)), fresh);
        const Word super = Word::from_symbols(s);
        std::vector<Letter> old(n);
        std::iota(old.begin(), old.end(), Letter{0});
        REQUIRE(equivalent(restrict_letters(super, old), w));
        CHECK_FALSE(is_condition_B(super).holds);
      }
    }
  }
}
