#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hieroglyph/forbidden.hpp"
#include "hieroglyph/genus.hpp"
#include "hieroglyph/interlace.hpp"
#include "hieroglyph/reduce.hpp"
#include "hieroglyph/word.hpp"

namespace hieroglyph {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kEmbeddable = 0,
  kNotEmbeddable = 1,
  kInputError = 2,
  kDisagreement = 3,
};

struct CheckOptions {
  // Only condition D, the linear-time path.
  bool fast = false;
  bool include_reflection = true;
};

// All four torus criteria evaluated on one word. Conditions that were not run
// (fast mode) are empty.
struct ClassificationReport {
  std::string input;
  Word word;
  std::optional<Word> canonical;
  std::optional<GenusReport> genus;
  std::optional<bool> condA, condB, condC, condD;
  bool agreement = true;
  bool torus_embeddable = true;
  ResidualClass residual_class = ResidualClass::Empty;
  Word residual;
  std::optional<MultipartiteDecomposition> decomposition;
  std::optional<Witness> witness;
  std::map<std::string, double> timings_us;
};

ClassificationReport classify(const Word& w, std::string input = {},
                              const CheckOptions& options = {});

int exit_code(const ClassificationReport& report);

nlohmann::json to_json(const ClassificationReport& report, bool include_timings = true);
nlohmann::json to_json(const ReductionStep& step);
std::string to_text(const ClassificationReport& report);

struct EnumerationSummary {
  std::size_t n = 0;
  bool dedupe = false;
  std::uint64_t total = 0;
  std::map<std::size_t, std::uint64_t> genus_histogram;
  std::uint64_t embeddable = 0;
  // Words on which the four checkers do not all agree.
  std::vector<std::string> disagreements;
  // Words where the literal one-pass reducer reaches a different verdict
  // than the full cyclic reducer; reported, not an error.
  std::uint64_t single_pass_divergences = 0;
  std::vector<std::string> single_pass_examples;
  double elapsed_s = 0.0;
};

// Runs every checker on every diagram with n loops. Work is sharded by the
// partner of position 0 and merged in stream order, so the result does not
// depend on the thread count.
EnumerationSummary run_enumeration(std::size_t n, bool dedupe = false,
                                   std::size_t max_n = kDefaultEnumerationBound,
                                   std::size_t threads = 1, bool include_reflection = true);

nlohmann::json to_json(const EnumerationSummary& summary);
std::string to_text(const EnumerationSummary& summary);

struct BenchRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean_ms = 0.0;
  // work counter divided by loop count, over the trials
  double mean_ratio = 0.0;
  double max_ratio = 0.0;
};

struct BenchResult {
  std::uint64_t seed = 0;
  std::vector<BenchRow> rows;
  // max over sizes of mean_ratio divided by the min; 1 when fewer than two rows.
  double spread = 1.0;
  double factor = 3.0;
  bool linear = true;
};

inline constexpr double kDefaultLinearityFactor = 3.0;

BenchResult run_bench(const std::vector<std::size_t>& sizes, std::size_t trials,
                      std::uint64_t seed, double factor = kDefaultLinearityFactor);

nlohmann::json to_json(const BenchResult& result);
std::string to_text(const BenchResult& result);

}  // namespace hieroglyph
