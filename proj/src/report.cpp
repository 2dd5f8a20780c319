#include "hieroglyph/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

namespace hieroglyph {

namespace {

using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

std::string letter_name(const Word& w, Letter x) {
  if (w.loops() <= 26) return std::string(1, static_cast<char>('a' + x));
  return std::to_string(x);
}

std::string letter_list(const Word& w, const std::vector<Letter>& letters) {
  std::string out = "{";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ",";
    out += letter_name(w, letters[i]);
  }
  return out + "}";
}

nlohmann::json optional_bool(const std::optional<bool>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

const char* yes_no(const std::optional<bool>& value) {
  if (!value) return "-";
  return *value ? "yes" : "no";
}

struct ShardResult {
  std::uint64_t total = 0;
  std::map<std::size_t, std::uint64_t> genus_histogram;
  std::uint64_t embeddable = 0;
  std::vector<std::string> disagreements;
  std::uint64_t single_pass_divergences = 0;
  std::vector<std::string> single_pass_examples;
};

constexpr std::size_t kMaxExamples = 10;

void examine(const Word& w, bool include_reflection, ShardResult& out) {
  const GenusReport g = genus(w);
  const bool a = g.torus_embeddable;
  const bool b = is_condition_B(w, include_reflection).holds;
  const bool c = is_condition_C(w).valid;
  const bool d = is_condition_D(w);
  ++out.total;
  ++out.genus_histogram[g.g];
  out.embeddable += a;
  if (!(a == b && b == c && c == d)) out.disagreements.push_back(format_word(w));
  const bool one_pass = classify_residual(reduce_single_pass(w).residual) != ResidualClass::Other;
  if (one_pass != d) {
    ++out.single_pass_divergences;
    if (out.single_pass_examples.size() < kMaxExamples) {
      out.single_pass_examples.push_back(format_word(w));
    }
  }
}

}  // namespace

ClassificationReport classify(const Word& w, std::string input, const CheckOptions& options) {
  ClassificationReport report;
  report.input = std::move(input);
  report.word = w;

  if (!options.fast) {
    report.canonical = canonical_form(w, options.include_reflection).word;

    auto start = Clock::now();
    report.genus = genus(w);
    report.condA = report.genus->torus_embeddable;
    report.timings_us["A"] = micros_since(start);

    start = Clock::now();
    ConditionB b = is_condition_B(w, options.include_reflection);
    report.condB = b.holds;
    report.witness = std::move(b.witness);
    report.timings_us["B"] = micros_since(start);

    start = Clock::now();
    report.decomposition = is_condition_C(w);
    report.condC = report.decomposition->valid;
    report.timings_us["C"] = micros_since(start);
  }

  auto start = Clock::now();
  ReductionTrace trace = fully_reduce_linear(w);
  report.residual_class = classify_residual(trace.residual);
  report.condD = report.residual_class != ResidualClass::Other;
  report.residual = std::move(trace.residual);
  report.timings_us["D"] = micros_since(start);

  report.agreement = true;
  for (const auto* cond : {&report.condA, &report.condB, &report.condC}) {
    if (*cond && **cond != *report.condD) report.agreement = false;
  }
  report.torus_embeddable = report.condA.value_or(*report.condD);
  return report;
}

int exit_code(const ClassificationReport& report) {
  if (!report.agreement) return kDisagreement;
  return report.torus_embeddable ? kEmbeddable : kNotEmbeddable;
}

nlohmann::json to_json(const ReductionStep& step) {
  nlohmann::json j;
  j["kind"] = step.kind == StepKind::Alpha ? "alpha" : "beta";
  j["letters"] = step.letters;
  j["positions"] = step.positions;
  if (step.merged_into) j["merged_into"] = *step.merged_into;
  return j;
}

nlohmann::json to_json(const ClassificationReport& report, bool include_timings) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["input"] = report.input;
  j["word"] = format_word(report.word);
  j["canonical"] = report.canonical ? nlohmann::json(format_word(*report.canonical))
                                    : nlohmann::json(nullptr);
  j["n"] = report.word.loops();
  if (report.genus) {
    j["F"] = report.genus->F;
    j["genus"] = report.genus->g;
  } else {
    j["F"] = nullptr;
    j["genus"] = nullptr;
  }
  j["conditions"] = {{"A", optional_bool(report.condA)},
                     {"B", optional_bool(report.condB)},
                     {"C", optional_bool(report.condC)},
                     {"D", optional_bool(report.condD)}};
  j["agreement"] = report.agreement;
  j["torus_embeddable"] = report.torus_embeddable;
  j["residual_class"] = std::string(to_string(report.residual_class));
  j["residual"] = format_word(report.residual);
  if (report.decomposition) {
    j["decomposition"] = {{"isolated", report.decomposition->isolated},
                          {"parts", report.decomposition->parts},
                          {"valid", report.decomposition->valid}};
  } else {
    j["decomposition"] = nullptr;
  }
  if (report.witness) {
    j["witness"] = {{"letters", report.witness->letters}, {"pattern", report.witness->pattern()}};
  } else {
    j["witness"] = nullptr;
  }
  if (include_timings) j["timings_us"] = report.timings_us;
  return j;
}

std::string to_text(const ClassificationReport& report) {
  std::ostringstream os;
  const Word& w = report.word;
  os << "word      " << (w.empty() ? "()" : format_word(w));
  if (report.canonical) os << "  (canonical " << (w.empty() ? "()" : format_word(*report.canonical)) << ")";
  os << "\nloops     " << w.loops() << "\n";
  if (report.genus) {
    os << "boundary  " << report.genus->F << "\ngenus     " << report.genus->g << "\n";
  }
  os << "A genus<=1        " << yes_no(report.condA) << "\n"
     << "B no forbidden    " << yes_no(report.condB);
  if (report.witness) {
    os << "  (" << letter_list(w, report.witness->letters) << " restricts to "
       << report.witness->pattern() << ")";
  }
  os << "\nC loop graph      " << yes_no(report.condC);
  if (report.decomposition && report.decomposition->valid) {
    os << "  (parts";
    for (const auto& part : report.decomposition->parts) os << " " << letter_list(w, part);
    os << ", isolated " << letter_list(w, report.decomposition->isolated) << ")";
  }
  os << "\nD reduces         " << yes_no(report.condD) << "  (residual "
     << (report.residual.empty() ? "()" : format_word(report.residual)) << ", "
     << to_string(report.residual_class) << ")\n";
  os << "torus     " << (report.torus_embeddable ? "embeddable" : "not embeddable") << "\n";
  if (!report.agreement) os << "DISAGREEMENT between checkers\n";
  return os.str();
}

EnumerationSummary run_enumeration(std::size_t n, bool dedupe, std::size_t max_n,
                                   std::size_t threads, bool include_reflection) {
  const auto start = Clock::now();
  // Validates the bound before any worker starts.
  DiagramStream probe(n, dedupe, max_n);

  const std::size_t shard_count = n == 0 ? 1 : 2 * n - 1;
  std::vector<ShardResult> shards(shard_count);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t s = cursor++; s < shard_count; s = cursor++) {
      DiagramStream stream = n == 0 ? DiagramStream(n, dedupe, max_n)
                                    : DiagramStream(n, Position{s + 1}, dedupe, max_n);
      while (auto w = stream.next()) examine(*w, include_reflection, shards[s]);
    }
  };
  threads = std::clamp<std::size_t>(threads, 1, shard_count);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  EnumerationSummary summary;
  summary.n = n;
  summary.dedupe = dedupe;
  for (ShardResult& shard : shards) {
    summary.total += shard.total;
    for (auto [g, count] : shard.genus_histogram) summary.genus_histogram[g] += count;
    summary.embeddable += shard.embeddable;
    summary.disagreements.insert(summary.disagreements.end(), shard.disagreements.begin(),
                                 shard.disagreements.end());
    summary.single_pass_divergences += shard.single_pass_divergences;
    for (auto& example : shard.single_pass_examples) {
      if (summary.single_pass_examples.size() < kMaxExamples) {
        summary.single_pass_examples.push_back(std::move(example));
      }
    }
  }
  summary.elapsed_s = micros_since(start) / 1e6;
  return summary;
}

nlohmann::json to_json(const EnumerationSummary& summary) {
  nlohmann::json histogram = nlohmann::json::object();
  for (auto [g, count] : summary.genus_histogram) histogram[std::to_string(g)] = count;
  return {{"schema", kSchemaVersion},
          {"n", summary.n},
          {"dedupe", summary.dedupe},
          {"total", summary.total},
          {"genus_histogram", histogram},
          {"embeddable", summary.embeddable},
          {"disagreements", summary.disagreements},
          {"single_pass_divergences", summary.single_pass_divergences},
          {"single_pass_examples", summary.single_pass_examples},
          {"elapsed_s", summary.elapsed_s}};
}

std::string to_text(const EnumerationSummary& summary) {
  std::ostringstream os;
  os << "n = " << summary.n << (summary.dedupe ? " (one per equivalence class)" : "") << "\n"
     << "diagrams     " << summary.total << "\n"
     << "embeddable   " << summary.embeddable << "\n"
     << "genus        ";
  for (auto [g, count] : summary.genus_histogram) os << g << ":" << count << " ";
  os << "\ndisagreements " << summary.disagreements.size() << "\n";
  for (const auto& w : summary.disagreements) os << "  " << w << "\n";
  os << "one-pass divergences " << summary.single_pass_divergences << "\n";
  for (const auto& w : summary.single_pass_examples) os << "  " << w << "\n";
  os << "elapsed      " << summary.elapsed_s << " s\n";
  return os.str();
}

BenchResult run_bench(const std::vector<std::size_t>& sizes, std::size_t trials,
                      std::uint64_t seed, double factor) {
  BenchResult result;
  result.seed = seed;
  result.factor = factor;
  if (trials == 0) return result;

  std::mt19937_64 rng(seed);
  for (std::size_t n : sizes) {
    BenchRow row;
    row.n = n;
    row.trials = trials;
    double total_ms = 0.0;
    double total_ratio = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const Word w = random_word(n, rng);
      const auto start = Clock::now();
      const ReductionTrace trace = fully_reduce_linear(w);
      total_ms += micros_since(start) / 1e3;
      const double ratio = n == 0 ? 0.0 : static_cast<double>(trace.work) / static_cast<double>(n);
      total_ratio += ratio;
      row.max_ratio = std::max(row.max_ratio, ratio);
    }
    row.mean_ms = total_ms / static_cast<double>(trials);
    row.mean_ratio = total_ratio / static_cast<double>(trials);
    result.rows.push_back(row);
  }

  double lo = 0.0;
  double hi = 0.0;
  for (const BenchRow& row : result.rows) {
    if (row.n == 0) continue;
    lo = lo == 0.0 ? row.mean_ratio : std::min(lo, row.mean_ratio);
    hi = std::max(hi, row.mean_ratio);
  }
  result.spread = lo > 0.0 ? hi / lo : 1.0;
  result.linear = result.spread <= factor;
  return result;
}

nlohmann::json to_json(const BenchResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BenchRow& row : result.rows) {
    rows.push_back({{"n", row.n},
                    {"trials", row.trials},
                    {"mean_ms", row.mean_ms},
                    {"mean_work_per_loop", row.mean_ratio},
                    {"max_work_per_loop", row.max_ratio}});
  }
  return {{"schema", kSchemaVersion}, {"seed", result.seed},     {"rows", rows},
          {"spread", result.spread},  {"factor", result.factor}, {"linear", result.linear}};
}

std::string to_text(const BenchResult& result) {
  std::ostringstream os;
  os << "seed " << result.seed << "\n";
  os << "        n  trials     mean ms   work/n (mean)   work/n (max)\n";
  for (const BenchRow& row : result.rows) {
    char line[128];
    std::snprintf(line, sizeof line, "%9zu  %6zu  %10.3f  %14.3f  %13.3f\n", row.n, row.trials,
                  row.mean_ms, row.mean_ratio, row.max_ratio);
    os << line;
  }
  os << "spread " << result.spread << " (limit " << result.factor << "): "
     << (result.linear ? "linear" : "NOT linear") << "\n";
  return os.str();
}

}  // namespace hieroglyph
