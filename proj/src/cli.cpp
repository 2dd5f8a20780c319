#include "hieroglyph/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hieroglyph/report.hpp"

namespace hieroglyph {

namespace {

std::string describe(const Error& e) {
  return std::string(to_string(e.code())) + ": " + e.what();
}

std::string display(const Word& w) { return w.empty() ? "()" : format_word(w); }

std::string letter_name(const Word& w, Letter x) {
  if (w.loops() <= 26) return std::string(1, static_cast<char>('a' + x));
  return std::to_string(x);
}

int cmd_check(const std::string& text, const CheckOptions& options, bool json, std::ostream& out,
              std::ostream& err) {
  Word w;
  try {
    w = parse_word(text);
  } catch (const Error& e) {
    err << "input error: " << describe(e) << "\n";
    return kInputError;
  }
  const ClassificationReport report = classify(w, text, options);
  if (json) {
    out << to_json(report).dump() << "\n";
  } else {
    out << to_text(report);
  }
  return exit_code(report);
}

int cmd_batch(std::istream& in, const CheckOptions& options, bool json, std::ostream& out,
              std::ostream& err) {
  std::size_t line_no = 0;
  std::size_t words = 0;
  std::size_t embeddable = 0;
  std::size_t input_errors = 0;
  std::size_t disagreements = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    Word w;
    try {
      w = parse_word(line);
    } catch (const Error& e) {
      ++input_errors;
      if (json) {
        nlohmann::json j = {{"schema", kSchemaVersion}, {"line", line_no},
                            {"error", to_string(e.code())}, {"message", e.what()}};
        if (e.column()) j["column"] = e.column();
        out << j.dump() << "\n";
      }
      err << "line " << line_no;
      if (e.column()) err << ", column " << e.column();
      err << ": " << describe(e) << "\n";
      continue;
    }
    const ClassificationReport report = classify(w, line, options);
    ++words;
    embeddable += report.torus_embeddable;
    disagreements += !report.agreement;
    if (json) {
      nlohmann::json j = to_json(report);
      j["line"] = line_no;
      out << j.dump() << "\n";
    } else {
      out << "line " << line_no << ": " << display(w) << "  ";
      if (report.genus) out << "genus " << report.genus->g << "  ";
      out << (report.torus_embeddable ? "embeddable" : "not embeddable")
          << (report.agreement ? "" : "  DISAGREEMENT") << "\n";
    }
  }

  if (json) {
    out << nlohmann::json{{"summary",
                           {{"words", words},
                            {"embeddable", embeddable},
                            {"not_embeddable", words - embeddable},
                            {"input_errors", input_errors},
                            {"disagreements", disagreements}}}}
               .dump()
        << "\n";
  } else {
    out << "summary: " << words << " words, " << embeddable << " embeddable, "
        << words - embeddable << " not embeddable, " << input_errors << " input errors, "
        << disagreements << " disagreements\n";
  }
  if (disagreements) return kDisagreement;
  if (input_errors) return kInputError;
  return 0;
}

int cmd_enumerate(std::size_t n, bool dedupe, std::size_t max_n, std::size_t threads,
                  bool include_reflection, bool json, std::ostream& out, std::ostream& err) {
  EnumerationSummary summary;
  try {
    summary = run_enumeration(n, dedupe, max_n, threads, include_reflection);
  } catch (const Error& e) {
    err << describe(e) << "\n";
    return kInputError;
  }
  out << (json ? to_json(summary).dump() + "\n" : to_text(summary));
  return summary.disagreements.empty() ? 0 : kDisagreement;
}

int cmd_trace(const std::string& text, bool json, std::ostream& out, std::ostream& err) {
  Word w;
  try {
    w = parse_word(text);
  } catch (const Error& e) {
    err << "input error: " << describe(e) << "\n";
    return kInputError;
  }
  const ReductionTrace trace = fully_reduce_linear(w);
  const ResidualClass residual_class = classify_residual(trace.residual);
  const BoundaryTrace boundary = boundary_components(w);

  if (json) {
    nlohmann::json steps = nlohmann::json::array();
    for (const ReductionStep& step : trace.steps) steps.push_back(to_json(step));
    out << nlohmann::json{{"schema", kSchemaVersion},
                          {"word", format_word(w)},
                          {"steps", steps},
                          {"residual", format_word(trace.residual)},
                          {"residual_positions", trace.residual_positions},
                          {"residual_class", std::string(to_string(residual_class))},
                          {"work", trace.work},
                          {"F", boundary.F},
                          {"orbits", boundary.orbits}}
               .dump()
        << "\n";
    return 0;
  }

  out << "word " << display(w) << "\n";
  out << "reduction (" << trace.steps.size() << " steps)\n";
  std::size_t index = 0;
  for (const ReductionStep& step : trace.steps) {
    out << "  " << ++index << ". ";
    if (step.kind == StepKind::Alpha) {
      out << "alpha  remove isolated " << letter_name(w, step.letters.front());
    } else {
      out << "beta   remove " << letter_name(w, step.letters.front()) << ", parallel to "
          << letter_name(w, *step.merged_into);
    }
    out << " at positions " << step.positions[0] << "," << step.positions[1] << "\n";
  }
  out << "residual " << display(trace.residual) << " (" << to_string(residual_class) << ")\n";
  out << "boundary circles " << boundary.F << "\n";
  for (const auto& orbit : boundary.orbits) {
    out << "  (";
    for (std::size_t i = 0; i < orbit.size(); ++i) out << (i ? " " : "") << orbit[i];
    out << ")\n";
  }
  return 0;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t trials, std::uint64_t seed,
              double factor, bool json, std::ostream& out) {
  const BenchResult result = run_bench(sizes, trials, seed, factor);
  out << (json ? to_json(result).dump() + "\n" : to_text(result));
  return result.linear ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Torus embeddability of one-vertex rotation systems (double-occurrence words)"};
  app.require_subcommand(1);

  bool json = false;
  bool fast = false;
  bool no_reflection = false;

  std::string word_text;
  auto* check = app.add_subcommand("check", "Run the torus criteria on one word");
  check->add_option("word", word_text, "Word: letters a-z or comma separated integers");
  check->add_flag("--fast", fast, "Only run the linear-time reduction check");
  check->add_flag("--json", json, "Emit JSON");
  check->add_flag("--no-reflection", no_reflection, "Ignore reversal symmetry");

  std::string batch_path = "-";
  auto* batch = app.add_subcommand("batch", "Check one word per line of a file");
  batch->add_option("path", batch_path, "Input file, '-' for stdin");
  batch->add_flag("--fast", fast, "Only run the linear-time reduction check");
  batch->add_flag("--json", json, "Emit JSON lines");
  batch->add_flag("--no-reflection", no_reflection, "Ignore reversal symmetry");

  std::size_t enum_n = 0;
  std::size_t max_n = kDefaultEnumerationBound;
  std::size_t threads = 1;
  bool dedupe = false;
  auto* enumerate = app.add_subcommand("enumerate", "Cross-check all criteria on every diagram");
  enumerate->add_option("n", enum_n, "Loop count")->required();
  enumerate->add_option("--max-n", max_n, "Largest admissible loop count");
  enumerate->add_option("--threads", threads, "Worker threads");
  enumerate->add_flag("--dedupe", dedupe, "One diagram per equivalence class");
  enumerate->add_flag("--json", json, "Emit JSON");
  enumerate->add_flag("--no-reflection", no_reflection, "Ignore reversal symmetry");

  auto* trace = app.add_subcommand("trace", "Show the reduction steps and boundary circles");
  trace->add_option("word", word_text, "Word: letters a-z or comma separated integers");
  trace->add_flag("--json", json, "Emit JSON");

  std::vector<std::size_t> sizes = {10000, 100000, 1000000};
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  double factor = kDefaultLinearityFactor;
  auto* bench = app.add_subcommand("bench", "Time the linear reducer on random words");
  bench->add_option("--sizes", sizes, "Loop counts")->delimiter(',');
  bench->add_option("--trials", trials, "Words per size");
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--factor", factor, "Allowed spread of work per loop across sizes");
  bench->add_flag("--json", json, "Emit JSON");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  CheckOptions options;
  options.fast = fast;
  options.include_reflection = !no_reflection;

  if (*check) return cmd_check(word_text, options, json, out, err);
  if (*batch) {
    if (batch_path == "-") return cmd_batch(in, options, json, out, err);
    std::ifstream file(batch_path);
    if (!file) {
      err << "cannot open " << batch_path << "\n";
      return kInputError;
    }
    return cmd_batch(file, options, json, out, err);
  }
  if (*enumerate) {
    return cmd_enumerate(enum_n, dedupe, max_n, threads, options.include_reflection, json, out, err);
  }
  if (*trace) return cmd_trace(word_text, json, out, err);
  if (*bench) return cmd_bench(sizes, trials, seed, factor, json, out);
  return kInputError;
}

}  // namespace hieroglyph
