// Copyright 2026 The gausscheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gauss/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>

#include "gauss/census.hpp"
#include "gauss/circle_graph.hpp"
#include "gauss/error.hpp"
#include "gauss/generation.hpp"
#include "gauss/lintel.hpp"
#include "gauss/meander.hpp"
#include "gauss/realizability.hpp"
#include "gauss/workers.hpp"

namespace gauss::cli {
namespace {

using nlohmann::json;

struct Config {
  int size = 0;
  int min_size = 0;
  std::string klass = "all";
  std::string criterion;
  std::string format = "lintel";
  std::string input;
  std::string output;
  bool count_only = false;
  bool prime_only = false;
  bool permutations = false;
  bool hide_zero = false;
  int workers = 0;
};

// A malformed input line.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_size(int n) {
  if (n < 1) throw GaussError(Errc::InvalidArgument, "--size must be at least 1");
  if (n > kMaxExhaustiveSize) {
    throw GaussError(Errc::SizeTooLargeForCensus,
                     "size " + std::to_string(n) + " exceeds the limit of " + std::to_string(kMaxExhaustiveSize));
  }
}

bool criterion_holds(Criterion c, const Lintel& l) { return evaluate(c, interlacement_graph(l)).realizable(); }

// Canonical lintels of closures of the meandric permutations of order n - 1.
std::vector<Lintel> meander_diagrams(int n, int workers) {
  if (n % 2 == 0) return {};
  if (n == 1) return {canonical_lintel(Lintel::parse("0-1"))};
  std::set<Lintel> unique;
  for (const auto& pi : meander_search(n - 1, workers)) unique.insert(canonical_lintel(meander_closure_diagram(pi)));
  return {unique.begin(), unique.end()};
}

// Diagrams of size n selected by class, criterion and --prime-only.
std::vector<Lintel> select(const Config& cfg, int n) {
  check_size(n);
  const int workers = resolve_workers(cfg.workers);
  std::optional<Criterion> criterion;
  if (!cfg.criterion.empty()) criterion = parse_criterion(cfg.criterion);

  std::vector<Lintel> diagrams;
  if (cfg.klass == "all") {
    diagrams = enumerate_all(n, {}, workers).diagrams;
  } else if (cfg.klass == "prime") {
    diagrams = enumerate_prime(n, workers).diagrams;
  } else if (cfg.klass == "realizable") {
    diagrams = enumerate_prime(n, workers).diagrams;
    if (!criterion) criterion = Criterion::Stz;
  } else if (cfg.klass == "meander") {
    diagrams = meander_diagrams(n, workers);
  } else {
    throw GaussError(Errc::InvalidArgument, "unknown class '" + cfg.klass + "'");
  }
  std::vector<Lintel> kept;
  for (auto& l : diagrams) {
    if (cfg.prime_only && !is_prime(l)) continue;
    if (criterion && !criterion_holds(*criterion, l)) continue;
    kept.push_back(std::move(l));
  }
  return kept;
}

std::string format_diagram(const Lintel& l, const std::string& format, bool hide_zero) {
  if (format == "lintel") return l.to_text();
  if (format == "gauss") return to_gauss_word(l).to_text();
  if (format == "json") {
    json j = json::parse(to_json(interlacement_graph(l), hide_zero));
    j["lintel"] = l.to_text();
    j["gauss"] = to_gauss_word(l).to_text();
    return j.dump();
  }
  if (format == "dot") return to_dot(interlacement_graph(l), hide_zero);
  throw GaussError(Errc::InvalidArgument, "unknown format '" + format + "'");
}

// Lintel text if the line has a hyphen, otherwise a Gauss word.
Lintel parse_diagram(const std::string& line) {
  if (line.find('-') != std::string::npos) return Lintel::parse(line);
  return to_lintel(GaussWord::parse(line));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Calls f(line_number, text) for every non-blank, non-comment line.
void for_each_line(std::istream& in, const std::function<void(int, const std::string&)>& f) {
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      f(number, line);
    } catch (const GaussError& e) {
      if (e.is_resource_limit()) throw;
      throw InputError("line " + std::to_string(number) + ": " + e.what());
    }
  }
}

// Vertices are reported one-based, like Gauss word letters.
json violation_json(const Violation& v) { return {{"i", v.i + 1}, {"j", v.j + 1}}; }

// Vertices follow letters for a Gauss word and sorted chords for a lintel.
CircleGraph parse_graph(const std::string& line) {
  if (line.find('-') != std::string::npos) return interlacement_graph(Lintel::parse(line));
  return interlacement_graph(GaussWord::parse(line));
}

json check_one(const std::string& text, Criterion c) {
  const CircleGraph g = parse_graph(text);
  json j;
  j["schema"] = 1;
  j["input"] = text;
  j["criterion"] = std::string(criterion_name(c));
  if (c == Criterion::Stz) {
    const StzWitness w = stz_solve(g);
    j["verdict"] = w.sat ? "Realizable" : "NotRealizable";
    j["realizable"] = w.sat;
    if (w.sat) {
      std::string bits;
      for (int i = 0; i < w.alpha.size(); ++i) bits.push_back(w.alpha.test(i) ? '1' : '0');
      j["witness"] = bits;
    } else if (w.violation) {
      j["violation"] = violation_json(*w.violation);
    }
    return j;
  }
  const Verdict v = evaluate(c, g);
  j["verdict"] = v.realizable() ? "Realizable" : "NotRealizable";
  j["realizable"] = v.realizable();
  if (v.violation) j["violation"] = violation_json(*v.violation);
  return j;
}

int cmd_enumerate(const Config& cfg, std::ostream& out) {
  const auto diagrams = select(cfg, cfg.size);
  if (cfg.count_only) {
    out << diagrams.size() << '\n';
    return kOk;
  }
  for (const auto& l : diagrams) out << format_diagram(l, cfg.format, cfg.hide_zero) << '\n';
  return kOk;
}

int cmd_check(const Config& cfg, std::istream& in, std::ostream& out) {
  const Criterion c = parse_criterion(cfg.criterion.empty() ? "stz" : cfg.criterion);
  for_each_line(in, [&](int, const std::string& line) { out << check_one(line, c).dump() << '\n'; });
  return kOk;
}

int cmd_counterexamples(const Config& cfg, std::ostream& out) {
  check_size(cfg.size);
  std::vector<Lintel> found;
  for (const auto& l : enumerate_prime(cfg.size, resolve_workers(cfg.workers)).diagrams) {
    const CircleGraph g = interlacement_graph(l);
    if (b_check(g) && gl_check(g) && !stz_solve(g).sat) found.push_back(l);
  }
  if (cfg.count_only) {
    out << found.size() << '\n';
    return kOk;
  }
  for (const auto& l : found) out << format_diagram(l, cfg.format, cfg.hide_zero) << '\n';
  return kOk;
}

int cmd_census(const Config& cfg, std::ostream& out) {
  const int from = cfg.min_size > 0 ? cfg.min_size : cfg.size;
  if (from > cfg.size) throw GaussError(Errc::InvalidArgument, "--min-size exceeds --size");
  for (int n = from; n <= cfg.size; ++n) {
    DiagramStream stream;
    stream.size = n;
    stream.diagrams = select(cfg, n);
    const std::size_t graphs = count_nonisomorphic(stream, {}, resolve_workers(cfg.workers));
    out << n << '\t' << cfg.klass << '\t' << stream.diagrams.size() << '\t' << graphs << '\n';
  }
  return kOk;
}

int cmd_export(const Config& cfg, std::istream& in, std::ostream& out) {
  for_each_line(in, [&](int, const std::string& line) {
    if (!cfg.permutations) {
      out << format_diagram(parse_diagram(line), cfg.format, cfg.hide_zero) << '\n';
      return;
    }
    const Permutation pi = parse_permutation(line);
    if (cfg.format == "dot") {
      out << to_dot(meander_graph(pi), cfg.hide_zero);
    } else if (cfg.format == "json") {
      out << to_json(meander_graph(pi), cfg.hide_zero) << '\n';
    } else {
      out << format_diagram(meander_closure_diagram(pi), cfg.format, cfg.hide_zero) << '\n';
    }
  });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss diagram generation, realizability checking and censuses", "gausscheck"};
  app.require_subcommand(1);
  Config cfg;

  const std::vector<std::string> classes{"all", "prime", "realizable", "meander"};
  const std::vector<std::string> criteria{"stz", "bipartite", "cycle", "b", "gl", "r-brute", "stz-brute", "planar"};
  const std::vector<std::string> formats{"lintel", "gauss", "json", "dot"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Worker threads (default: GAUSS_WORKERS or all cores)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
  };
  auto sized = [&](CLI::App* sub) {
    sub->add_option("-n,--size", cfg.size, "Number of chords")->required()->check(CLI::PositiveNumber);
  };
  auto formatted = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_flag("--hide-zero", cfg.hide_zero, "Omit vertex 0 from graph exports");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List non-equivalent diagrams of one size");
  sized(enumerate);
  formatted(enumerate);
  common(enumerate);
  enumerate->add_option("--class", cfg.klass, "Diagram class")->check(CLI::IsMember(classes));
  enumerate->add_option("--criterion", cfg.criterion, "Keep diagrams passing this criterion")
      ->check(CLI::IsMember(criteria));
  enumerate->add_flag("--count-only", cfg.count_only, "Print only the number of diagrams");
  enumerate->add_flag("--prime-only", cfg.prime_only, "Keep prime diagrams only");

  auto* check = app.add_subcommand("check", "Decide realizability of diagrams, one per line");
  common(check);
  check->add_option("--criterion", cfg.criterion, "Criterion (default stz)")->check(CLI::IsMember(criteria));
  check->add_option("-i,--input", cfg.input, "Read diagrams from this file instead of stdin");

  auto* counter = app.add_subcommand("counterexamples", "Prime diagrams passing B and GL but not realizable");
  sized(counter);
  formatted(counter);
  common(counter);
  counter->add_flag("--count-only", cfg.count_only, "Print only the number of diagrams");

  auto* census = app.add_subcommand("census", "Count diagrams and their non-isomorphic graphs");
  sized(census);
  common(census);
  census->add_option("--min-size", cfg.min_size, "Emit one row per size from here up to --size")
      ->check(CLI::PositiveNumber);
  census->add_option("--class", cfg.klass, "Diagram class")->check(CLI::IsMember(classes));
  census->add_option("--criterion", cfg.criterion, "Keep diagrams passing this criterion")
      ->check(CLI::IsMember(criteria));
  census->add_flag("--prime-only", cfg.prime_only, "Keep prime diagrams only");

  auto* exporter = app.add_subcommand("export", "Convert diagrams or meandric permutations between formats");
  formatted(exporter);
  common(exporter);
  exporter->add_option("-i,--input", cfg.input, "Read from this file instead of stdin");
  exporter->add_flag("--permutations", cfg.permutations, "Input lines are permutations; emit closures or meander graphs");

  std::vector<const char*> argv{"gausscheck"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  std::ofstream file_out;
  if (!cfg.output.empty()) {
    file_out.open(cfg.output);
    if (!file_out) {
      err << "error: cannot write " << cfg.output << '\n';
      return kInputError;
    }
  }
  std::ostream& sink = cfg.output.empty() ? out : file_out;
  std::ifstream file_in;
  if (!cfg.input.empty()) {
    file_in.open(cfg.input);
    if (!file_in) {
      err << "error: cannot read " << cfg.input << '\n';
      return kInputError;
    }
  }
  std::istream& source = cfg.input.empty() ? in : file_in;

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg, sink);
    if (check->parsed()) return cmd_check(cfg, source, sink);
    if (counter->parsed()) return cmd_counterexamples(cfg, sink);
    if (census->parsed()) return cmd_census(cfg, sink);
    return cmd_export(cfg, source, sink);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const GaussError& e) {
    err << "error: " << e.what() << '\n';
    return e.is_resource_limit() ? kResourceLimit : kInputError;
  }
}

}  // namespace gauss::cli
