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

// Acceptance report: one PASS/FAIL line per headline requirement, plus INFO
// lines for stretch sizes. Exit status is nonzero if any requirement fails.
// The first argument, if given, is the property-test executable to run.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gauss/census.hpp"
#include "gauss/circle_graph.hpp"
#include "gauss/generation.hpp"
#include "gauss/lintel.hpp"
#include "gauss/meander.hpp"
#include "gauss/realizability.hpp"

using namespace gauss;

namespace {

using Counts = std::vector<std::size_t>;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
}

void info(const std::string& name, const std::string& detail) {
  std::cout << "INFO " << name << ": " << detail << std::endl;
}

std::string join(const Counts& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + std::to_string(c[k]);
  return out;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << x;
  return s.str();
}

bool passes(Criterion c, const Lintel& l) { return evaluate(c, interlacement_graph(l)).realizable(); }

std::size_t count_passing(const std::vector<Lintel>& ls, const std::function<bool(const Lintel&)>& pred) {
  return static_cast<std::size_t>(std::count_if(ls.begin(), ls.end(), pred));
}

std::vector<Lintel> counterexamples(const std::vector<Lintel>& primes) {
  std::vector<Lintel> out;
  for (const auto& l : primes) {
    const CircleGraph g = interlacement_graph(l);
    if (b_check(g) && gl_check(g) && !stz_solve(g).sat) out.push_back(l);
  }
  return out;
}

PrimeLadder& ladder() {
  static PrimeLadder instance;
  return instance;
}

void realizability_counts() {
  const Counts want_stz{1, 1, 2, 3, 10, 27, 101, 364};
  const Counts want_b{1, 1, 2, 3, 10, 27, 102, 370};
  Counts stz, b, gl;
  double upto9 = 0, at10 = 0;
  for (int n = 3; n <= 10; ++n) {
    const auto start = Clock::now();
    const auto& primes = ladder().level(n);
    stz.push_back(count_passing(primes, [](const Lintel& l) { return passes(Criterion::Stz, l); }));
    b.push_back(count_passing(primes, [](const Lintel& l) { return passes(Criterion::B, l); }));
    gl.push_back(count_passing(primes, [](const Lintel& l) { return passes(Criterion::GL, l); }));
    (n <= 9 ? upto9 : at10) += seconds_since(start);
  }
  report(stz == want_stz && b == want_b && gl == want_b && upto9 < 60 && at10 < 600, "realizability-counts",
         "stz n=3..10 " + join(stz) + "; b " + join(b) + "; gl " + join(gl) + "; time n<=9 " + fixed(upto9) +
             "s, n=10 " + fixed(at10) + "s");
}

void diagram_counts() {
  const Counts want_prime{1, 1, 4, 8, 40, 183, 1354, 11079};
  const Counts want_all{3, 5, 17, 53, 260, 1466, 10915};
  Counts prime, all;
  bool sets_equal = true;
  for (int n = 3; n <= 10; ++n) {
    const auto& primes = ladder().level(n);
    prime.push_back(primes.size());
    if (n > 9) continue;
    const auto every = enumerate_all(n).diagrams;
    all.push_back(every.size());
    std::vector<Lintel> connected;
    for (const auto& l : every) {
      if (is_prime(l)) connected.push_back(l);
    }
    sets_equal = sets_equal && connected == primes;
  }
  report(prime == want_prime && all == want_all && sets_equal, "diagram-counts",
         "prime n=3..10 " + join(prime) + "; all n=3..9 " + join(all) +
             "; teepee primes == connected full-scan classes for n<=9: " + (sets_equal ? "yes" : "no"));
}

void counterexample_suite() {
  const Lintel minimal = Lintel::parse("0-5,1-8,2-9,3-14,4-15,6-13,7-12,10-17,11-16");
  const auto at9 = counterexamples(ladder().level(9));
  const auto at10 = counterexamples(ladder().level(10));
  const bool minimal_match = at9.size() == 1 && are_equivalent(at9.front(), minimal);
  report(at9.size() == 1 && minimal_match && at10.size() == 6, "counterexamples",
         "n=9 " + std::to_string(at9.size()) + (minimal_match ? " (equivalent to the minimal counterexample)" : " (not the minimal counterexample)") +
             "; n=10 " + std::to_string(at10.size()));
}

void criterion_equivalence() {
  std::size_t classes = 0, disagreements = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const auto& l : enumerate_all(n).diagrams) {
      ++classes;
      const CircleGraph g = interlacement_graph(l);
      const bool truth = stz_solve(g).sat;
      const bool agree = stz_bruteforce(g) == truth && realizable_bipartite(g).realizable() == truth &&
                         cycle_parity_check(g).realizable() == truth && r_conditions_bruteforce(g) == truth;
      disagreements += agree ? 0 : 1;
    }
  }
  report(classes == 338 && disagreements == 0, "criterion-equivalence",
         std::to_string(classes) + " classes at n=3..7, " + std::to_string(disagreements) + " disagreements");
}

GF2Matrix matrix(const std::vector<std::string>& rows) {
  std::vector<std::vector<int>> r;
  for (const auto& row : rows) {
    std::vector<int> v;
    for (char c : row) v.push_back(c == '1');
    r.push_back(v);
  }
  return GF2Matrix::from_rows(r);
}

void worked_examples() {
  const CircleGraph six = interlacement_graph(GaussWord::parse("4 5 1 2 6 4 3 6 5 1 2 3"));
  const bool m_ok = six.matrix() == matrix({"011110", "101110", "110011", "110011", "111100", "001100"});
  const bool sq_ok =
      gf2_square(six.matrix()) == matrix({"010010", "100010", "000000", "000000", "110000", "000000"});
  const StzWitness w = stz_solve(six);
  std::set<std::vector<int>> witnesses;
  for (const auto& alpha : w.all_solutions()) {
    std::vector<int> k;
    for (int i = 0; i < alpha.size(); ++i) {
      if (alpha.test(i)) k.push_back(i + 1);
    }
    witnesses.insert(k);
  }
  const bool k_ok = w.sat && witnesses == std::set<std::vector<int>>{{3, 4}, {1, 2, 5, 6}};

  const CircleGraph square_zero = interlacement_graph(GaussWord::parse("1 2 3 4 5 1 6 3 2 5 4 6"));
  const bool zero_ok = gf2_square(square_zero.matrix()).is_zero() && !stz_solve(square_zero).sat;
  report(m_ok && sq_ok && k_ok && zero_ok, "worked-examples",
         std::string("six-chord example M ") + (m_ok ? "ok" : "differs") + ", M^2 " + (sq_ok ? "ok" : "differs") +
             ", witnesses " + (k_ok ? "{3,4} and {1,2,5,6}" : "differ") + "; M^2=0 example NotRealizable " +
             (zero_ok ? "ok" : "differs"));
}

std::vector<Lintel> meander_diagrams_by_scan(int n) { return enumerate_all(n, is_meander_diagram).diagrams; }

void censuses() {
  Counts meander, meander_graphs, gauss_graphs;
  for (int n : {3, 5, 7, 9}) {
    DiagramStream s;
    s.size = n;
    s.diagrams = meander_diagrams_by_scan(n);
    meander.push_back(s.diagrams.size());
    meander_graphs.push_back(count_nonisomorphic(s));
  }
  for (int n = 3; n <= 10; ++n) {
    DiagramStream s;
    s.size = n;
    s.diagrams = ladder().level(n);
    gauss_graphs.push_back(count_nonisomorphic(s, [](const Lintel& l) { return passes(Criterion::Stz, l); }));
  }
  report(meander == Counts{1, 2, 6, 23} && gauss_graphs == Counts{1, 1, 2, 3, 7, 18, 41, 123} &&
             meander_graphs == Counts{1, 2, 5, 13},
         "graph-censuses",
         "meander diagrams sizes 3,5,7,9 " + join(meander) + "; gauss graphs n=3..10 " + join(gauss_graphs) +
             "; meander graphs " + join(meander_graphs));
}

void meander_module() {
  const Permutation pi{1, 4, 3, 2, 5, 6};
  const bool r_ok = r_pi(pi) == InversionSet{{2, 3}, {2, 4}, {3, 4}};
  const GF2Matrix example_graph = matrix({"0111111", "1011111", "1100011", "1100011", "1100011", "1111101", "1111110"});
  const bool graph_ok = meander_graph(pi).matrix() == example_graph;
  bool idempotent = true;
  std::size_t generated = 0;
  for (int n = 2; n <= 8; n += 2) {
    for (const auto& p : meander_search(n)) {
      idempotent = idempotent && idempotency_check(meander_graph(p));
      ++generated;
    }
  }
  const auto eight = meander_search(8);
  const bool found = std::binary_search(eight.begin(), eight.end(), Permutation{3, 6, 7, 2, 1, 8, 5, 4});
  report(r_ok && graph_ok && idempotent && found, "meander-module",
         std::string("R_pi ") + (r_ok ? "ok" : "differs") + ", example meander graph " + (graph_ok ? "ok" : "differs") +
             ", idempotent over " + std::to_string(generated) + " generated graphs " + (idempotent ? "yes" : "no") +
             ", N=8 search contains 3 6 7 2 1 8 5 4: " + (found ? "yes" : "no"));
}

void property_suites(const char* executable) {
  if (!executable) {
    report(false, "property-suites", "property test executable not given");
    return;
  }
  const auto start = Clock::now();
  const int status = std::system((std::string("\"") + executable + "\" > /dev/null 2>&1").c_str());
  report(status == 0, "property-suites",
         std::string("orbit invariance, relabel invariance, teepee postconditions: exit ") + std::to_string(status) +
             " in " + fixed(seconds_since(start)) + "s");
}

void stretch() {
  const auto start = Clock::now();
  const auto& primes = ladder().level(11);
  const std::size_t stz = count_passing(primes, [](const Lintel& l) { return passes(Criterion::Stz, l); });
  const std::size_t b = count_passing(primes, [](const Lintel& l) { return passes(Criterion::B, l); });
  const std::size_t gl = count_passing(primes, [](const Lintel& l) { return passes(Criterion::GL, l); });
  const std::size_t counter = counterexamples(primes).size();
  DiagramStream s;
  s.size = 11;
  s.diagrams = primes;
  const std::size_t graphs = count_nonisomorphic(s, [](const Lintel& l) { return passes(Criterion::Stz, l); });
  info("stretch-n11", "prime " + std::to_string(primes.size()) + " (110026), stz " + std::to_string(stz) +
                          " (1610), b " + std::to_string(b) + " (1646), gl " + std::to_string(gl) +
                          " (1646), counterexamples " + std::to_string(counter) + " (36), gauss graphs " +
                          std::to_string(graphs) + " (361); " + fixed(seconds_since(start)) + "s");

  Counts diagrams, graphs_m;
  for (int n : {11, 13}) {
    std::set<Lintel> unique;
    for (const auto& p : meander_search(n - 1)) unique.insert(canonical_lintel(meander_closure_diagram(p)));
    DiagramStream m;
    m.size = n;
    m.diagrams.assign(unique.begin(), unique.end());
    diagrams.push_back(m.diagrams.size());
    graphs_m.push_back(count_nonisomorphic(m));
  }
  info("stretch-meanders", "diagrams sizes 11,13 " + join(diagrams) + " (115,688); graphs " + join(graphs_m) +
                               " (43,167)");
}

}  // namespace

int main(int argc, char** argv) {
  realizability_counts();
  diagram_counts();
  counterexample_suite();
  criterion_equivalence();
  worked_examples();
  censuses();
  meander_module();
  property_suites(argc > 1 ? argv[1] : nullptr);
  stretch();
  std::cout << (failures == 0 ? "all requirements pass" : std::to_string(failures) + " requirement(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
