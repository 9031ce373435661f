// Copyright 2026 The ordbelief Authors
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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordbelief/cli.hpp"
#include "ordbelief/combine.hpp"
#include "ordbelief/decision.hpp"
#include "ordbelief/document.hpp"
#include "ordbelief/metric.hpp"
#include "support/bitset_oracle.hpp"
#include "support/random_mass.hpp"

using namespace ordbelief;
using ordbelief::testing::random_mass;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

template <class Fn>
void criterion(int id, const std::string& name, Fn fn) {
  Outcome o{false, ""};
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name;
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

OrderedElement w(Ordinal i) { return OrderedElement::singleton(i); }

const std::string kData = ORDBELIEF_TEST_DATA_DIR;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string run_in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (cli::run(args, out, err) != cli::kExitOk) return "<error> " + err.str();
  return out.str();
}

std::string run_binary(const std::vector<std::string>& args) {
  std::string cmd = ORDBELIEF_TOOL_PATH;
  for (const auto& a : args) cmd += " '" + a + "'";
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  if (::pclose(pipe) != 0) return "<error> " + out;
  return out;
}

bool total_mass_ok(const MassFunction& m, std::size_t n) {
  double sum = 0.0;
  for (const auto& [x, v] : m.focals()) {
    if (!x.fits(n)) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= 1e-9;
}

}  // namespace

int main() {
  criterion(1, "ops_size matches enumeration length for n = 1..10", [] {
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto count = enumerate_ops(OrderedFrame::with_size(n)).size();
      if (count != ops_size(n) || count != 1 + n * (n + 1) / 2)
        return Outcome{false, "n = " + std::to_string(n)};
    }
    return Outcome{true, "exact for n = 1..10"};
  });

  criterion(2,
            "ordered matrix n=3 avg reproduces the reference table, symmetric 1/12 at (w1, w2..w3) "
            "in place of the asymmetric 1/2",
            [] {
              // Rows and columns: empty, w1, w2, w1..w2, w3, w2..w3, w1..w3.
              const double t = 1.0 / 3, s = 1.0 / 6, tw = 1.0 / 12, h = 0.5, tt = 2.0 / 3;
              const double want[7][7] = {{1, 0, 0, 0, 0, 0, 0},     {0, 1, s, h, 0, tw, t},
                                         {0, s, 1, h, s, h, t},     {0, h, h, 1, tw, t, tt},
                                         {0, 0, s, tw, 1, h, t},    {0, tw, h, t, h, 1, tt},
                                         {0, t, t, tt, t, tt, 1}};
              const auto m = ordered_matrix(OrderedFrame::with_size(3), ElementDistanceMode::Average);
              double worst = 0.0;
              for (std::size_t i = 0; i < 7; ++i)
                for (std::size_t j = 0; j < 7; ++j)
                  worst = std::max(worst, std::abs(m.at(i, j) - want[i][j]));
              const auto a = w(1), b = OrderedElement::interval(2, 3);
              const bool cell = std::abs(m.at(a, b) - tw) <= 1e-12 && m.at(a, b) == m.at(b, a);
              return Outcome{worst <= 1e-12 && cell, "max abs error " + fmt(worst)};
            });

  criterion(3, "distance m_w1 to m_w2 is sqrt(5/6), to m_w3 is 1; plain Jaccard gives 1 for both",
            [] {
              const auto f = OrderedFrame::with_size(3);
              const auto ord = ordered_matrix(f);
              const auto plain = jaccard_matrix(f);
              const auto m1 = categorical(f, w(1)), m2 = categorical(f, w(2)),
                         m3 = categorical(f, w(3));
              const double d12 = belief_distance(m1, m2, ord), d13 = belief_distance(m1, m3, ord);
              const double p12 = belief_distance(m1, m2, plain), p13 = belief_distance(m1, m3, plain);
              const bool ok = std::abs(d12 - std::sqrt(5.0 / 6)) <= 1e-12 &&
                              std::abs(d13 - 1.0) <= 1e-12 && std::abs(p12 - 1.0) <= 1e-12 &&
                              std::abs(p13 - 1.0) <= 1e-12;
              return Outcome{ok, "ordered " + format_number(d12) + ", " + format_number(d13) +
                                     "; plain " + format_number(p12) + ", " + format_number(p13)};
            });

  criterion(4, "every rule stays inside the ordered power set with total mass 1 (1000 pairs)", [] {
    std::mt19937_64 rng(4);
    std::size_t total_conflicts = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const auto f = OrderedFrame::with_size(n);
      const std::vector<MassFunction> pair{random_mass(f, rng, 4, trial % 5 == 0),
                                           random_mass(f, rng, 4, trial % 7 == 0)};
      std::vector<MassFunction> results{
          conjunctive(pair[0], pair[1]),
          yager(pair[0], pair[1]),
          ordered_disjunctive(pair),
          ordered_dubois_prade(pair),
          average(pair),
          mixed(pair[0], pair[1], DeltaPolicy::jaccard()),
          mixed(pair[0], pair[1], DeltaPolicy::fuzzy_jaccard(FuzzyParams::create(0.5, 0.5))),
      };
      try {
        results.push_back(dempster(pair[0], pair[1]));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TotalConflict) throw;
        ++total_conflicts;
      }
      for (const auto& r : results)
        if (!total_mass_ok(r, n)) return Outcome{false, "trial " + std::to_string(trial)};
    }
    return Outcome{true, "Dempster skipped on " + std::to_string(total_conflicts) +
                             " totally conflicting pairs"};
  });

  criterion(5, "conj, Dempster, Yager, bel, pl, BetP agree with a 2^n bitset oracle", [] {
    using namespace ordbelief::testing;
    std::mt19937_64 rng(5);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const auto f = OrderedFrame::with_size(n);
      const auto a = random_mass(f, rng, 4, trial % 4 == 0);
      const auto b = random_mass(f, rng);
      const auto ba = to_bits(a), bb = to_bits(b);
      worst = std::max(worst, max_abs_diff(to_bits(conjunctive(a, b)), bit_conjunctive(ba, bb)));
      worst = std::max(worst, max_abs_diff(to_bits(yager(a, b)), bit_yager(ba, bb)));
      const auto k = conjunctive(a, b).empty_mass();
      if (k < 1.0 - 1e-9)
        worst = std::max(worst, max_abs_diff(to_bits(dempster(a, b)), bit_dempster(ba, bb)));
      for (auto x : enumerate_ops(f)) {
        worst = std::max(worst, std::abs(bel(a, x) - bit_bel(ba, to_mask(x))));
        worst = std::max(worst, std::abs(pl(a, x) - bit_pl(ba, to_mask(x))));
      }
      if (a.empty_mass() < 1.0 - 1e-9)
        for (Ordinal i = 1; i <= n; ++i)
          worst = std::max(worst, std::abs(betp(a, i) - bit_betp(ba, i)));
    }
    return Outcome{worst <= 1e-12, "max abs diff " + fmt(worst)};
  });

  criterion(6, "s-source ordered disjunctive equals the iterated two-source rule (s = 3, 4)", [] {
    std::mt19937_64 rng(6);
    double worst = 0.0;
    for (std::size_t s : {3u, 4u}) {
      for (int trial = 0; trial < 100; ++trial) {
        const auto f = OrderedFrame::with_size(1 + trial % 4);
        std::vector<MassFunction> ms;
        for (std::size_t k = 0; k < s; ++k) ms.push_back(random_mass(f, rng, 4, trial % 3 == 0));
        const auto direct = ordered_disjunctive(ms).to_vector();
        MassFunction folded = ms[0];
        for (std::size_t k = 1; k < s; ++k) {
          const std::vector<MassFunction> two{folded, ms[k]};
          folded = ordered_disjunctive(two);
        }
        const auto iter = folded.to_vector();
        for (std::size_t i = 0; i < direct.size(); ++i)
          worst = std::max(worst, std::abs(direct[i] - iter[i]));
      }
    }
    return Outcome{worst <= 1e-12, "max abs diff " + fmt(worst)};
  });

  criterion(7, "fuzzy matrix equals Jaccard at alpha = 0; Jaccard <= fuzzy <= 1 on a 5x5 grid", [] {
    double worst = 0.0;
    std::size_t below = 0, above = 0;
    const double grid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto f = OrderedFrame::with_size(n);
      const auto plain = jaccard_matrix(f);
      const auto zero = fuzzy_matrix(f, FuzzyParams::create(0.0, 1.0));
      for (std::size_t k = 0; k < plain.data().size(); ++k)
        worst = std::max(worst, std::abs(plain.data()[k] - zero.data()[k]));
      for (double alpha : grid) {
        for (double gamma : grid) {
          const auto fz = fuzzy_matrix(f, FuzzyParams::create(alpha, gamma));
          for (std::size_t k = 0; k < plain.data().size(); ++k) {
            if (fz.data()[k] < plain.data()[k] - 1e-12) ++below;
            if (fz.data()[k] > 1.0) ++above;
          }
        }
      }
    }
    return Outcome{worst == 0.0 && below == 0 && above == 0,
                   "alpha=0 max diff " + fmt(worst) + ", " + std::to_string(below + above) +
                       " grid entries out of bounds"};
  });

  criterion(8, "ordered matrix is positive semidefinite for n = 2..7", [] {
    bool ok = true;
    std::string spectrum = "min eigenvalues";
    for (std::size_t n = 2; n <= 7; ++n) {
      const auto m = ordered_matrix(OrderedFrame::with_size(n));
      Eigen::MatrixXd a(m.dim(), m.dim());
      for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) a(i, j) = m.at(i, j);
      const double lo = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly)
                            .eigenvalues()
                            .minCoeff();
      ok = ok && lo >= -1e-9;
      spectrum += " n=" + std::to_string(n) + ":" + fmt(lo);
    }
    return Outcome{ok, spectrum};
  });

  criterion(9, "conflict is zero on identical and vacuous pairs and grows with rank distance", [] {
    const auto f = OrderedFrame::with_size(3);
    const auto mat = ordered_matrix(f);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      const auto m = random_mass(f, rng);
      if (conflict(m, m, mat) > 1e-12 || conflict(m, vacuous(f), mat) > 1e-12)
        return Outcome{false, "trial " + std::to_string(trial)};
    }
    const double c12 = conflict(categorical(f, w(1)), categorical(f, w(2)), mat);
    const double c13 = conflict(categorical(f, w(1)), categorical(f, w(3)), mat);
    return Outcome{c12 <= c13 + 1e-12,
                   "Conf(w1,w2) = " + format_number(c12) + ", Conf(w1,w3) = " + format_number(c13)};
  });

  criterion(10, "CLI golden outputs are byte-identical across runs; 20-document round trip", [] {
    struct Golden {
      std::vector<std::string> args;
      std::string file;
    };
    const std::vector<Golden> goldens{
        {{"combine", "--rule", "odisj", kData + "/m_w1.json", kData + "/m_w3.json"},
         "combine_odisj.json"},
        {{"distance", "--kind", "ordered", kData + "/m_w1.json", kData + "/m_w2.json"},
         "distance_ordered.txt"},
        {{"matrix", "--kind", "ordered", "--n", "3"}, "matrix_ordered_n3.csv"},
    };
    for (const auto& g : goldens) {
      const auto want = read_file(kData + "/golden/" + g.file);
      if (want.empty()) return Outcome{false, "missing golden " + g.file};
      for (int rep = 0; rep < 2; ++rep)
        if (run_in_process(g.args) != want || run_binary(g.args) != want)
          return Outcome{false, "mismatch on " + g.file};
    }

    std::size_t docs = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kData + "/corpus")) {
      const auto text = read_file(entry.path().string());
      auto want = nlohmann::json::parse(text);
      for (auto& row : want["masses"]) row["mass"] = round12(row["mass"].get<double>());
      const auto emitted = emit_mass_document(parse_mass_document(text));
      if (nlohmann::json::parse(emitted) != want ||
          emit_mass_document(parse_mass_document(emitted)) != emitted)
        return Outcome{false, "round trip failed on " + entry.path().filename().string()};
      ++docs;
    }
    if (docs != 20) return Outcome{false, std::to_string(docs) + " corpus documents, want 20"};
    return Outcome{true, "3 goldens x 2 runs x 2 entry points, 20 documents"};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
