// Copyright 2026 The Authors.
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

// Acceptance checks. Prints one PASS/FAIL line per criterion.
//
//   vcgame_acceptance          # all criteria
//   vcgame_acceptance 3 8      # only criteria 3 and 8
//
// Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "vcgame/vcgame.hpp"

namespace vcgame {
namespace {

Rational Q(const char* text) { return ParseRational(text); }

struct Result {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message; later ones are counted only.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Result Finish(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    return {false, first_ + (failures_ > 1
                                 ? " (+" + std::to_string(failures_ - 1) + " more)"
                                 : "")};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

Result TableReproduction() {
  const auto g = CounterexampleInstance();
  // Row-major over ∅, {a}/{c}, {b}/{d}, both.
  const char* expected[16][2] = {
      {"0", "0"},         {"0", "2.803"},     {"0", "2.703"},     {"0", "2.703"},
      {"3.203", "0"},     {"2.601", "2.201"}, {"2.601", "2.101"}, {"2.4", "2.301"},
      {"2.503", "0"},     {"2.501", "2.801"}, {"2.501", "2.701"}, {"2.5", "2.701"},
      {"3.103", "0"},     {"2.501", "2.2"},   {"2.501", "2.1"},   {"2.1", "2.1"}};
  const auto table = ComputePayoffTable(g);
  Checker c;
  c.Expect(table.outcomes.size() == 16, "table does not have 16 rows");
  for (std::size_t p = 0; p < 16 && p < table.outcomes.size(); ++p) {
    const auto& pay = table.outcomes[p].vendor_payoffs;
    c.Expect(pay[0] == Q(expected[p][0]) && pay[1] == Q(expected[p][1]),
             FormatProfile(g, table.profiles[p]) + " -> (" +
                 FormatRational(pay[0]) + ", " + FormatRational(pay[1]) + ")");
  }
  return c.Finish("16/16 payoff pairs exact");
}

Result NonExistence() {
  const auto g = CounterexampleInstance();
  Checker c;
  const auto ne = PmvcPureNe(g);
  c.Expect(ne.empty(), std::to_string(ne.size()) + " equilibria found");
  const auto trace = PmvcDynamics(g, ParseProfile(g, "{a}|{c}"), 100);
  c.Expect(trace.status == DynamicsStatus::kCycle && trace.cycle_period == 4,
           "dynamics: " + ToString(trace.status) + " period " +
               std::to_string(trace.cycle_period));
  return c.Finish("no pure NE; period-4 cycle from ({a},{c})");
}

Result PoaLowerBound() {
  Checker c;
  int games = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int m = 2; m <= 6; ++m) {
      if (k * m > 18) continue;  // 2^(k*m) profiles
      const auto report = MakeEquilibriumReport(HarmonicInstance(k, m));
      ++games;
      const std::string tag =
          "harmonic(" + std::to_string(k) + "," + std::to_string(m) + ")";
      c.Expect(report.poa && *report.poa == Harmonic(m),
               tag + " worst ratio " +
                   (report.poa ? FormatRational(*report.poa) : "undefined"));
      c.Expect(report.pos && *report.pos == 1,
               tag + " best ratio " +
                   (report.pos ? FormatRational(*report.pos) : "undefined"));
    }
  }
  return c.Finish(std::to_string(games) + " games: worst ratio H_m, best 1");
}

Result PoaUpperBound() {
  Checker c;
  int games = 0, equilibria = 0;
  for (std::uint64_t seed = 1; games < 200 && seed < 100000; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const int k = 2 + static_cast<int>(seed % 2);
    const auto g = RandomInstance(seed, n, k,
                                  seed % 3 ? RandomFamily::kCoverage
                                           : RandomFamily::kAdditiveConcave);
    const auto report = MakeEquilibriumReport(g);
    if (report.equilibria.empty()) continue;
    ++games;
    const Rational full = g.valuation().FullValue();
    for (const auto& [s, welfare] : report.equilibria) {
      ++equilibria;
      const std::string tag = "seed " + std::to_string(seed) + " " +
                              FormatProfile(g, s);
      c.Expect(full <= report.bound * welfare, tag + " exceeds H_m + 1");
      for (const auto& row : CheckDeviationBound(g, s)) {
        c.Expect(row.holds, tag + " deviation bound, vendor " +
                                std::to_string(row.vendor + 1));
      }
      c.Expect(CheckHybridBound(g, s).holds, tag + " hybrid bound");
    }
  }
  c.Expect(games == 200, "only " + std::to_string(games) + " games with NE");
  return c.Finish(std::to_string(games) + " games, " +
                  std::to_string(equilibria) + " equilibria within H_m + 1");
}

Result PosCorollary() {
  const auto g = PosInstance(2, 3, Q("1/100"));
  std::set<StrategyProfile> singletons;
  for (ItemId a : g.vendor_items(0).Items()) {
    for (ItemId b : g.vendor_items(1).Items()) {
      singletons.insert(StrategyProfile{{ItemSet::Single(a), ItemSet::Single(b)}});
    }
  }
  const auto report = MakeEquilibriumReport(g);
  std::set<StrategyProfile> found;
  for (const auto& [s, w] : report.equilibria) found.insert(s);
  Checker c;
  std::string extra;
  for (const auto& s : found) {
    if (!singletons.count(s)) extra = FormatProfile(g, s);
  }
  c.Expect(found == singletons,
           std::to_string(found.size()) + " equilibria, expected the 9 " +
               "singleton profiles" + (extra.empty() ? "" : "; e.g. " + extra));
  c.Expect(report.pos && *report.pos == Q("547/300"),
           "PoS = " + (report.pos ? FormatRational(*report.pos) : "undefined") +
               ", expected 547/300");
  return c.Finish("singletons only, PoS 547/300");
}

Result MappingProperty() {
  Checker c;
  int pairs = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const auto g = RandomInstance(seed + 500, n, 1 + static_cast<int>(seed % 3),
                                  seed % 2 ? RandomFamily::kCoverage
                                           : RandomFamily::kAdditiveConcave);
    for (std::uint64_t t = 0; t < 20; ++t) {
      const PriceVector p = RandomPrices(g, seed * 1000 + t);
      ++pairs;
      const auto m = MapToPmvc(g, p);
      const std::string tag = "seed " + std::to_string(seed) + "/" + std::to_string(t);
      c.Expect(m.sold == oracle::BruteDemand(g.valuation(), p).chosen,
               tag + " sold set differs from the buyer's");
      c.Expect(PmvcOutcome(g, m.profile).sold == m.sold,
               tag + " PMVC image sells a different bundle");
      for (const auto& d : m.deltas) c.Expect(sgn(d) >= 0, tag + " negative delta");
    }
  }
  return c.Finish(std::to_string(pairs) + " price vectors mapped");
}

Result PriceCharacterization() {
  Checker c;
  int certified = 0;
  auto check = [&](const GameInstance& g, const PriceVector& p,
                   const std::string& tag) {
    if (!VcVerifyNe(g, p, BestResponseMethod::kTargetSetExact).certified) {
      return false;
    }
    ++certified;
    const ItemSet b = Demand(g.valuation(), p).chosen;
    ForEachItem(b, [&](ItemId a) {
      c.Expect(p[a] == g.valuation().Marginal(a, b.Without(a)),
               tag + " item " + g.valuation().name(a) + " priced " +
                   FormatRational(p[a]));
    });
    return true;
  };
  int cdsp = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = CdspInstance(RandomCdspSpec(seed, 4 + seed % 5, 2 + seed % 2, 3));
    cdsp += check(g, CdspEquilibrium(g), "cdsp seed " + std::to_string(seed));
  }
  int pmvc = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = RandomInstance(seed + 9000, 3 + seed % 4, 2,
                                  seed % 2 ? RandomFamily::kCoverage
                                           : RandomFamily::kAdditiveConcave);
    for (const auto& s : PmvcPureNe(g)) {
      pmvc += check(g, PmvcPrices(g, s),
                    "seed " + std::to_string(seed) + " " + FormatProfile(g, s));
    }
  }
  c.Expect(cdsp > 0 && pmvc > 0, "no certified price vectors to test");
  return c.Finish(std::to_string(certified) + " certified vectors (" +
                  std::to_string(cdsp) + " category, " + std::to_string(pmvc) +
                  " mechanism) priced at marginals");
}

Result BestResponseAgreement() {
  const auto g = CounterexampleInstance();
  const PriceVector p{Q("2.601"), Q("8.6045"), Q("8.6045"), Q("8.6045")};
  const auto exact = VcBestResponse(g, 1, p, BestResponseMethod::kTargetSetExact);
  const auto cand = VcBestResponse(g, 1, p, BestResponseMethod::kCandidateSet);
  const auto grid = VcBestResponse(g, 1, p, BestResponseMethod::kGrid);
  Checker c;
  c.Expect(exact.revenue == Q("2.703"), "exact " + FormatRational(exact.revenue));
  c.Expect(cand.revenue <= Q("2.703"), "candidate " + FormatRational(cand.revenue));
  c.Expect(grid.revenue == Q("2.703"), "grid " + FormatRational(grid.revenue));
  return c.Finish("exact 2.703, candidate " + FormatRational(cand.revenue) +
                  ", grid " + FormatRational(grid.revenue));
}

Result CategoryEfficiency() {
  Checker c;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const int k = 1 + static_cast<int>(seed % std::min(n, 4));
    const auto g = CdspInstance(RandomCdspSpec(seed, n, k, 4));
    const auto p = CdspEquilibrium(g);
    const std::string tag = "seed " + std::to_string(seed);
    c.Expect(VcVerifyNe(g, p, BestResponseMethod::kTargetSetExact).certified,
             tag + " not certified");
    c.Expect(Welfare(g, p) == g.valuation().FullValue(), tag + " inefficient");
  }
  return c.Finish("50/50 certified and efficient");
}

Result DemandSoundness() {
  Checker c;
  int pairs = 0, certified_pairs = 0, closure_failures = 0;
  std::string example;
  for (std::uint64_t seed = 1; pairs < 1000; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const auto g = RandomInstance(seed + 77, n, 1 + static_cast<int>(seed % 2),
                                  seed % 2 ? RandomFamily::kCoverage
                                           : RandomFamily::kAdditiveConcave);
    for (std::uint64_t t = 0; t < 10; ++t, ++pairs) {
      const PriceVector p = RandomPrices(g, seed * 31 + t);
      const auto got = Demand(g.valuation(), p);
      const auto want = oracle::BruteDemand(g.valuation(), p);
      c.Expect(got.chosen == want.chosen && got.utility == want.utility &&
                   got.union_is_optimal == want.union_is_optimal,
               "seed " + std::to_string(seed) + " demand mismatch");
      if (!g.certified()) continue;
      ++certified_pairs;
      if (!want.union_is_optimal) {
        ++closure_failures;
        if (example.empty()) {
          std::ostringstream out;
          out << "seed " << seed << " prices " << FormatPrices(g, p);
          example = out.str();
        }
      }
    }
  }
  c.Expect(closure_failures == 0,
           "demand agrees with brute force on all pairs, but the union of "
           "optima is not optimal on " + std::to_string(closure_failures) +
               "/" + std::to_string(certified_pairs) +
               " certified pairs, e.g. " + example);
  return c.Finish(std::to_string(pairs) +
                  " pairs agree; union-closure on every certified pair");
}

struct Criterion {
  int id;
  const char* title;
  std::function<Result()> run;
};

}  // namespace
}  // namespace vcgame

int main(int argc, char** argv) {
  using namespace vcgame;
  const Criterion criteria[] = {
      {1, "table reproduction", TableReproduction},
      {2, "non-existence and cycle", NonExistence},
      {3, "anarchy lower bound", PoaLowerBound},
      {4, "anarchy upper bound", PoaUpperBound},
      {5, "stability corollary", PosCorollary},
      {6, "mapping property", MappingProperty},
      {7, "equilibrium price characterization", PriceCharacterization},
      {8, "best-response agreement", BestResponseAgreement},
      {9, "category efficiency", CategoryEfficiency},
      {10, "demand soundness", DemandSoundness},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " ("
              << c.title << "): " << r.detail << "  [" << static_cast<long>(ms)
              << " ms]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
