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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "vcgame/vcgame.hpp"

namespace vcgame {
namespace {

Rational Q(const char* text) { return ParseRational(text); }

StrategyProfile P(const GameInstance& g, const char* text) {
  return ParseProfile(g, text);
}

std::vector<GameInstance> SmallRandomGames(int count) {
  std::vector<GameInstance> out;
  for (int seed = 1; seed <= count; ++seed) {
    const int n = 2 + seed % 5;
    const int k = 1 + seed % std::min(n, 3);
    out.push_back(RandomInstance(seed, n, k,
                                 seed % 2 ? RandomFamily::kCoverage
                                          : RandomFamily::kAdditiveConcave));
  }
  return out;
}

// --- PMVC -----------------------------------------------------------------

TEST(PmvcTest, MechanismPricesOfTheGrandProfile) {
  const auto g = CounterexampleInstance();
  const auto p = PmvcPrices(g, P(g, "{a,b}|{c,d}"));
  EXPECT_EQ(p, (PriceVector{Q("1.0"), Q("1.1"), Q("1.1"), Q("1.0")}));
  const auto o = PmvcOutcome(g, P(g, "{a}|{c}"));
  EXPECT_EQ(o.prices[1], UnavailablePrice(g.valuation()));
  EXPECT_EQ(o.sold, ItemSet(0b0101));
  EXPECT_EQ(o.vendor_payoffs, (std::vector<Rational>{Q("2.601"), Q("2.201")}));
}

TEST(PmvcTest, TableMatchesOracleOnCounterexample) {
  const auto g = CounterexampleInstance();
  const auto table = ComputePayoffTable(g);
  const auto profiles = oracle::AllProfiles(g);
  ASSERT_EQ(table.profiles.size(), profiles.size());
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    EXPECT_EQ(table.profiles[p], profiles[p]);
    EXPECT_EQ(table.outcomes[p].vendor_payoffs,
              oracle::BrutePayoffs(g, profiles[p]));
  }
}

TEST(PmvcTest, ProfileIndexRoundTrip) {
  const auto g = HarmonicInstance(3, 2);
  const ProfileSpace space(g);
  ASSERT_EQ(space.size(), 64U);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    EXPECT_EQ(space.IndexOf(space.At(i)), i);
  }
  EXPECT_EQ(space.At(0).Union(), ItemSet());
  EXPECT_EQ(space.At(63).Union(), ItemSet::FirstN(6));
}

TEST(PmvcTest, ProfileParsingAndErrors) {
  const auto g = CounterexampleInstance();
  EXPECT_EQ(FormatProfile(g, P(g, "{b,a}|{ }")), "{a,b}|{}");
  EXPECT_THROW(P(g, "{a}"), ParseError);          // wrong arity
  EXPECT_THROW(P(g, "{c}|{}"), ParseError);       // not vendor 1's item
  EXPECT_THROW(P(g, "{z}|{}"), ParseError);       // unknown item
  EXPECT_THROW(P(g, "a|c"), ParseError);          // missing braces
}

TEST(PmvcTest, FullSaleShortcutMatchesDemandOnCertifiedGames) {
  for (const auto& g : SmallRandomGames(40)) {
    ASSERT_TRUE(g.certified());
    for (const auto& s : oracle::AllProfiles(g)) {
      const auto o = PmvcOutcome(g, s);
      ASSERT_EQ(o.sold, s.Union());
      ASSERT_EQ(o.vendor_payoffs, PmvcFullSalePayoffs(g, s));
    }
  }
}

TEST(PmvcTest, PureNeMatchesDoubleLoopOracle) {
  int with_ne = 0;
  for (const auto& g : SmallRandomGames(30)) {
    const auto got = PmvcPureNe(g);
    EXPECT_EQ(got, oracle::BrutePureNe(g));
    with_ne += !got.empty();
  }
  EXPECT_GT(with_ne, 0);
  const auto g = CounterexampleInstance();
  EXPECT_TRUE(PmvcPureNe(g).empty());
  EXPECT_TRUE(oracle::BrutePureNe(g).empty());
}

TEST(PmvcTest, UncertifiedGamesUseTheBuyer) {
  const auto g = GameInstance::Make(
      Valuation::Table({"x", "y"}, {Q("0"), Q("1"), Q("1"), Q("3")}),
      {ItemSet(1), ItemSet(2)}, /*allow_uncertified=*/true);
  EXPECT_FALSE(g.certified());
  EXPECT_THROW(GameInstance::Make(g.valuation(), g.vendors()), Error);
  // Complements: marginals 2 each, total 4 > v = 3, so the buyer walks.
  const auto o = PmvcOutcome(g, P(g, "{x}|{y}"));
  EXPECT_TRUE(o.sold.empty());
  const auto table = ComputePayoffTable(g);
  EXPECT_EQ(table.outcomes.back().vendor_payoffs,
            (std::vector<Rational>{Q("0"), Q("0")}));
}

TEST(PmvcTest, UndercutPricesAreClampedAtZero) {
  const auto g = CounterexampleInstance();
  const auto p = PmvcPrices(g, P(g, "{a,b}|{c,d}"), Q("1.05"));
  EXPECT_EQ(p, (PriceVector{Q("0"), Q("0.05"), Q("0.05"), Q("0")}));
  EXPECT_THROW(PmvcPrices(g, P(g, "{a}|{}"), Q("-1")), Error);
}

TEST(PmvcTest, ProfileCap) {
  PmvcOptions options;
  options.profile_cap = 15;
  EXPECT_THROW(ComputePayoffTable(CounterexampleInstance(), options),
               CapExceeded);
}

TEST(PmvcTest, BestResponseAndCycle) {
  const auto g = CounterexampleInstance();
  EXPECT_EQ(PmvcBestResponse(g, 1, P(g, "{a}|{c}")),
            (std::vector<ItemSet>{ItemSet(0b1100)}));
  const auto trace = PmvcDynamics(g, P(g, "{a}|{c}"), 100);
  EXPECT_EQ(trace.status, DynamicsStatus::kCycle);
  EXPECT_EQ(trace.cycle_period, 4);
  ASSERT_GE(trace.steps.size(), 4U);
  EXPECT_EQ(FormatProfile(g, *trace.steps[0].profile), "{a}|{c,d}");
  EXPECT_EQ(FormatProfile(g, *trace.steps[1].profile), "{b}|{c,d}");
  EXPECT_EQ(FormatProfile(g, *trace.steps[2].profile), "{b}|{c}");
  EXPECT_EQ(FormatProfile(g, *trace.steps[3].profile), "{a}|{c}");
}

TEST(PmvcTest, DynamicsConvergeOnHarmonicGames) {
  const auto g = HarmonicInstance(2, 3);
  const auto trace = PmvcDynamics(g, P(g, "{}|{}"), 50);
  EXPECT_EQ(trace.status, DynamicsStatus::kConverged);
  StrategyProfile last = P(g, "{}|{}");
  if (!trace.steps.empty()) last = *trace.steps.back().profile;
  const auto ne = PmvcPureNe(g);
  EXPECT_NE(std::find(ne.begin(), ne.end(), last), ne.end());
}

// --- VC game --------------------------------------------------------------

TEST(VcGameTest, WorkedBestResponse) {
  const auto g = CounterexampleInstance();
  const PriceVector p{Q("2.601"), Q("8.6045"), Q("0"), Q("0")};
  const auto exact = VcBestResponse(g, 1, p, BestResponseMethod::kTargetSetExact);
  EXPECT_EQ(exact.revenue, Q("2.703"));
  EXPECT_TRUE(exact.attained);
  EXPECT_EQ(exact.prices[2], Q("1.4015"));
  EXPECT_EQ(exact.prices[3], Q("1.3015"));
  EXPECT_EQ(exact.bought, ItemSet(0b1100));
  const auto grid = VcBestResponse(g, 1, p, BestResponseMethod::kGrid);
  EXPECT_EQ(grid.revenue, Q("2.703"));
  const auto cand = VcBestResponse(g, 1, p, BestResponseMethod::kCandidateSet);
  EXPECT_LE(cand.revenue, Q("2.703"));
}

TEST(VcGameTest, TrivialBestResponses) {
  const auto solo = GameInstance::Make(
      Valuation::Table({"x"}, {Q("0"), Q("5")}), {ItemSet(1)});
  for (auto m : {BestResponseMethod::kCandidateSet,
                 BestResponseMethod::kTargetSetExact, BestResponseMethod::kGrid}) {
    const auto br = VcBestResponse(solo, 0, {Q("0")}, m);
    EXPECT_EQ(br.revenue, Rational(5)) << ToString(m);
    EXPECT_EQ(br.prices[0], Rational(5));
  }
  EXPECT_TRUE(VcVerifyNe(solo, {Q("5")}, BestResponseMethod::kTargetSetExact)
                  .certified);
  const auto idle = GameInstance::Make(
      Valuation::Table({"x"}, {Q("0"), Q("5")}), {ItemSet(1), ItemSet()});
  EXPECT_EQ(VcBestResponse(idle, 1, {Q("1")}, BestResponseMethod::kTargetSetExact)
                .revenue,
            Rational(0));
}

TEST(VcGameTest, RefutesTheMechanismPricesOfACycleProfile) {
  const auto g = CounterexampleInstance();
  const auto p = PmvcPrices(g, P(g, "{a}|{c}"));
  const auto verdict = VcVerifyNe(g, p, BestResponseMethod::kTargetSetExact);
  ASSERT_FALSE(verdict.certified);
  const auto& cert = *verdict.refutation;
  EXPECT_EQ(cert.vendor, 1);
  EXPECT_EQ(cert.old_revenue, Q("2.201"));
  EXPECT_EQ(cert.new_revenue, Q("2.703"));
  // The certificate is checkable on its own.
  PriceVector dev = p;
  for (const auto& [a, price] : cert.deviation_prices) dev[a] = price;
  EXPECT_EQ(oracle::BruteRevenue(g, dev, 1), Q("2.703"));
}

// Exact revenue is checked against the brute-force buyer, and the other two
// methods never beat the exact supremum.
TEST(VcGameTest, MethodsAreOrderedAndRealizable) {
  int unattained = 0;
  for (const auto& g : SmallRandomGames(24)) {
    if (g.num_items() > 5) continue;
    for (std::uint64_t t = 0; t < 4; ++t) {
      const PriceVector p = RandomPrices(g, t + 7);
      for (int i = 0; i < g.num_vendors(); ++i) {
        const auto exact =
            VcBestResponse(g, i, p, BestResponseMethod::kTargetSetExact);
        ASSERT_EQ(oracle::BruteRevenue(g, exact.prices, i), exact.revenue);
        ASSERT_LE(exact.revenue, exact.supremum);
        ASSERT_GE(exact.revenue, oracle::BruteRevenue(g, p, i));
        unattained += !exact.attained;
        const auto cand =
            VcBestResponse(g, i, p, BestResponseMethod::kCandidateSet);
        EXPECT_LE(cand.revenue, exact.supremum);
        if (exact.attained) EXPECT_LE(cand.revenue, exact.revenue);
        if (g.vendor_items(i).size() > 2) continue;  // grid is |grid|^|A_i|
        const auto grid = VcBestResponse(g, i, p, BestResponseMethod::kGrid);
        ASSERT_EQ(oracle::BruteRevenue(g, grid.prices, i), grid.revenue);
        EXPECT_LE(grid.revenue, exact.supremum);
        if (exact.attained) EXPECT_LE(grid.revenue, exact.revenue);
      }
    }
  }
  RecordProperty("unattained", unattained);
}

TEST(VcGameTest, MappingToPmvcExamples) {
  const auto g = CounterexampleInstance();
  const auto m = MapToPmvc(g, {Q("2.0"), Q("8.6045"), Q("2.0"), Q("8.6045")});
  EXPECT_EQ(FormatProfile(g, m.profile), "{a}|{c}");
  EXPECT_EQ(m.deltas, (std::vector<Rational>{Q("0.601"), Q("0.201")}));
  const auto idem = MapToPmvc(g, PmvcPrices(g, P(g, "{a,b}|{d}")));
  EXPECT_EQ(idem.deltas, (std::vector<Rational>{Q("0"), Q("0")}));
  const auto none = MapToPmvc(g, PriceVector(4, UnavailablePrice(g.valuation())));
  EXPECT_EQ(FormatProfile(g, none.profile), "{}|{}");
}

TEST(VcGameTest, MappingPreservesSalesAndNeverHurtsVendors) {
  for (const auto& g : SmallRandomGames(20)) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      const PriceVector p = RandomPrices(g, 100 + t);
      const auto m = MapToPmvc(g, p);
      EXPECT_EQ(m.sold, oracle::BruteDemand(g.valuation(), p).chosen);
      EXPECT_EQ(PmvcOutcome(g, m.profile).sold, m.sold);
      for (const auto& d : m.deltas) EXPECT_GE(d, 0);
    }
  }
}

TEST(VcGameTest, CertifiedEquilibriaPriceSoldItemsAtMarginals) {
  int certified = 0;
  for (const auto& g : SmallRandomGames(20)) {
    for (const auto& s : PmvcPureNe(g)) {
      const auto p = PmvcPrices(g, s);
      if (!VcVerifyNe(g, p, BestResponseMethod::kTargetSetExact).certified) {
        continue;
      }
      ++certified;
      const ItemSet b = Demand(g.valuation(), p).chosen;
      ForEachItem(b, [&](ItemId a) {
        EXPECT_EQ(p[a], g.valuation().Marginal(a, b.Without(a)));
      });
    }
  }
  EXPECT_GT(certified, 0);
}

TEST(VcGameTest, PriceDynamicsDetectTheCycle) {
  const auto g = CounterexampleInstance();
  const auto trace = VcDynamics(g, PmvcPrices(g, P(g, "{a}|{c}")),
                                BestResponseMethod::kTargetSetExact, 40);
  EXPECT_NE(trace.status, DynamicsStatus::kConverged);
  for (const auto& step : trace.steps) {
    EXPECT_EQ(step.payoffs[step.vendor],
              oracle::BruteRevenue(g, step.prices, step.vendor));
  }
}

TEST(VcGameTest, PriceGridContainsEveryMarginal) {
  const auto g = CounterexampleInstance();
  const auto grid = PriceGrid(g.valuation());
  EXPECT_TRUE(std::is_sorted(grid.begin(), grid.end()));
  for (const char* x : {"0", "1.4015", "1.3015", "2.601", "8.6045"}) {
    EXPECT_TRUE(std::binary_search(grid.begin(), grid.end(), Q(x))) << x;
  }
}

// --- Analysis -------------------------------------------------------------

TEST(AnalysisTest, HarmonicNumbers) {
  EXPECT_EQ(Harmonic(0), Rational(0));
  EXPECT_EQ(Harmonic(1), Rational(1));
  EXPECT_EQ(Harmonic(3), Q("11/6"));
  EXPECT_EQ(Harmonic(6), Q("2.45"));
}

TEST(AnalysisTest, HarmonicReport) {
  const auto r = MakeEquilibriumReport(HarmonicInstance(2, 3));
  EXPECT_EQ(r.equilibria.size(), 49U);
  EXPECT_EQ(r.optimal_welfare, Q("11/3"));
  EXPECT_EQ(r.poa, Q("11/6"));
  EXPECT_EQ(r.pos, Rational(1));
  EXPECT_EQ(r.bound, Q("17/6"));
  EXPECT_TRUE(r.bound_satisfied);
}

TEST(AnalysisTest, NoEquilibriumMeansNoRatio) {
  const auto r = MakeEquilibriumReport(CounterexampleInstance());
  EXPECT_TRUE(r.equilibria.empty());
  EXPECT_FALSE(r.poa.has_value());
  EXPECT_FALSE(r.pos.has_value());
  EXPECT_TRUE(r.bound_satisfied);
}

TEST(AnalysisTest, DeviationAndHybridBoundsOnHarmonicSingletons) {
  const auto g = HarmonicInstance(2, 3);
  const auto s = P(g, "{a1}|{b1}");
  const auto rows = CheckDeviationBound(g, s);
  ASSERT_EQ(rows.size(), 2U);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.holds);
    EXPECT_EQ(row.lhs, Q("17/6"));
    EXPECT_EQ(row.slack, Rational(0));
  }
  const auto hybrid = CheckHybridBound(g, s);
  EXPECT_TRUE(hybrid.holds);
  EXPECT_EQ(hybrid.lhs, Q("17/3"));
  EXPECT_EQ(hybrid.rhs, Q("17/3"));
  EXPECT_THROW(CheckDeviationBound(CounterexampleInstance(),
                                   P(CounterexampleInstance(), "{a}|{c}")),
               Error);
}

TEST(AnalysisTest, HybridBoundOnCounterexample) {
  const auto g = CounterexampleInstance();
  const auto c = CheckHybridBound(g, P(g, "{a}|{c}"));
  EXPECT_EQ(c.lhs, Q("13.109"));
  EXPECT_EQ(c.rhs, Q("13.0085"));
  EXPECT_TRUE(c.holds);
}

TEST(AnalysisTest, BoundsHoldOnEveryEquilibrium) {
  for (const auto& g : SmallRandomGames(30)) {
    const auto report = MakeEquilibriumReport(g);
    EXPECT_TRUE(report.bound_satisfied);
    for (const auto& [s, welfare] : report.equilibria) {
      for (const auto& row : CheckDeviationBound(g, s)) EXPECT_TRUE(row.holds);
      EXPECT_TRUE(CheckHybridBound(g, s).holds);
    }
  }
}

// --- Instances ------------------------------------------------------------

TEST(InstancesTest, SmallFamilies) {
  EXPECT_EQ(HarmonicInstance(2, 3).valuation().FullValue(), Q("11/3"));
  EXPECT_EQ(HarmonicInstance(1, 1).valuation().FullValue(), Rational(1));
  EXPECT_THROW(HarmonicInstance(3, 7), Error);
  EXPECT_THROW(PosInstance(2, 3, Q("1/6")), Error);
  EXPECT_THROW(PosInstance(2, 3, Q("0")), Error);
  const auto pos = PosInstance(2, 3, Q("1/100"));
  EXPECT_TRUE(CheckSubmodular(pos.valuation().ExpandToTable()).pass);
  const auto payoff = PmvcOutcome(HarmonicInstance(2, 3),
                                  P(HarmonicInstance(2, 3), "{a1}|{b2}"));
  EXPECT_EQ(payoff.vendor_payoffs, (std::vector<Rational>{1, 1}));
}

// With the perturbed curve, offering all m items earns m * (l(m) - l(m-1))
// = m * (H_m - H_{m-1}) = 1, because eps cancels in the marginal. That ties
// the singleton payoff, so full offers are equilibria too and the best
// equilibrium is efficient.
TEST(InstancesTest, PerturbedCurveFullOfferTiesSingleton) {
  const auto g = PosInstance(2, 3, Q("1/100"));
  for (const char* s : {"{a1}|{b1}", "{a1,a2,a3}|{b1}", "{a1,a2,a3}|{b1,b2,b3}"}) {
    EXPECT_EQ(PmvcOutcome(g, P(g, s)).vendor_payoffs[0], Rational(1)) << s;
  }
  // Two items: 2 * (H_2 - eps - 1) = 1 - 2 eps < 1.
  EXPECT_EQ(PmvcOutcome(g, P(g, "{a1,a2}|{b1}")).vendor_payoffs[0], Q("0.98"));
  const auto report = MakeEquilibriumReport(g);
  EXPECT_EQ(report.equilibria.size(), 16U);
  EXPECT_EQ(report.pos, Rational(1));
  EXPECT_EQ(report.poa, Q("547/300"));
}

TEST(InstancesTest, RandomGeneratorsAreDeterministicAndCertified) {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    for (auto f : {RandomFamily::kCoverage, RandomFamily::kAdditiveConcave}) {
      const auto a = RandomInstance(seed, 6, 2, f);
      const auto b = RandomInstance(seed, 6, 2, f);
      EXPECT_EQ(a.vendors(), b.vendors());
      ForEachSubset(a.valuation().universe(), [&](ItemSet s) {
        EXPECT_EQ(a.valuation().Value(s), b.valuation().Value(s));
      });
      EXPECT_TRUE(CheckSubmodular(a.valuation().ExpandToTable()).pass);
      EXPECT_TRUE(CheckMonotone(a.valuation().ExpandToTable()).pass);
    }
  }
}

TEST(InstancesTest, TwoVendorCategoryExample) {
  CdspSpec spec{{"x", "y"}, {ItemSet(0b11)}, {Q("10"), Q("8")},
                {ItemSet(1), ItemSet(2)}};
  const auto g = CdspInstance(spec);
  EXPECT_EQ(g.valuation().Value(ItemSet(0b11)), Rational(10));
  const auto p = CdspEquilibrium(g);
  EXPECT_EQ(p, (PriceVector{Q("2"), Q("0")}));
  EXPECT_TRUE(VcVerifyNe(g, p, BestResponseMethod::kTargetSetExact).certified);
  // The maximal buyer also takes the free loser.
  EXPECT_EQ(Demand(g.valuation(), p).chosen, ItemSet(0b11));
  EXPECT_EQ(VendorRevenue(g, p, 0), Rational(2));
}

TEST(InstancesTest, CategoryEdgeCases) {
  // Monopoly category: the owner extracts the full value.
  const auto mono = CdspInstance(
      {{"x", "y"}, {ItemSet(0b11)}, {Q("10"), Q("4")}, {ItemSet(0b11), ItemSet()}});
  const auto pm = CdspEquilibrium(mono);
  EXPECT_EQ(pm[0], Rational(10));
  EXPECT_EQ(pm[1], UnavailablePrice(mono.valuation()));
  EXPECT_TRUE(VcVerifyNe(mono, pm, BestResponseMethod::kTargetSetExact).certified);
  // Tied winners price at zero; the lower index is the winner.
  const auto tie = CdspInstance(
      {{"x", "y"}, {ItemSet(0b11)}, {Q("5"), Q("5")}, {ItemSet(1), ItemSet(2)}});
  EXPECT_EQ(CdspEquilibrium(tie), (PriceVector{Q("0"), Q("0")}));
  // Independent categories compose.
  const auto two = CdspInstance({{"x", "y", "u", "w"},
                                 {ItemSet(0b0011), ItemSet(0b1100)},
                                 {Q("10"), Q("8"), Q("3"), Q("7")},
                                 {ItemSet(0b0101), ItemSet(0b1010)}});
  EXPECT_EQ(CdspEquilibrium(two),
            (PriceVector{Q("2"), Q("0"), Q("0"), Q("4")}));
  EXPECT_THROW(CdspEquilibrium(CounterexampleInstance()), Error);
}

// No vendor gains by offering a category item other than its best one.
TEST(InstancesTest, CategoryBestItemSuffices) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto g = CdspInstance(RandomCdspSpec(seed, 6, 2, 2));
    const auto* form = g.valuation().category_max();
    for (const auto& s : oracle::AllProfiles(g)) {
      for (int i = 0; i < g.num_vendors(); ++i) {
        // Ties aside, best responses hold at most one item per category.
        const auto brs = PmvcBestResponse(g, i, s);
        const bool has_single = std::any_of(brs.begin(), brs.end(), [&](ItemSet b) {
          return std::all_of(form->categories.begin(), form->categories.end(),
                             [&](ItemSet c) { return (b & c).size() <= 1; });
        });
        EXPECT_TRUE(has_single);
        // Replacing the vendor's offer inside a category by its single best
        // item there never lowers revenue.
        const auto base = PmvcOutcome(g, s).vendor_payoffs[i];
        for (ItemId a : s.offered[i].Items()) {
          for (ItemSet cat : form->categories) {
            if (!cat.contains(a)) continue;
            ItemId top = a;
            for (ItemId b : (cat & g.vendor_items(i)).Items()) {
              if (form->item_values[b] > form->item_values[top]) top = b;
            }
            StrategyProfile swapped = s;
            swapped.offered[i] = (s.offered[i] - cat).With(top);
            EXPECT_GE(PmvcOutcome(g, swapped).vendor_payoffs[i], base);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace vcgame
