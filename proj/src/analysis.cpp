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

#include "vcgame/analysis.hpp"

#include <algorithm>

namespace vcgame {
namespace {

bool IsPmvcEquilibrium(const GameInstance& game,
                       const StrategyProfile& profile) {
  const std::vector<Rational> payoffs =
      game.certified() ? PmvcFullSalePayoffs(game, profile)
                       : PmvcOutcome(game, profile).vendor_payoffs;
  for (int i = 0; i < game.num_vendors(); ++i) {
    StrategyProfile trial = profile;
    const ItemSet best = PmvcBestResponse(game, i, profile).front();
    trial.offered[i] = best;
    const Rational top = game.certified()
                             ? PmvcFullSalePayoffs(game, trial)[i]
                             : PmvcOutcome(game, trial).vendor_payoffs[i];
    if (top > payoffs[i]) return false;
  }
  return true;
}

}  // namespace

Rational Harmonic(int m) {
  if (m < 0) throw Error("harmonic number needs m >= 0");
  Rational h = 0;
  for (int t = 1; t <= m; ++t) h += Rational(1, t);
  h.canonicalize();
  return h;
}

Rational Welfare(const GameInstance& game, const PriceVector& prices) {
  return game.valuation().Value(Demand(game.valuation(), prices).chosen);
}

EquilibriumReport MakeEquilibriumReport(const GameInstance& game,
                                        const PmvcOptions& options) {
  EquilibriumReport report;
  const Valuation& v = game.valuation();
  report.optimal_welfare = v.FullValue();
  report.max_vendor_size = game.MaxVendorSize();
  report.bound = Harmonic(std::max(1, report.max_vendor_size)) + 1;

  const std::vector<StrategyProfile> equilibria = PmvcPureNe(game, options);
  const Rational& opt = report.optimal_welfare;
  for (const auto& s : equilibria) {
    // Certified games sell all of S* under the maximal buyer.
    Rational welfare = game.certified() && sgn(options.undercut) == 0
                           ? v.Value(s.Union())
                           : PmvcOutcome(game, s, options.undercut).welfare;
    if (opt > report.bound * welfare) report.bound_satisfied = false;
    report.equilibria.emplace_back(s, std::move(welfare));
  }
  if (report.equilibria.empty()) return report;

  const auto [worst, best] = std::minmax_element(
      report.equilibria.begin(), report.equilibria.end(),
      [](const auto& x, const auto& y) { return x.second < y.second; });
  if (sgn(opt) == 0) {
    report.poa = Rational(1);
    report.pos = Rational(1);
  } else {
    if (sgn(worst->second) > 0) report.poa = opt / worst->second;
    if (sgn(best->second) > 0) report.pos = opt / best->second;
  }
  return report;
}

std::vector<InequalityCheck> CheckDeviationBound(
    const GameInstance& game, const StrategyProfile& profile) {
  ValidateProfile(game, profile);
  if (!IsPmvcEquilibrium(game, profile)) {
    throw Error("profile is not a pure Nash equilibrium of the PMVC game");
  }
  const Valuation& v = game.valuation();
  const ItemSet offered = profile.Union();
  std::vector<InequalityCheck> out;
  for (int i = 0; i < game.num_vendors(); ++i) {
    const ItemSet rest = offered - game.vendor_items(i);
    const Rational without = v.Value(rest);
    InequalityCheck check;
    check.vendor = i;
    check.lhs = v.Value(rest | game.vendor_items(i));
    const int n_i = game.vendor_items(i).size();
    const Rational h = n_i == 0 ? Rational(0) : Harmonic(n_i);
    check.rhs = without + h * (v.Value(offered) - without);
    check.slack = check.rhs - check.lhs;
    check.holds = sgn(check.slack) >= 0;
    out.push_back(std::move(check));
  }
  return out;
}

InequalityCheck CheckHybridBound(const GameInstance& game,
                                 const StrategyProfile& profile) {
  ValidateProfile(game, profile);
  const Valuation& v = game.valuation();
  const ItemSet offered = profile.Union();
  InequalityCheck check;
  for (int i = 0; i < game.num_vendors(); ++i) {
    check.lhs += v.Value((offered - game.vendor_items(i)) | game.vendor_items(i));
  }
  check.rhs = v.FullValue() + (game.num_vendors() - 1) * v.Value(offered);
  check.slack = check.lhs - check.rhs;
  check.holds = sgn(check.slack) >= 0;
  return check;
}

}  // namespace vcgame
