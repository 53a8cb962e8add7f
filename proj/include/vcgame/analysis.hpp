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

#ifndef VCGAME_ANALYSIS_HPP_
#define VCGAME_ANALYSIS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "vcgame/market.hpp"
#include "vcgame/pmvc.hpp"
#include "vcgame/rational.hpp"

namespace vcgame {

// H_m = 1 + 1/2 + ... + 1/m. Throws for m < 1.
Rational Harmonic(int m);

// Social welfare v(X(v; p)).
Rational Welfare(const GameInstance& game, const PriceVector& prices);

struct EquilibriumReport {
  std::vector<std::pair<StrategyProfile, Rational>> equilibria;
  Rational optimal_welfare;
  // Unset when the game has no pure equilibrium.
  std::optional<Rational> poa;
  std::optional<Rational> pos;
  int max_vendor_size = 0;
  Rational bound;  // H_m + 1
  // Every equilibrium satisfies optimal_welfare <= bound * welfare.
  bool bound_satisfied = true;
};

// PoA and PoS over the pure equilibria of the PMVC game. The optimum is
// v(A*).
EquilibriumReport MakeEquilibriumReport(const GameInstance& game,
                                        const PmvcOptions& options = {});

struct InequalityCheck {
  int vendor = -1;  // -1 for inequalities that are not per-vendor
  Rational lhs;
  Rational rhs;
  Rational slack;  // rhs - lhs for "<=", lhs - rhs for ">="
  bool holds = true;
};

// v(A_i, S_-i) <= v(∅, S_-i) + H_{|A_i|} (v(S_i, S_-i) - v(∅, S_-i)) for
// each vendor. Throws Error when `profile` is not a PMVC equilibrium.
std::vector<InequalityCheck> CheckDeviationBound(
    const GameInstance& game, const StrategyProfile& profile);

// Σ_i v(A_i, S_-i) >= v(A*) + (k - 1) v(S*). Holds for any profile.
InequalityCheck CheckHybridBound(const GameInstance& game,
                                 const StrategyProfile& profile);

}  // namespace vcgame

#endif  // VCGAME_ANALYSIS_HPP_
