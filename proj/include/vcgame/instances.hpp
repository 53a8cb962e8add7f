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

#ifndef VCGAME_INSTANCES_HPP_
#define VCGAME_INSTANCES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vcgame/market.hpp"
#include "vcgame/pmvc.hpp"
#include "vcgame/rational.hpp"

namespace vcgame {

// Two vendors, A_1 = {a, b}, A_2 = {c, d}, with a 16-entry submodular table
// for which the PMVC game has no pure equilibrium.
GameInstance CounterexampleInstance();

// k vendors with m items each; v is additive across vendors and equals
// H_t on t items of one vendor. Items are named <letter><index>: a1..am for
// vendor 1, b1..bm for vendor 2, and so on. Requires k*m <= kMaxItems.
GameInstance HarmonicInstance(int k, int m);

// Same layout with curve 1 at one item and H_t - eps at t >= 2 items.
// Requires 0 < eps < 1/(2m); the perturbed curve is re-certified.
GameInstance PosInstance(int k, int m, const Rational& eps);

struct CdspSpec {
  std::vector<std::string> names;
  std::vector<ItemSet> categories;
  std::vector<Rational> item_values;
  std::vector<ItemSet> vendors;
};

GameInstance CdspInstance(const CdspSpec& spec);

// Per category: the winner (owner of the most valuable item, lowest vendor
// index on ties) prices its best item at value minus the best competing
// value (0 if no competitor is present), every other vendor prices its best
// item at 0, and all remaining items are withdrawn at v(A*) + 1.
// Throws Error unless the valuation is a CategoryMax form.
PriceVector CdspEquilibrium(const GameInstance& game);

enum class RandomFamily { kCoverage, kAdditiveConcave };

// Deterministic in (seed, n, k, family). n <= 12, 1 <= k <= n. Every vendor
// owns at least one item. Output is always certified.
GameInstance RandomInstance(std::uint64_t seed, int n, int k,
                            RandomFamily family);

// Random category structure with n items over at most `categories`
// categories and k vendors; item values are small integers or halves.
CdspSpec RandomCdspSpec(std::uint64_t seed, int n, int k, int categories);

// Random nonnegative prices mixing marginal values, rounded fractions of
// v(A*), zeros and withdrawn items. Used for property tests and the CLI.
PriceVector RandomPrices(const GameInstance& game, std::uint64_t seed);

}  // namespace vcgame

#endif  // VCGAME_INSTANCES_HPP_
