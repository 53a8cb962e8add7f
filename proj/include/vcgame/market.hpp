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

#ifndef VCGAME_MARKET_HPP_
#define VCGAME_MARKET_HPP_

#include <cstddef>
#include <vector>

#include "vcgame/item_set.hpp"
#include "vcgame/rational.hpp"
#include "vcgame/valuation.hpp"

namespace vcgame {

// Per-item prices indexed by ItemId.
using PriceVector = std::vector<Rational>;

// v(A*) + 1: no bundle containing an item at this price can beat ∅.
Rational UnavailablePrice(const Valuation& v);

Rational TotalPrice(const PriceVector& prices, ItemSet set);

// u_b(S, p) = v(S) - p(S).
Rational BuyerUtility(const Valuation& v, const PriceVector& prices,
                      ItemSet set);

struct DemandResult {
  ItemSet chosen;
  Rational utility;
  std::size_t optima_count = 0;
  // True iff the union of all utility maximizers is itself a maximizer.
  // Always holds for submodular v.
  bool union_is_optimal = true;
};

// The maximal buyer. Returns the union of all utility-maximizing bundles
// when that union is optimal; otherwise the maximizer that is maximal under
// inclusion and has the largest bit pattern, with union_is_optimal = false.
DemandResult Demand(const Valuation& v, const PriceVector& prices);

// Every utility-maximizing bundle, ascending by bit pattern. n <= 16.
std::vector<ItemSet> DemandAll(const Valuation& v, const PriceVector& prices);

}  // namespace vcgame

#endif  // VCGAME_MARKET_HPP_
