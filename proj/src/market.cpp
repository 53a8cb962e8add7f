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

#include "vcgame/market.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace vcgame {
namespace {

void CheckPrices(const Valuation& v, const PriceVector& prices) {
  if (prices.size() != static_cast<std::size_t>(v.size())) {
    throw Error("price vector has " + std::to_string(prices.size()) +
                " entries for " + std::to_string(v.size()) + " items");
  }
  for (const auto& p : prices) {
    if (sgn(p) < 0) throw Error("prices must be nonnegative");
  }
}

// Utility maximizers of v - p. Items priced above max_S v(S) are dropped up
// front: any bundle containing one has negative utility, worse than ∅.
struct Maximizers {
  Rational best;
  std::vector<ItemSet> sets;  // ascending by bits
};

Maximizers FindMaximizers(const Valuation& v, const PriceVector& prices) {
  CheckPrices(v, prices);
  std::vector<ItemId> affordable;
  for (ItemId a = 0; a < v.size(); ++a) {
    if (prices[a] <= v.MaxValue()) affordable.push_back(a);
  }
  const std::size_t count = std::size_t{1} << affordable.size();
  std::vector<Rational> cost(count);
  std::vector<std::uint32_t> bits(count, 0);

  Maximizers out;
  out.best = 0;
  out.sets.push_back(ItemSet());
  for (std::size_t t = 1; t < count; ++t) {
    const std::size_t rest = t & (t - 1);
    const int j = std::countr_zero(t);
    bits[t] = bits[rest] | (std::uint32_t{1} << affordable[j]);
    cost[t] = cost[rest] + prices[affordable[j]];
    const ItemSet s(bits[t]);
    Rational u = v.Value(s) - cost[t];
    const int order = ::cmp(u, out.best);
    if (order > 0) {
      out.best = std::move(u);
      out.sets.assign(1, s);
    } else if (order == 0) {
      out.sets.push_back(s);
    }
  }
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

}  // namespace

Rational UnavailablePrice(const Valuation& v) { return v.FullValue() + 1; }

Rational TotalPrice(const PriceVector& prices, ItemSet set) {
  Rational total = 0;
  for (ItemId a : set.Items()) total += prices.at(a);
  return total;
}

Rational BuyerUtility(const Valuation& v, const PriceVector& prices,
                      ItemSet set) {
  CheckPrices(v, prices);
  return v.Value(set) - TotalPrice(prices, set);
}

DemandResult Demand(const Valuation& v, const PriceVector& prices) {
  Maximizers m = FindMaximizers(v, prices);
  DemandResult result;
  result.optima_count = m.sets.size();
  ItemSet all;
  for (ItemSet s : m.sets) all |= s;
  if (std::binary_search(m.sets.begin(), m.sets.end(), all)) {
    result.chosen = all;
    result.union_is_optimal = true;
  } else {
    result.union_is_optimal = false;
    // Largest bit pattern among the inclusion-maximal maximizers.
    for (auto it = m.sets.rbegin(); it != m.sets.rend(); ++it) {
      const bool dominated =
          std::any_of(m.sets.begin(), m.sets.end(), [&](ItemSet other) {
            return other != *it && it->IsSubsetOf(other);
          });
      if (!dominated) {
        result.chosen = *it;
        break;
      }
    }
  }
  result.utility = std::move(m.best);
  return result;
}

std::vector<ItemSet> DemandAll(const Valuation& v, const PriceVector& prices) {
  if (v.size() > 16) throw CapExceeded("DemandAll supports at most 16 items");
  return FindMaximizers(v, prices).sets;
}

}  // namespace vcgame
