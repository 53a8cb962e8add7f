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

#include "vcgame/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "vcgame/analysis.hpp"

namespace vcgame {
namespace {

std::vector<std::string> GridNames(int k, int m) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    for (int j = 1; j <= m; ++j) {
      names.push_back(std::string(1, static_cast<char>('a' + i)) +
                      std::to_string(j));
    }
  }
  return names;
}

std::vector<ItemSet> BlockVendors(int k, int m) {
  std::vector<ItemSet> vendors;
  for (int i = 0; i < k; ++i) {
    vendors.push_back(ItemSet(ItemSet::FirstN(m).bits() << (i * m)));
  }
  return vendors;
}

void CheckGridSize(int k, int m) {
  if (k < 1 || m < 1) throw Error("need k >= 1 and m >= 1");
  if (k * m > kMaxItems) {
    throw Error("k*m = " + std::to_string(k * m) + " exceeds " +
                std::to_string(kMaxItems) + " items");
  }
}

GameInstance CurveInstance(int k, int m, const std::vector<Rational>& curve) {
  auto vendors = BlockVendors(k, m);
  std::vector<std::vector<Rational>> curves(k, curve);
  return GameInstance::Make(
      Valuation::AdditiveGroups(GridNames(k, m), vendors, std::move(curves)),
      vendors);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish integer in [0, bound); modulo bias is irrelevant here and
  // keeps streams identical across standard libraries.
  std::uint64_t Below(std::uint64_t bound) { return engine_() % bound; }
  bool Chance(std::uint64_t num, std::uint64_t den) { return Below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

std::vector<ItemSet> RandomVendors(Rng& rng, int n, int k) {
  std::vector<ItemId> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.Below(i + 1)]);
  }
  std::vector<ItemSet> vendors(k);
  for (int j = 0; j < n; ++j) {
    const int owner = j < k ? j : static_cast<int>(rng.Below(k));
    vendors[owner] = vendors[owner].With(order[j]);
  }
  return vendors;
}

std::vector<std::string> PlainNames(int n) {
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j) names.push_back("i" + std::to_string(j));
  return names;
}

}  // namespace

GameInstance CounterexampleInstance() {
  // Bits: a = 1, b = 2, c = 4, d = 8.
  const char* table[16] = {
      "0",      "3.203",  "2.503",  "4.4045",  // ∅, a, b, ab
      "2.803",  "5.404",  "5.304",  "6.6045",  // c, ac, bc, abc
      "2.703",  "5.304",  "5.204",  "6.5045",  // d, ad, bd, abd
      "4.1045", "6.5045", "6.6045", "7.6045",  // cd, acd, bcd, abcd
  };
  std::vector<Rational> values;
  for (const char* x : table) values.push_back(ParseRational(x));
  return GameInstance::Make(
      Valuation::Table({"a", "b", "c", "d"}, std::move(values)),
      {ItemSet(0b0011), ItemSet(0b1100)});
}

GameInstance HarmonicInstance(int k, int m) {
  CheckGridSize(k, m);
  std::vector<Rational> curve{Rational(0)};
  for (int t = 1; t <= m; ++t) curve.push_back(Harmonic(t));
  return CurveInstance(k, m, curve);
}

GameInstance PosInstance(int k, int m, const Rational& eps) {
  CheckGridSize(k, m);
  if (sgn(eps) <= 0 || eps >= Rational(1, 2 * m)) {
    throw Error("eps must satisfy 0 < eps < 1/(2m) = " +
                FormatRational(Rational(1, 2 * m)));
  }
  std::vector<Rational> curve{Rational(0), Rational(1)};
  for (int t = 2; t <= m; ++t) curve.push_back(Harmonic(t) - eps);
  return CurveInstance(k, m, curve);
}

GameInstance CdspInstance(const CdspSpec& spec) {
  return GameInstance::Make(
      Valuation::CategoryMax(spec.names, spec.categories, spec.item_values),
      spec.vendors);
}

PriceVector CdspEquilibrium(const GameInstance& game) {
  const Valuation& v = game.valuation();
  const CategoryMaxForm* form = v.category_max();
  if (form == nullptr) {
    throw Error("CDSP equilibrium needs a category_max valuation");
  }
  const auto& value = form->item_values;
  PriceVector prices(v.size(), UnavailablePrice(v));
  for (ItemSet category : form->categories) {
    // Each vendor's most valuable item in the category (lowest id on ties).
    std::vector<ItemId> best(game.num_vendors(), -1);
    for (ItemId a : category.Items()) {
      const int i = game.VendorOf(a);
      if (best[i] < 0 || value[a] > value[best[i]]) best[i] = a;
    }
    int winner = -1;
    for (int i = 0; i < game.num_vendors(); ++i) {
      if (best[i] < 0) continue;
      if (winner < 0 || value[best[i]] > value[best[winner]]) winner = i;
    }
    Rational runner_up = 0;
    for (int i = 0; i < game.num_vendors(); ++i) {
      if (i == winner || best[i] < 0) continue;
      runner_up = std::max(runner_up, value[best[i]]);
      prices[best[i]] = 0;
    }
    prices[best[winner]] = value[best[winner]] - runner_up;
  }
  return prices;
}

GameInstance RandomInstance(std::uint64_t seed, int n, int k,
                            RandomFamily family) {
  if (n < 1 || n > 12) throw Error("random instances need 1 <= n <= 12");
  if (k < 1 || k > n) throw Error("random instances need 1 <= k <= n");
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(family));
  std::vector<std::string> names = PlainNames(n);
  std::vector<ItemSet> vendors = RandomVendors(rng, n, k);

  if (family == RandomFamily::kCoverage) {
    // Items cover weighted ground elements; v(S) is the covered weight.
    const int elements = n + 1 + static_cast<int>(rng.Below(n + 1));
    std::vector<Rational> weight;
    for (int e = 0; e < elements; ++e) {
      weight.push_back(MakeRational(1 + static_cast<long>(rng.Below(16)), 2));
    }
    std::vector<std::uint32_t> covers(n, 0);
    for (int a = 0; a < n; ++a) {
      for (int e = 0; e < elements; ++e) {
        if (rng.Chance(1, 3)) covers[a] |= std::uint32_t{1} << e;
      }
      if (covers[a] == 0) covers[a] = std::uint32_t{1} << rng.Below(elements);
    }
    std::vector<Rational> values(std::size_t{1} << n);
    for (std::size_t s = 1; s < values.size(); ++s) {
      std::uint32_t covered = 0;
      for (int a = 0; a < n; ++a) {
        if ((s >> a) & 1U) covered |= covers[a];
      }
      Rational total = 0;
      for (int e = 0; e < elements; ++e) {
        if ((covered >> e) & 1U) total += weight[e];
      }
      values[s] = std::move(total);
    }
    return GameInstance::Make(Valuation::Table(names, std::move(values)),
                              std::move(vendors));
  }

  // Concave-of-count curves over a random grouping of the items.
  const int group_count = 1 + static_cast<int>(rng.Below(n));
  std::vector<ItemSet> groups(group_count);
  for (int a = 0; a < n; ++a) {
    const int g = a < group_count ? a : static_cast<int>(rng.Below(group_count));
    groups[g] = groups[g].With(a);
  }
  std::vector<std::vector<Rational>> curves;
  for (ItemSet g : groups) {
    std::vector<Rational> steps;
    for (int t = 0; t < g.size(); ++t) {
      steps.push_back(MakeRational(static_cast<long>(rng.Below(17)), 2));
    }
    std::sort(steps.begin(), steps.end(), std::greater<>());
    std::vector<Rational> curve{Rational(0)};
    for (const auto& d : steps) curve.push_back(curve.back() + d);
    curves.push_back(std::move(curve));
  }
  return GameInstance::Make(
      Valuation::AdditiveGroups(names, std::move(groups), std::move(curves)),
      std::move(vendors));
}

CdspSpec RandomCdspSpec(std::uint64_t seed, int n, int k, int categories) {
  if (n < 1 || n > kMaxItems) throw Error("CDSP spec needs 1 <= n <= 20");
  if (k < 1 || k > n) throw Error("CDSP spec needs 1 <= k <= n");
  if (categories < 1) throw Error("CDSP spec needs at least one category");
  Rng rng(seed * 0xd1b54a32d192ed03ULL + 17);
  CdspSpec spec;
  spec.names = PlainNames(n);
  spec.vendors = RandomVendors(rng, n, k);
  const int r = 1 + static_cast<int>(
                        rng.Below(std::min(categories, n)));
  spec.categories.assign(r, ItemSet());
  for (int a = 0; a < n; ++a) {
    const int j = a < r ? a : static_cast<int>(rng.Below(r));
    spec.categories[j] = spec.categories[j].With(a);
  }
  // A narrow value range makes cross-vendor ties common.
  for (int a = 0; a < n; ++a) {
    spec.item_values.push_back(MakeRational(1 + static_cast<long>(rng.Below(12)), 2));
  }
  return spec;
}

PriceVector RandomPrices(const GameInstance& game, std::uint64_t seed) {
  const Valuation& v = game.valuation();
  Rng rng(seed * 0x2545f4914f6cdd1dULL + 99);
  const Rational full = v.FullValue();
  PriceVector prices(v.size());
  for (ItemId a = 0; a < v.size(); ++a) {
    switch (rng.Below(5)) {
      case 0:
        prices[a] = 0;
        break;
      case 1:
      case 2: {
        // A marginal value: the kind of price that creates exact ties.
        const ItemSet context(static_cast<std::uint32_t>(
            rng.Below(std::uint64_t{1} << v.size())));
        prices[a] = v.Marginal(a, context.Without(a));
        break;
      }
      case 3: {
        Rational p = full * MakeRational(static_cast<long>(rng.Below(9)), 8);
        p.canonicalize();
        prices[a] = std::move(p) / (v.size() > 0 ? v.size() : 1);
        break;
      }
      default:
        prices[a] = UnavailablePrice(v);
        break;
    }
    if (sgn(prices[a]) < 0) prices[a] = 0;
  }
  return prices;
}

}  // namespace vcgame
