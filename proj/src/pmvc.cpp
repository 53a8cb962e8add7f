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

#include "vcgame/pmvc.hpp"

#include <algorithm>
#include <utility>

#include "parallel.hpp"

namespace vcgame {

GameInstance::GameInstance(Valuation valuation, std::vector<ItemSet> vendors,
                           bool certified)
    : valuation_(std::move(valuation)),
      vendors_(std::move(vendors)),
      certified_(certified) {}

GameInstance GameInstance::Make(Valuation valuation,
                                std::vector<ItemSet> vendors,
                                bool allow_uncertified) {
  if (vendors.empty()) throw Error("a game needs at least one vendor");
  ItemSet seen;
  for (ItemSet a : vendors) {
    if (!a.IsSubsetOf(valuation.universe())) {
      throw Error("vendor owns items outside the universe");
    }
    if (!(seen & a).empty()) throw Error("vendor item sets overlap");
    seen |= a;
  }
  if (seen != valuation.universe()) {
    throw Error("vendor item sets do not cover every item");
  }
  const ValidationReport mono = CheckMonotone(valuation);
  const ValidationReport sub = CheckSubmodular(valuation);
  const bool certified = mono.pass && sub.pass;
  if (!certified && !allow_uncertified) {
    throw Error(std::string("valuation is not ") +
                (mono.pass ? "submodular: " : "monotone: ") +
                (mono.pass ? sub : mono).message +
                " (diagnostic override: allow_uncertified)");
  }
  return GameInstance(std::move(valuation), std::move(vendors), certified);
}

int GameInstance::VendorOf(ItemId item) const {
  for (int i = 0; i < num_vendors(); ++i) {
    if (vendors_[i].contains(item)) return i;
  }
  throw Error("item " + std::to_string(item) + " has no vendor");
}

int GameInstance::MaxVendorSize() const {
  int m = 0;
  for (ItemSet a : vendors_) m = std::max(m, a.size());
  return m;
}

ItemSet StrategyProfile::Union() const {
  ItemSet all;
  for (ItemSet s : offered) all |= s;
  return all;
}

void ValidateProfile(const GameInstance& game,
                     const StrategyProfile& profile) {
  if (profile.offered.size() != static_cast<std::size_t>(game.num_vendors())) {
    throw Error("profile has " + std::to_string(profile.offered.size()) +
                " entries for " + std::to_string(game.num_vendors()) +
                " vendors");
  }
  for (int i = 0; i < game.num_vendors(); ++i) {
    if (!profile.offered[i].IsSubsetOf(game.vendor_items(i))) {
      throw Error("vendor " + std::to_string(i + 1) +
                  " offers items it does not own");
    }
  }
}

std::string FormatProfile(const GameInstance& game,
                          const StrategyProfile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.offered.size(); ++i) {
    if (i > 0) out += "|";
    out += game.valuation().Format(profile.offered[i]);
  }
  return out;
}

StrategyProfile ParseProfile(const GameInstance& game, std::string_view text) {
  StrategyProfile profile;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    std::string_view part = text.substr(
        start, bar == std::string_view::npos ? std::string_view::npos
                                             : bar - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (part.size() < 2 || part.front() != '{' || part.back() != '}') {
      throw ParseError("each vendor's offer needs braces, e.g. \"{a}|{c,d}\"; got '" +
                       std::string(text) + "'");
    }
    part = part.substr(1, part.size() - 2);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    ItemSet set;
    std::size_t pos = 0;
    while (pos <= part.size() && !part.empty()) {
      const std::size_t comma = part.find(',', pos);
      std::string_view name = part.substr(
          pos, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - pos);
      while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
      while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
      const auto id = game.valuation().Find(name);
      if (!id) {
        throw ParseError("unknown item '" + std::string(name) +
                         "' in profile");
      }
      set = set.With(*id);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    profile.offered.push_back(set);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  try {
    ValidateProfile(game, profile);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return profile;
}

PriceVector PmvcPrices(const GameInstance& game,
                       const StrategyProfile& profile,
                       const Rational& undercut) {
  ValidateProfile(game, profile);
  if (sgn(undercut) < 0) throw Error("undercut must be nonnegative");
  const Valuation& v = game.valuation();
  const ItemSet offered = profile.Union();
  PriceVector prices(v.size(), UnavailablePrice(v));
  const Rational total = v.Value(offered);
  for (ItemId a : offered.Items()) {
    Rational p = total - v.Value(offered.Without(a));
    p -= undercut;
    if (sgn(p) < 0) p = 0;
    prices[a] = std::move(p);
  }
  return prices;
}

Outcome PmvcOutcome(const GameInstance& game, const StrategyProfile& profile,
                    const Rational& undercut) {
  Outcome out;
  out.prices = PmvcPrices(game, profile, undercut);
  const DemandResult demand = Demand(game.valuation(), out.prices);
  out.sold = demand.chosen;
  out.buyer_utility = demand.utility;
  out.welfare = game.valuation().Value(out.sold);
  out.vendor_payoffs.reserve(game.num_vendors());
  for (int i = 0; i < game.num_vendors(); ++i) {
    out.vendor_payoffs.push_back(
        TotalPrice(out.prices, out.sold & game.vendor_items(i)));
  }
  return out;
}

std::vector<Rational> PmvcFullSalePayoffs(const GameInstance& game,
                                          const StrategyProfile& profile) {
  ValidateProfile(game, profile);
  const Valuation& v = game.valuation();
  const ItemSet offered = profile.Union();
  std::vector<Rational> payoffs(game.num_vendors());
  for (int i = 0; i < game.num_vendors(); ++i) {
    ForEachItem(profile.offered[i], [&](ItemId a) {
      payoffs[i] += v.Marginal(a, offered.Without(a));
    });
  }
  return payoffs;
}

ProfileSpace::ProfileSpace(const GameInstance& game) {
  const int k = game.num_vendors();
  items_.reserve(k);
  for (int i = 0; i < k; ++i) items_.push_back(game.vendor_items(i).Items());
  strides_.assign(k, 1);
  for (int i = k - 1; i >= 0; --i) {
    strides_[i] = size_;
    const std::uint64_t opts = options(i);
    if (size_ > (std::uint64_t{1} << 62) / opts) {
      size_ = std::uint64_t{1} << 62;  // saturate; callers compare to a cap
    } else {
      size_ *= opts;
    }
  }
}

StrategyProfile ProfileSpace::At(std::uint64_t index) const {
  StrategyProfile profile;
  profile.offered.reserve(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i) {
    profile.offered.push_back(
        NthSubset(items_[i], (index / strides_[i]) % options(i)));
  }
  return profile;
}

std::uint64_t ProfileSpace::IndexOf(const StrategyProfile& profile) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    std::uint64_t sub = 0;
    for (std::size_t j = 0; j < items_[i].size(); ++j) {
      if (profile.offered[i].contains(items_[i][j])) sub |= std::uint64_t{1} << j;
    }
    index += sub * strides_[i];
  }
  return index;
}

namespace {

ProfileSpace CheckedSpace(const GameInstance& game, const PmvcOptions& options) {
  ProfileSpace space(game);
  if (space.size() > options.profile_cap) {
    throw CapExceeded("game has " + std::to_string(space.size()) +
                      " strategy profiles; cap is " +
                      std::to_string(options.profile_cap));
  }
  return space;
}

constexpr int kDemandTableItems = 12;

Outcome FullSaleOutcome(const GameInstance& game,
                        const StrategyProfile& profile) {
  Outcome out;
  out.prices = PmvcPrices(game, profile);
  out.sold = profile.Union();
  out.welfare = game.valuation().Value(out.sold);
  out.buyer_utility = out.welfare - TotalPrice(out.prices, out.sold);
  out.vendor_payoffs = PmvcFullSalePayoffs(game, profile);
  return out;
}

}  // namespace

PayoffTable ComputePayoffTable(const GameInstance& game,
                               const PmvcOptions& options) {
  const ProfileSpace space = CheckedSpace(game, options);
  PayoffTable table;
  table.profiles.resize(space.size());
  table.outcomes.resize(space.size());
  // Small games go through the buyer's demand. Beyond that, on certified
  // games the maximal buyer provably takes every offered item.
  const bool full_sale = game.certified() && sgn(options.undercut) == 0 &&
                         game.num_items() > kDemandTableItems;
  internal::ParallelFor(space.size(), options.threads,
                        [&](std::uint64_t begin, std::uint64_t end) {
                          for (std::uint64_t p = begin; p < end; ++p) {
                            table.profiles[p] = space.At(p);
                            table.outcomes[p] =
                                full_sale
                                    ? FullSaleOutcome(game, table.profiles[p])
                                    : PmvcOutcome(game, table.profiles[p],
                                                  options.undercut);
                          }
                        });
  return table;
}

std::vector<Rational> ComputePayoffMatrix(const GameInstance& game,
                                          const PmvcOptions& options) {
  const ProfileSpace space = CheckedSpace(game, options);
  const int k = game.num_vendors();
  const bool shortcut = game.certified() && sgn(options.undercut) == 0;
  std::vector<Rational> payoffs(space.size() * k);
  internal::ParallelFor(
      space.size(), options.threads, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t p = begin; p < end; ++p) {
          const StrategyProfile profile = space.At(p);
          std::vector<Rational> row =
              shortcut ? PmvcFullSalePayoffs(game, profile)
                       : PmvcOutcome(game, profile, options.undercut)
                             .vendor_payoffs;
          for (int i = 0; i < k; ++i) payoffs[p * k + i] = std::move(row[i]);
        }
      });
  return payoffs;
}

std::vector<ItemSet> PmvcBestResponse(const GameInstance& game, int vendor,
                                      const StrategyProfile& profile,
                                      const Rational& undercut) {
  if (vendor < 0 || vendor >= game.num_vendors()) {
    throw Error("vendor index out of range");
  }
  StrategyProfile trial = profile;
  ValidateProfile(game, trial);
  const bool shortcut = game.certified() && sgn(undercut) == 0;
  std::vector<ItemSet> best;
  Rational best_payoff;
  ForEachSubset(game.vendor_items(vendor), [&](ItemSet option) {
    trial.offered[vendor] = option;
    Rational payoff =
        shortcut ? PmvcFullSalePayoffs(game, trial)[vendor]
                 : PmvcOutcome(game, trial, undercut).vendor_payoffs[vendor];
    if (best.empty() || payoff > best_payoff) {
      best_payoff = std::move(payoff);
      best.assign(1, option);
    } else if (payoff == best_payoff) {
      best.push_back(option);
    }
  });
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<StrategyProfile> PmvcPureNe(const GameInstance& game,
                                        const PmvcOptions& options) {
  const ProfileSpace space = CheckedSpace(game, options);
  const std::vector<Rational> payoffs = ComputePayoffMatrix(game, options);
  const int k = game.num_vendors();
  std::vector<char> stable(space.size(), 1);
  for (int i = 0; i < k; ++i) {
    const std::uint64_t stride = space.stride(i);
    const std::uint64_t opts = space.options(i);
    // Every profile with digit i == 0 anchors one block of unilateral
    // deviations for vendor i.
    for (std::uint64_t base = 0; base < space.size(); ++base) {
      if ((base / stride) % opts != 0) continue;
      const Rational* best = &payoffs[base * k + i];
      for (std::uint64_t d = 1; d < opts; ++d) {
        const Rational& x = payoffs[(base + d * stride) * k + i];
        if (x > *best) best = &x;
      }
      for (std::uint64_t d = 0; d < opts; ++d) {
        const std::uint64_t p = base + d * stride;
        if (payoffs[p * k + i] < *best) stable[p] = 0;
      }
    }
  }
  std::vector<StrategyProfile> equilibria;
  for (std::uint64_t p = 0; p < space.size(); ++p) {
    if (stable[p]) equilibria.push_back(space.At(p));
  }
  return equilibria;
}

}  // namespace vcgame
