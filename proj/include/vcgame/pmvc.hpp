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

#ifndef VCGAME_PMVC_HPP_
#define VCGAME_PMVC_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vcgame/item_set.hpp"
#include "vcgame/market.hpp"
#include "vcgame/rational.hpp"
#include "vcgame/valuation.hpp"

namespace vcgame {

// A valuation together with the vendor partition A = (A_1, ..., A_k).
class GameInstance {
 public:
  // Validates the partition, then certifies the valuation monotone and
  // submodular unless `allow_uncertified` is set (diagnostic inputs).
  static GameInstance Make(Valuation valuation, std::vector<ItemSet> vendors,
                           bool allow_uncertified = false);

  const Valuation& valuation() const { return valuation_; }
  const std::vector<ItemSet>& vendors() const { return vendors_; }
  ItemSet vendor_items(int vendor) const { return vendors_.at(vendor); }
  int num_vendors() const { return static_cast<int>(vendors_.size()); }
  int num_items() const { return valuation_.size(); }
  int VendorOf(ItemId item) const;
  // m = max_i |A_i|.
  int MaxVendorSize() const;
  // True iff the valuation passed both checks at construction.
  bool certified() const { return certified_; }

 private:
  GameInstance(Valuation valuation, std::vector<ItemSet> vendors,
               bool certified);

  Valuation valuation_;
  std::vector<ItemSet> vendors_;
  bool certified_;
};

struct StrategyProfile {
  std::vector<ItemSet> offered;

  ItemSet Union() const;
  auto operator<=>(const StrategyProfile&) const = default;
};

// Throws Error unless the profile has one entry per vendor and S_i ⊆ A_i.
void ValidateProfile(const GameInstance& game, const StrategyProfile& profile);

// "{a}|{c,d}".
std::string FormatProfile(const GameInstance& game,
                          const StrategyProfile& profile);
StrategyProfile ParseProfile(const GameInstance& game, std::string_view text);

struct Outcome {
  PriceVector prices;
  ItemSet sold;
  std::vector<Rational> vendor_payoffs;
  Rational buyer_utility;
  Rational welfare;
};

struct PmvcOptions {
  // Offered items are priced at max(0, m_a(S* \ a) - undercut). Zero models
  // the maximal buyer; a positive value models a buyer who needs a strict
  // incentive to buy.
  Rational undercut = 0;
  // Upper bound on the number of strategy profiles enumerated.
  std::uint64_t profile_cap = std::uint64_t{1} << 20;
  int threads = 1;
};

// p̃(a) = m_a(S* \ a) for a ∈ S*, v(A*) + 1 otherwise.
PriceVector PmvcPrices(const GameInstance& game,
                       const StrategyProfile& profile,
                       const Rational& undercut = 0);

// Runs the demand oracle on the mechanism prices.
Outcome PmvcOutcome(const GameInstance& game, const StrategyProfile& profile,
                    const Rational& undercut = 0);

// Vendor payoffs computed as Σ_{a∈S_i} m_a(S* \ a), i.e. assuming the buyer
// takes all of S*. That holds for every profile of a certified game under
// the maximal buyer, and is what enumeration uses on certified games.
std::vector<Rational> PmvcFullSalePayoffs(const GameInstance& game,
                                          const StrategyProfile& profile);

// Enumerates strategy profiles in lexicographic order of per-vendor subset
// indices, vendor 0 most significant. Subset index bit j selects the j-th
// smallest item of A_i.
class ProfileSpace {
 public:
  explicit ProfileSpace(const GameInstance& game);

  std::uint64_t size() const { return size_; }
  int num_vendors() const { return static_cast<int>(items_.size()); }
  std::uint64_t options(int vendor) const {
    return std::uint64_t{1} << items_[vendor].size();
  }
  std::uint64_t stride(int vendor) const { return strides_[vendor]; }

  StrategyProfile At(std::uint64_t index) const;
  std::uint64_t IndexOf(const StrategyProfile& profile) const;
  ItemSet Option(int vendor, std::uint64_t subset_index) const {
    return NthSubset(items_[vendor], subset_index);
  }

 private:
  std::vector<std::vector<ItemId>> items_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
};

struct PayoffTable {
  std::vector<StrategyProfile> profiles;
  std::vector<Outcome> outcomes;
};

// Outcome for every profile, via the demand oracle. Throws CapExceeded.
PayoffTable ComputePayoffTable(const GameInstance& game,
                               const PmvcOptions& options = {});

// Payoff of vendor i for every profile, flattened as
// payoffs[profile_index * k + i]. Uses the full-sale shortcut on certified
// games with zero undercut and the demand oracle otherwise.
std::vector<Rational> ComputePayoffMatrix(const GameInstance& game,
                                          const PmvcOptions& options = {});

// Every S_i ⊆ A_i maximizing vendor i's payoff against the other entries of
// `profile` (entry i is ignored), ascending by bits.
std::vector<ItemSet> PmvcBestResponse(const GameInstance& game, int vendor,
                                      const StrategyProfile& profile,
                                      const Rational& undercut = 0);

// All pure Nash equilibria in enumeration order.
std::vector<StrategyProfile> PmvcPureNe(const GameInstance& game,
                                        const PmvcOptions& options = {});

}  // namespace vcgame

#endif  // VCGAME_PMVC_HPP_
