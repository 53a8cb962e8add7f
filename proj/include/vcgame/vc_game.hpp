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

#ifndef VCGAME_VC_GAME_HPP_
#define VCGAME_VC_GAME_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vcgame/item_set.hpp"
#include "vcgame/market.hpp"
#include "vcgame/pmvc.hpp"
#include "vcgame/rational.hpp"

namespace vcgame {

// Vendor revenue in the price-setting game: Σ p(a) over A_i ∩ X(v; p).
Rational VendorRevenue(const GameInstance& game, const PriceVector& prices,
                       int vendor);

enum class BestResponseMethod {
  // Each C ⊆ A_i priced at its marginals within the bundle the buyer takes
  // when C is free; the rest of A_i withdrawn.
  kCandidateSet,
  // Exact: one linear program per reachable bought set.
  kTargetSetExact,
  // Every assignment of grid prices to A_i (see PriceGrid).
  kGrid,
};

std::string ToString(BestResponseMethod method);
BestResponseMethod ParseBestResponseMethod(std::string_view text);

struct BestResponseOptions {
  // Largest number of grid assignments kGrid may try.
  std::uint64_t grid_cap = std::uint64_t{1} << 22;
};

struct BestResponse {
  // Full price vector: competitors unchanged, A_i replaced.
  PriceVector prices;
  Rational revenue;  // realized against the maximal buyer
  ItemSet bought;
  // kTargetSetExact: the least upper bound on the vendor's revenue. When the
  // buyer's tie-breaking keeps it from being attained, `prices` undercut the
  // optimal program solution just enough to beat every attained alternative
  // and the current revenue, and `attained` is false.
  Rational supremum;
  bool attained = true;
};

// `prices` supplies the competitors' prices; entries for A_i are ignored.
BestResponse VcBestResponse(const GameInstance& game, int vendor,
                            const PriceVector& prices,
                            BestResponseMethod method,
                            const BestResponseOptions& options = {});

// {m_a(S \ a) : a ∈ S ⊆ A*} ∪ {0, v(A*) + 1}, ascending, deduplicated.
std::vector<Rational> PriceGrid(const Valuation& v);

struct DeviationCertificate {
  int vendor = 0;
  std::vector<std::pair<ItemId, Rational>> deviation_prices;
  Rational old_revenue;
  Rational new_revenue;
  BestResponseMethod method = BestResponseMethod::kTargetSetExact;
};

struct NeVerdict {
  bool certified = false;
  std::optional<DeviationCertificate> refutation;
};

// Refutes iff some vendor's best response under `method` strictly beats its
// current revenue. Certification is exact only for kTargetSetExact; the
// other methods are sound for refutation only.
NeVerdict VcVerifyNe(const GameInstance& game, const PriceVector& prices,
                     BestResponseMethod method,
                     const BestResponseOptions& options = {});

struct PmvcMapping {
  StrategyProfile profile;
  ItemSet sold;
  // PMVC utility minus VC utility, per vendor.
  std::vector<Rational> deltas;
};

// S_i = X(v; p) ∩ A_i. Throws if the PMVC game does not sell X(v; p).
PmvcMapping MapToPmvc(const GameInstance& game, const PriceVector& prices);

enum class DynamicsStatus { kConverged, kCycle, kStepCap };
std::string ToString(DynamicsStatus status);

struct DynamicsStep {
  int vendor = 0;
  // Discrete runs fill `profile`; continuous runs leave it empty.
  std::optional<StrategyProfile> profile;
  PriceVector prices;
  std::vector<Rational> payoffs;
};

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  DynamicsStatus status = DynamicsStatus::kStepCap;
  // Number of moves between two visits of the repeated state.
  int cycle_period = 0;
};

// Round-robin strict best responses in the PMVC game. A vendor moves only on
// a strict improvement and then picks its lowest-bits best response. A state
// is (profile, vendor to move next).
DynamicsTrace PmvcDynamics(const GameInstance& game,
                           const StrategyProfile& start, int max_steps);

// Same protocol in the price-setting game; each move is VcBestResponse.
DynamicsTrace VcDynamics(const GameInstance& game, const PriceVector& start,
                         BestResponseMethod method, int max_steps,
                         const BestResponseOptions& options = {});

}  // namespace vcgame

#endif  // VCGAME_VC_GAME_HPP_
