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

#include "vcgame/vc_game.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "vcgame/linear_program.hpp"

namespace vcgame {
namespace {

void CheckVendor(const GameInstance& game, int vendor) {
  if (vendor < 0 || vendor >= game.num_vendors()) {
    throw Error("vendor index out of range");
  }
}

std::vector<Rational> Revenues(const GameInstance& game,
                               const PriceVector& prices, ItemSet bought) {
  std::vector<Rational> out;
  out.reserve(game.num_vendors());
  for (int i = 0; i < game.num_vendors(); ++i) {
    out.push_back(TotalPrice(prices, bought & game.vendor_items(i)));
  }
  return out;
}

BestResponse Evaluate(const GameInstance& game, int vendor,
                      PriceVector prices) {
  BestResponse r;
  r.bought = Demand(game.valuation(), prices).chosen;
  r.revenue = TotalPrice(prices, r.bought & game.vendor_items(vendor));
  r.prices = std::move(prices);
  return r;
}

// For every E ⊆ A_i (indexed by subset index over `own`), the best
// competitor-side utility max_R v(E ∪ R) - p(R) over R outside A_i.
std::vector<Rational> BestCompletionUtility(const GameInstance& game,
                                            int vendor,
                                            const PriceVector& prices,
                                            const std::vector<ItemId>& own) {
  const Valuation& v = game.valuation();
  std::vector<ItemId> others;
  for (ItemId a : (v.universe() - game.vendor_items(vendor)).Items()) {
    if (prices[a] <= v.MaxValue()) others.push_back(a);
  }
  const std::size_t own_count = std::size_t{1} << own.size();
  std::vector<ItemSet> own_sets(own_count);
  for (std::size_t e = 0; e < own_count; ++e) own_sets[e] = NthSubset(own, e);

  std::vector<Rational> best(own_count);
  std::vector<char> seen(own_count, 0);
  const std::size_t other_count = std::size_t{1} << others.size();
  std::vector<Rational> cost(other_count);
  std::vector<std::uint32_t> bits(other_count, 0);
  for (std::size_t t = 0; t < other_count; ++t) {
    if (t > 0) {
      const std::size_t rest = t & (t - 1);
      const int j = std::countr_zero(t);
      bits[t] = bits[rest] | (std::uint32_t{1} << others[j]);
      cost[t] = cost[rest] + prices[others[j]];
    }
    for (std::size_t e = 0; e < own_count; ++e) {
      Rational u = v.Value(own_sets[e] | ItemSet(bits[t])) - cost[t];
      if (!seen[e] || u > best[e]) {
        best[e] = std::move(u);
        seen[e] = 1;
      }
    }
  }
  return best;
}

BestResponse ExactBestResponse(const GameInstance& game, int vendor,
                               const PriceVector& base,
                               const BestResponse& current) {
  const Valuation& v = game.valuation();
  const std::vector<ItemId> own = game.vendor_items(vendor).Items();
  const std::vector<Rational> completion =
      BestCompletionUtility(game, vendor, base, own);
  const Rational unavailable = UnavailablePrice(v);

  // A bought set B is determined, as far as vendor i is concerned, by its
  // own part C = B ∩ A_i; the other part is a best completion R of C.
  // Items of A_i \ C are withdrawn. B is a demand bundle iff for every
  // E ⊆ C:  W(C) - y(C) >= W(E) - y(E), i.e. y(C \ E) <= W(C) - W(E).
  std::optional<BestResponse> best;  // best realized candidate
  Rational supremum = 0;
  PriceVector sup_prices;
  const std::size_t own_count = std::size_t{1} << own.size();
  for (std::size_t c = 0; c < own_count; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < own.size(); ++j) {
      if ((c >> j) & 1U) members.push_back(j);
    }
    const std::size_t vars = members.size();
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> bounds;
    bool feasible = true;
    for (std::size_t d = 1; d < (std::size_t{1} << vars) && feasible; ++d) {
      std::size_t removed = 0;  // subset index of D over `own`
      std::vector<Rational> row(vars, Rational(0));
      for (std::size_t j = 0; j < vars; ++j) {
        if ((d >> j) & 1U) {
          row[j] = 1;
          removed |= std::size_t{1} << members[j];
        }
      }
      Rational bound = completion[c] - completion[c & ~removed];
      if (sgn(bound) < 0) feasible = false;
      rows.push_back(std::move(row));
      bounds.push_back(std::move(bound));
    }
    if (!feasible) continue;

    PriceVector prices = base;
    for (std::size_t j = 0; j < own.size(); ++j) prices[own[j]] = unavailable;
    if (vars > 0) {
      const LpSolution lp =
          MaximizeLp(std::vector<Rational>(vars, Rational(1)), rows, bounds);
      if (lp.status != LpStatus::kOptimal) {
        throw std::logic_error("best-response program is unbounded");
      }
      for (std::size_t j = 0; j < vars; ++j) {
        prices[own[members[j]]] = lp.x[j];
      }
      if (lp.objective > supremum) {
        supremum = lp.objective;
        sup_prices = prices;
      }
      // Ties inside the buyer's optimum set may make it skip C at exactly
      // these prices; the realized revenue is what counts here.
      BestResponse candidate = Evaluate(game, vendor, std::move(prices));
      if (candidate.revenue > lp.objective) {
        throw std::logic_error(
            "demand oracle exceeds the best-response program");
      }
      if (!best || candidate.revenue > best->revenue) {
        best = std::move(candidate);
      }
    } else if (!best) {
      best = Evaluate(game, vendor, std::move(prices));
    }
  }
  if (current.revenue > best->revenue) best = current;
  best->supremum = supremum;
  if (best->revenue >= supremum) return *best;

  // Not attained. Lowering every positive own price by delta makes each
  // constraint with a priced item strict, so the buyer keeps all priced
  // items of the target and revenue drops by at most |C| * delta.
  const Rational floor = best->revenue;
  Rational delta = (supremum - floor) / (2 * static_cast<long>(own.size()));
  for (ItemId a : own) {
    if (sgn(sup_prices[a]) > 0 && sup_prices[a] <= v.MaxValue()) {
      sup_prices[a] = std::max(Rational(0), Rational(sup_prices[a] - delta));
    }
  }
  BestResponse undercut = Evaluate(game, vendor, std::move(sup_prices));
  if (undercut.revenue <= floor) {
    throw std::logic_error("undercut best response failed to beat " +
                           FormatRational(floor));
  }
  undercut.supremum = supremum;
  undercut.attained = false;
  return undercut;
}

BestResponse CandidateSetBestResponse(const GameInstance& game, int vendor,
                                      const PriceVector& base) {
  const Valuation& v = game.valuation();
  const ItemSet own = game.vendor_items(vendor);
  const Rational unavailable = UnavailablePrice(v);
  std::optional<BestResponse> best;
  ForEachSubset(own, [&](ItemSet c) {
    PriceVector prices = base;
    for (ItemId a : own.Items()) prices[a] = c.contains(a) ? 0 : unavailable;
    const ItemSet free_bundle = Demand(v, prices).chosen;
    for (ItemId a : c.Items()) {
      prices[a] = free_bundle.contains(a)
                      ? v.Marginal(a, free_bundle.Without(a))
                      : unavailable;
    }
    BestResponse candidate = Evaluate(game, vendor, std::move(prices));
    if (!best || candidate.revenue > best->revenue) {
      best = std::move(candidate);
    }
  });
  return *best;
}

BestResponse GridBestResponse(const GameInstance& game, int vendor,
                              const PriceVector& base,
                              const BestResponseOptions& options) {
  const std::vector<ItemId> own = game.vendor_items(vendor).Items();
  const std::vector<Rational> grid = PriceGrid(game.valuation());
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < own.size(); ++j) {
    if (total > options.grid_cap / grid.size()) {
      throw CapExceeded("grid search over " + std::to_string(grid.size()) +
                        "^" + std::to_string(own.size()) +
                        " assignments exceeds the cap");
    }
    total *= grid.size();
  }
  std::optional<BestResponse> best;
  std::vector<std::size_t> digits(own.size(), 0);
  PriceVector prices = base;
  for (std::uint64_t step = 0; step < total; ++step) {
    std::uint64_t rest = step;
    for (std::size_t j = 0; j < own.size(); ++j) {
      prices[own[j]] = grid[rest % grid.size()];
      rest /= grid.size();
    }
    BestResponse candidate = Evaluate(game, vendor, prices);
    if (!best || candidate.revenue > best->revenue) {
      best = std::move(candidate);
    }
  }
  return *best;
}

std::string PriceKey(const PriceVector& prices) {
  std::string key;
  for (const auto& p : prices) {
    key += p.get_str();
    key += ';';
  }
  return key;
}

}  // namespace

Rational VendorRevenue(const GameInstance& game, const PriceVector& prices,
                       int vendor) {
  CheckVendor(game, vendor);
  const ItemSet bought = Demand(game.valuation(), prices).chosen;
  return TotalPrice(prices, bought & game.vendor_items(vendor));
}

std::string ToString(BestResponseMethod method) {
  switch (method) {
    case BestResponseMethod::kCandidateSet:
      return "candidate";
    case BestResponseMethod::kTargetSetExact:
      return "exact";
    case BestResponseMethod::kGrid:
      return "grid";
  }
  return "?";
}

BestResponseMethod ParseBestResponseMethod(std::string_view text) {
  if (text == "candidate" || text == "candidate-set") {
    return BestResponseMethod::kCandidateSet;
  }
  if (text == "exact" || text == "target-set-exact") {
    return BestResponseMethod::kTargetSetExact;
  }
  if (text == "grid") return BestResponseMethod::kGrid;
  throw ParseError("unknown best-response method '" + std::string(text) + "'");
}

std::vector<Rational> PriceGrid(const Valuation& v) {
  std::vector<Rational> grid{Rational(0), UnavailablePrice(v)};
  ForEachSubset(v.universe(), [&](ItemSet s) {
    for (ItemId a : s.Items()) grid.push_back(v.Marginal(a, s.Without(a)));
  });
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  // Marginals of a non-monotone diagnostic valuation can be negative.
  grid.erase(std::remove_if(grid.begin(), grid.end(),
                            [](const Rational& x) { return sgn(x) < 0; }),
             grid.end());
  return grid;
}

BestResponse VcBestResponse(const GameInstance& game, int vendor,
                            const PriceVector& prices,
                            BestResponseMethod method,
                            const BestResponseOptions& options) {
  CheckVendor(game, vendor);
  if (prices.size() != static_cast<std::size_t>(game.num_items())) {
    throw Error("price vector length does not match the item count");
  }
  if (game.vendor_items(vendor).empty()) {
    BestResponse idle = Evaluate(game, vendor, prices);
    idle.supremum = idle.revenue;
    return idle;
  }
  // Entries for A_i are placeholders; keep them valid for the demand oracle.
  PriceVector base = prices;
  for (ItemId a : game.vendor_items(vendor).Items()) {
    base[a] = UnavailablePrice(game.valuation());
  }
  BestResponse out;
  switch (method) {
    case BestResponseMethod::kCandidateSet:
      out = CandidateSetBestResponse(game, vendor, base);
      break;
    case BestResponseMethod::kTargetSetExact:
      return ExactBestResponse(game, vendor, base,
                               Evaluate(game, vendor, prices));
    case BestResponseMethod::kGrid:
      out = GridBestResponse(game, vendor, base, options);
      break;
  }
  out.supremum = out.revenue;
  return out;
}

NeVerdict VcVerifyNe(const GameInstance& game, const PriceVector& prices,
                     BestResponseMethod method,
                     const BestResponseOptions& options) {
  const ItemSet bought = Demand(game.valuation(), prices).chosen;
  const std::vector<Rational> current = Revenues(game, prices, bought);
  NeVerdict verdict;
  for (int i = 0; i < game.num_vendors(); ++i) {
    const BestResponse br = VcBestResponse(game, i, prices, method, options);
    if (br.revenue > current[i]) {
      DeviationCertificate cert;
      cert.vendor = i;
      for (ItemId a : game.vendor_items(i).Items()) {
        cert.deviation_prices.emplace_back(a, br.prices[a]);
      }
      cert.old_revenue = current[i];
      cert.new_revenue = br.revenue;
      cert.method = method;
      verdict.refutation = std::move(cert);
      return verdict;
    }
  }
  verdict.certified = true;
  return verdict;
}

PmvcMapping MapToPmvc(const GameInstance& game, const PriceVector& prices) {
  PmvcMapping mapping;
  mapping.sold = Demand(game.valuation(), prices).chosen;
  for (ItemSet a : game.vendors()) {
    mapping.profile.offered.push_back(mapping.sold & a);
  }
  const Outcome outcome = PmvcOutcome(game, mapping.profile);
  if (outcome.sold != mapping.sold) {
    throw std::logic_error("PMVC image does not sell the same bundle");
  }
  const std::vector<Rational> vc = Revenues(game, prices, mapping.sold);
  for (int i = 0; i < game.num_vendors(); ++i) {
    mapping.deltas.push_back(outcome.vendor_payoffs[i] - vc[i]);
  }
  return mapping;
}

std::string ToString(DynamicsStatus status) {
  switch (status) {
    case DynamicsStatus::kConverged:
      return "converged";
    case DynamicsStatus::kCycle:
      return "cycle";
    case DynamicsStatus::kStepCap:
      return "cap";
  }
  return "?";
}

DynamicsTrace PmvcDynamics(const GameInstance& game,
                           const StrategyProfile& start, int max_steps) {
  ValidateProfile(game, start);
  const int k = game.num_vendors();
  const ProfileSpace space(game);
  auto payoffs = [&](const StrategyProfile& s) {
    return game.certified() ? PmvcFullSalePayoffs(game, s)
                            : PmvcOutcome(game, s).vendor_payoffs;
  };

  DynamicsTrace trace;
  StrategyProfile current = start;
  std::vector<Rational> current_payoffs = payoffs(current);
  std::map<std::pair<std::uint64_t, int>, int> seen;
  seen[{space.IndexOf(current), 0}] = 0;
  int moves = 0;
  int idle = 0;
  int turn = 0;
  while (moves < max_steps) {
    const int i = turn;
    turn = (turn + 1) % k;
    const std::vector<ItemSet> responses = PmvcBestResponse(game, i, current);
    StrategyProfile next = current;
    next.offered[i] = responses.front();
    std::vector<Rational> next_payoffs = payoffs(next);
    if (!(next_payoffs[i] > current_payoffs[i])) {
      if (++idle == k) {
        trace.status = DynamicsStatus::kConverged;
        return trace;
      }
      continue;
    }
    idle = 0;
    ++moves;
    current = std::move(next);
    current_payoffs = std::move(next_payoffs);
    trace.steps.push_back(DynamicsStep{i, current, PmvcPrices(game, current),
                                       current_payoffs});
    const auto [it, inserted] =
        seen.try_emplace({space.IndexOf(current), turn}, moves);
    if (!inserted) {
      trace.status = DynamicsStatus::kCycle;
      trace.cycle_period = moves - it->second;
      return trace;
    }
  }
  trace.status = DynamicsStatus::kStepCap;
  return trace;
}

DynamicsTrace VcDynamics(const GameInstance& game, const PriceVector& start,
                         BestResponseMethod method, int max_steps,
                         const BestResponseOptions& options) {
  const int k = game.num_vendors();
  DynamicsTrace trace;
  PriceVector current = start;
  std::vector<Rational> current_payoffs =
      Revenues(game, current, Demand(game.valuation(), current).chosen);
  std::map<std::pair<std::string, int>, int> seen;
  seen[{PriceKey(current), 0}] = 0;
  int moves = 0;
  int idle = 0;
  int turn = 0;
  while (moves < max_steps) {
    const int i = turn;
    turn = (turn + 1) % k;
    BestResponse br = VcBestResponse(game, i, current, method, options);
    if (!(br.revenue > current_payoffs[i])) {
      if (++idle == k) {
        trace.status = DynamicsStatus::kConverged;
        return trace;
      }
      continue;
    }
    idle = 0;
    ++moves;
    current = std::move(br.prices);
    current_payoffs = Revenues(game, current, br.bought);
    trace.steps.push_back(
        DynamicsStep{i, std::nullopt, current, current_payoffs});
    const auto [it, inserted] = seen.try_emplace({PriceKey(current), turn}, moves);
    if (!inserted) {
      trace.status = DynamicsStatus::kCycle;
      trace.cycle_period = moves - it->second;
      return trace;
    }
  }
  trace.status = DynamicsStatus::kStepCap;
  return trace;
}

}  // namespace vcgame
