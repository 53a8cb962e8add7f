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

#include "vcgame/valuation.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace vcgame {
namespace {

void CheckNames(const std::vector<std::string>& names) {
  if (names.size() > static_cast<std::size_t>(kMaxItems)) {
    throw Error("universe has " + std::to_string(names.size()) +
                " items; at most " + std::to_string(kMaxItems) + " supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("item names must be nonempty");
    if (!seen.insert(n).second) throw Error("duplicate item name '" + n + "'");
  }
}

void CheckPartition(const std::vector<ItemSet>& parts, int n,
                    const char* what) {
  ItemSet seen;
  for (ItemSet p : parts) {
    if (!p.IsSubsetOf(ItemSet::FirstN(n))) {
      throw Error(std::string(what) + " refers to items outside the universe");
    }
    if (!(seen & p).empty()) {
      throw Error(std::string(what) + " are not pairwise disjoint");
    }
    seen |= p;
  }
  if (seen != ItemSet::FirstN(n)) {
    throw Error(std::string(what) + " do not cover every item");
  }
}

}  // namespace

Valuation::Valuation(std::vector<std::string> names, Form form)
    : names_(std::move(names)), form_(std::move(form)) {}

Valuation Valuation::Table(std::vector<std::string> names,
                           std::vector<Rational> values) {
  CheckNames(names);
  const std::size_t expected = std::size_t{1} << names.size();
  if (values.size() != expected) {
    throw Error("table needs " + std::to_string(expected) + " entries, got " +
                std::to_string(values.size()));
  }
  if (values[0] != 0) throw Error("v(∅) must be 0");
  for (const auto& x : values) {
    if (sgn(x) < 0) throw Error("valuation entries must be nonnegative");
  }
  Rational max_value = *std::max_element(values.begin(), values.end());
  Valuation v(std::move(names), TableForm{std::move(values)});
  v.max_value_ = std::move(max_value);
  return v;
}

Valuation Valuation::AdditiveGroups(std::vector<std::string> names,
                                    std::vector<ItemSet> groups,
                                    std::vector<std::vector<Rational>> curves) {
  CheckNames(names);
  const int n = static_cast<int>(names.size());
  CheckPartition(groups, n, "groups");
  if (curves.size() != groups.size()) {
    throw Error("need one curve per group");
  }
  Rational max_value = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& curve = curves[g];
    if (curve.size() != static_cast<std::size_t>(groups[g].size()) + 1) {
      throw Error("curve for group " + std::to_string(g) + " needs " +
                  std::to_string(groups[g].size() + 1) + " values");
    }
    if (curve[0] != 0) throw Error("curve value at 0 must be 0");
    for (const auto& x : curve) {
      if (sgn(x) < 0) throw Error("curve values must be nonnegative");
    }
    max_value += *std::max_element(curve.begin(), curve.end());
  }
  Valuation v(std::move(names),
              AdditiveGroupsForm{std::move(groups), std::move(curves)});
  v.max_value_ = std::move(max_value);
  return v;
}

Valuation Valuation::CategoryMax(std::vector<std::string> names,
                                 std::vector<ItemSet> categories,
                                 std::vector<Rational> item_values) {
  CheckNames(names);
  const int n = static_cast<int>(names.size());
  CheckPartition(categories, n, "categories");
  if (item_values.size() != names.size()) {
    throw Error("need one value per item");
  }
  for (const auto& x : item_values) {
    if (sgn(x) < 0) throw Error("item values must be nonnegative");
  }
  Valuation v(std::move(names), CategoryMaxForm{std::move(categories),
                                                std::move(item_values)});
  v.max_value_ = v.ValueUnchecked(v.universe());
  return v;
}

std::optional<ItemId> Valuation::Find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<ItemId>(i);
  }
  return std::nullopt;
}

std::vector<Item> Valuation::items() const {
  std::vector<Item> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    out.push_back(Item{static_cast<ItemId>(i), names_[i]});
  }
  return out;
}

ValuationKind Valuation::kind() const {
  switch (form_.index()) {
    case 0:
      return ValuationKind::kTable;
    case 1:
      return ValuationKind::kAdditiveGroups;
    default:
      return ValuationKind::kCategoryMax;
  }
}

Rational Valuation::Value(ItemSet set) const {
  if (!set.IsSubsetOf(universe())) {
    throw Error("item set refers to items outside the universe");
  }
  return ValueUnchecked(set);
}

Rational Valuation::ValueUnchecked(ItemSet set) const {
  if (const auto* t = table()) return t->values[set.bits()];
  if (const auto* ag = additive_groups()) {
    Rational total = 0;
    for (std::size_t g = 0; g < ag->groups.size(); ++g) {
      total += ag->curves[g][(set & ag->groups[g]).size()];
    }
    return total;
  }
  const auto& cm = std::get<CategoryMaxForm>(form_);
  Rational total = 0;
  for (ItemSet category : cm.categories) {
    const ItemSet present = set & category;
    if (present.empty()) continue;
    const Rational* best = nullptr;
    for (ItemId a : present.Items()) {
      if (best == nullptr || cm.item_values[a] > *best) {
        best = &cm.item_values[a];
      }
    }
    total += *best;
  }
  return total;
}

Rational Valuation::Marginal(ItemId item, ItemSet set) const {
  if (item < 0 || item >= size()) throw Error("item index out of universe");
  if (set.contains(item)) {
    throw Error("marginal of '" + names_[item] + "' requested w.r.t. a set " +
                "that already contains it");
  }
  if (!set.IsSubsetOf(universe())) {
    throw Error("item set refers to items outside the universe");
  }
  if (const auto* ag = additive_groups()) {
    // Only the item's own group changes.
    for (std::size_t g = 0; g < ag->groups.size(); ++g) {
      if (!ag->groups[g].contains(item)) continue;
      const int t = (set & ag->groups[g]).size();
      return ag->curves[g][t + 1] - ag->curves[g][t];
    }
  }
  return ValueUnchecked(set.With(item)) - ValueUnchecked(set);
}

Valuation Valuation::ExpandToTable() const {
  std::vector<Rational> values(std::size_t{1} << size());
  for (std::size_t s = 0; s < values.size(); ++s) {
    values[s] = ValueUnchecked(ItemSet(static_cast<std::uint32_t>(s)));
  }
  return Table(names_, std::move(values));
}

std::string Valuation::Format(ItemSet set) const {
  std::string out = "{";
  bool first = true;
  for (ItemId a : set.Items()) {
    if (!first) out += ",";
    out += a < size() ? names_[a] : "#" + std::to_string(a);
    first = false;
  }
  return out + "}";
}

// Structured forms certify from their parameters; the exhaustive scans
// below only run for tables or to locate a witness.
static bool CurvesPass(const Valuation& v, bool concave) {
  const auto* ag = v.additive_groups();
  if (ag == nullptr) return v.category_max() != nullptr;
  for (const auto& c : ag->curves) {
    for (std::size_t t = 1; t < c.size(); ++t) {
      if (c[t] < c[t - 1]) return false;
      if (concave && t + 1 < c.size() && c[t + 1] - c[t] > c[t] - c[t - 1]) {
        return false;
      }
    }
  }
  return true;
}

ValidationReport CheckMonotone(const Valuation& v) {
  ValidationReport report;
  if (CurvesPass(v, false)) return report;
  const int n = v.size();
  ForEachSubset(v.universe(), [&](ItemSet s) {
    if (!report.pass) return;
    const Rational base = v.Value(s);
    for (ItemId a = 0; a < n; ++a) {
      if (s.contains(a)) continue;
      Rational m = v.Value(s.With(a)) - base;
      if (sgn(m) < 0) {
        report.pass = false;
        report.witness_small = s;
        report.witness_item = a;
        report.witness_small_marginal = m;
        report.message = "m_" + v.name(a) + "(" + v.Format(s) + ") = " +
                         FormatRational(m) + " < 0";
        return;
      }
    }
  });
  if (report.pass) report.message = "monotone";
  return report;
}

ValidationReport CheckSubmodular(const Valuation& v) {
  ValidationReport report;
  if (CurvesPass(v, true)) return report;
  const int n = v.size();
  std::vector<Rational> values(std::size_t{1} << n);
  for (std::size_t s = 0; s < values.size(); ++s) {
    values[s] = v.Value(ItemSet(static_cast<std::uint32_t>(s)));
  }
  auto marginal = [&](ItemId a, ItemSet s) {
    return values[s.With(a).bits()] - values[s.bits()];
  };
  ForEachSubset(v.universe(), [&](ItemSet s) {
    if (!report.pass) return;
    for (ItemId a = 0; a < n && report.pass; ++a) {
      if (s.contains(a)) continue;
      const Rational small = marginal(a, s);
      for (ItemId b = 0; b < n; ++b) {
        if (b == a || s.contains(b)) continue;
        const ItemSet t = s.With(b);
        Rational large = marginal(a, t);
        if (small < large) {
          report.pass = false;
          report.witness_small = s;
          report.witness_large = t;
          report.witness_item = a;
          report.witness_small_marginal = small;
          report.witness_large_marginal = large;
          report.message = "m_" + v.name(a) + "(" + v.Format(s) + ") = " +
                           FormatRational(small) + " < m_" + v.name(a) + "(" +
                           v.Format(t) + ") = " + FormatRational(large);
          return;
        }
      }
    }
  });
  if (report.pass) report.message = "submodular";
  return report;
}

}  // namespace vcgame
