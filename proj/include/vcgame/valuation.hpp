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

#ifndef VCGAME_VALUATION_HPP_
#define VCGAME_VALUATION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vcgame/item_set.hpp"
#include "vcgame/rational.hpp"

namespace vcgame {

// v given explicitly on all 2^n bundles, indexed by ItemSet::bits().
struct TableForm {
  std::vector<Rational> values;
};

// v(T) = sum_g curve_g(|T ∩ group_g|). curve_g[0] must be 0.
struct AdditiveGroupsForm {
  std::vector<ItemSet> groups;
  std::vector<std::vector<Rational>> curves;
};

// v(S) = sum over categories of the largest item value in S ∩ category.
struct CategoryMaxForm {
  std::vector<ItemSet> categories;
  std::vector<Rational> item_values;
};

enum class ValuationKind { kTable, kAdditiveGroups, kCategoryMax };

// A normalized, nonnegative set function over a named universe of at most
// kMaxItems items. Immutable after construction.
class Valuation {
 public:
  static Valuation Table(std::vector<std::string> names,
                         std::vector<Rational> values);
  static Valuation AdditiveGroups(std::vector<std::string> names,
                                  std::vector<ItemSet> groups,
                                  std::vector<std::vector<Rational>> curves);
  static Valuation CategoryMax(std::vector<std::string> names,
                               std::vector<ItemSet> categories,
                               std::vector<Rational> item_values);

  int size() const { return static_cast<int>(names_.size()); }
  ItemSet universe() const { return ItemSet::FirstN(size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(ItemId item) const { return names_.at(item); }
  std::optional<ItemId> Find(std::string_view name) const;
  std::vector<Item> items() const;

  ValuationKind kind() const;
  const TableForm* table() const { return std::get_if<TableForm>(&form_); }
  const AdditiveGroupsForm* additive_groups() const {
    return std::get_if<AdditiveGroupsForm>(&form_);
  }
  const CategoryMaxForm* category_max() const {
    return std::get_if<CategoryMaxForm>(&form_);
  }

  // Throws Error if `set` has items outside the universe.
  Rational Value(ItemSet set) const;
  // m_a(S) = v(S ∪ {a}) - v(S). Throws Error if a ∈ S.
  Rational Marginal(ItemId item, ItemSet set) const;

  // max_S v(S); equals v(A*) for monotone v. Items priced above this are
  // never part of any utility-maximizing bundle.
  const Rational& MaxValue() const { return max_value_; }
  Rational FullValue() const { return Value(universe()); }

  // Same function in TableForm.
  Valuation ExpandToTable() const;

  // "{a,c}" using item names; "{}" for the empty set.
  std::string Format(ItemSet set) const;

 private:
  using Form = std::variant<TableForm, AdditiveGroupsForm, CategoryMaxForm>;
  Valuation(std::vector<std::string> names, Form form);

  Rational ValueUnchecked(ItemSet set) const;

  std::vector<std::string> names_;
  Form form_;
  Rational max_value_;
};

struct ValidationReport {
  bool pass = true;
  // Monotonicity witness: (S, a) with m_a(S) < 0.
  // Submodularity witness: (S, T = S ∪ {b}, a) with m_a(S) < m_a(T).
  ItemSet witness_small;
  ItemSet witness_large;
  ItemId witness_item = -1;
  Rational witness_small_marginal;
  Rational witness_large_marginal;
  std::string message;
};

// Exhaustive over every (S, a ∉ S).
ValidationReport CheckMonotone(const Valuation& v);

// Checks the local condition m_a(S) >= m_a(S ∪ {b}) for all S and distinct
// a, b outside S. Any S ⊆ T is reached from S by adding the items of T \ S
// one at a time, so the local inequalities chain into the global one.
ValidationReport CheckSubmodular(const Valuation& v);

}  // namespace vcgame

#endif  // VCGAME_VALUATION_HPP_
