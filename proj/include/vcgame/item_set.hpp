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

#ifndef VCGAME_ITEM_SET_HPP_
#define VCGAME_ITEM_SET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace vcgame {

// Dense universes are capped so that a full table fits in memory.
inline constexpr int kMaxItems = 20;

using ItemId = int;

struct Item {
  ItemId id = 0;
  std::string name;
};

// A subset of the item universe, one bit per item id.
class ItemSet {
 public:
  constexpr ItemSet() = default;
  constexpr explicit ItemSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ItemSet Single(ItemId item) {
    return ItemSet(std::uint32_t{1} << item);
  }
  // {0, ..., n-1}
  static constexpr ItemSet FirstN(int n) {
    return ItemSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(ItemId item) const { return (bits_ >> item) & 1U; }
  constexpr bool IsSubsetOf(ItemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr ItemSet With(ItemId item) const {
    return ItemSet(bits_ | (std::uint32_t{1} << item));
  }
  constexpr ItemSet Without(ItemId item) const {
    return ItemSet(bits_ & ~(std::uint32_t{1} << item));
  }

  constexpr ItemSet operator|(ItemSet o) const { return ItemSet(bits_ | o.bits_); }
  constexpr ItemSet operator&(ItemSet o) const { return ItemSet(bits_ & o.bits_); }
  constexpr ItemSet operator-(ItemSet o) const { return ItemSet(bits_ & ~o.bits_); }
  constexpr ItemSet& operator|=(ItemSet o) { bits_ |= o.bits_; return *this; }
  constexpr ItemSet& operator&=(ItemSet o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const ItemSet&) const = default;

  // Ascending item ids.
  std::vector<ItemId> Items() const {
    std::vector<ItemId> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

// Calls fn(ItemSet) for every subset of `mask`, in increasing bit order,
// starting with the empty set.
template <typename Fn>
void ForEachSubset(ItemSet mask, Fn&& fn) {
  const std::uint32_t m = mask.bits();
  std::uint32_t sub = 0;
  while (true) {
    fn(ItemSet(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

// Calls fn(a) for each item of `mask` in increasing order.
template <typename Fn>
void ForEachItem(ItemSet mask, Fn&& fn) {
  for (std::uint32_t m = mask.bits(); m != 0; m &= m - 1) {
    fn(static_cast<ItemId>(std::countr_zero(m)));
  }
}

// The i-th subset of `base` under the numbering that maps bit j of `index`
// to the j-th smallest item of `base`. Index 0 is the empty set.
inline ItemSet NthSubset(const std::vector<ItemId>& base, std::uint64_t index) {
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j < base.size(); ++j) {
    if ((index >> j) & 1U) bits |= std::uint32_t{1} << base[j];
  }
  return ItemSet(bits);
}

}  // namespace vcgame

#endif  // VCGAME_ITEM_SET_HPP_
