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

#ifndef VCGAME_IO_HPP_
#define VCGAME_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "vcgame/analysis.hpp"
#include "vcgame/pmvc.hpp"
#include "vcgame/vc_game.hpp"

namespace vcgame {

// Instance documents are a valuation object plus a "vendors" array:
//
//   {"type": "table", "vendors": [["a","b"],["c","d"]],
//    "entries": {"": "0", "a": "3.203", "a,c": "5.404", ...}}
//   {"type": "additive_groups", "vendors": [...], "groups": [["x1","x2"]],
//    "curve": {"kind": "harmonic"} | {"kind": "explicit", "values": [...]}}
//   {"type": "category_max", "vendors": [...], "categories": [["x","y"]],
//    "item_values": {"x": "10", "y": "8"}}
//
// Item ids follow the optional "items" array, else the order items appear in
// "vendors". Every number is a decimal or "num/den" string. Table keys list
// item names separated by commas in any order; the empty key is ∅.
// additive_groups also accepts "curves": one curve object per group.
Valuation ValuationFromJson(const nlohmann::json& doc,
                            const std::vector<std::string>& names);
nlohmann::json ValuationToJson(const Valuation& v);

// Throws ParseError for malformed documents (message names the field).
GameInstance InstanceFromJson(const nlohmann::json& doc,
                              bool allow_uncertified = false);
GameInstance ParseInstance(std::string_view text,
                           bool allow_uncertified = false);
GameInstance LoadInstanceFile(const std::string& path,
                              bool allow_uncertified = false);
nlohmann::json InstanceToJson(const GameInstance& game);

// "a=2.601,b=8.6045". Items not listed get `fallback`.
PriceVector ParsePrices(const GameInstance& game, std::string_view text,
                        const Rational& fallback);
std::string FormatPrices(const GameInstance& game, const PriceVector& prices);

// CSV: header "profile,vendor1,...,vendork"; profile column quoted.
std::string PayoffTableToCsv(const GameInstance& game,
                             const PayoffTable& table);
nlohmann::json PayoffTableToJson(const GameInstance& game,
                                 const PayoffTable& table);
std::string PayoffTableToText(const GameInstance& game,
                              const PayoffTable& table);

nlohmann::json ReportToJson(const GameInstance& game,
                            const EquilibriumReport& report);
EquilibriumReport ReportFromJson(const GameInstance& game,
                                 const nlohmann::json& doc);
std::string ReportToText(const GameInstance& game,
                         const EquilibriumReport& report);

// One JSON object per step, then a status line.
std::string TraceToJsonLines(const GameInstance& game,
                             const DynamicsTrace& trace);

}  // namespace vcgame

#endif  // VCGAME_IO_HPP_
