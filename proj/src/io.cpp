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

#include "vcgame/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace vcgame {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what);
}

const json& Require(const json& doc, const char* key, const std::string& at) {
  if (!doc.is_object() || !doc.contains(key)) {
    Fail(at, std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

Rational NumberField(const json& x, const std::string& field) {
  if (!x.is_string()) Fail(field, "numbers must be decimal strings");
  try {
    return ParseRational(x.get<std::string>());
  } catch (const ParseError& e) {
    Fail(field, e.what());
  }
}

std::map<std::string, ItemId> IndexNames(const std::vector<std::string>& names) {
  std::map<std::string, ItemId> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    index[names[i]] = static_cast<ItemId>(i);
  }
  return index;
}

ItemId Lookup(const std::map<std::string, ItemId>& index,
              const std::string& name, const std::string& field) {
  auto it = index.find(name);
  if (it == index.end()) Fail(field, "unknown item '" + name + "'");
  return it->second;
}

ItemSet NameList(const json& list, const std::map<std::string, ItemId>& index,
                 const std::string& field) {
  if (!list.is_array()) Fail(field, "expected an array of item names");
  ItemSet set;
  for (std::size_t j = 0; j < list.size(); ++j) {
    const std::string at = field + "/" + std::to_string(j);
    if (!list[j].is_string()) Fail(at, "item names must be strings");
    const ItemId id = Lookup(index, list[j].get<std::string>(), at);
    if (set.contains(id)) Fail(at, "item listed twice");
    set = set.With(id);
  }
  return set;
}

std::vector<ItemSet> SetList(const json& doc, const char* key,
                             const std::map<std::string, ItemId>& index) {
  const std::string at = std::string("/") + key;
  const json& list = Require(doc, key, "");
  if (!list.is_array()) Fail(at, "expected an array of arrays");
  std::vector<ItemSet> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(NameList(list[i], index, at + "/" + std::to_string(i)));
  }
  return out;
}

ItemSet KeySet(const std::string& key,
               const std::map<std::string, ItemId>& index,
               const std::string& field) {
  std::string body = key;
  if (!body.empty() && body.front() == '{' && body.back() == '}') {
    body = body.substr(1, body.size() - 2);
  }
  ItemSet set;
  if (body.empty()) return set;
  std::stringstream ss(body);
  std::string name;
  while (std::getline(ss, name, ',')) {
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    while (!name.empty() && name.back() == ' ') name.pop_back();
    const ItemId id = Lookup(index, name, field);
    if (set.contains(id)) Fail(field, "item '" + name + "' listed twice");
    set = set.With(id);
  }
  return set;
}

std::vector<Rational> CurveFromJson(const json& curve, int size,
                                    const std::string& field) {
  const json& kind_field = Require(curve, "kind", field);
  if (!kind_field.is_string()) Fail(field + "/kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();
  std::vector<Rational> out{Rational(0)};
  if (kind == "harmonic") {
    Rational h = 0;
    for (int t = 1; t <= size; ++t) {
      h += Rational(1, t);
      out.push_back(h);
    }
    return out;
  }
  if (kind != "explicit") Fail(field + "/kind", "unknown curve kind '" + kind + "'");
  const json& values = Require(curve, "values", field);
  if (!values.is_array()) Fail(field + "/values", "expected an array");
  if (values.size() < static_cast<std::size_t>(size) + 1) {
    Fail(field + "/values", "needs at least " + std::to_string(size + 1) +
                                " values for a group of " +
                                std::to_string(size));
  }
  out.clear();
  for (int t = 0; t <= size; ++t) {
    out.push_back(
        NumberField(values[t], field + "/values/" + std::to_string(t)));
  }
  return out;
}

json CurveToJson(const std::vector<Rational>& curve) {
  json values = json::array();
  for (const auto& x : curve) values.push_back(FormatRational(x));
  return json{{"kind", "explicit"}, {"values", values}};
}

json NameArray(const Valuation& v, ItemSet set) {
  json out = json::array();
  for (ItemId a : set.Items()) out.push_back(v.name(a));
  return out;
}

std::string KeyOf(const Valuation& v, ItemSet set) {
  std::string out;
  for (ItemId a : set.Items()) {
    if (!out.empty()) out += ",";
    out += v.name(a);
  }
  return out;
}

std::string OptionalRational(const std::optional<Rational>& x) {
  return x ? FormatRational(*x) : "undefined (no pure NE)";
}

std::string CsvQuote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Valuation ValuationFromJson(const json& doc,
                            const std::vector<std::string>& names) {
  const json& type_field = Require(doc, "type", "");
  if (!type_field.is_string()) Fail("/type", "expected a string");
  const std::string type = type_field.get<std::string>();
  const auto index = IndexNames(names);
  try {
    if (type == "table") {
      const json& entries = Require(doc, "entries", "");
      if (!entries.is_object()) Fail("/entries", "expected an object");
      std::vector<Rational> values(std::size_t{1} << names.size());
      std::vector<char> given(values.size(), 0);
      for (const auto& [key, value] : entries.items()) {
        const std::string at = "/entries/" + key;
        const ItemSet s = KeySet(key, index, at);
        if (given[s.bits()]) Fail(at, "bundle listed twice");
        given[s.bits()] = 1;
        values[s.bits()] = NumberField(value, at);
      }
      for (std::size_t s = 1; s < values.size(); ++s) {
        if (!given[s]) {
          std::string key;
          for (std::size_t a = 0; a < names.size(); ++a) {
            if ((s >> a) & 1U) key += (key.empty() ? "" : ",") + names[a];
          }
          Fail("/entries", "missing bundle \"" + key + "\"");
        }
      }
      return Valuation::Table(names, std::move(values));
    }
    if (type == "additive_groups") {
      std::vector<ItemSet> groups = SetList(doc, "groups", index);
      std::vector<std::vector<Rational>> curves;
      if (doc.contains("curves")) {
        const json& list = doc.at("curves");
        if (!list.is_array() || list.size() != groups.size()) {
          Fail("/curves", "expected one curve per group");
        }
        for (std::size_t g = 0; g < groups.size(); ++g) {
          curves.push_back(CurveFromJson(list[g], groups[g].size(),
                                         "/curves/" + std::to_string(g)));
        }
      } else {
        const json& curve = Require(doc, "curve", "");
        for (ItemSet g : groups) {
          curves.push_back(CurveFromJson(curve, g.size(), "/curve"));
        }
      }
      return Valuation::AdditiveGroups(names, std::move(groups),
                                       std::move(curves));
    }
    if (type == "category_max") {
      std::vector<ItemSet> categories = SetList(doc, "categories", index);
      const json& item_values = Require(doc, "item_values", "");
      if (!item_values.is_object()) Fail("/item_values", "expected an object");
      std::vector<Rational> values(names.size());
      std::vector<char> given(names.size(), 0);
      for (const auto& [name, value] : item_values.items()) {
        const std::string at = "/item_values/" + name;
        const ItemId id = Lookup(index, name, at);
        values[id] = NumberField(value, at);
        given[id] = 1;
      }
      for (std::size_t a = 0; a < names.size(); ++a) {
        if (!given[a]) Fail("/item_values", "missing item '" + names[a] + "'");
      }
      return Valuation::CategoryMax(names, std::move(categories),
                                    std::move(values));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    Fail("valuation", e.what());
  }
  Fail("/type", "unknown valuation type '" + type + "'");
}

json ValuationToJson(const Valuation& v) {
  json doc;
  doc["items"] = v.names();
  if (const auto* t = v.table()) {
    doc["type"] = "table";
    json entries = json::object();
    for (std::size_t s = 0; s < t->values.size(); ++s) {
      entries[KeyOf(v, ItemSet(static_cast<std::uint32_t>(s)))] =
          FormatRational(t->values[s]);
    }
    doc["entries"] = entries;
  } else if (const auto* ag = v.additive_groups()) {
    doc["type"] = "additive_groups";
    json groups = json::array();
    json curves = json::array();
    for (std::size_t g = 0; g < ag->groups.size(); ++g) {
      groups.push_back(NameArray(v, ag->groups[g]));
      curves.push_back(CurveToJson(ag->curves[g]));
    }
    doc["groups"] = groups;
    doc["curves"] = curves;
  } else {
    const auto* cm = v.category_max();
    doc["type"] = "category_max";
    json categories = json::array();
    for (ItemSet c : cm->categories) categories.push_back(NameArray(v, c));
    doc["categories"] = categories;
    json values = json::object();
    for (ItemId a = 0; a < v.size(); ++a) {
      values[v.name(a)] = FormatRational(cm->item_values[a]);
    }
    doc["item_values"] = values;
  }
  return doc;
}

GameInstance InstanceFromJson(const json& doc, bool allow_uncertified) {
  if (!doc.is_object()) Fail("/", "instance must be a JSON object");
  const json& vendors = Require(doc, "vendors", "");
  if (!vendors.is_array() || vendors.empty()) {
    Fail("/vendors", "expected a nonempty array of arrays");
  }
  std::vector<std::string> names;
  if (doc.contains("items")) {
    const json& items = doc.at("items");
    if (!items.is_array()) Fail("/items", "expected an array of names");
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (!items[j].is_string()) {
        Fail("/items/" + std::to_string(j), "item names must be strings");
      }
      names.push_back(items[j].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < vendors.size(); ++i) {
      if (!vendors[i].is_array()) {
        Fail("/vendors/" + std::to_string(i), "expected an array");
      }
      for (std::size_t j = 0; j < vendors[i].size(); ++j) {
        const json& x = vendors[i][j];
        if (!x.is_string()) {
          Fail("/vendors/" + std::to_string(i) + "/" + std::to_string(j),
               "item names must be strings");
        }
        names.push_back(x.get<std::string>());
      }
    }
  }
  if (names.size() > static_cast<std::size_t>(kMaxItems)) {
    Fail("/vendors", "at most " + std::to_string(kMaxItems) + " items");
  }
  Valuation v = [&] {
    try {
      return ValuationFromJson(doc, names);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      Fail("valuation", e.what());
    }
  }();
  const auto index = IndexNames(v.names());
  std::vector<ItemSet> partition = SetList(doc, "vendors", index);
  try {
    return GameInstance::Make(std::move(v), std::move(partition),
                              allow_uncertified);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    Fail("instance", e.what());
  }
}

GameInstance ParseInstance(std::string_view text, bool allow_uncertified) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return InstanceFromJson(doc, allow_uncertified);
}

GameInstance LoadInstanceFile(const std::string& path, bool allow_uncertified) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseInstance(buffer.str(), allow_uncertified);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json InstanceToJson(const GameInstance& game) {
  json doc = ValuationToJson(game.valuation());
  json vendors = json::array();
  for (ItemSet a : game.vendors()) {
    vendors.push_back(NameArray(game.valuation(), a));
  }
  doc["vendors"] = vendors;
  return doc;
}

PriceVector ParsePrices(const GameInstance& game, std::string_view text,
                        const Rational& fallback) {
  PriceVector prices(game.num_items(), fallback);
  std::vector<char> given(game.num_items(), 0);
  std::stringstream ss{std::string(text)};
  std::string entry;
  while (std::getline(ss, entry, ',')) {
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw ParseError("price entry '" + entry + "' is not name=value");
    }
    const auto trim = [](std::string x) {
      x.erase(0, x.find_first_not_of(" \t"));
      x.erase(x.find_last_not_of(" \t") + 1);
      return x;
    };
    const std::string name = trim(entry.substr(0, eq));
    const auto id = game.valuation().Find(name);
    if (!id) throw ParseError("unknown item '" + name + "' in prices");
    if (given[*id]) throw ParseError("item '" + name + "' priced twice");
    given[*id] = 1;
    prices[*id] = ParseRational(trim(entry.substr(eq + 1)));
    if (sgn(prices[*id]) < 0) throw ParseError("prices must be nonnegative");
  }
  return prices;
}

std::string FormatPrices(const GameInstance& game, const PriceVector& prices) {
  std::string out;
  for (ItemId a = 0; a < game.num_items(); ++a) {
    if (a > 0) out += ",";
    out += game.valuation().name(a) + "=" + FormatRational(prices[a]);
  }
  return out;
}

std::string PayoffTableToCsv(const GameInstance& game,
                             const PayoffTable& table) {
  std::string out = "profile";
  for (int i = 1; i <= game.num_vendors(); ++i) {
    out += ",vendor" + std::to_string(i);
  }
  out += "\n";
  for (std::size_t p = 0; p < table.profiles.size(); ++p) {
    out += CsvQuote(FormatProfile(game, table.profiles[p]));
    for (const auto& x : table.outcomes[p].vendor_payoffs) {
      out += "," + FormatRational(x);
    }
    out += "\n";
  }
  return out;
}

json PayoffTableToJson(const GameInstance& game, const PayoffTable& table) {
  json rows = json::array();
  for (std::size_t p = 0; p < table.profiles.size(); ++p) {
    const Outcome& o = table.outcomes[p];
    json payoffs = json::array();
    for (const auto& x : o.vendor_payoffs) payoffs.push_back(FormatRational(x));
    json prices = json::object();
    for (ItemId a = 0; a < game.num_items(); ++a) {
      prices[game.valuation().name(a)] = FormatRational(o.prices[a]);
    }
    rows.push_back({{"profile", FormatProfile(game, table.profiles[p])},
                    {"payoffs", payoffs},
                    {"prices", prices},
                    {"sold", game.valuation().Format(o.sold)},
                    {"buyer_utility", FormatRational(o.buyer_utility)},
                    {"welfare", FormatRational(o.welfare)}});
  }
  return json{{"vendors", game.num_vendors()}, {"rows", rows}};
}

std::string PayoffTableToText(const GameInstance& game,
                              const PayoffTable& table) {
  std::vector<std::string> labels;
  std::size_t width = 7;
  for (const auto& s : table.profiles) {
    labels.push_back(FormatProfile(game, s));
    width = std::max(width, labels.back().size());
  }
  std::ostringstream out;
  out << std::string("profile") << std::string(width - 7 + 2, ' ') << "payoffs\n";
  for (std::size_t p = 0; p < table.profiles.size(); ++p) {
    out << labels[p] << std::string(width - labels[p].size() + 2, ' ') << "(";
    const auto& pay = table.outcomes[p].vendor_payoffs;
    for (std::size_t i = 0; i < pay.size(); ++i) {
      out << (i ? ", " : "") << FormatRational(pay[i]);
    }
    out << ")\n";
  }
  return out.str();
}

json ReportToJson(const GameInstance& game, const EquilibriumReport& report) {
  json equilibria = json::array();
  for (const auto& [profile, welfare] : report.equilibria) {
    equilibria.push_back({{"profile", FormatProfile(game, profile)},
                          {"welfare", FormatRational(welfare)}});
  }
  return json{{"equilibrium_count", report.equilibria.size()},
              {"equilibria", equilibria},
              {"optimal_welfare", FormatRational(report.optimal_welfare)},
              {"poa", OptionalRational(report.poa)},
              {"pos", OptionalRational(report.pos)},
              {"m", report.max_vendor_size},
              {"bound_Hm_plus_1", FormatRational(report.bound)},
              {"bound_satisfied", report.bound_satisfied}};
}

EquilibriumReport ReportFromJson(const GameInstance& game, const json& doc) {
  EquilibriumReport report;
  for (const auto& e : Require(doc, "equilibria", "")) {
    report.equilibria.emplace_back(
        ParseProfile(game, Require(e, "profile", "/equilibria").get<std::string>()),
        NumberField(Require(e, "welfare", "/equilibria"), "/equilibria/welfare"));
  }
  report.optimal_welfare =
      NumberField(Require(doc, "optimal_welfare", ""), "/optimal_welfare");
  auto optional = [&](const char* key) -> std::optional<Rational> {
    const json& x = Require(doc, key, "");
    if (x.is_string() && x.get<std::string>().rfind("undefined", 0) == 0) {
      return std::nullopt;
    }
    return NumberField(x, std::string("/") + key);
  };
  report.poa = optional("poa");
  report.pos = optional("pos");
  report.max_vendor_size = Require(doc, "m", "").get<int>();
  report.bound = NumberField(Require(doc, "bound_Hm_plus_1", ""), "/bound_Hm_plus_1");
  report.bound_satisfied = Require(doc, "bound_satisfied", "").get<bool>();
  return report;
}

std::string ReportToText(const GameInstance& game,
                         const EquilibriumReport& report) {
  std::ostringstream out;
  out << report.equilibria.size() << " pure Nash equilibria\n";
  out << "optimal welfare = " << FormatRational(report.optimal_welfare) << "\n";
  if (!report.poa) {
    out << "PoA undefined (no pure NE), PoS undefined (no pure NE)\n";
  } else {
    out << "PoA = " << FormatRational(*report.poa) << ", bound H_"
        << report.max_vendor_size << "+1 = " << FormatRational(report.bound)
        << ", " << (report.bound_satisfied ? "satisfied" : "VIOLATED") << "\n";
    out << "PoS = " << OptionalRational(report.pos) << "\n";
  }
  constexpr std::size_t kListed = 20;
  for (std::size_t e = 0; e < report.equilibria.size() && e < kListed; ++e) {
    out << "  " << FormatProfile(game, report.equilibria[e].first)
        << "  welfare " << FormatRational(report.equilibria[e].second) << "\n";
  }
  if (report.equilibria.size() > kListed) {
    out << "  ... " << report.equilibria.size() - kListed << " more\n";
  }
  return out.str();
}

std::string TraceToJsonLines(const GameInstance& game,
                             const DynamicsTrace& trace) {
  std::string out;
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const DynamicsStep& step = trace.steps[t];
    json payoffs = json::array();
    for (const auto& x : step.payoffs) payoffs.push_back(FormatRational(x));
    json prices = json::object();
    for (ItemId a = 0; a < game.num_items(); ++a) {
      prices[game.valuation().name(a)] = FormatRational(step.prices[a]);
    }
    json line{{"step", t + 1},
              {"vendor", step.vendor + 1},
              {"prices", prices},
              {"payoffs", payoffs}};
    if (step.profile) line["profile"] = FormatProfile(game, *step.profile);
    out += line.dump() + "\n";
  }
  json status{{"status", ToString(trace.status)}, {"moves", trace.steps.size()}};
  if (trace.status == DynamicsStatus::kCycle) status["period"] = trace.cycle_period;
  out += status.dump() + "\n";
  return out;
}

}  // namespace vcgame
