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

// Python bindings. Exact values cross the boundary as fractions.Fraction;
// prices are accepted as a {name: value} dict where a value may be a
// Fraction, int, or decimal/"num/den" string.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "vcgame/vcgame.hpp"

namespace py = pybind11;
using namespace vcgame;

namespace {

py::object ToFraction(const Rational& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(x.get_str());
}

Rational FromPython(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj)) {
    throw py::type_error("pass exact values (Fraction, int or str), not float");
  }
  return ParseRational(py::str(obj).cast<std::string>());
}

py::list Names(const GameInstance& g, ItemSet s) {
  py::list out;
  for (ItemId a : s.Items()) out.append(g.valuation().name(a));
  return out;
}

ItemSet SetFromNames(const GameInstance& g, const std::vector<std::string>& names) {
  ItemSet s;
  for (const auto& n : names) {
    const auto id = g.valuation().Find(n);
    if (!id) throw ParseError("unknown item '" + n + "'");
    s = s.With(*id);
  }
  return s;
}

PriceVector PricesFromDict(const GameInstance& g, const py::dict& prices) {
  PriceVector p(g.num_items(), UnavailablePrice(g.valuation()));
  for (const auto& [key, value] : prices) {
    const std::string name = py::str(key).cast<std::string>();
    const auto id = g.valuation().Find(name);
    if (!id) throw ParseError("unknown item '" + name + "' in prices");
    p[*id] = FromPython(value);
    if (sgn(p[*id]) < 0) throw ParseError("prices must be nonnegative");
  }
  return p;
}

py::dict PricesToDict(const GameInstance& g, const PriceVector& p) {
  py::dict out;
  for (ItemId a = 0; a < g.num_items(); ++a) {
    out[py::str(g.valuation().name(a))] = ToFraction(p[a]);
  }
  return out;
}

py::list Fractions(const std::vector<Rational>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(ToFraction(x));
  return out;
}

PmvcOptions Options(int threads, std::uint64_t cap) {
  PmvcOptions options;
  options.threads = threads;
  options.profile_cap = cap;
  return options;
}

}  // namespace

PYBIND11_MODULE(_vcgame, m) {
  m.doc() = "Exact analysis of pricing games between vendors and one buyer";

  // Translators are tried newest first, so the base class goes first.
  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());

  py::class_<GameInstance>(m, "Game")
      .def_static("counterexample", &CounterexampleInstance)
      .def_static("harmonic", &HarmonicInstance, py::arg("k"), py::arg("m"))
      .def_static(
          "pos",
          [](int k, int mm, const py::object& eps) {
            return PosInstance(k, mm, FromPython(eps));
          },
          py::arg("k"), py::arg("m"), py::arg("eps") = "1/100")
      .def_static(
          "random",
          [](std::uint64_t seed, int n, int k, const std::string& family) {
            if (family != "coverage" && family != "additive") {
              throw ParseError("family must be 'coverage' or 'additive'");
            }
            return RandomInstance(seed, n, k,
                                  family == "coverage"
                                      ? RandomFamily::kCoverage
                                      : RandomFamily::kAdditiveConcave);
          },
          py::arg("seed"), py::arg("n"), py::arg("k"),
          py::arg("family") = "coverage")
      .def_static(
          "random_category",
          [](std::uint64_t seed, int n, int k, int categories) {
            return CdspInstance(RandomCdspSpec(seed, n, k, categories));
          },
          py::arg("seed"), py::arg("n"), py::arg("k"), py::arg("categories"))
      .def_static(
          "from_json",
          [](const std::string& text, bool allow_uncertified) {
            return ParseInstance(text, allow_uncertified);
          },
          py::arg("text"), py::arg("allow_uncertified") = false)
      .def("to_json", [](const GameInstance& g) { return InstanceToJson(g).dump(); })
      .def_property_readonly("items", [](const GameInstance& g) {
        return g.valuation().names();
      })
      .def_property_readonly("vendors",
                             [](const GameInstance& g) {
                               py::list out;
                               for (ItemSet s : g.vendors()) out.append(Names(g, s));
                               return out;
                             })
      .def_property_readonly("certified", &GameInstance::certified)
      .def("value",
           [](const GameInstance& g, const std::vector<std::string>& names) {
             return ToFraction(g.valuation().Value(SetFromNames(g, names)));
           })
      .def("__repr__", [](const GameInstance& g) {
        return "<vcgame.Game items=" + std::to_string(g.num_items()) +
               " vendors=" + std::to_string(g.num_vendors()) + ">";
      });

  m.def(
      "demand",
      [](const GameInstance& g, const py::dict& prices) {
        const auto d = Demand(g.valuation(), PricesFromDict(g, prices));
        py::dict out;
        out["bundle"] = Names(g, d.chosen);
        out["utility"] = ToFraction(d.utility);
        out["optima"] = d.optima_count;
        out["union_is_optimal"] = d.union_is_optimal;
        return out;
      },
      py::arg("game"), py::arg("prices"),
      "Maximal-buyer demand; unlisted items are unavailable.");

  m.def(
      "mechanism_prices",
      [](const GameInstance& g, const std::string& profile) {
        return PricesToDict(g, PmvcPrices(g, ParseProfile(g, profile)));
      },
      py::arg("game"), py::arg("profile"));

  m.def(
      "payoff_table",
      [](const GameInstance& g, int threads, std::uint64_t cap) {
        const auto table = ComputePayoffTable(g, Options(threads, cap));
        py::list rows;
        for (std::size_t p = 0; p < table.profiles.size(); ++p) {
          rows.append(py::make_tuple(FormatProfile(g, table.profiles[p]),
                                     Fractions(table.outcomes[p].vendor_payoffs)));
        }
        return rows;
      },
      py::arg("game"), py::arg("threads") = 1, py::arg("cap") = 1ULL << 20);

  m.def(
      "pure_equilibria",
      [](const GameInstance& g, int threads, std::uint64_t cap) {
        std::vector<std::string> out;
        for (const auto& s : PmvcPureNe(g, Options(threads, cap))) {
          out.push_back(FormatProfile(g, s));
        }
        return out;
      },
      py::arg("game"), py::arg("threads") = 1, py::arg("cap") = 1ULL << 20);

  m.def(
      "equilibrium_report_json",
      [](const GameInstance& g, int threads, std::uint64_t cap) {
        return ReportToJson(g, MakeEquilibriumReport(g, Options(threads, cap))).dump();
      },
      py::arg("game"), py::arg("threads") = 1, py::arg("cap") = 1ULL << 20);

  m.def(
      "best_response",
      [](const GameInstance& g, int vendor, const py::dict& prices,
         const std::string& method) {
        const auto br = VcBestResponse(g, vendor - 1, PricesFromDict(g, prices),
                                       ParseBestResponseMethod(method));
        py::dict out;
        py::dict own;
        for (ItemId a : g.vendor_items(vendor - 1).Items()) {
          own[py::str(g.valuation().name(a))] = ToFraction(br.prices[a]);
        }
        out["prices"] = own;
        out["revenue"] = ToFraction(br.revenue);
        out["supremum"] = ToFraction(br.supremum);
        out["attained"] = br.attained;
        out["bundle"] = Names(g, br.bought);
        return out;
      },
      py::arg("game"), py::arg("vendor"), py::arg("prices"),
      py::arg("method") = "exact", "Vendors are numbered from 1.");

  m.def(
      "verify_equilibrium",
      [](const GameInstance& g, const py::dict& prices, const std::string& method) {
        const auto verdict =
            VcVerifyNe(g, PricesFromDict(g, prices), ParseBestResponseMethod(method));
        py::dict out;
        out["certified"] = verdict.certified;
        if (verdict.refutation) {
          const auto& cert = *verdict.refutation;
          py::dict dev;
          for (const auto& [a, p] : cert.deviation_prices) {
            dev[py::str(g.valuation().name(a))] = ToFraction(p);
          }
          out["vendor"] = cert.vendor + 1;
          out["deviation"] = dev;
          out["old_revenue"] = ToFraction(cert.old_revenue);
          out["new_revenue"] = ToFraction(cert.new_revenue);
        }
        return out;
      },
      py::arg("game"), py::arg("prices"), py::arg("method") = "exact");

  m.def(
      "dynamics",
      [](const GameInstance& g, const std::string& start, int max_steps) {
        const auto trace = PmvcDynamics(g, ParseProfile(g, start), max_steps);
        py::list steps;
        for (const auto& s : trace.steps) {
          steps.append(py::make_tuple(s.vendor + 1, FormatProfile(g, *s.profile),
                                      Fractions(s.payoffs)));
        }
        py::dict out;
        out["steps"] = steps;
        out["status"] = ToString(trace.status);
        out["period"] = trace.cycle_period;
        return out;
      },
      py::arg("game"), py::arg("start"), py::arg("max_steps") = 1000);

  m.def(
      "category_equilibrium",
      [](const GameInstance& g) { return PricesToDict(g, CdspEquilibrium(g)); },
      py::arg("game"));

  m.def("harmonic", [](int n) { return ToFraction(Harmonic(n)); }, py::arg("n"));
}
