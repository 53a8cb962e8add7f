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

// Command-line front end for the vendor-competition toolkit.
//
//   vcgame check  INSTANCE
//   vcgame table  INSTANCE [--format text|json|csv] [--golden PATH]
//   vcgame ne     INSTANCE
//   vcgame poa    --gen harmonic:2,3
//   vcgame brd    INSTANCE --profile "{a}|{c}"
//   vcgame cdsp   INSTANCE --verify
//   vcgame gen    --gen pos:2,3 --eps 1/100
//   vcgame bestresp INSTANCE --vendor 2 --prices a=2.601,b=8.6045
//   vcgame verify INSTANCE --profile "{a}|{c}" --method exact
//
// Exit codes: 0 success, 1 negative analysis result, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vcgame/vcgame.hpp"

namespace {

using vcgame::GameInstance;
using vcgame::ParseError;
using vcgame::Rational;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string instance_path;
  std::string gen;
  std::string method = "exact";
  std::uint64_t cap = std::uint64_t{1} << 20;
  std::string eps;
  std::string format = "text";
  std::string golden;
  std::uint64_t seed = 1;
  int threads = 1;
  // Command-specific.
  std::string profile;
  std::string prices;
  int vendor = 0;
  int max_steps = 1000;
  bool verify = false;
  bool allow_uncertified = false;
};

std::vector<int> SplitInts(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + part + "'");
    }
  }
  return out;
}

GameInstance Generate(const RunConfig& cfg) {
  const auto colon = cfg.gen.find(':');
  const std::string name = cfg.gen.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : cfg.gen.substr(colon + 1);
  if (name == "counterexample") return vcgame::CounterexampleInstance();
  if (name == "harmonic") {
    const auto v = SplitInts(args);
    if (v.size() != 2) throw ParseError("harmonic needs k,m");
    return vcgame::HarmonicInstance(v[0], v[1]);
  }
  if (name == "pos") {
    std::string ints = args;
    std::string eps = cfg.eps.empty() ? "1/100" : cfg.eps;
    if (std::count(args.begin(), args.end(), ',') == 2) {
      const auto last = args.rfind(',');
      ints = args.substr(0, last);
      eps = args.substr(last + 1);
    }
    const auto v = SplitInts(ints);
    if (v.size() != 2) throw ParseError("pos needs k,m[,eps]");
    return vcgame::PosInstance(v[0], v[1], vcgame::ParseRational(eps));
  }
  if (name == "random") {
    std::stringstream ss(args);
    std::string n, k, family = "coverage";
    std::getline(ss, n, ',');
    std::getline(ss, k, ',');
    std::getline(ss, family, ',');
    vcgame::RandomFamily f;
    if (family == "coverage") {
      f = vcgame::RandomFamily::kCoverage;
    } else if (family == "additive" || family == "additive-concave") {
      f = vcgame::RandomFamily::kAdditiveConcave;
    } else {
      throw ParseError("unknown random family '" + family + "'");
    }
    const auto nk = SplitInts(n + "," + k);
    return vcgame::RandomInstance(cfg.seed, nk[0], nk[1], f);
  }
  if (name == "cdsp-random") {
    const auto v = SplitInts(args);
    if (v.size() != 3) throw ParseError("cdsp-random needs n,k,categories");
    return vcgame::CdspInstance(vcgame::RandomCdspSpec(cfg.seed, v[0], v[1], v[2]));
  }
  throw ParseError("unknown generator '" + name + "'");
}

GameInstance LoadInput(const RunConfig& cfg, bool allow_uncertified) {
  if (cfg.instance_path.empty() == cfg.gen.empty()) {
    throw ParseError("give exactly one of INSTANCE or --gen");
  }
  if (!cfg.gen.empty()) return Generate(cfg);
  return vcgame::LoadInstanceFile(cfg.instance_path, allow_uncertified);
}

vcgame::PmvcOptions Options(const RunConfig& cfg) {
  vcgame::PmvcOptions options;
  options.profile_cap = cfg.cap;
  options.threads = cfg.threads;
  if (!cfg.eps.empty() && cfg.gen.rfind("pos", 0) != 0) {
    options.undercut = vcgame::ParseRational(cfg.eps);
  }
  return options;
}

vcgame::PriceVector InputPrices(const RunConfig& cfg, const GameInstance& g) {
  if (!cfg.profile.empty()) {
    if (!cfg.prices.empty()) {
      throw ParseError("give at most one of --profile or --prices");
    }
    return vcgame::PmvcPrices(g, vcgame::ParseProfile(g, cfg.profile));
  }
  return vcgame::ParsePrices(g, cfg.prices,
                             vcgame::UnavailablePrice(g.valuation()));
}

int RunCheck(const RunConfig& cfg) {
  const GameInstance g = LoadInput(cfg, /*allow_uncertified=*/true);
  const auto mono = vcgame::CheckMonotone(g.valuation());
  const auto sub = vcgame::CheckSubmodular(g.valuation());
  if (cfg.format == "json") {
    nlohmann::json doc{
        {"monotone", {{"pass", mono.pass}, {"detail", mono.message}}},
        {"submodular", {{"pass", sub.pass}, {"detail", sub.message}}}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "monotone: " << (mono.pass ? "PASS" : "FAIL");
    if (!mono.pass) {
      std::cout << " witness (" << g.valuation().Format(mono.witness_small)
                << ", " << g.valuation().name(mono.witness_item)
                << "): " << mono.message;
    }
    std::cout << "\nsubmodular: " << (sub.pass ? "PASS" : "FAIL");
    if (!sub.pass) {
      std::cout << " witness (" << g.valuation().Format(sub.witness_small)
                << ", " << g.valuation().Format(sub.witness_large) << ", "
                << g.valuation().name(sub.witness_item) << "): "
                << vcgame::FormatRational(sub.witness_small_marginal) << " < "
                << vcgame::FormatRational(sub.witness_large_marginal);
    }
    std::cout << "\n";
  }
  return mono.pass && sub.pass ? kOk : kNegative;
}

int RunTable(const RunConfig& cfg) {
  const GameInstance g = LoadInput(cfg, cfg.allow_uncertified);
  const auto table = vcgame::ComputePayoffTable(g, Options(cfg));
  const std::string csv = vcgame::PayoffTableToCsv(g, table);
  if (cfg.format == "csv") {
    std::cout << csv;
  } else if (cfg.format == "json") {
    std::cout << vcgame::PayoffTableToJson(g, table).dump(2) << "\n";
  } else {
    std::cout << vcgame::PayoffTableToText(g, table);
  }
  if (!cfg.golden.empty()) {
    std::ifstream in(cfg.golden);
    if (!in) throw ParseError("cannot open golden file '" + cfg.golden + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (buffer.str() != csv) {
      std::cerr << "golden: MISMATCH against " << cfg.golden << "\n";
      return kNegative;
    }
    std::cerr << "golden: match\n";
  }
  return kOk;
}

int RunNe(const RunConfig& cfg) {
  const GameInstance g = LoadInput(cfg, cfg.allow_uncertified);
  const auto ne = vcgame::PmvcPureNe(g, Options(cfg));
  if (cfg.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& s : ne) list.push_back(vcgame::FormatProfile(g, s));
    std::cout << nlohmann::json{{"count", ne.size()}, {"equilibria", list}}.dump(2)
              << "\n";
  } else {
    std::cout << ne.size() << " pure Nash equilibria\n";
    for (const auto& s : ne) std::cout << "  " << vcgame::FormatProfile(g, s) << "\n";
  }
  return kOk;
}

int RunPoa(const RunConfig& cfg) {
  const GameInstance g = LoadInput(cfg, cfg.allow_uncertified);
  const auto report = vcgame::MakeEquilibriumReport(g, Options(cfg));
  if (cfg.format == "json") {
    std::cout << vcgame::ReportToJson(g, report).dump(2) << "\n";
  } else {
    std::cout << vcgame::ReportToText(g, report);
  }
  return report.bound_satisfied ? kOk : kNegative;
}

int RunBrd(const RunConfig& cfg) {
  const GameInstance g = LoadInput(cfg, cfg.allow_uncertified);
  vcgame::DynamicsTrace trace;
  if (!cfg.prices.empty()) {
    trace = vcgame::VcDynamics(
        g,
        vcgame::ParsePrices(g, cfg.prices, vcgame::UnavailablePrice(g.valuation())),
        vcgame::ParseBestResponseMethod(cfg.method), cfg.max_steps);
  } else {
    vcgame::StrategyProfile start;
    if (cfg.profile.empty()) {
      start.offered = g.vendors();
    } else {
      start = vcgame::ParseProfile(g, cfg.profile);
    }
    trace = vcgame::PmvcDynamics(g, start, cfg.max_steps);
  }
  if (cfg.format == "json") {
    std::cout << vcgame::TraceToJsonLines(g, trace);
    return kOk;
  }
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const auto& step = trace.steps[t];
    std::cout << "step " << t + 1 << ": vendor " << step.vendor + 1 << " -> ";
    if (step.profile) {
      std::cout << vcgame::FormatProfile(g, *step.profile);
    } else {
      std::cout << vcgame::FormatPrices(g, step.prices);
    }
    std::cout << "  payoffs (";
    for (std::size_t i = 0; i < step.payoffs.size(); ++i) {
      std::cout << (i ? ", " : "") << vcgame::FormatRational(step.payoffs[i]);
    }
    std::cout << ")\n";
  }
  std::cout << vcgame::ToString(trace.status);
  if (trace.status == vcgame::DynamicsStatus::kCycle) {
    std::cout << " (period " << trace.cycle_period << ")";
  }
  std::cout << " after " << trace.steps.size() << " moves\n";
  return kOk;
}

int RunCdsp(const RunConfig& cfg) {
  const GameInstance g = LoadInput(cfg, false);
  const auto prices = vcgame::CdspEquilibrium(g);
  const auto demand = vcgame::Demand(g.valuation(), prices);
  const Rational welfare = g.valuation().Value(demand.chosen);
  const bool optimal = welfare == g.valuation().FullValue();
  std::cout << "prices: " << vcgame::FormatPrices(g, prices) << "\n";
  std::cout << "bought: " << g.valuation().Format(demand.chosen) << "\n";
  std::cout << "revenues:";
  for (int i = 0; i < g.num_vendors(); ++i) {
    std::cout << " " << vcgame::FormatRational(vcgame::TotalPrice(
                            prices, demand.chosen & g.vendor_items(i)));
  }
  std::cout << "\nwelfare: " << vcgame::FormatRational(welfare)
            << (optimal ? " (optimal)" : " (suboptimal)") << "\n";
  if (!cfg.verify) return kOk;
  const auto verdict = vcgame::VcVerifyNe(
      g, prices, vcgame::ParseBestResponseMethod(cfg.method));
  if (verdict.certified) {
    std::cout << "equilibrium certified; welfare "
              << (optimal ? "optimal" : "suboptimal") << "\n";
    return optimal ? kOk : kNegative;
  }
  std::cout << "equilibrium refuted: vendor " << verdict.refutation->vendor + 1
            << " gains " << vcgame::FormatRational(verdict.refutation->new_revenue)
            << " > " << vcgame::FormatRational(verdict.refutation->old_revenue)
            << "\n";
  return kNegative;
}

int RunGen(const RunConfig& cfg) {
  if (cfg.gen.empty()) throw ParseError("gen needs --gen");
  std::cout << vcgame::InstanceToJson(Generate(cfg)).dump(2) << "\n";
  return kOk;
}

int RunBestResponse(const RunConfig& cfg) {
  const GameInstance g = LoadInput(cfg, cfg.allow_uncertified);
  if (cfg.vendor < 1 || cfg.vendor > g.num_vendors()) {
    throw ParseError("--vendor must be in 1.." + std::to_string(g.num_vendors()));
  }
  const auto prices = InputPrices(cfg, g);
  const auto br = vcgame::VcBestResponse(g, cfg.vendor - 1, prices,
                                         vcgame::ParseBestResponseMethod(cfg.method));
  if (cfg.format == "json") {
    nlohmann::json own = nlohmann::json::object();
    for (auto a : g.vendor_items(cfg.vendor - 1).Items()) {
      own[g.valuation().name(a)] = vcgame::FormatRational(br.prices[a]);
    }
    std::cout << nlohmann::json{{"vendor", cfg.vendor},
                                {"method", cfg.method},
                                {"prices", own},
                                {"revenue", vcgame::FormatRational(br.revenue)},
                                {"bought", g.valuation().Format(br.bought)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "best response of vendor " << cfg.vendor << " (" << cfg.method
              << "):";
    for (auto a : g.vendor_items(cfg.vendor - 1).Items()) {
      std::cout << " " << g.valuation().name(a) << "="
                << vcgame::FormatRational(br.prices[a]);
    }
    std::cout << "\nrevenue " << vcgame::FormatRational(br.revenue)
              << ", buyer takes " << g.valuation().Format(br.bought) << "\n";
  }
  return kOk;
}

int RunVerify(const RunConfig& cfg) {
  const GameInstance g = LoadInput(cfg, cfg.allow_uncertified);
  const auto prices = InputPrices(cfg, g);
  const auto method = vcgame::ParseBestResponseMethod(cfg.method);
  const auto verdict = vcgame::VcVerifyNe(g, prices, method);
  if (verdict.certified) {
    std::cout << (method == vcgame::BestResponseMethod::kTargetSetExact
                      ? "NE certified\n"
                      : "no deviation found (" + cfg.method +
                            " search is sound for refutation only)\n");
    return kOk;
  }
  const auto& cert = *verdict.refutation;
  std::cout << "refuted: vendor " << cert.vendor + 1 << " deviates to";
  for (const auto& [a, p] : cert.deviation_prices) {
    std::cout << " " << g.valuation().name(a) << "=" << vcgame::FormatRational(p);
  }
  std::cout << " and earns " << vcgame::FormatRational(cert.new_revenue) << " > "
            << vcgame::FormatRational(cert.old_revenue) << "\n";
  return kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pricing games between vendors and one submodular buyer"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", cfg.instance_path, "Instance JSON file");
    sub->add_option("--gen", cfg.gen,
                    "Generator: counterexample | harmonic:k,m | pos:k,m[,eps] | "
                    "random:n,k[,coverage|additive] | cdsp-random:n,k,r");
    sub->add_option("--method", cfg.method, "Best response: candidate|exact|grid")
        ->check(CLI::IsMember({"candidate", "exact", "grid", "candidate-set",
                               "target-set-exact"}));
    sub->add_option("--cap", cfg.cap, "Strategy-profile cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--eps", cfg.eps,
                    "Epsilon for pos instances, otherwise the PMVC undercut");
    sub->add_option("--format", cfg.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--golden", cfg.golden, "Compare the CSV table to this file");
    sub->add_option("--seed", cfg.seed, "Seed for random generators");
    sub->add_option("--threads", cfg.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--allow-uncertified", cfg.allow_uncertified,
                  "Accept valuations that fail the monotone/submodular checks");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Command commands[] = {
      {"check", "Check monotonicity and submodularity", RunCheck},
      {"table", "PMVC payoff table", RunTable},
      {"ne", "Pure Nash equilibria of the PMVC game", RunNe},
      {"poa", "Price of anarchy / stability report", RunPoa},
      {"brd", "Best-response dynamics", RunBrd},
      {"cdsp", "Closed-form equilibrium of a category_max game", RunCdsp},
      {"gen", "Write a generated instance as JSON", RunGen},
      {"bestresp", "Price-setting best response of one vendor", RunBestResponse},
      {"verify", "Verify a price vector is a pure Nash equilibrium", RunVerify},
  };
  int (*selected)(const RunConfig&) = nullptr;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    sub->callback([&selected, run = c.run] { selected = run; });
    const std::string name = c.name;
    if (name == "brd" || name == "bestresp" || name == "verify") {
      sub->add_option("--profile", cfg.profile, "Strategy profile, e.g. \"{a}|{c,d}\"");
      sub->add_option("--prices", cfg.prices, "Prices, e.g. a=2.601,b=8.6045");
    }
    if (name == "brd") {
      sub->add_option("--max-steps", cfg.max_steps, "Move cap")
          ->check(CLI::PositiveNumber);
    }
    if (name == "bestresp") {
      sub->add_option("--vendor", cfg.vendor, "Vendor (1-based)")->required();
    }
    if (name == "cdsp") {
      sub->add_flag("--verify", cfg.verify, "Certify the equilibrium exactly");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return selected(cfg);
  } catch (const vcgame::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const vcgame::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
