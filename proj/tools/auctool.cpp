// Copyright 2026 The Auctool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Reports go to standard output and are
// byte-identical across runs for fixed inputs, seed and worker count;
// diagnostics and timing go to standard error. Exit codes: 0 when the
// property holds or the outcome was computed, 1 on a counterexample or
// lemma failure, 2 on input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "auction/lemmas.hpp"
#include "auction/scenario.hpp"
#include "auction/verifier.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

struct Invocation {
  std::string scenario_path;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
};

auction::ScenarioFile load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open scenario file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return auction::parse_scenario(buffer.str());
}

int emit_report(const auction::PropertyReport& report) {
  std::cout << report.to_text();
  std::cout.flush();
  std::cerr << "elapsed: " << report.elapsed.count() << "us\n";
  switch (report.verdict) {
    case auction::Verdict::holds:
      return 0;
    case auction::Verdict::violated:
      return 1;
    case auction::Verdict::domain_error:
      return 2;
  }
  return 2;
}

int run_outcome(const auction::ScenarioFile& scenario, const Invocation& invocation) {
  if (!scenario.bids) {
    std::cerr << "the outcome command needs a bids line in the scenario\n";
    return 2;
  }
  const auction::AuctionRule rule = scenario.rule();
  const auction::Outcome outcome =
      rule.run(*scenario.bids, scenario.tie_break(invocation.seed));
  std::cout << auction::format_outcome(outcome);
  return 0;
}

int run_check_dominance(const auction::ScenarioFile& scenario, const Invocation& invocation) {
  const auction::TieBreakPolicy policy = scenario.tie_break(invocation.seed);
  if (scenario.valuations) {
    const auction::DominanceScenario check{scenario.rule(), *scenario.valuations,
                                           scenario.bids ? *scenario.bids : *scenario.valuations,
                                           scenario.grid, policy};
    return emit_report(auction::check_weak_dominance(check, invocation.workers));
  }
  if (scenario.bids) {
    std::cerr << "check-dominance needs valuations to price the given bids\n";
    return 2;
  }
  return emit_report(auction::check_truthful_equilibrium(
      scenario.rule(), scenario.grid, scenario.participants, policy, invocation.workers));
}

int run_check_efficiency(const auction::ScenarioFile& scenario, const Invocation& invocation) {
  return emit_report(auction::check_efficiency_truthful(scenario.rule(), scenario.grid,
                                                        scenario.participants,
                                                        scenario.tie_break(invocation.seed),
                                                        invocation.workers));
}

int run_check_well_defined(const auction::ScenarioFile& scenario, const Invocation& invocation) {
  const std::uint64_t seed = scenario.seed.value_or(invocation.seed);
  const std::vector<auction::TieBreakPolicy> policies = {
      auction::TieBreakPolicy::lowest_id(), auction::TieBreakPolicy::highest_id(),
      auction::TieBreakPolicy::seeded_pseudorandom(seed)};
  return emit_report(auction::check_well_defined(scenario.rule(), scenario.grid,
                                                 scenario.participants, policies,
                                                 invocation.workers));
}

int run_lemmas(const auction::ScenarioFile& scenario, const Invocation& invocation) {
  if (scenario.rule_name != "second_price") {
    std::cerr << "the lemma suite covers the second_price rule only\n";
    return 2;
  }
  const auction::LemmaSuiteReport report = auction::run_lemma_suite(
      scenario.grid, scenario.participants, scenario.tie_break(invocation.seed));
  std::cout << report.to_text();
  return report.failures() == 0 ? 0 : 1;
}

int run_find_cex(const auction::ScenarioFile& scenario, const Invocation& invocation) {
  if (!scenario.valuations) {
    std::cerr << "find-cex needs a valuations line in the scenario\n";
    return 2;
  }
  const auction::DominanceScenario check{scenario.rule(), *scenario.valuations,
                                         scenario.bids ? *scenario.bids : *scenario.valuations,
                                         scenario.grid, scenario.tie_break(invocation.seed)};
  return emit_report(auction::check_weak_dominance(check, invocation.workers));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"auction outcome and property checking toolbox"};
  app.require_subcommand(1);

  Invocation invocation;
  int (*handler)(const auction::ScenarioFile&, const Invocation&) = nullptr;

  const auto add_command = [&](const std::string& name, const std::string& description,
                               int (*run)(const auction::ScenarioFile&, const Invocation&)) {
    CLI::App* command = app.add_subcommand(name, description);
    command->add_option("--scenario", invocation.scenario_path, "scenario file path")
        ->required();
    command->add_option("--seed", invocation.seed,
                        "seed for the seeded_pseudorandom tie-break policy");
    command->add_option("--workers", invocation.workers, "parallel search workers")
        ->check(CLI::Range(1u, 256u));
    command->callback([&handler, run] { handler = run; });
  };

  add_command("outcome", "run the auction on the scenario's bids", run_outcome);
  add_command("check-dominance",
              "check that no single deviation from the focal bids ever pays off", run_check_dominance);
  add_command("check-efficiency", "check that truthful bidding allocates to a top valuation",
              run_check_efficiency);
  add_command("check-well-defined",
              "check that the rule is a total, policy-stable outcome function", run_check_well_defined);
  add_command("lemmas", "run the dominance proof's case lemmas over the grid", run_lemmas);
  add_command("find-cex", "find the minimal dominance counterexample for the scenario", run_find_cex);

  CLI11_PARSE(app, argc, argv);

  try {
    const auction::ScenarioFile scenario = load_scenario(invocation.scenario_path);
    return handler(scenario, invocation);
  } catch (const auction::ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
