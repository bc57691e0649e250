#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <optional>

#include "dcsim/engine.hpp"
#include "dcsim/scenario.hpp"

namespace dcsim::cli {
namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

ScenarioConfig resolve_config(const std::string& path) {
  return path.empty() ? ScenarioConfig{} : load_config(path);
}

struct MobilityArgs {
  std::string config;
  std::vector<double> speeds{3.0, 30.0, 60.0};
  std::optional<std::uint64_t> seed;
  std::optional<double> duration;
  std::string out = "results";
};

struct AssociateArgs {
  std::string config;
  std::vector<std::size_t> users{30, 60, 90};
  std::size_t seeds = 10;
  std::string policy = "both";
  std::string out = "results";
};

int cmd_mobility(const MobilityArgs& a, std::ostream& out) {
  ScenarioConfig config = resolve_config(a.config);
  if (a.seed) config.rng_seed = *a.seed;
  if (a.duration) config.sim_duration = *a.duration;
  validate(config);
  for (const double s : a.speeds) {
    if (s < 0.0) throw ConfigError("speed-kmh", "must be >= 0");
  }

  const std::vector<std::uint64_t> seeds{config.rng_seed};
  const auto report = run_mobility_sweep(config, a.speeds, seeds);
  write_mobility_outputs(report, a.out);

  const std::size_t num_ues = report.mobility.empty() ? 0 : report.mobility.front().num_ues;
  out << "DC mobility events per UE per second (seed " << config.rng_seed << ", " << config.sim_duration << " s, "
      << num_ues << " UEs)\n";
  out << pad("speed_kmh", 11) << pad("sc_addition", 14) << pad("sc_change", 14) << "sc_release\n";
  for (const auto& run : report.mobility) {
    out << pad(fixed(run.speed_kmh, 0), 11) << pad(fixed(run.rates.addition, 5), 14)
        << pad(fixed(run.rates.change, 5), 14) << fixed(run.rates.release, 5) << '\n';
  }
  out << "\nSignaling messages per UE per second\n";
  out << pad("speed_kmh", 11) << pad("event", 13) << pad("legacy", 11) << "proposed\n";
  for (const auto& run : report.mobility) {
    for (const auto kind : kAllEventKinds) {
      const bool exposed = run.num_ues > 0 && run.duration_s > 0.0;
      const double legacy = exposed ? signaling_rate(run.ledger, kind, Architecture::Legacy) : 0.0;
      const double proposed = exposed ? signaling_rate(run.ledger, kind, Architecture::ProposedSdn) : 0.0;
      out << pad(fixed(run.speed_kmh, 0), 11) << pad(std::string(to_string(kind)), 13) << pad(fixed(legacy, 5), 11)
          << fixed(proposed, 5) << '\n';
    }
  }
  out << "\nreduction:";
  for (const auto kind : kAllEventKinds) out << ' ' << to_string(kind) << ' ' << fixed(reduction_percent(kind), 2) << '%';
  out << "\noutputs written to " << a.out << " (" << fixed(report.wall_clock_s, 1) << " s)\n";
  return kOk;
}

int cmd_associate(const AssociateArgs& a, std::ostream& out) {
  const ScenarioConfig config = resolve_config(a.config);
  if (a.seeds == 0) throw ConfigError("seeds", "must be >= 1");
  std::vector<PolicyKind> policies;
  if (a.policy == "both" || a.policy == "distributed") policies.push_back(PolicyKind::Distributed);
  if (a.policy == "both" || a.policy == "centralized") policies.push_back(PolicyKind::Centralized);

  const auto seeds = seed_range(config.rng_seed, a.seeds);
  const auto report = run_association_experiment(config, a.users, seeds, policies);
  write_association_outputs(report, a.out);

  // mean over seeds, keyed by (users, policy)
  std::map<std::pair<std::size_t, std::string>, std::pair<double, double>> sums;
  for (const auto& row : report.throughput) {
    auto& s = sums[{row.num_users, row.policy}];
    s.first += row.system_mbps;
    s.second += row.mean_user_mbps;
  }
  const double n = static_cast<double>(seeds.size());
  out << "Throughput, mean over " << seeds.size() << " seed(s)\n";
  out << pad("users", 7) << pad("policy", 13) << pad("system_mbps", 14) << "avg_user_mbps\n";
  for (const std::size_t users : a.users) {
    for (const auto policy : policies) {
      const auto& s = sums[{users, policy_label(policy)}];
      out << pad(std::to_string(users), 7) << pad(policy_label(policy), 13) << pad(fixed(s.first / n, 2), 14)
          << fixed(s.second / n, 3) << '\n';
    }
    if (policies.size() == 2) {
      const double dist = sums[{users, "distributed"}].first;
      const double cent = sums[{users, "centralized"}].first;
      if (dist > 0.0) out << "  centralized vs distributed: " << fixed(100.0 * (cent / dist - 1.0), 2) << "%\n";
    }
  }
  out << "outputs written to " << a.out << " (" << fixed(report.wall_clock_s, 1) << " s)\n";
  return kOk;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const ScenarioConfig config = load_config(path);
  out << to_text(config);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual-connectivity HetNet simulator: DC mobility signaling and centralized association"};
  app.require_subcommand(1);

  MobilityArgs mob;
  auto* mobility = app.add_subcommand("mobility", "Mobility-event and signaling study over UE speeds");
  mobility->add_option("--config", mob.config, "Scenario file (defaults to built-in values)");
  mobility->add_option("--speed-kmh", mob.speeds, "UE speeds in km/h")->delimiter(',');
  mobility->add_option("--seed", mob.seed, "Root RNG seed override");
  mobility->add_option("--duration-s", mob.duration, "Simulated duration override in seconds");
  mobility->add_option("--out", mob.out, "Output directory");

  AssociateArgs assoc;
  auto* associate = app.add_subcommand("associate", "Centralized vs distributed DC throughput study");
  associate->add_option("--config", assoc.config, "Scenario file (defaults to built-in values)");
  associate->add_option("--users", assoc.users, "User counts")->delimiter(',');
  associate->add_option("--seeds", assoc.seeds, "Number of seeds starting at rng_seed");
  associate->add_option("--policy", assoc.policy, "both|centralized|distributed")
      ->check(CLI::IsMember({"both", "centralized", "distributed"}));
  associate->add_option("--out", assoc.out, "Output directory");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a scenario file and print the resolved configuration");
  validate_cmd->add_option("config,--config", validate_path, "Scenario file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (mobility->parsed()) return cmd_mobility(mob, out);
    if (associate->parsed()) return cmd_associate(assoc, out);
    return cmd_validate(validate_path, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace dcsim::cli
