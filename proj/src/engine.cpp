#include "dcsim/engine.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>

#include "dcsim/format.hpp"
#include "dcsim/mobility.hpp"

namespace dcsim {
namespace {

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

MobilityRun finish_run(const ScenarioConfig& config, std::size_t num_ues, std::vector<DcEvent> events) {
  MobilityRun run;
  run.speed_kmh = config.ue_speed;
  run.seed = config.rng_seed;
  run.num_ues = num_ues;
  run.duration_s = config.sim_duration;
  run.counts = count_events(events);
  if (num_ues > 0 && config.sim_duration > 0.0) run.rates = event_rates(events, num_ues, config.sim_duration);
  run.ledger = SignalingLedger(config.sim_duration, num_ues);
  for (const auto arch : kAllArchitectures) run.ledger.accumulate(events, arch);
  run.events = std::move(events);
  return run;
}

std::string speed_tag(double speed_kmh) { return format_sig6(speed_kmh); }

}  // namespace

ScTracker::ScTracker(std::vector<NetworkNode> nodes, std::size_t num_ues, EventConfig cfg, CarrierPlan plan)
    : nodes_(std::move(nodes)), cfg_(cfg), plan_(plan), sc_(num_ues) {
  for (const auto& n : nodes_) {
    if (n.kind == NodeKind::Pico) candidates_.push_back(n.id);
  }
}

std::span<const DcEvent> ScTracker::advance(double time_s, std::span<const Vec2> positions) {
  const auto snapshot = measure(time_s, nodes_, positions, plan_);
  auto result = classify_transitions(sc_, snapshot, candidates_, cfg_);
  sc_ = std::move(result.sc);
  const std::size_t first = events_.size();
  events_.insert(events_.end(), result.events.begin(), result.events.end());
  return std::span<const DcEvent>(events_).subspan(first);
}

std::size_t ScTracker::dual_connected() const {
  return static_cast<std::size_t>(std::count_if(sc_.begin(), sc_.end(), [](const auto& s) { return s.has_value(); }));
}

std::vector<std::vector<Vec2>> simulate_trajectories(const ScenarioConfig& config) {
  const auto nodes = build_deployment(config);
  auto ues = drop_ues(config, nodes);
  std::vector<RngStream> streams;
  for (const auto& ue : ues) streams.push_back(mobility_stream(config.rng_seed, ue.id));

  std::vector<std::vector<Vec2>> frames;
  frames.reserve(config.num_steps());
  for (std::size_t k = 0; k < config.num_steps(); ++k) {
    std::vector<Vec2> positions;
    for (std::size_t i = 0; i < ues.size(); ++i) {
      ues[i] = step(ues[i], config.time_step, streams[i]);
      positions.push_back(ues[i].position);
    }
    frames.push_back(std::move(positions));
  }
  return frames;
}

std::vector<DcEvent> replay_events(const ScenarioConfig& config, const std::vector<NetworkNode>& nodes,
                                   std::span<const std::vector<Vec2>> frames) {
  const std::size_t num_ues = frames.empty() ? 0 : frames.front().size();
  ScTracker tracker(nodes, num_ues, EventConfig::from(config), CarrierPlan::Shared);
  for (std::size_t k = 0; k < frames.size(); ++k) {
    tracker.advance(static_cast<double>(k + 1) * config.time_step, frames[k]);
  }
  return tracker.events();
}

SimulationReport run_mobility_experiment(const ScenarioConfig& config, const StepObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  validate(config);
  const auto nodes = build_deployment(config);
  auto ues = drop_ues(config, nodes);
  std::vector<RngStream> streams;
  for (const auto& ue : ues) streams.push_back(mobility_stream(config.rng_seed, ue.id));

  ScTracker tracker(nodes, ues.size(), EventConfig::from(config), CarrierPlan::Shared);
  std::vector<Vec2> positions(ues.size());
  for (std::size_t k = 0; k < config.num_steps(); ++k) {
    for (std::size_t i = 0; i < ues.size(); ++i) {
      ues[i] = step(ues[i], config.time_step, streams[i]);
      positions[i] = ues[i].position;
    }
    const double t = static_cast<double>(k + 1) * config.time_step;
    const auto step_events = tracker.advance(t, positions);
    if (observer) observer(t, tracker.sc(), step_events);
  }

  SimulationReport report;
  report.config = config;
  report.mobility.push_back(finish_run(config, ues.size(), tracker.events()));
  report.wall_clock_s = elapsed_since(start);
  return report;
}

SimulationReport run_mobility_sweep(const ScenarioConfig& config, std::span<const double> speeds_kmh,
                                    std::span<const std::uint64_t> seeds) {
  const auto start = std::chrono::steady_clock::now();
  validate(config);
  std::vector<std::future<SimulationReport>> pending;
  for (const double speed : speeds_kmh) {
    for (const std::uint64_t seed : seeds) {
      ScenarioConfig run_config = config;
      run_config.ue_speed = speed;
      run_config.rng_seed = seed;
      pending.push_back(std::async(std::launch::async, [run_config] { return run_mobility_experiment(run_config); }));
    }
  }
  SimulationReport report;
  report.config = config;
  for (auto& f : pending) {
    auto single = f.get();
    report.mobility.push_back(std::move(single.mobility.front()));
  }
  report.wall_clock_s = elapsed_since(start);
  return report;
}

SimulationReport run_association_experiment(const ScenarioConfig& config, std::span<const std::size_t> user_counts,
                                            std::span<const std::uint64_t> seeds,
                                            std::span<const PolicyKind> policies) {
  const auto start = std::chrono::steady_clock::now();
  validate(config);
  SimulationReport report;
  report.config = config;
  for (const std::size_t users : user_counts) {
    for (const std::uint64_t seed : seeds) {
      ScenarioConfig seeded = config;
      seeded.rng_seed = seed;
      const auto nodes = build_deployment(seeded);
      const auto ues = drop_ues_total(seeded, nodes, users);
      const auto snapshot = measure(0.0, nodes, ues, CarrierPlan::PerTier);
      AssociationRun run{seed, users, {}};
      for (const auto policy : policies) {
        run.outcomes.push_back(evaluate_policy(policy, seeded, snapshot, nodes));
        const auto& r = run.outcomes.back().report;
        report.throughput.push_back({seed, users, r.policy, r.system_bps / 1e6, r.mean_ue_bps / 1e6});
      }
      report.associations.push_back(std::move(run));
    }
  }
  report.wall_clock_s = elapsed_since(start);
  return report;
}

std::vector<std::uint64_t> seed_range(std::uint64_t base, std::size_t count) {
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < count; ++i) seeds.push_back(base + i);
  return seeds;
}

EventRates mean_rates(const SimulationReport& report, double speed_kmh) {
  EventRates sum;
  std::size_t n = 0;
  for (const auto& run : report.mobility) {
    if (run.speed_kmh != speed_kmh) continue;
    sum.addition += run.rates.addition;
    sum.change += run.rates.change;
    sum.release += run.rates.release;
    ++n;
  }
  if (n > 0) {
    sum.addition /= static_cast<double>(n);
    sum.change /= static_cast<double>(n);
    sum.release /= static_cast<double>(n);
  }
  return sum;
}

CsvTable event_rates_csv(const SimulationReport& report) {
  CsvTable table({"speed_kmh", "seed", "sc_addition_rate", "sc_change_rate", "sc_release_rate"});
  for (const auto& run : report.mobility) {
    table.add_row({format_sig6(run.speed_kmh), std::to_string(run.seed), format_sig6(run.rates.addition),
                   format_sig6(run.rates.change), format_sig6(run.rates.release)});
  }
  return table;
}

CsvTable signaling_csv(const SimulationReport& report) {
  std::vector<SignalingSummaryRow> rows;
  for (const auto& run : report.mobility) {
    const bool has_exposure = run.num_ues > 0 && run.duration_s > 0.0;
    for (const auto kind : kAllEventKinds) {
      SignalingSummaryRow row;
      row.speed_kmh = run.speed_kmh;
      row.kind = kind;
      row.event_rate = run.rates.of(kind);
      if (has_exposure) {
        row.legacy_rate = signaling_rate(run.ledger, kind, Architecture::Legacy);
        row.proposed_rate = signaling_rate(run.ledger, kind, Architecture::ProposedSdn);
      }
      rows.push_back(row);
    }
  }
  return signaling_summary_csv(rows);
}

std::string run_manifest(const SimulationReport& report, std::string_view experiment) {
  std::string out;
  out += "version = " + std::string(kVersion) + "\n";
  out += "experiment = " + std::string(experiment) + "\n";
  std::string seeds;
  std::map<std::uint64_t, bool> seen;
  auto note_seed = [&](std::uint64_t s) {
    if (seen.emplace(s, true).second) seeds += (seeds.empty() ? "" : ",") + std::to_string(s);
  };
  for (const auto& run : report.mobility) note_seed(run.seed);
  for (const auto& run : report.associations) note_seed(run.seed);
  out += "seeds = " + seeds + "\n";
  out += "[config]\n";
  out += to_text(report.config);
  return out;
}

void write_mobility_outputs(const SimulationReport& report, const std::filesystem::path& out_dir) {
  // Render everything before touching the filesystem.
  std::vector<std::pair<std::filesystem::path, std::string>> files;
  for (const auto& run : report.mobility) {
    files.emplace_back(out_dir / ("events_" + speed_tag(run.speed_kmh) + "kmh_seed" + std::to_string(run.seed) + ".csv"),
                       event_log_csv(run.events).str());
  }
  files.emplace_back(out_dir / "event_rates.csv", event_rates_csv(report).str());
  files.emplace_back(out_dir / "signaling_summary.csv", signaling_csv(report).str());
  files.emplace_back(out_dir / "run_manifest.txt", run_manifest(report, "mobility"));
  for (const auto& [path, text] : files) write_file_atomic(path, text);
}

void write_association_outputs(const SimulationReport& report, const std::filesystem::path& out_dir) {
  std::vector<std::pair<std::filesystem::path, std::string>> files;
  files.emplace_back(out_dir / "throughput.csv", throughput_csv(report.throughput).str());
  for (const auto& run : report.associations) {
    for (const auto& outcome : run.outcomes) {
      const std::string name = std::to_string(run.num_users) + "u_seed" + std::to_string(run.seed) + "_" +
                               outcome.report.policy + ".csv";
      files.emplace_back(out_dir / "associations" / name,
                         association_csv(outcome.association, outcome.report.policy).str());
    }
  }
  files.emplace_back(out_dir / "run_manifest.txt", run_manifest(report, "association"));
  for (const auto& [path, text] : files) write_file_atomic(path, text);
}

}  // namespace dcsim
