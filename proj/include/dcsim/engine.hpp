#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dcsim/config.hpp"
#include "dcsim/dc_events.hpp"
#include "dcsim/radio.hpp"
#include "dcsim/signaling.hpp"
#include "dcsim/throughput.hpp"

namespace dcsim {

inline constexpr const char* kVersion = "dcsim 1.0.0";

/// Secondary-cell state of a UE population, fed one measurement step at a
/// time. Candidates are the picos.
class ScTracker {
 public:
  ScTracker(std::vector<NetworkNode> nodes, std::size_t num_ues, EventConfig cfg, CarrierPlan plan);

  /// Measures `positions` at `time_s`, classifies, and returns this step's
  /// events (also appended to events()).
  std::span<const DcEvent> advance(double time_s, std::span<const Vec2> positions);

  const ScMap& sc() const { return sc_; }
  const std::vector<DcEvent>& events() const { return events_; }
  std::size_t dual_connected() const;

 private:
  std::vector<NetworkNode> nodes_;
  std::vector<NodeId> candidates_;
  EventConfig cfg_;
  CarrierPlan plan_;
  ScMap sc_;
  std::vector<DcEvent> events_;
};

/// Called after every mobility step with the step time, the SC map and the
/// events emitted in that step.
using StepObserver = std::function<void(double, const ScMap&, std::span<const DcEvent>)>;

struct MobilityRun {
  double speed_kmh = 0.0;
  std::uint64_t seed = 0;
  std::size_t num_ues = 0;
  double duration_s = 0.0;
  std::vector<DcEvent> events;
  EventCounts counts;
  EventRates rates;  // all zero when duration_s == 0
  SignalingLedger ledger;
};

struct AssociationRun {
  std::uint64_t seed = 0;
  std::size_t num_users = 0;
  std::vector<PolicyOutcome> outcomes;
};

struct SimulationReport {
  ScenarioConfig config;
  std::vector<MobilityRun> mobility;
  std::vector<AssociationRun> associations;
  std::vector<ThroughputRow> throughput;
  double wall_clock_s = 0.0;
};

/// Random-direction mobility with A2/A4 SC tracking for config.sim_duration,
/// sampling every config.time_step on a shared carrier. Both signaling
/// ledgers book the same event stream.
SimulationReport run_mobility_experiment(const ScenarioConfig& config, const StepObserver& observer = {});

/// Every (speed, seed) pair, speed-major. Runs execute concurrently; the
/// result order does not depend on scheduling.
SimulationReport run_mobility_sweep(const ScenarioConfig& config, std::span<const double> speeds_kmh,
                                    std::span<const std::uint64_t> seeds);

/// Positions of every UE after each step (frame k is time (k+1)*dt).
std::vector<std::vector<Vec2>> simulate_trajectories(const ScenarioConfig& config);

/// Replays recorded frames through an ScTracker.
std::vector<DcEvent> replay_events(const ScenarioConfig& config, const std::vector<NetworkNode>& nodes,
                                   std::span<const std::vector<Vec2>> frames);

/// One stationary drop per (user count, seed) with the requested policies
/// evaluated on the same snapshot.
SimulationReport run_association_experiment(const ScenarioConfig& config, std::span<const std::size_t> user_counts,
                                            std::span<const std::uint64_t> seeds,
                                            std::span<const PolicyKind> policies);

/// Seeds base, base+1, ..., base+count-1.
std::vector<std::uint64_t> seed_range(std::uint64_t base, std::size_t count);

/// Mean of each event rate over the runs at `speed_kmh`.
EventRates mean_rates(const SimulationReport& report, double speed_kmh);

/// Columns speed_kmh, seed, sc_addition_rate, sc_change_rate, sc_release_rate.
CsvTable event_rates_csv(const SimulationReport& report);
/// Rows per (run, kind); see signaling_summary_csv.
CsvTable signaling_csv(const SimulationReport& report);

std::string run_manifest(const SimulationReport& report, std::string_view experiment);

/// Writes events_<speed>kmh_seed<seed>.csv, event_rates.csv,
/// signaling_summary.csv and run_manifest.txt.
void write_mobility_outputs(const SimulationReport& report, const std::filesystem::path& out_dir);

/// Writes throughput.csv, associations/<users>u_seed<seed>_<policy>.csv
/// and run_manifest.txt.
void write_association_outputs(const SimulationReport& report, const std::filesystem::path& out_dir);

}  // namespace dcsim
