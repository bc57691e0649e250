#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dcsim/association.hpp"
#include "dcsim/config.hpp"
#include "dcsim/csv.hpp"
#include "dcsim/radio.hpp"

namespace dcsim {

struct LinkRateConfig {
  double overhead_factor = 0.9;       // usable share of the bandwidth
  double max_spectral_efficiency = 6.0;  // b/s/Hz, highest MCS
};

/// Shannon rate with overhead and spectral-efficiency cap, in bit/s.
double link_rate(double sinr_db, double bandwidth_hz, const LinkRateConfig& cfg = {});

struct ThroughputReport {
  std::string policy;
  std::vector<double> per_ue_bps;
  double system_bps = 0.0;
  double mean_ue_bps = 0.0;
};

/// Full-buffer equal time sharing: every node splits its airtime evenly
/// over the links attached to it (primary or secondary); a dual-connected
/// UE adds up both shares.
ThroughputReport compute_throughput(const AssociationState& state, const MeasurementSnapshot& snapshot,
                                    std::span<const NetworkNode> nodes, std::string policy,
                                    const LinkRateConfig& cfg = {});

enum class PolicyKind { Centralized, Distributed };
std::string policy_label(PolicyKind kind);

struct PolicyOutcome {
  AssociationState association;
  ThroughputReport report;
};

/// Applies one DC policy on top of primary association, using the policy
/// parameters from `config` (capacity resolved against the UE count).
PolicyOutcome evaluate_policy(PolicyKind kind, const ScenarioConfig& config, const MeasurementSnapshot& snapshot,
                              std::span<const NetworkNode> nodes, const LinkRateConfig& rates = {});

struct PolicyComparison {
  std::uint64_t seed = 0;
  std::size_t num_users = 0;
  PolicyOutcome first;
  PolicyOutcome second;
};

/// For every seed: one deployment, one stationary drop of num_users UEs,
/// one snapshot on per-tier carriers, and both policies evaluated on it.
std::vector<PolicyComparison> compare_policies(const ScenarioConfig& config, std::span<const std::uint64_t> seeds,
                                               std::size_t num_users, PolicyKind first, PolicyKind second,
                                               const LinkRateConfig& rates = {});

struct ThroughputRow {
  std::uint64_t seed = 0;
  std::size_t num_users = 0;
  std::string policy;
  double system_mbps = 0.0;
  double mean_user_mbps = 0.0;
};

/// Columns seed, num_users, policy, system_throughput_mbps,
/// mean_user_throughput_mbps.
CsvTable throughput_csv(std::span<const ThroughputRow> rows);

}  // namespace dcsim
