#include "dcsim/throughput.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dcsim/format.hpp"
#include "dcsim/scenario.hpp"

namespace dcsim {

double link_rate(double sinr_db, double bandwidth_hz, const LinkRateConfig& cfg) {
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth must be > 0");
  const double se = std::min(std::log2(1.0 + db_to_linear(sinr_db)), cfg.max_spectral_efficiency);
  return cfg.overhead_factor * bandwidth_hz * se;
}

ThroughputReport compute_throughput(const AssociationState& state, const MeasurementSnapshot& snapshot,
                                    std::span<const NetworkNode> nodes, std::string policy,
                                    const LinkRateConfig& cfg) {
  std::vector<std::size_t> load(nodes.size(), 0);
  for (UeId u = 0; u < state.num_ues(); ++u) {
    ++load[state.primary[u]];
    if (state.secondary[u]) ++load[*state.secondary[u]];
  }

  ThroughputReport report;
  report.policy = std::move(policy);
  report.per_ue_bps.assign(state.num_ues(), 0.0);
  auto share = [&](UeId u, NodeId j) {
    return link_rate(snapshot.sinr(u, j), nodes[j].bandwidth_hz, cfg) / static_cast<double>(load[j]);
  };
  for (UeId u = 0; u < state.num_ues(); ++u) {
    double total = share(u, state.primary[u]);
    if (state.secondary[u]) total += share(u, *state.secondary[u]);
    report.per_ue_bps[u] = total;
    report.system_bps += total;
  }
  report.mean_ue_bps = state.num_ues() == 0 ? 0.0 : report.system_bps / static_cast<double>(state.num_ues());
  return report;
}

std::string policy_label(PolicyKind kind) {
  return kind == PolicyKind::Centralized ? "centralized" : "distributed";
}

PolicyOutcome evaluate_policy(PolicyKind kind, const ScenarioConfig& config, const MeasurementSnapshot& snapshot,
                              std::span<const NetworkNode> nodes, const LinkRateConfig& rates) {
  AssociationState state = associate_primary(snapshot);
  if (kind == PolicyKind::Centralized) {
    state = centralized_dc(snapshot, std::move(state), config.resolved_capacity(snapshot.num_ues()),
                           config.dc_rank_n);
  } else {
    state = distributed_dc(snapshot, std::move(state), config.rsrp_threshold_distributed);
  }
  ThroughputReport report = compute_throughput(state, snapshot, nodes, policy_label(kind), rates);
  return {std::move(state), std::move(report)};
}

std::vector<PolicyComparison> compare_policies(const ScenarioConfig& config, std::span<const std::uint64_t> seeds,
                                               std::size_t num_users, PolicyKind first, PolicyKind second,
                                               const LinkRateConfig& rates) {
  std::vector<PolicyComparison> out;
  out.reserve(seeds.size());
  for (const std::uint64_t seed : seeds) {
    ScenarioConfig seeded = config;
    seeded.rng_seed = seed;
    const auto nodes = build_deployment(seeded);
    const auto ues = drop_ues_total(seeded, nodes, num_users);
    const auto snapshot = measure(0.0, nodes, ues, CarrierPlan::PerTier);
    out.push_back({seed, num_users, evaluate_policy(first, seeded, snapshot, nodes, rates),
                   evaluate_policy(second, seeded, snapshot, nodes, rates)});
  }
  return out;
}

CsvTable throughput_csv(std::span<const ThroughputRow> rows) {
  CsvTable table({"seed", "num_users", "policy", "system_throughput_mbps", "mean_user_throughput_mbps"});
  for (const auto& r : rows) {
    table.add_row({std::to_string(r.seed), std::to_string(r.num_users), r.policy, format_sig6(r.system_mbps),
                   format_sig6(r.mean_user_mbps)});
  }
  return table;
}

}  // namespace dcsim
