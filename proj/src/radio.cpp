#include "dcsim/radio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dcsim {
namespace {

struct CarrierSums {
  // received power per node (mW), and per-node co-carrier total
  std::vector<double> received_mw;
  std::vector<double> rssi_mw;
};

// Per-UE linear sums in node-id order; every public path goes through here.
CarrierSums carrier_sums(std::span<const NetworkNode> nodes, std::span<const double> rsrp_row, CarrierPlan plan) {
  const std::size_t n = nodes.size();
  CarrierSums s{std::vector<double>(n), std::vector<double>(n, 0.0)};
  for (std::size_t j = 0; j < n; ++j) s.received_mw[j] = db_to_linear(rsrp_row[j]);
  if (plan == CarrierPlan::Shared) {
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) total += s.received_mw[k];
    std::fill(s.rssi_mw.begin(), s.rssi_mw.end(), total);
  } else {
    double macro = 0.0;
    double pico = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      (nodes[k].carrier == Carrier::MacroCarrier ? macro : pico) += s.received_mw[k];
    }
    for (std::size_t j = 0; j < n; ++j) s.rssi_mw[j] = nodes[j].carrier == Carrier::MacroCarrier ? macro : pico;
  }
  return s;
}

double rsrq_from(const CarrierSums& s, std::span<const NetworkNode> nodes, std::size_t j) {
  const double noise = db_to_linear(noise_dbm(nodes[j].bandwidth_hz));
  return linear_to_db(s.received_mw[j] / (s.rssi_mw[j] + noise));
}

double sinr_from(const CarrierSums& s, std::span<const NetworkNode> nodes, std::size_t j) {
  const double noise = db_to_linear(noise_dbm(nodes[j].bandwidth_hz));
  const double interference = std::max(0.0, s.rssi_mw[j] - s.received_mw[j]);
  return linear_to_db(s.received_mw[j] / (interference + noise));
}

std::vector<double> rsrp_row(std::span<const NetworkNode> nodes, Vec2 pos) {
  std::vector<double> row(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) row[j] = rsrp_dbm(nodes[j], pos);
  return row;
}

}  // namespace

PropagationModel PropagationModel::for_node(NodeKind kind) {
  return kind == NodeKind::MacroSector ? macro_urban() : pico_urban();
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
  if (linear <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(linear);
}

double path_loss_db(const PropagationModel& model, double distance_km) {
  return model.intercept_db + model.slope_db_per_decade * std::log10(std::max(distance_km, kMinDistanceKm));
}

double antenna_gain_db(const NetworkNode& node, Vec2 ue_position) {
  if (node.kind == NodeKind::Pico) return 0.0;
  const Vec2 d = ue_position - node.position;
  const double azimuth = rad_to_deg(std::atan2(d.y, d.x));
  const double offset = wrap_degrees(azimuth - node.boresight_deg) / kMacroBeamwidthDeg;
  return kMacroMaxGainDbi - std::min(12.0 * offset * offset, kMacroFrontToBackDb);
}

double rsrp_dbm(const NetworkNode& node, Vec2 ue_position) {
  const double d_km = distance(node.position, ue_position) / 1000.0;
  return node.tx_power_dbm + antenna_gain_db(node, ue_position) -
         path_loss_db(PropagationModel::for_node(node.kind), d_km);
}

double noise_dbm(double bandwidth_hz) {
  return kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth_hz) + kUeNoiseFigureDb;
}

bool co_carrier(const NetworkNode& a, const NetworkNode& b, CarrierPlan plan) {
  return plan == CarrierPlan::Shared || a.carrier == b.carrier;
}

double rsrq_db(std::span<const NetworkNode> nodes, NodeId node, Vec2 ue_position, CarrierPlan plan) {
  const auto row = rsrp_row(nodes, ue_position);
  return rsrq_from(carrier_sums(nodes, row, plan), nodes, node);
}

double sinr_db(std::span<const NetworkNode> nodes, NodeId node, Vec2 ue_position, CarrierPlan plan) {
  const auto row = rsrp_row(nodes, ue_position);
  return sinr_from(carrier_sums(nodes, row, plan), nodes, node);
}

MeasurementSnapshot snapshot_from_rsrp(double time_s, std::span<const NetworkNode> nodes, Matrix rsrp,
                                       CarrierPlan plan) {
  MeasurementSnapshot snap;
  snap.time_s = time_s;
  const std::size_t num_ues = rsrp.rows();
  snap.rsrq = Matrix(num_ues, nodes.size());
  snap.sinr = Matrix(num_ues, nodes.size());
  for (std::size_t u = 0; u < num_ues; ++u) {
    const auto sums = carrier_sums(nodes, rsrp.row(u), plan);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      snap.rsrq(u, j) = rsrq_from(sums, nodes, j);
      snap.sinr(u, j) = sinr_from(sums, nodes, j);
    }
  }
  snap.rsrp = std::move(rsrp);
  return snap;
}

MeasurementSnapshot measure(double time_s, std::span<const NetworkNode> nodes, std::span<const Vec2> ue_positions,
                            CarrierPlan plan) {
  Matrix rsrp(ue_positions.size(), nodes.size());
  for (std::size_t u = 0; u < ue_positions.size(); ++u) {
    for (std::size_t j = 0; j < nodes.size(); ++j) rsrp(u, j) = rsrp_dbm(nodes[j], ue_positions[u]);
  }
  return snapshot_from_rsrp(time_s, nodes, std::move(rsrp), plan);
}

MeasurementSnapshot measure(double time_s, std::span<const NetworkNode> nodes, std::span<const UserEquipment> ues,
                            CarrierPlan plan) {
  std::vector<Vec2> positions;
  positions.reserve(ues.size());
  for (const auto& ue : ues) positions.push_back(ue.position);
  return measure(time_s, nodes, positions, plan);
}

}  // namespace dcsim
