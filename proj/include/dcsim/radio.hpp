#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dcsim/geometry.hpp"
#include "dcsim/scenario.hpp"

namespace dcsim {

/// Distance-dependent path loss `intercept + slope * log10(d_km)`.
struct PropagationModel {
  enum class Kind { MacroUrban, PicoUrban };
  Kind kind = Kind::MacroUrban;
  double intercept_db = 128.1;
  double slope_db_per_decade = 37.6;

  static PropagationModel macro_urban() { return {Kind::MacroUrban, 128.1, 37.6}; }
  static PropagationModel pico_urban() { return {Kind::PicoUrban, 140.7, 36.7}; }
  static PropagationModel for_node(NodeKind kind);
};

/// Which nodes share spectrum. PerTier keeps macro and pico on their own
/// carriers (no cross-tier interference); Shared puts every node on one
/// carrier.
enum class CarrierPlan { PerTier, Shared };

inline constexpr double kMinDistanceKm = 0.01;
inline constexpr double kMacroMaxGainDbi = 14.0;
inline constexpr double kMacroBeamwidthDeg = 65.0;
inline constexpr double kMacroFrontToBackDb = 20.0;
inline constexpr double kThermalNoiseDbmPerHz = -174.0;
inline constexpr double kUeNoiseFigureDb = 9.0;

double db_to_linear(double db);
double linear_to_db(double linear);

/// Clamps distance below kMinDistanceKm.
double path_loss_db(const PropagationModel& model, double distance_km);

/// Picos are omnidirectional; macro sectors use the parabolic 3-sector
/// pattern 14 - min(12 (dtheta/65)^2, 20) dBi.
double antenna_gain_db(const NetworkNode& node, Vec2 ue_position);

/// Wideband received power from `node` at `ue_position`.
double rsrp_dbm(const NetworkNode& node, Vec2 ue_position);

/// Thermal noise plus UE noise figure over `bandwidth_hz`.
double noise_dbm(double bandwidth_hz);

bool co_carrier(const NetworkNode& a, const NetworkNode& b, CarrierPlan plan);

/// RSRP over carrier RSSI (all co-carrier received power plus noise).
double rsrq_db(std::span<const NetworkNode> nodes, NodeId node, Vec2 ue_position, CarrierPlan plan);

/// Signal over co-carrier interference plus noise; every other co-carrier
/// node is assumed to transmit (full buffer).
double sinr_db(std::span<const NetworkNode> nodes, NodeId node, Vec2 ue_position, CarrierPlan plan);

/// Dense (ue, node) matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct MeasurementSnapshot {
  double time_s = 0.0;
  Matrix rsrp;  // dBm
  Matrix rsrq;  // dB
  Matrix sinr;  // dB

  std::size_t num_ues() const { return rsrp.rows(); }
  std::size_t num_nodes() const { return rsrp.cols(); }
};

/// Measures every (UE, node) pair. Sums run in node-id order, so entries
/// equal the scalar rsrp/rsrq/sinr operations bit for bit.
MeasurementSnapshot measure(double time_s, std::span<const NetworkNode> nodes, std::span<const Vec2> ue_positions,
                            CarrierPlan plan);

MeasurementSnapshot measure(double time_s, std::span<const NetworkNode> nodes,
                            std::span<const UserEquipment> ues, CarrierPlan plan);

/// Builds a snapshot from a given RSRP matrix (no geometry); RSRQ/SINR are
/// derived under `plan` with noise per node bandwidth. Used to evaluate
/// policies on hand-specified measurements.
MeasurementSnapshot snapshot_from_rsrp(double time_s, std::span<const NetworkNode> nodes, Matrix rsrp,
                                       CarrierPlan plan);

}  // namespace dcsim
