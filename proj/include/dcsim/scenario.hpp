#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dcsim/config.hpp"
#include "dcsim/geometry.hpp"

namespace dcsim {

using NodeId = std::size_t;
using UeId = std::size_t;

enum class NodeKind { MacroSector, Pico };
enum class Carrier { MacroCarrier, PicoCarrier };

struct NetworkNode {
  NodeId id = 0;
  NodeKind kind = NodeKind::MacroSector;
  Vec2 position;
  double boresight_deg = 0.0;  // MacroSector only
  double tx_power_dbm = 0.0;
  double antenna_height_m = 0.0;
  Carrier carrier = Carrier::MacroCarrier;
  double bandwidth_hz = 0.0;
  std::size_t site = 0;  // macro site the node belongs to / lies in

  friend bool operator==(const NetworkNode&, const NetworkNode&) = default;
};

struct UserEquipment {
  UeId id = 0;
  Vec2 position;
  double speed_ms = 0.0;
  double direction_rad = 0.0;
  NodeId home_sector = 0;
  ConvexPolygon region;
};

/// Thrown when rejection sampling cannot place the requested picos.
class PlacementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kNumSites = 7;
inline constexpr std::size_t kSectorsPerSite = 3;
inline constexpr std::size_t kNumMacroSectors = kNumSites * kSectorsPerSite;
inline constexpr double kMinPicoToMacroDistance = 75.0;  // m
inline constexpr int kPlacementAttempts = 100000;

/// Site 0 at the origin; sites 1..6 on the first ring at distance isd.
std::vector<Vec2> site_positions(double isd);

/// Boresight of sector k (0, 120, 240 degrees).
double sector_boresight_deg(std::size_t sector);

/// The 120-degree wedge of the site hexagon facing the sector's boresight:
/// a rhombus of side isd/sqrt(3) with one vertex at the site.
ConvexPolygon sector_polygon(Vec2 site, double boresight_deg, double isd);

/// Node ids of the centre-site sectors.
std::vector<NodeId> centre_sectors(const std::vector<NetworkNode>& nodes);

/// 21 macro sectors (ids 0..20, site-major) followed by picos_per_sector
/// picos in each centre sector. Deterministic in config.rng_seed.
std::vector<NetworkNode> build_deployment(const ScenarioConfig& config);

/// ues_per_sector UEs uniform in each centre sector polygon.
std::vector<UserEquipment> drop_ues(const ScenarioConfig& config, const std::vector<NetworkNode>& nodes);

/// Drops `total` UEs over the three centre sectors; the remainder of
/// total/3 goes to the lowest-id sectors. Uses the same drop stream as
/// drop_ues.
std::vector<UserEquipment> drop_ues_total(const ScenarioConfig& config, const std::vector<NetworkNode>& nodes,
                                          std::size_t total);

}  // namespace dcsim
