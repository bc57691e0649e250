#include "dcsim/scenario.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dcsim/mobility.hpp"
#include "dcsim/rng.hpp"

namespace dcsim {
namespace {

Vec2 sample_in_polygon(const ConvexPolygon& poly, RngStream& rng) {
  const Vec2 lo = poly.bbox_min();
  const Vec2 hi = poly.bbox_max();
  for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
    const Vec2 p{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
    if (poly.inset_distance(p) > 0.0) return p;
  }
  throw PlacementError("could not sample a point inside the sector polygon");
}

}  // namespace

std::vector<Vec2> site_positions(double isd) {
  std::vector<Vec2> sites{{0.0, 0.0}};
  for (int k = 0; k < 6; ++k) sites.push_back(polar(isd, deg_to_rad(30.0 + 60.0 * k)));
  return sites;
}

double sector_boresight_deg(std::size_t sector) { return 120.0 * static_cast<double>(sector); }

ConvexPolygon sector_polygon(Vec2 site, double boresight_deg, double isd) {
  const double r = isd / std::numbers::sqrt3;
  return ConvexPolygon({site, site + polar(r, deg_to_rad(boresight_deg - 60.0)),
                        site + polar(r, deg_to_rad(boresight_deg)), site + polar(r, deg_to_rad(boresight_deg + 60.0))});
}

std::vector<NodeId> centre_sectors(const std::vector<NetworkNode>& nodes) {
  std::vector<NodeId> ids;
  for (const auto& n : nodes) {
    if (n.kind == NodeKind::MacroSector && n.site == 0) ids.push_back(n.id);
  }
  return ids;
}

std::vector<NetworkNode> build_deployment(const ScenarioConfig& config) {
  validate(config);
  std::vector<NetworkNode> nodes;
  const auto sites = site_positions(config.macro_isd);
  for (std::size_t s = 0; s < sites.size(); ++s) {
    for (std::size_t k = 0; k < kSectorsPerSite; ++k) {
      NetworkNode n;
      n.id = nodes.size();
      n.kind = NodeKind::MacroSector;
      n.position = sites[s];
      n.boresight_deg = sector_boresight_deg(k);
      n.tx_power_dbm = config.macro_tx_power;
      n.antenna_height_m = config.macro_antenna_height;
      n.carrier = Carrier::MacroCarrier;
      n.bandwidth_hz = config.macro_bandwidth;
      n.site = s;
      nodes.push_back(n);
    }
  }

  RngStream rng(derive_seed(config.rng_seed, StreamPurpose::Deployment));
  const double min_separation = 2.0 * config.pico_radius;
  std::vector<Vec2> placed;
  for (std::size_t k = 0; k < kSectorsPerSite; ++k) {
    const ConvexPolygon sector = sector_polygon(sites[0], sector_boresight_deg(k), config.macro_isd);
    const Vec2 lo = sector.bbox_min();
    const Vec2 hi = sector.bbox_max();
    for (std::size_t p = 0; p < config.picos_per_sector; ++p) {
      bool ok = false;
      Vec2 candidate;
      for (int attempt = 0; attempt < kPlacementAttempts && !ok; ++attempt) {
        candidate = {rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
        if (sector.inset_distance(candidate) <= 0.0) continue;
        ok = true;
        for (const auto& site : sites) {
          if (distance(candidate, site) < kMinPicoToMacroDistance) ok = false;
        }
        for (const auto& other : placed) {
          if (distance(candidate, other) < min_separation) ok = false;
        }
      }
      if (!ok) {
        throw PlacementError("cannot place pico " + std::to_string(p) + " in centre sector " + std::to_string(k) +
                             " after " + std::to_string(kPlacementAttempts) + " attempts");
      }
      placed.push_back(candidate);

      NetworkNode n;
      n.id = nodes.size();
      n.kind = NodeKind::Pico;
      n.position = candidate;
      n.tx_power_dbm = config.pico_tx_power;
      n.antenna_height_m = config.pico_antenna_height;
      n.carrier = Carrier::PicoCarrier;
      n.bandwidth_hz = config.pico_bandwidth;
      n.site = 0;
      nodes.push_back(n);
    }
  }
  return nodes;
}

std::vector<UserEquipment> drop_ues(const ScenarioConfig& config, const std::vector<NetworkNode>& nodes) {
  return drop_ues_total(config, nodes, config.ues_per_sector * kSectorsPerSite);
}

std::vector<UserEquipment> drop_ues_total(const ScenarioConfig& config, const std::vector<NetworkNode>& nodes,
                                          std::size_t total) {
  validate(config);
  const auto sectors = centre_sectors(nodes);
  if (sectors.size() != kSectorsPerSite) {
    throw std::invalid_argument("deployment does not contain the three centre sectors");
  }
  const double speed = speed_kmh_to_ms(config.ue_speed);
  RngStream rng(derive_seed(config.rng_seed, StreamPurpose::Drop));
  std::vector<UserEquipment> ues;
  ues.reserve(total);
  for (std::size_t k = 0; k < sectors.size(); ++k) {
    const NetworkNode& sector = nodes[sectors[k]];
    const ConvexPolygon region = sector_polygon(sector.position, sector.boresight_deg, config.macro_isd);
    const std::size_t count = total / kSectorsPerSite + (k < total % kSectorsPerSite ? 1 : 0);
    for (std::size_t i = 0; i < count; ++i) {
      UserEquipment ue;
      ue.id = ues.size();
      ue.position = sample_in_polygon(region, rng);
      ue.direction_rad = rng.uniform(0.0, 2.0 * std::numbers::pi);
      ue.speed_ms = speed;
      ue.home_sector = sector.id;
      ue.region = region;
      ues.push_back(std::move(ue));
    }
  }
  return ues;
}

}  // namespace dcsim
