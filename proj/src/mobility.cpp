#include "dcsim/mobility.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcsim {
namespace {

constexpr int kMaxBouncesPerStep = 1000;
constexpr int kMaxHeadingDraws = 10000;

Vec2 heading(double rad) { return {std::cos(rad), std::sin(rad)}; }

}  // namespace

double speed_kmh_to_ms(double kmh) {
  if (kmh < 0.0) throw std::invalid_argument("speed must be >= 0");
  return kmh / 3.6;
}

RngStream mobility_stream(std::uint64_t root_seed, UeId ue) {
  return RngStream(derive_seed(root_seed, StreamPurpose::Mobility, ue));
}

UserEquipment step(const UserEquipment& ue, double dt, RngStream& rng) {
  if (dt < 0.0) throw std::invalid_argument("dt must be >= 0");
  UserEquipment next = ue;
  double remaining = ue.speed_ms * dt;
  for (int bounce = 0; remaining > 0.0; ++bounce) {
    if (bounce == kMaxBouncesPerStep) throw std::runtime_error("mobility step did not converge");
    const Vec2 dir = heading(next.direction_rad);
    const double to_boundary = next.region.exit_distance(next.position, dir);
    if (remaining < to_boundary) {
      next.position = next.position + remaining * dir;
      break;
    }
    next.position = next.position + to_boundary * dir;
    remaining -= to_boundary;

    int draws = 0;
    do {
      if (++draws > kMaxHeadingDraws) throw std::runtime_error("no inward heading at boundary point");
      next.direction_rad = rng.uniform(0.0, 2.0 * std::numbers::pi);
    } while (!next.region.points_inward(next.position, heading(next.direction_rad)));
  }
  return next;
}

}  // namespace dcsim
