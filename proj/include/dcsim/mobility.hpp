#pragma once

#include "dcsim/rng.hpp"
#include "dcsim/scenario.hpp"

namespace dcsim {

double speed_kmh_to_ms(double kmh);

/// Advances the UE by speed * dt along its heading. When the path hits the
/// region boundary the UE stops there, draws a fresh heading uniformly among
/// directions pointing strictly into the region, and spends the remaining
/// distance on the new heading (repeating as often as needed).
UserEquipment step(const UserEquipment& ue, double dt, RngStream& rng);

/// Per-UE mobility stream, independent of how many UEs exist or the order
/// in which they are stepped.
RngStream mobility_stream(std::uint64_t root_seed, UeId ue);

}  // namespace dcsim
