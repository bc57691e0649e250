#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dcsim {

/// Raised for malformed scenario files and violated config invariants.
/// field() names the offending key when one is known.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Scenario parameters. Defaults reproduce the 7-site HetNet study: 500 m
/// ISD, 4 picos per centre-cell sector, 46/30 dBm, 10 MHz per tier.
struct ScenarioConfig {
  double macro_isd = 500.0;            // m
  double pico_radius = 50.0;           // m
  std::size_t picos_per_sector = 4;
  std::size_t ues_per_sector = 10;
  double ue_speed = 30.0;              // km/h
  double sim_duration = 1000.0;        // s
  double time_step = 0.1;              // s
  std::uint64_t rng_seed = 1;
  double macro_tx_power = 46.0;        // dBm
  double pico_tx_power = 30.0;         // dBm
  double macro_antenna_height = 32.0;  // m
  double pico_antenna_height = 10.0;   // m
  double macro_bandwidth = 10e6;       // Hz
  double pico_bandwidth = 10e6;        // Hz
  /// DC grant limit N of the centralized policy; nullopt ("auto") means one
  /// grant per UE, i.e. unbounded.
  std::optional<std::size_t> dc_capacity_N;
  std::size_t dc_rank_n = 1;
  double rsrp_threshold_distributed = -78.0;  // dBm
  double a2_threshold = -22.0;                // dB RSRQ
  double a4_threshold = -20.0;                // dB RSRQ
  double hysteresis = 1.0;                    // dB

  /// Number of steps covering sim_duration. Requires a validated config.
  std::size_t num_steps() const;
  /// Capacity N resolved against the UE count of a drop.
  std::size_t resolved_capacity(std::size_t num_ues) const;
};

/// Throws ConfigError naming the first violated invariant.
void validate(const ScenarioConfig& config);

/// Parses `key = value` lines; `#` starts a comment, blank lines are
/// ignored. Unknown or duplicate keys are errors. Missing keys keep their
/// defaults. The result is validated.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical text form, one key per line in declaration order. Parses back
/// to an identical config.
std::string to_text(const ScenarioConfig& config);

}  // namespace dcsim
