#include "dcsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include "dcsim/format.hpp"

namespace dcsim {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ConfigError(std::string(key), "expected a finite number, got '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(std::string(key), "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

struct Field {
  const char* key;
  std::function<void(ScenarioConfig&, std::string_view)> set;
  std::function<std::string(const ScenarioConfig&)> get;
};

template <typename T>
Field real_field(const char* key, T ScenarioConfig::*member) {
  return {key,
          [key, member](ScenarioConfig& c, std::string_view v) { c.*member = parse_double(key, v); },
          [member](const ScenarioConfig& c) { return format_exact(c.*member); }};
}

template <typename T>
Field count_field(const char* key, T ScenarioConfig::*member) {
  return {key,
          [key, member](ScenarioConfig& c, std::string_view v) {
            c.*member = static_cast<T>(parse_unsigned(key, v));
          },
          [member](const ScenarioConfig& c) { return std::to_string(c.*member); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      real_field("macro_isd", &ScenarioConfig::macro_isd),
      real_field("pico_radius", &ScenarioConfig::pico_radius),
      count_field("picos_per_sector", &ScenarioConfig::picos_per_sector),
      count_field("ues_per_sector", &ScenarioConfig::ues_per_sector),
      real_field("ue_speed", &ScenarioConfig::ue_speed),
      real_field("sim_duration", &ScenarioConfig::sim_duration),
      real_field("time_step", &ScenarioConfig::time_step),
      count_field("rng_seed", &ScenarioConfig::rng_seed),
      real_field("macro_tx_power", &ScenarioConfig::macro_tx_power),
      real_field("pico_tx_power", &ScenarioConfig::pico_tx_power),
      real_field("macro_antenna_height", &ScenarioConfig::macro_antenna_height),
      real_field("pico_antenna_height", &ScenarioConfig::pico_antenna_height),
      real_field("macro_bandwidth", &ScenarioConfig::macro_bandwidth),
      real_field("pico_bandwidth", &ScenarioConfig::pico_bandwidth),
      {"dc_capacity_N",
       [](ScenarioConfig& c, std::string_view v) {
         if (v == "auto") {
           c.dc_capacity_N.reset();
         } else {
           c.dc_capacity_N = static_cast<std::size_t>(parse_unsigned("dc_capacity_N", v));
         }
       },
       [](const ScenarioConfig& c) {
         return c.dc_capacity_N ? std::to_string(*c.dc_capacity_N) : std::string("auto");
       }},
      count_field("dc_rank_n", &ScenarioConfig::dc_rank_n),
      real_field("rsrp_threshold_distributed", &ScenarioConfig::rsrp_threshold_distributed),
      real_field("a2_threshold", &ScenarioConfig::a2_threshold),
      real_field("a4_threshold", &ScenarioConfig::a4_threshold),
      real_field("hysteresis", &ScenarioConfig::hysteresis),
  };
  return table;
}

}  // namespace

std::size_t ScenarioConfig::num_steps() const {
  return static_cast<std::size_t>(std::llround(sim_duration / time_step));
}

std::size_t ScenarioConfig::resolved_capacity(std::size_t num_ues) const {
  return dc_capacity_N.value_or(num_ues);
}

void validate(const ScenarioConfig& c) {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw ConfigError(field, what);
  };
  require(c.macro_isd > 0.0, "macro_isd", "must be > 0");
  require(c.pico_radius > 0.0, "pico_radius", "must be > 0");
  require(c.pico_radius < c.macro_isd / 2.0, "pico_radius", "must be < macro_isd/2");
  require(c.ue_speed >= 0.0, "ue_speed", "must be >= 0");
  require(c.time_step > 0.0, "time_step", "must be > 0");
  require(c.sim_duration >= 0.0, "sim_duration", "must be >= 0");
  const double steps = c.sim_duration / c.time_step;
  require(std::abs(steps - std::round(steps)) <= 1e-9 * std::max(1.0, steps), "sim_duration",
          "must be an integer multiple of time_step");
  require(c.dc_rank_n >= 1, "dc_rank_n", "must be >= 1");
  require(c.macro_bandwidth > 0.0, "macro_bandwidth", "must be > 0");
  require(c.pico_bandwidth > 0.0, "pico_bandwidth", "must be > 0");
  require(c.macro_antenna_height > 0.0, "macro_antenna_height", "must be > 0");
  require(c.pico_antenna_height > 0.0, "pico_antenna_height", "must be > 0");
  require(c.hysteresis >= 0.0, "hysteresis", "must be >= 0");
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig config;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    const auto& table = fields();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Field& f) { return key == f.key; });
    if (it == table.end()) {
      throw ConfigError(std::string(key), "unknown key (line " + std::to_string(line_no) + ")");
    }
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError(std::string(key), "duplicate key (line " + std::to_string(line_no) + ")");
    }
    it->set(config, value);
  }
  validate(config);
  return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot open scenario file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string to_text(const ScenarioConfig& config) {
  std::string out;
  for (const auto& f : fields()) {
    out += f.key;
    out += " = ";
    out += f.get(config);
    out += '\n';
  }
  return out;
}

}  // namespace dcsim
