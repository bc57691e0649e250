#include "dcsim/dc_events.hpp"

#include <stdexcept>

#include "dcsim/format.hpp"

namespace dcsim {

std::string_view to_string(DcEventKind kind) {
  switch (kind) {
    case DcEventKind::ScAddition: return "sc_addition";
    case DcEventKind::ScChange: return "sc_change";
    case DcEventKind::ScRelease: return "sc_release";
  }
  return "unknown";
}

bool well_formed(const DcEvent& e) {
  switch (e.kind) {
    case DcEventKind::ScAddition: return !e.old_sc && e.new_sc;
    case DcEventKind::ScRelease: return e.old_sc && !e.new_sc;
    case DcEventKind::ScChange: return e.old_sc && e.new_sc && *e.old_sc != *e.new_sc;
  }
  return false;
}

EventConfig EventConfig::from(const ScenarioConfig& config) {
  return {config.a2_threshold, config.a4_threshold, config.hysteresis};
}

bool a4_satisfied(double rsrq_candidate_db, const EventConfig& cfg) {
  return rsrq_candidate_db > cfg.a4_threshold_db + cfg.hysteresis_db;
}

bool a2_satisfied(double rsrq_serving_db, const EventConfig& cfg) {
  return rsrq_serving_db < cfg.a2_threshold_db - cfg.hysteresis_db;
}

Classification classify_transitions(const ScMap& prev_sc, const MeasurementSnapshot& snapshot,
                                    std::span<const NodeId> candidates, const EventConfig& cfg) {
  if (prev_sc.size() != snapshot.num_ues()) throw std::invalid_argument("SC map does not cover every UE");
  Classification out{prev_sc, {}};
  for (UeId u = 0; u < prev_sc.size(); ++u) {
    std::optional<NodeId> best;
    for (const NodeId j : candidates) {
      const double q = snapshot.rsrq(u, j);
      if (!a4_satisfied(q, cfg)) continue;
      if (!best || q > snapshot.rsrq(u, *best) || (q == snapshot.rsrq(u, *best) && j < *best)) best = j;
    }

    const auto& current = prev_sc[u];
    if (!current) {
      if (best) {
        out.sc[u] = best;
        out.events.push_back({snapshot.time_s, u, DcEventKind::ScAddition, std::nullopt, best});
      }
      continue;
    }
    const NodeId s = *current;
    const double q_serving = snapshot.rsrq(u, s);
    if (best && *best != s && snapshot.rsrq(u, *best) > q_serving + cfg.hysteresis_db) {
      out.sc[u] = best;
      out.events.push_back({snapshot.time_s, u, DcEventKind::ScChange, s, best});
    } else if (a2_satisfied(q_serving, cfg) && (!best || *best == s)) {
      out.sc[u].reset();
      out.events.push_back({snapshot.time_s, u, DcEventKind::ScRelease, s, std::nullopt});
    }
  }
  return out;
}

double EventRates::of(DcEventKind kind) const {
  switch (kind) {
    case DcEventKind::ScAddition: return addition;
    case DcEventKind::ScChange: return change;
    case DcEventKind::ScRelease: return release;
  }
  return 0.0;
}

std::size_t EventCounts::of(DcEventKind kind) const {
  switch (kind) {
    case DcEventKind::ScAddition: return addition;
    case DcEventKind::ScChange: return change;
    case DcEventKind::ScRelease: return release;
  }
  return 0;
}

EventCounts count_events(std::span<const DcEvent> events) {
  EventCounts c;
  for (const auto& e : events) {
    switch (e.kind) {
      case DcEventKind::ScAddition: ++c.addition; break;
      case DcEventKind::ScChange: ++c.change; break;
      case DcEventKind::ScRelease: ++c.release; break;
    }
  }
  return c;
}

EventRates event_rates(std::span<const DcEvent> events, std::size_t num_ues, double duration_s) {
  if (num_ues == 0) throw std::invalid_argument("event_rates needs at least one UE");
  if (!(duration_s > 0.0)) throw std::invalid_argument("event_rates needs a positive duration");
  const auto c = count_events(events);
  const double exposure = static_cast<double>(num_ues) * duration_s;
  return {static_cast<double>(c.addition) / exposure, static_cast<double>(c.change) / exposure,
          static_cast<double>(c.release) / exposure};
}

CsvTable event_log_csv(std::span<const DcEvent> events) {
  CsvTable table({"time_s", "ue_id", "kind", "old_sc", "new_sc"});
  for (const auto& e : events) {
    table.add_row({format_sig6(e.time_s), std::to_string(e.ue), std::string(to_string(e.kind)),
                   format_optional(e.old_sc), format_optional(e.new_sc)});
  }
  return table;
}

}  // namespace dcsim
