#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dcsim/csv.hpp"
#include "dcsim/radio.hpp"
#include "dcsim/scenario.hpp"

namespace dcsim {

enum class DcEventKind { ScAddition, ScChange, ScRelease };
inline constexpr DcEventKind kAllEventKinds[] = {DcEventKind::ScAddition, DcEventKind::ScChange,
                                                 DcEventKind::ScRelease};

std::string_view to_string(DcEventKind kind);

struct DcEvent {
  double time_s = 0.0;
  UeId ue = 0;
  DcEventKind kind = DcEventKind::ScAddition;
  std::optional<NodeId> old_sc;
  std::optional<NodeId> new_sc;

  friend bool operator==(const DcEvent&, const DcEvent&) = default;
};

/// Shape check: addition has only new_sc, release only old_sc, change has
/// both and they differ.
bool well_formed(const DcEvent& event);

/// RSRQ-based A2/A4 trigger parameters.
struct EventConfig {
  double a2_threshold_db = -22.0;
  double a4_threshold_db = -20.0;
  double hysteresis_db = 1.0;

  static EventConfig from(const ScenarioConfig& config);
};

/// A4: neighbour better than threshold (entering condition).
bool a4_satisfied(double rsrq_candidate_db, const EventConfig& cfg);
/// A2: serving worse than threshold (entering condition).
bool a2_satisfied(double rsrq_serving_db, const EventConfig& cfg);

using ScMap = std::vector<std::optional<NodeId>>;  // indexed by UE id

struct Classification {
  ScMap sc;
  std::vector<DcEvent> events;  // ascending UE id
};

/// One step of secondary-cell bookkeeping. Per UE, with best = the
/// A4-passing candidate of highest RSRQ (lowest id on ties):
///   no SC, best exists                          -> addition
///   SC s, best != s and rsrq(best) > rsrq(s)+hys -> change
///   SC s, A2 on s and best absent or == s        -> release
/// otherwise unchanged. At most one event per UE.
Classification classify_transitions(const ScMap& prev_sc, const MeasurementSnapshot& snapshot,
                                    std::span<const NodeId> candidates, const EventConfig& cfg);

struct EventRates {
  double addition = 0.0;
  double change = 0.0;
  double release = 0.0;

  double of(DcEventKind kind) const;
};

struct EventCounts {
  std::size_t addition = 0;
  std::size_t change = 0;
  std::size_t release = 0;

  std::size_t of(DcEventKind kind) const;
};

EventCounts count_events(std::span<const DcEvent> events);

/// Events per UE per second. Throws std::invalid_argument unless
/// num_ues > 0 and duration > 0.
EventRates event_rates(std::span<const DcEvent> events, std::size_t num_ues, double duration_s);

/// Columns time_s, ue_id, kind, old_sc, new_sc.
CsvTable event_log_csv(std::span<const DcEvent> events);

}  // namespace dcsim
