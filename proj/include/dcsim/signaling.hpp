#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include "dcsim/csv.hpp"
#include "dcsim/dc_events.hpp"

namespace dcsim {

// RAN control messages per DC mobility event.
//
// Legacy (MeNB <-> SeNB over X2):
//   addition  SeNB Addition Request, Addition Request Ack, Reconfiguration Complete
//   change    5 messages across source SeNB, target SeNB and MeNB
//   release   2 messages
// Controller-based (controller <-> data-plane node):
//   addition  Flow Add to the secondary node
//   change    Flow Add to the target, Flow Release to the source
//   release   Flow Release to the secondary node
// UE-facing RRC exchanges are identical in both and are not counted.
enum class Architecture { Legacy, ProposedSdn };
inline constexpr Architecture kAllArchitectures[] = {Architecture::Legacy, Architecture::ProposedSdn};

std::string_view to_string(Architecture arch);

std::size_t messages_per_event(DcEventKind kind, Architecture arch);

/// Percentage of messages saved by the controller architecture for one
/// event kind: 100 * (1 - proposed / legacy).
double reduction_percent(DcEventKind kind);

struct LedgerEntry {
  std::size_t event_count = 0;
  std::size_t message_count = 0;
  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

class SignalingLedger {
 public:
  SignalingLedger() = default;
  SignalingLedger(double duration_s, std::size_t num_ues) : duration_s_(duration_s), num_ues_(num_ues) {}

  double duration_s() const { return duration_s_; }
  std::size_t num_ues() const { return num_ues_; }
  const LedgerEntry& entry(DcEventKind kind, Architecture arch) const;

  /// Books `events` under `arch`. Batches are additive.
  void accumulate(std::span<const DcEvent> events, Architecture arch);

  friend bool operator==(const SignalingLedger&, const SignalingLedger&) = default;

 private:
  LedgerEntry& entry_ref(DcEventKind kind, Architecture arch);

  double duration_s_ = 0.0;
  std::size_t num_ues_ = 0;
  std::array<std::array<LedgerEntry, 2>, 3> entries_{};
};

/// Value-returning form of SignalingLedger::accumulate.
SignalingLedger accumulate(SignalingLedger ledger, std::span<const DcEvent> events, Architecture arch);

/// Messages per UE per second for one (kind, architecture). Throws
/// std::invalid_argument unless duration and num_ues are positive.
double signaling_rate(const SignalingLedger& ledger, DcEventKind kind, Architecture arch);

struct SignalingSummaryRow {
  double speed_kmh = 0.0;
  DcEventKind kind = DcEventKind::ScAddition;
  double event_rate = 0.0;
  double legacy_rate = 0.0;
  double proposed_rate = 0.0;
};

/// Columns speed_kmh, event_kind, event_rate, legacy_msgs_per_ue_s,
/// proposed_msgs_per_ue_s, reduction_pct.
CsvTable signaling_summary_csv(std::span<const SignalingSummaryRow> rows);

}  // namespace dcsim
