#include "dcsim/signaling.hpp"

#include <stdexcept>

#include "dcsim/format.hpp"

namespace dcsim {
namespace {

std::size_t kind_index(DcEventKind kind) { return static_cast<std::size_t>(kind); }
std::size_t arch_index(Architecture arch) { return arch == Architecture::Legacy ? 0 : 1; }

}  // namespace

std::string_view to_string(Architecture arch) {
  return arch == Architecture::Legacy ? "legacy" : "proposed_sdn";
}

std::size_t messages_per_event(DcEventKind kind, Architecture arch) {
  static constexpr std::size_t kLegacy[] = {3, 5, 2};
  static constexpr std::size_t kProposed[] = {1, 2, 1};
  return arch == Architecture::Legacy ? kLegacy[kind_index(kind)] : kProposed[kind_index(kind)];
}

double reduction_percent(DcEventKind kind) {
  const double legacy = static_cast<double>(messages_per_event(kind, Architecture::Legacy));
  const double proposed = static_cast<double>(messages_per_event(kind, Architecture::ProposedSdn));
  return 100.0 * (1.0 - proposed / legacy);
}

const LedgerEntry& SignalingLedger::entry(DcEventKind kind, Architecture arch) const {
  return entries_[kind_index(kind)][arch_index(arch)];
}

LedgerEntry& SignalingLedger::entry_ref(DcEventKind kind, Architecture arch) {
  return entries_[kind_index(kind)][arch_index(arch)];
}

void SignalingLedger::accumulate(std::span<const DcEvent> events, Architecture arch) {
  for (const auto& e : events) {
    auto& slot = entry_ref(e.kind, arch);
    ++slot.event_count;
    slot.message_count += messages_per_event(e.kind, arch);
  }
}

SignalingLedger accumulate(SignalingLedger ledger, std::span<const DcEvent> events, Architecture arch) {
  ledger.accumulate(events, arch);
  return ledger;
}

double signaling_rate(const SignalingLedger& ledger, DcEventKind kind, Architecture arch) {
  if (ledger.num_ues() == 0 || !(ledger.duration_s() > 0.0)) {
    throw std::invalid_argument("signaling rate needs positive duration and UE count");
  }
  return static_cast<double>(ledger.entry(kind, arch).message_count) /
         (static_cast<double>(ledger.num_ues()) * ledger.duration_s());
}

CsvTable signaling_summary_csv(std::span<const SignalingSummaryRow> rows) {
  CsvTable table({"speed_kmh", "event_kind", "event_rate", "legacy_msgs_per_ue_s", "proposed_msgs_per_ue_s",
                  "reduction_pct"});
  for (const auto& r : rows) {
    table.add_row({format_sig6(r.speed_kmh), std::string(to_string(r.kind)), format_sig6(r.event_rate),
                   format_sig6(r.legacy_rate), format_sig6(r.proposed_rate), format_sig6(reduction_percent(r.kind))});
  }
  return table;
}

}  // namespace dcsim
