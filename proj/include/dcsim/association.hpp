#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcsim/csv.hpp"
#include "dcsim/radio.hpp"
#include "dcsim/scenario.hpp"

namespace dcsim {

/// Primary/secondary association held by the controller.
///
/// rsrp_b[j] lists the RSRP of every link currently served by node j, in
/// the order links were granted: primaries first (UE-id order), then
/// secondaries as they are admitted.
struct AssociationState {
  std::vector<NodeId> primary;                   // by UE id
  std::vector<std::optional<NodeId>> secondary;  // by UE id
  std::vector<std::vector<double>> rsrp_b;       // by node id
  std::size_t count = 0;                         // UEs holding a secondary
  std::size_t capacity_N = 0;
  std::size_t rank_n = 1;

  std::size_t num_ues() const { return primary.size(); }
  std::size_t num_nodes() const { return rsrp_b.size(); }

  friend bool operator==(const AssociationState&, const AssociationState&) = default;
};

/// Empty string when every invariant holds, otherwise the first violation.
std::string check_invariants(const AssociationState& state);

/// Strongest node for every UE (lowest id on ties). Throws
/// std::invalid_argument when the snapshot has no nodes.
AssociationState associate_primary(const MeasurementSnapshot& snapshot);

/// Strongest node other than the primary, lowest id on ties; nullopt with
/// a single node.
std::optional<NodeId> second_best_node(const MeasurementSnapshot& snapshot, const AssociationState& state, UeId u);

/// UEs by descending second-best RSRP, ascending UE id on ties. Empty when
/// no UE has a second link.
std::vector<UeId> second_best_order(const MeasurementSnapshot& snapshot, const AssociationState& state);

/// Centralized DC admission. Walks UEs in second_best_order until
/// capacity_N grants are made; a UE is admitted on its second-best node j
/// when its RSRP there is strictly greater than at least rank_n of the
/// links already in rsrp_b[j]. A rejected UE is not retried elsewhere.
/// Any previous secondaries in `state` are discarded first.
AssociationState centralized_dc(const MeasurementSnapshot& snapshot, AssociationState state, std::size_t capacity_N,
                                std::size_t rank_n);

/// Distributed baseline: every UE independently takes its second-best node
/// when that RSRP exceeds the threshold. No capacity or rank test.
AssociationState distributed_dc(const MeasurementSnapshot& snapshot, AssociationState state,
                                double rsrp_threshold_dbm);

/// Columns ue_id, primary_node, secondary_node, policy.
CsvTable association_csv(const AssociationState& state, std::string_view policy);

}  // namespace dcsim
