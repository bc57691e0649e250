#include "dcsim/association.hpp"

#include <algorithm>
#include <stdexcept>

#include "dcsim/format.hpp"

namespace dcsim {
namespace {

void clear_secondaries(AssociationState& state) {
  for (UeId u = 0; u < state.num_ues(); ++u) {
    if (state.secondary[u]) {
      auto& links = state.rsrp_b[*state.secondary[u]];
      // secondaries are always appended after the primaries
      links.pop_back();
    }
  }
  std::fill(state.secondary.begin(), state.secondary.end(), std::nullopt);
  state.count = 0;
}

}  // namespace

std::string check_invariants(const AssociationState& s) {
  const std::size_t nu = s.primary.size();
  if (s.secondary.size() != nu) return "secondary map size differs from primary map";
  std::vector<std::size_t> links(s.rsrp_b.size(), 0);
  std::size_t dual = 0;
  for (UeId u = 0; u < nu; ++u) {
    if (s.primary[u] >= s.rsrp_b.size()) return "primary of UE " + std::to_string(u) + " is not a node";
    ++links[s.primary[u]];
    if (s.secondary[u]) {
      if (*s.secondary[u] >= s.rsrp_b.size()) return "secondary of UE " + std::to_string(u) + " is not a node";
      if (*s.secondary[u] == s.primary[u]) return "UE " + std::to_string(u) + " has secondary equal to primary";
      ++links[*s.secondary[u]];
      ++dual;
    }
  }
  if (s.count != dual) return "count does not match the number of dual-connected UEs";
  if (s.count > s.capacity_N) return "count exceeds capacity_N";
  for (NodeId j = 0; j < s.rsrp_b.size(); ++j) {
    if (s.rsrp_b[j].size() != links[j]) return "rsrp_b of node " + std::to_string(j) + " has the wrong length";
  }
  return {};
}

AssociationState associate_primary(const MeasurementSnapshot& snapshot) {
  if (snapshot.num_nodes() == 0) throw std::invalid_argument("association needs at least one node");
  AssociationState state;
  state.primary.resize(snapshot.num_ues());
  state.secondary.assign(snapshot.num_ues(), std::nullopt);
  state.rsrp_b.assign(snapshot.num_nodes(), {});
  for (UeId u = 0; u < snapshot.num_ues(); ++u) {
    const auto row = snapshot.rsrp.row(u);
    // max_element returns the first maximum, i.e. the lowest id
    const NodeId best = static_cast<NodeId>(std::max_element(row.begin(), row.end()) - row.begin());
    state.primary[u] = best;
    state.rsrp_b[best].push_back(row[best]);
  }
  return state;
}

std::optional<NodeId> second_best_node(const MeasurementSnapshot& snapshot, const AssociationState& state, UeId u) {
  std::optional<NodeId> best;
  for (NodeId j = 0; j < snapshot.num_nodes(); ++j) {
    if (j == state.primary[u]) continue;
    if (!best || snapshot.rsrp(u, j) > snapshot.rsrp(u, *best)) best = j;
  }
  return best;
}

std::vector<UeId> second_best_order(const MeasurementSnapshot& snapshot, const AssociationState& state) {
  if (snapshot.num_nodes() < 2) return {};
  std::vector<std::pair<double, UeId>> keyed;
  keyed.reserve(state.num_ues());
  for (UeId u = 0; u < state.num_ues(); ++u) {
    keyed.emplace_back(snapshot.rsrp(u, *second_best_node(snapshot, state, u)), u);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<UeId> order;
  order.reserve(keyed.size());
  for (const auto& [value, u] : keyed) order.push_back(u);
  return order;
}

AssociationState centralized_dc(const MeasurementSnapshot& snapshot, AssociationState state, std::size_t capacity_N,
                                std::size_t rank_n) {
  clear_secondaries(state);
  state.capacity_N = capacity_N;
  state.rank_n = rank_n;
  for (const UeId u : second_best_order(snapshot, state)) {
    if (state.count >= capacity_N) break;
    const NodeId target = *second_best_node(snapshot, state, u);
    const double link = snapshot.rsrp(u, target);
    auto& existing = state.rsrp_b[target];
    const auto weaker = static_cast<std::size_t>(
        std::count_if(existing.begin(), existing.end(), [link](double other) { return link > other; }));
    if (weaker < rank_n) continue;
    state.secondary[u] = target;
    ++state.count;
    existing.push_back(link);
  }
  return state;
}

AssociationState distributed_dc(const MeasurementSnapshot& snapshot, AssociationState state,
                                double rsrp_threshold_dbm) {
  clear_secondaries(state);
  state.capacity_N = state.num_ues();
  for (UeId u = 0; u < state.num_ues(); ++u) {
    const auto target = second_best_node(snapshot, state, u);
    if (!target) continue;
    const double link = snapshot.rsrp(u, *target);
    if (!(link > rsrp_threshold_dbm)) continue;
    state.secondary[u] = target;
    ++state.count;
    state.rsrp_b[*target].push_back(link);
  }
  return state;
}

CsvTable association_csv(const AssociationState& state, std::string_view policy) {
  CsvTable table({"ue_id", "primary_node", "secondary_node", "policy"});
  for (UeId u = 0; u < state.num_ues(); ++u) {
    table.add_row({std::to_string(u), std::to_string(state.primary[u]), format_optional(state.secondary[u]),
                   std::string(policy)});
  }
  return table;
}

}  // namespace dcsim
