// Top trading cycles over strict preferences, and the fixed tie-breaking
// mechanism that runs it on tie-broken weak preferences.
#pragma once

#include <vector>

#include "ttc/market.hpp"
#include "ttc/tiebreak.hpp"

namespace ttc {

struct CycleMember {
  AgentId agent;
  HouseId house;  // the house this agent receives when the cycle executes

  bool operator==(const CycleMember&) const = default;
};

// Cycles in execution order. Each cycle is rotated so its lowest-index agent
// comes first; member k receives the endowment of member k+1 (cyclically).
struct ExecutionTrace {
  std::vector<std::vector<CycleMember>> cycles;

  int cycle_index_of(AgentId a) const;

  bool operator==(const ExecutionTrace&) const = default;
};

// Which cycle to execute when several are present. The allocation does not
// depend on the choice; the trace does. LowestAgentFirst follows pointers
// from the lowest-index unassigned agent until a node repeats and executes
// the cycle found, which is the canonical rule everywhere in this project.
// HighestAgentFirst exists to test order-invariance.
enum class CycleSelection { LowestAgentFirst, HighestAgentFirst };

struct TtcResult {
  Allocation allocation;
  ExecutionTrace trace;
};

// Gale's top trading cycles on strict preferences: every unassigned agent
// points at the owner of its best house among houses whose owners are still
// unassigned; some cycle is executed; repeat. O(n^2).
TtcResult ttc_strict(
    const std::vector<HouseId>& endowment,
    const std::vector<StrictPreference>& profile,
    CycleSelection selection = CycleSelection::LowestAgentFirst);

// The fixed tie-breaking mechanism: break the market's weak preferences with
// the given tie-breaking profile, then run ttc_strict on the result.
TtcResult ttc_fixed(const Market& market, const TieBreakProfile& tiebreak,
                    CycleSelection selection = CycleSelection::LowestAgentFirst);

// Checks structural trace invariants against the strict profile that
// produced the result and throws std::logic_error on any violation:
// cycles partition the agents, each member receives the endowment of its
// cyclic successor, the allocation matches the trace, nobody is assigned
// below their endowment, and an agent whose assigned house another agent
// strictly prefers to its own assignment leaves in a strictly earlier cycle.
void validate_trace(const std::vector<HouseId>& endowment,
                    const std::vector<StrictPreference>& profile,
                    const TtcResult& result);

// Allocation-only fast path with caller-owned buffers, for search loops that
// run the mechanism millions of times. Same cycle logic as ttc_strict.
class TtcScratch {
public:
  explicit TtcScratch(int agent_count);

  // prefs is an array of agent_count pointers; out receives the assignment.
  void assign(const HouseId* endowment, const StrictPreference* const* prefs,
              HouseId* out);

private:
  int n_;
  std::vector<int> owner_;
  std::vector<int> cursor_;
  std::vector<int> stamp_;
  std::vector<int> path_;
  std::vector<char> assigned_;
  int round_ = 0;
};

}  // namespace ttc
