// Exhaustive search for coalitional manipulations of the fixed tie-breaking
// mechanism over a restricted preference domain.
#pragma once

#include <cstdint>
#include <optional>

#include "ttc/market.hpp"
#include "ttc/tiebreak.hpp"

namespace ttc {

struct ManipulationWitness {
  std::vector<AgentId> coalition;             // ascending
  std::vector<PreferenceRelation> misreports; // coalition[k] reports misreports[k]
  Allocation truthful;
  Allocation manipulated;
};

struct GspSearchOptions {
  // Largest coalition size to try; -1 means up to all agents.
  int max_coalition = -1;
  // Hard cap on (coalition, misreport tuple) evaluations. Exceeding it
  // throws GuardError with the bound in the message.
  std::uint64_t max_evaluations = 10'000'000;
};

// Searches every coalition (by size, then lexicographically) and every tuple
// of misreports drawn from the domain (lexicographically by domain index)
// for a joint deviation that leaves every member weakly better off and some
// member strictly better off, judged by the members' true preferences.
// Non-members keep reporting truthfully. Requires every true preference to
// lie in the domain, since manipulators can only be caught deviating inside
// the admissible set. Returns the first witness found, re-verified from
// scratch, or nullopt if the mechanism is group strategy-proof on this
// market and domain.
std::optional<ManipulationWitness> find_group_manipulation(
    const Market& market, const Domain& domain, const TieBreakProfile& tiebreak,
    const GspSearchOptions& options = {});

// Coalitions of size one only.
std::optional<ManipulationWitness> find_unilateral_manipulation(
    const Market& market, const Domain& domain, const TieBreakProfile& tiebreak,
    std::uint64_t max_evaluations = 10'000'000);

}  // namespace ttc
