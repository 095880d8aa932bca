// Brute-force oracles for the housing-market axioms. These enumerate the
// whole candidate space on purpose: they are the independent judges the
// mechanism is tested against, so they stay as plain as possible.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ttc/market.hpp"
#include "ttc/tiebreak.hpp"

namespace ttc {

// Weak: every member weakly better off and at least one strictly (the
// blocking notion behind the core). Strong: every member strictly better
// off (the notion behind the weak core).
enum class BlockMode { Weak, Strong };

struct BlockingWitness {
  std::vector<AgentId> coalition;     // ascending
  std::vector<HouseId> reallocation;  // coalition[k] receives reallocation[k]
  BlockMode mode = BlockMode::Weak;

  bool operator==(const BlockingWitness&) const = default;
};

// First agent strictly preferring its endowment to its assignment, if any.
std::optional<AgentId> ir_violator(const Market& market, const Allocation& x);
bool is_individually_rational(const Market& market, const Allocation& x);

// Every allocation that makes everyone weakly better off and someone
// strictly better off than x, in lexicographic order of assignment vectors,
// capped at limit. Full n! scan; guard n <= 8.
std::vector<Allocation> pareto_dominators(
    const Market& market, const Allocation& x,
    std::size_t limit = static_cast<std::size_t>(-1));
bool is_pareto_efficient(const Market& market, const Allocation& x);

// First coalition that blocks x by redistributing its own endowments,
// scanning coalitions by size then lexicographically, and redistributions in
// lexicographic order. Guard n <= 7.
std::optional<BlockingWitness> find_blocking(const Market& market,
                                             const Allocation& x,
                                             BlockMode mode);

// All unblocked allocations, in lexicographic order. Guard n <= 7.
std::vector<Allocation> core_allocations(const Market& market);
std::vector<Allocation> weak_core_allocations(const Market& market);

// Whether every agent is indifferent between every pair of the given
// allocations. Callers pass a core; an empty or singleton list is trivially
// single-valued.
bool essentially_single_valued(const Market& market,
                               const std::vector<Allocation>& allocations);

// Runs the mechanism on the market's profile and on shifted_profile, after
// checking that shifted_profile only enlarges each agent's lower contour set
// at its assigned house (throws std::invalid_argument otherwise). Returns
// whether the two outcomes coincide.
bool check_monotone_pair(const Market& market, const TieBreakProfile& tiebreak,
                         const std::vector<PreferenceRelation>& shifted_profile);

}  // namespace ttc
