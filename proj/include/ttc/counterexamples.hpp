// Constructive failures of the mechanism off the objective-indifferences
// domain. Each builder turns a pair (or triple) of disagreeing relations
// into a concrete market where the mechanism provably misbehaves, checks the
// cheap postconditions by actually running the engine, and hands back the
// instance for the oracles to confirm.
#pragma once

#include <vector>

#include "ttc/engine.hpp"
#include "ttc/gsp.hpp"
#include "ttc/market.hpp"
#include "ttc/tiebreak.hpp"

namespace ttc {

// Two relations over the same houses where alpha ties a pair of houses that
// beta orders strictly. The constructor rejects anything else.
struct DisagreeingPair {
  PreferenceRelation alpha;
  PreferenceRelation beta;
  HouseId h1;
  HouseId h2;

  DisagreeingPair(PreferenceRelation alpha_rel, PreferenceRelation beta_rel,
                  HouseId first, HouseId second);
};

// A profile under which the mechanism provably returns every agent in A and
// B its own endowment. Preconditions, checked: self-first tie-breaking is
// used, A contains every agent whose endowment is strictly alpha-above h1
// and only agents whose endowment is weakly alpha-above h1, and B likewise
// within the complement of A with respect to beta and h2. Agents in neither
// set report alpha as well, which the result does not constrain.
struct SandwichProfile {
  Market market;  // identity endowment
  TieBreakProfile tiebreak;
  std::vector<AgentId> frozen;  // A followed by B members, ascending
};

SandwichProfile sandwich_profile(const PreferenceRelation& alpha,
                                 const PreferenceRelation& beta, HouseId h1,
                                 HouseId h2, const std::vector<AgentId>& a_set,
                                 const std::vector<AgentId>& b_set);

// A market whose mechanism outcome is Pareto dominated (and, for the core
// variant, lies outside a non-empty core). Canonical labels: the market has
// identity endowment, canonical house 0 is the caller's h1 and canonical
// house 1 the caller's h2; original_house maps canonical indices back.
struct ViolationInstance {
  Market market;
  TieBreakProfile tiebreak;
  std::vector<HouseId> original_house;
  std::vector<AgentId> alpha_agents;  // report alpha
  std::vector<AgentId> beta_agents;   // report beta
  Allocation outcome;      // engine result; equals the endowment
  Allocation improvement;  // agents 0 and 1 swap; Pareto dominates outcome
};

// Needs at least two houses. The outcome equals the endowment, which the
// swap of agents 0 and 1 dominates: agent 0 ties the two houses, agent 1
// strictly gains.
ViolationInstance construct_pe_violation(const DisagreeingPair& pair);

// Picks, by lexicographic scan over (alpha index, beta index, h1, h2), the
// first disagreeing pair whose tied class puts h1 at the top under beta
// (no house tied with h2 under alpha is strictly beta-above h1). That extra
// normalization makes the improvement a core allocation, so the outcome is
// outside a non-empty core. Throws if the domain has a shared objective
// partition.
ViolationInstance construct_cs_violation(const Domain& domain);

// A market plus a coalition that profits by deviating: agent 0 reports gamma
// instead of alpha and trades its house to agent 1, who strictly gains while
// agent 0 stays indifferent. Preconditions: some ordered house pair is tied
// under alpha, strictly ordered under beta, and strictly reversed under
// gamma (first such pair by lexicographic scan is used).
struct ManipulationInstance {
  Market market;  // truthful profile
  TieBreakProfile tiebreak;
  std::vector<HouseId> original_house;
  std::vector<AgentId> alpha_agents;
  std::vector<AgentId> beta_agents;
  std::vector<AgentId> gamma_agents;
  ManipulationWitness witness;  // coalition {0, 1}; only agent 0 misreports
};

ManipulationInstance construct_gsp_violation(const PreferenceRelation& alpha,
                                             const PreferenceRelation& beta,
                                             const PreferenceRelation& gamma);

// Convenience for symmetric non-objective domains: finds the first ordered
// house pair with a tie, a strict order, and a strict reversal across the
// domain, then builds the instance from those three relations. Throws if no
// such triple exists (in particular on any objective-indifferences domain).
ManipulationInstance construct_gsp_violation(const Domain& domain);

}  // namespace ttc
