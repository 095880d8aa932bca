// Fixed tie-breaking: strict total orders over agents, and the derived
// strict preferences obtained by resolving indifferences by house owner.
#pragma once

#include <functional>
#include <vector>

#include "ttc/market.hpp"

namespace ttc {

// A strict total order over the agents of one market, best first. Used both
// as an agent's tie-breaking order and as a school's priority order.
class AgentOrder {
public:
  explicit AgentOrder(std::vector<AgentId> order);

  int agent_count() const { return static_cast<int>(order_.size()); }
  const std::vector<AgentId>& order() const { return order_; }
  AgentId at_position(int p) const { return order_.at(p); }

  // 0 is the highest priority. Throws on an agent outside the market.
  int position_of(AgentId a) const;
  bool ranks_before(AgentId a, AgentId b) const {
    return position_of(a) < position_of(b);
  }

  bool operator==(const AgentOrder&) const = default;

private:
  std::vector<AgentId> order_;
  std::vector<int> position_;
};

// One tie-breaking order per agent.
class TieBreakProfile {
public:
  explicit TieBreakProfile(std::vector<AgentOrder> per_agent);

  int agent_count() const { return static_cast<int>(per_agent_.size()); }
  const AgentOrder& order_of(AgentId i) const {
    return per_agent_.at(i.value);
  }
  const std::vector<AgentOrder>& orders() const { return per_agent_; }

  bool operator==(const TieBreakProfile&) const = default;

private:
  std::vector<AgentOrder> per_agent_;
};

// A strict preference: a permutation of the houses, best first.
class StrictPreference {
public:
  explicit StrictPreference(std::vector<HouseId> ranking);

  int house_count() const { return static_cast<int>(ranking_.size()); }
  const std::vector<HouseId>& ranking() const { return ranking_; }
  HouseId at_rank(int r) const { return ranking_.at(r); }

  int rank_of(HouseId h) const;
  bool prefers(HouseId a, HouseId b) const {
    return rank_of(a) < rank_of(b);
  }

  // The equivalent weak order with singleton classes.
  PreferenceRelation as_relation() const;

  bool operator==(const StrictPreference&) const = default;

private:
  std::vector<HouseId> ranking_;
  std::vector<int> rank_;
};

// Resolves the indifferences of rel into a strict preference: strict
// comparisons are kept, and within an indifference class houses are ordered
// by the position of their owners in the agent's tie-breaking order. The
// endowment supplies the owner of each house.
StrictPreference break_ties(const PreferenceRelation& rel,
                            const AgentOrder& order,
                            const std::vector<HouseId>& endowment);

std::vector<StrictPreference> break_profile(
    const std::vector<PreferenceRelation>& profile,
    const TieBreakProfile& tiebreak, const std::vector<HouseId>& endowment);

// The profile where every agent ranks itself first, remaining agents in the
// given per-agent order (ascending by default). With this profile an agent
// indifferent between its endowment and another house keeps its endowment.
TieBreakProfile self_first_profile(int agent_count);
TieBreakProfile self_first_profile(
    int agent_count,
    const std::function<std::vector<AgentId>(AgentId)>& tail_of);

}  // namespace ttc
