#include "ttc/tiebreak.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttc {

AgentOrder::AgentOrder(std::vector<AgentId> order) : order_(std::move(order)) {
  int n = static_cast<int>(order_.size());
  if (n == 0) {
    throw std::invalid_argument("agent order must not be empty");
  }
  position_.assign(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    AgentId a = order_[static_cast<std::size_t>(p)];
    if (a.value < 0 || a.value >= n ||
        position_[static_cast<std::size_t>(a.value)] != -1) {
      throw std::invalid_argument("agent order must be a permutation");
    }
    position_[static_cast<std::size_t>(a.value)] = p;
  }
}

int AgentOrder::position_of(AgentId a) const {
  if (a.value < 0 || a.value >= agent_count()) {
    throw std::invalid_argument("agent not in order");
  }
  return position_[static_cast<std::size_t>(a.value)];
}

TieBreakProfile::TieBreakProfile(std::vector<AgentOrder> per_agent)
    : per_agent_(std::move(per_agent)) {
  int n = static_cast<int>(per_agent_.size());
  for (const AgentOrder& order : per_agent_) {
    if (order.agent_count() != n) {
      throw std::invalid_argument(
          "every tie-breaking order must cover the market's agents");
    }
  }
}

StrictPreference::StrictPreference(std::vector<HouseId> ranking)
    : ranking_(std::move(ranking)) {
  int n = static_cast<int>(ranking_.size());
  if (n == 0) {
    throw std::invalid_argument("strict preference must not be empty");
  }
  rank_.assign(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) {
    HouseId h = ranking_[static_cast<std::size_t>(r)];
    if (h.value < 0 || h.value >= n ||
        rank_[static_cast<std::size_t>(h.value)] != -1) {
      throw std::invalid_argument("strict preference must be a permutation");
    }
    rank_[static_cast<std::size_t>(h.value)] = r;
  }
}

int StrictPreference::rank_of(HouseId h) const {
  if (h.value < 0 || h.value >= house_count()) {
    throw std::invalid_argument("house not in relation");
  }
  return rank_[static_cast<std::size_t>(h.value)];
}

PreferenceRelation StrictPreference::as_relation() const {
  std::vector<std::vector<HouseId>> classes;
  classes.reserve(ranking_.size());
  for (HouseId h : ranking_) {
    classes.push_back({h});
  }
  return PreferenceRelation(std::move(classes), house_count());
}

StrictPreference break_ties(const PreferenceRelation& rel,
                            const AgentOrder& order,
                            const std::vector<HouseId>& endowment) {
  int n = rel.house_count();
  if (order.agent_count() != n || static_cast<int>(endowment.size()) != n) {
    throw std::invalid_argument(
        "relation, order, and endowment must agree on size");
  }
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    HouseId h = endowment[static_cast<std::size_t>(i)];
    if (h.value < 0 || h.value >= n || owner[static_cast<std::size_t>(h.value)] != -1) {
      throw std::invalid_argument("endowment is not a bijection");
    }
    owner[static_cast<std::size_t>(h.value)] = i;
  }

  std::vector<HouseId> ranking;
  ranking.reserve(static_cast<std::size_t>(n));
  for (const auto& cls : rel.ranked_classes()) {
    std::vector<HouseId> block = cls;
    std::sort(block.begin(), block.end(), [&](HouseId a, HouseId b) {
      return order.position_of(
                 AgentId(owner[static_cast<std::size_t>(a.value)])) <
             order.position_of(
                 AgentId(owner[static_cast<std::size_t>(b.value)]));
    });
    ranking.insert(ranking.end(), block.begin(), block.end());
  }
  return StrictPreference(std::move(ranking));
}

std::vector<StrictPreference> break_profile(
    const std::vector<PreferenceRelation>& profile,
    const TieBreakProfile& tiebreak, const std::vector<HouseId>& endowment) {
  if (profile.size() != static_cast<std::size_t>(tiebreak.agent_count())) {
    throw std::invalid_argument("profile and tie-break sizes must match");
  }
  std::vector<StrictPreference> out;
  out.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    out.push_back(
        break_ties(profile[i], tiebreak.order_of(AgentId(static_cast<int>(i))),
                   endowment));
  }
  return out;
}

TieBreakProfile self_first_profile(int agent_count) {
  return self_first_profile(agent_count, [](AgentId self) {
    std::vector<AgentId> tail;
    (void)self;
    return tail;  // empty means ascending by index
  });
}

TieBreakProfile self_first_profile(
    int agent_count,
    const std::function<std::vector<AgentId>(AgentId)>& tail_of) {
  if (agent_count <= 0) {
    throw std::invalid_argument("agent count must be positive");
  }
  std::vector<AgentOrder> orders;
  orders.reserve(static_cast<std::size_t>(agent_count));
  for (int i = 0; i < agent_count; ++i) {
    std::vector<AgentId> order{AgentId(i)};
    std::vector<AgentId> tail = tail_of(AgentId(i));
    if (tail.empty()) {
      for (int j = 0; j < agent_count; ++j) {
        if (j != i) order.push_back(AgentId(j));
      }
    } else {
      if (static_cast<int>(tail.size()) != agent_count - 1) {
        throw std::invalid_argument(
            "tail must list every other agent exactly once");
      }
      order.insert(order.end(), tail.begin(), tail.end());
    }
    orders.emplace_back(std::move(order));  // permutation check happens here
  }
  return TieBreakProfile(std::move(orders));
}

}  // namespace ttc
