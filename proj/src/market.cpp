#include "ttc/market.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttc {

namespace {

std::vector<AgentId> invert_endowment(const std::vector<HouseId>& endowment) {
  int n = static_cast<int>(endowment.size());
  std::vector<AgentId> owner(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    HouseId h = endowment[static_cast<std::size_t>(i)];
    if (h.value < 0 || h.value >= n || seen[static_cast<std::size_t>(h.value)]) {
      throw std::invalid_argument("endowment is not a bijection");
    }
    seen[static_cast<std::size_t>(h.value)] = 1;
    owner[static_cast<std::size_t>(h.value)] = AgentId(i);
  }
  return owner;
}

}  // namespace

Allocation::Allocation(std::vector<HouseId> assignment)
    : assignment_(std::move(assignment)) {
  if (assignment_.empty()) {
    throw std::invalid_argument("allocation must cover at least one agent");
  }
  invert_endowment(assignment_);  // bijection check only
}

AgentId Allocation::holder_of(HouseId h) const {
  for (int i = 0; i < agent_count(); ++i) {
    if (assignment_[static_cast<std::size_t>(i)] == h) return AgentId(i);
  }
  throw std::invalid_argument("house not in allocation");
}

Market::Market(std::vector<HouseId> endowment,
               std::vector<PreferenceRelation> profile)
    : endowment_(std::move(endowment)), profile_(std::move(profile)) {
  if (endowment_.empty()) {
    throw std::invalid_argument("market must have at least one agent");
  }
  if (profile_.size() != endowment_.size()) {
    throw std::invalid_argument("profile size must match agent count");
  }
  owner_ = invert_endowment(endowment_);
  for (const auto& rel : profile_) {
    if (rel.house_count() != agent_count()) {
      throw std::invalid_argument(
          "every preference relation must rank exactly the market's houses");
    }
  }
}

Market Market::with_identity_endowment(std::vector<PreferenceRelation> profile) {
  std::vector<HouseId> endowment;
  endowment.reserve(profile.size());
  for (int i = 0; i < static_cast<int>(profile.size()); ++i) {
    endowment.push_back(HouseId(i));
  }
  return Market(std::move(endowment), std::move(profile));
}

Market Market::with_profile(std::vector<PreferenceRelation> profile) const {
  return Market(endowment_, std::move(profile));
}

Market Market::with_preference(AgentId i, PreferenceRelation rel) const {
  if (i.value < 0 || i.value >= agent_count()) {
    throw std::invalid_argument("agent not in market");
  }
  std::vector<PreferenceRelation> profile = profile_;
  profile[static_cast<std::size_t>(i.value)] = std::move(rel);
  return Market(endowment_, std::move(profile));
}

Domain::Domain(std::vector<PreferenceRelation> relations) {
  if (relations.empty()) {
    throw std::invalid_argument("domain must contain at least one relation");
  }
  int houses = relations.front().house_count();
  for (const auto& rel : relations) {
    if (rel.house_count() != houses) {
      throw std::invalid_argument(
          "domain relations must share one house set");
    }
    if (std::find(relations_.begin(), relations_.end(), rel) ==
        relations_.end()) {
      relations_.push_back(rel);
    }
  }
}

int Domain::house_count() const { return relations_.front().house_count(); }

std::optional<int> Domain::index_of(const PreferenceRelation& rel) const {
  auto it = std::find(relations_.begin(), relations_.end(), rel);
  if (it == relations_.end()) return std::nullopt;
  return static_cast<int>(it - relations_.begin());
}

}  // namespace ttc
