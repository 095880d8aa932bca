// Markets, allocations, and preference domains.
#pragma once

#include <optional>
#include <vector>

#include "ttc/preference.hpp"
#include "ttc/types.hpp"

namespace ttc {

// A bijection from agents to houses.
class Allocation {
public:
  explicit Allocation(std::vector<HouseId> assignment);

  int agent_count() const { return static_cast<int>(assignment_.size()); }
  HouseId at(AgentId i) const { return assignment_.at(i.value); }
  const std::vector<HouseId>& assignment() const { return assignment_; }
  AgentId holder_of(HouseId h) const;

  bool operator==(const Allocation&) const = default;

private:
  std::vector<HouseId> assignment_;
};

// A housing market: n agents, n houses, an endowment bijection, and one weak
// order per agent over the full house set.
class Market {
public:
  Market(std::vector<HouseId> endowment,
         std::vector<PreferenceRelation> profile);

  // Convenience for the common normalization where agent i owns house i.
  static Market with_identity_endowment(
      std::vector<PreferenceRelation> profile);

  int agent_count() const { return static_cast<int>(endowment_.size()); }
  int house_count() const { return agent_count(); }

  HouseId endowment_of(AgentId i) const { return endowment_.at(i.value); }
  AgentId owner_of(HouseId h) const { return owner_.at(h.value); }
  const std::vector<HouseId>& endowment() const { return endowment_; }

  const PreferenceRelation& preference_of(AgentId i) const {
    return profile_.at(i.value);
  }
  const std::vector<PreferenceRelation>& profile() const { return profile_; }

  // Same endowment, different reports.
  Market with_profile(std::vector<PreferenceRelation> profile) const;
  Market with_preference(AgentId i, PreferenceRelation rel) const;

private:
  std::vector<HouseId> endowment_;
  std::vector<AgentId> owner_;
  std::vector<PreferenceRelation> profile_;
};

// A set of admissible preference relations over a common house set. Duplicate
// relations are dropped, keeping first occurrence; indices into the domain
// refer to the deduplicated list.
class Domain {
public:
  explicit Domain(std::vector<PreferenceRelation> relations);

  int house_count() const;
  int size() const { return static_cast<int>(relations_.size()); }
  const PreferenceRelation& at(int i) const { return relations_.at(i); }
  const std::vector<PreferenceRelation>& relations() const {
    return relations_;
  }

  std::optional<int> index_of(const PreferenceRelation& rel) const;
  bool contains(const PreferenceRelation& rel) const {
    return index_of(rel).has_value();
  }

private:
  std::vector<PreferenceRelation> relations_;
};

}  // namespace ttc
