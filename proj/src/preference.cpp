#include "ttc/preference.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ttc {

namespace {

// Builds the house -> rank table shared by relations and partitions, checking
// that the groups are non-empty and cover [0, house_count) exactly once.
std::vector<int> index_groups(std::vector<std::vector<HouseId>>& groups,
                              int house_count, const char* what) {
  if (house_count <= 0) {
    throw std::invalid_argument(std::string(what) +
                                ": house count must be positive");
  }
  std::vector<int> table(static_cast<std::size_t>(house_count), -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) {
      throw std::invalid_argument(std::string(what) + ": empty group");
    }
    std::sort(groups[g].begin(), groups[g].end());
    for (HouseId h : groups[g]) {
      if (h.value < 0 || h.value >= house_count) {
        throw std::invalid_argument(std::string(what) +
                                    ": house index out of range");
      }
      if (table[static_cast<std::size_t>(h.value)] != -1) {
        throw std::invalid_argument(std::string(what) +
                                    ": house appears twice");
      }
      table[static_cast<std::size_t>(h.value)] = static_cast<int>(g);
    }
  }
  for (int v : table) {
    if (v == -1) {
      throw std::invalid_argument(std::string(what) +
                                  ": some house is missing");
    }
  }
  return table;
}

}  // namespace

PreferenceRelation::PreferenceRelation(
    std::vector<std::vector<HouseId>> ranked_classes, int house_count)
    : classes_(std::move(ranked_classes)) {
  rank_of_ = index_groups(classes_, house_count, "preference relation");
}

int PreferenceRelation::rank_of(HouseId h) const {
  if (h.value < 0 || h.value >= house_count()) {
    throw std::invalid_argument("house not in relation");
  }
  return rank_of_[static_cast<std::size_t>(h.value)];
}

Comparison PreferenceRelation::compare(HouseId a, HouseId b) const {
  int ra = rank_of(a);
  int rb = rank_of(b);
  if (ra < rb) return Comparison::StrictlyPrefers;
  if (ra > rb) return Comparison::StrictlyDisprefers;
  return Comparison::Indifferent;
}

bool PreferenceRelation::weakly_prefers(HouseId a, HouseId b) const {
  return rank_of(a) <= rank_of(b);
}

bool PreferenceRelation::strictly_prefers(HouseId a, HouseId b) const {
  return rank_of(a) < rank_of(b);
}

bool PreferenceRelation::indifferent(HouseId a, HouseId b) const {
  return rank_of(a) == rank_of(b);
}

std::vector<HouseId> PreferenceRelation::lower_contour_set(HouseId h) const {
  int r = rank_of(h);
  std::vector<HouseId> out;
  for (int v = 0; v < house_count(); ++v) {
    if (rank_of_[static_cast<std::size_t>(v)] >= r) {
      out.push_back(HouseId(v));
    }
  }
  return out;
}

PreferenceRelation PreferenceRelation::reversed() const {
  std::vector<std::vector<HouseId>> rev(classes_.rbegin(), classes_.rend());
  return PreferenceRelation(std::move(rev), house_count());
}

Partition::Partition(std::vector<std::vector<HouseId>> blocks, int house_count)
    : blocks_(std::move(blocks)) {
  block_of_ = index_groups(blocks_, house_count, "partition");
}

int Partition::block_of(HouseId h) const {
  if (h.value < 0 || h.value >= house_count()) {
    throw std::invalid_argument("house not in partition");
  }
  return block_of_[static_cast<std::size_t>(h.value)];
}

bool Partition::same_blocks(const Partition& other) const {
  if (house_count() != other.house_count() ||
      block_count() != other.block_count()) {
    return false;
  }
  // Blocks are sorted internally, so two equal partitions pair up blocks by
  // their smallest element.
  for (const auto& block : blocks_) {
    int b = other.block_of(block.front());
    if (other.block_at(b) != block) return false;
  }
  return true;
}

Partition induced_partition(const PreferenceRelation& rel) {
  return Partition(rel.ranked_classes(), rel.house_count());
}

}  // namespace ttc
