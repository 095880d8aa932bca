// Weak orders over houses and partitions of the house set.
#pragma once

#include <vector>

#include "ttc/types.hpp"

namespace ttc {

// A complete transitive weak order over the houses of one market, stored
// best-first as a list of disjoint indifference classes covering every house.
// Storing the classes (rather than a comparison matrix) makes intransitive or
// incomplete relations unrepresentable. Houses are sorted within each class,
// so structural equality coincides with equality of weak orders.
class PreferenceRelation {
public:
  PreferenceRelation(std::vector<std::vector<HouseId>> ranked_classes,
                     int house_count);

  int house_count() const { return static_cast<int>(rank_of_.size()); }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<HouseId>>& ranked_classes() const {
    return classes_;
  }
  const std::vector<HouseId>& class_at(int rank) const {
    return classes_.at(rank);
  }

  // 0 is the best class. Throws on a house outside the market.
  int rank_of(HouseId h) const;

  Comparison compare(HouseId a, HouseId b) const;
  bool weakly_prefers(HouseId a, HouseId b) const;
  bool strictly_prefers(HouseId a, HouseId b) const;
  bool indifferent(HouseId a, HouseId b) const;

  // All houses weakly below h, including h itself. Sorted by house index.
  std::vector<HouseId> lower_contour_set(HouseId h) const;

  bool is_strict() const { return class_count() == house_count(); }

  // The same classes in reverse order (worst class first). Reversing flips
  // every strict comparison and keeps every indifference.
  PreferenceRelation reversed() const;

  bool operator==(const PreferenceRelation&) const = default;

private:
  std::vector<std::vector<HouseId>> classes_;
  std::vector<int> rank_of_;
};

// An unordered partition of the house set into non-empty blocks. Block order
// is kept as given (and houses are sorted within each block); use same_blocks
// for order-insensitive comparison.
class Partition {
public:
  Partition(std::vector<std::vector<HouseId>> blocks, int house_count);

  int house_count() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<HouseId>>& blocks() const { return blocks_; }
  const std::vector<HouseId>& block_at(int b) const { return blocks_.at(b); }

  int block_of(HouseId h) const;
  bool same_block(HouseId a, HouseId b) const {
    return block_of(a) == block_of(b);
  }

  bool same_blocks(const Partition& other) const;

  bool operator==(const Partition&) const = default;

private:
  std::vector<std::vector<HouseId>> blocks_;
  std::vector<int> block_of_;
};

// The indifference classes of a relation, forgetting their order.
Partition induced_partition(const PreferenceRelation& rel);

}  // namespace ttc
