// Seeded deterministic randomness and instance generators. Every random
// draw in campaigns and tests flows through Rng so identical seeds replay
// bit-exactly on any platform: mt19937_64 is fully specified by the
// standard, while std::uniform_int_distribution and std::shuffle are not,
// so bounded draws and shuffles are done by hand here.
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ttc/market.hpp"
#include "ttc/preference.hpp"
#include "ttc/tiebreak.hpp"

namespace ttc {

class Rng {
public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, bound) by rejection sampling; bound must be positive.
  int below(int bound);

  // True with probability num/den.
  bool chance(int num, int den) { return below(den) < num; }

  // Fisher-Yates using below().
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[i], v[static_cast<std::size_t>(below(i + 1))]);
    }
  }

  // An independent child generator for stream index k; deriving children
  // from (seed, k) keeps per-seed campaign work order-independent.
  Rng fork(std::uint64_t stream) const;

private:
  std::uint64_t origin_;
  std::mt19937_64 gen_;
};

std::vector<HouseId> random_house_permutation(Rng& rng, int house_count);

Partition random_partition(Rng& rng, int house_count, int max_blocks);

// A weak order with a uniformly drawn class count.
PreferenceRelation random_weak_order(Rng& rng, int house_count);
PreferenceRelation random_strict_order(Rng& rng, int house_count);

// Blocks of the partition in a random order.
PreferenceRelation random_oi_relation(Rng& rng, const Partition& partition);

AgentOrder random_agent_order(Rng& rng, int agent_count);
TieBreakProfile random_tiebreak_profile(Rng& rng, int agent_count);

// Identity endowment, profile drawn relation-by-relation.
Market random_oi_market(Rng& rng, const Partition& partition);
Market random_weak_market(Rng& rng, int agent_count);
Market random_strict_market(Rng& rng, int agent_count);

// A domain containing a relation that ties two houses and a strict relation
// splitting the tie, plus a few extra draws. Never has a shared objective
// partition; needs at least two houses.
Domain random_non_oi_domain(Rng& rng, int house_count);

// As above but closed under reversal, hence symmetric.
Domain random_non_oi_symmetric_domain(Rng& rng, int house_count);

// Random sets A and B satisfying the sandwich preconditions of
// sandwich_profile for the given relations and houses: mandatory members
// are always included, borderline (indifferent) ones by coin flip.
std::pair<std::vector<AgentId>, std::vector<AgentId>> random_sandwich_sets(
    Rng& rng, const PreferenceRelation& alpha, const PreferenceRelation& beta,
    HouseId h1, HouseId h2);

}  // namespace ttc
