#include "ttc/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ttc/domain.hpp"

namespace ttc {

namespace {

// splitmix64, used only to derive child seeds.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : origin_(seed), gen_(seed) {}

std::uint64_t Rng::next_u64() { return gen_(); }

int Rng::below(int bound) {
  if (bound <= 0) {
    throw std::invalid_argument("bound must be positive");
  }
  // Rejection sampling keeps the draw uniform and platform-independent.
  std::uint64_t b = static_cast<std::uint64_t>(bound);
  std::uint64_t limit = ~0ULL - (~0ULL % b);
  std::uint64_t v;
  do {
    v = gen_();
  } while (v >= limit);
  return static_cast<int>(v % b);
}

Rng Rng::fork(std::uint64_t stream) const {
  return Rng(mix(origin_ ^ mix(stream + 1)));
}

std::vector<HouseId> random_house_permutation(Rng& rng, int house_count) {
  std::vector<HouseId> houses;
  houses.reserve(static_cast<std::size_t>(house_count));
  for (int h = 0; h < house_count; ++h) houses.push_back(HouseId(h));
  rng.shuffle(houses);
  return houses;
}

Partition random_partition(Rng& rng, int house_count, int max_blocks) {
  if (house_count <= 0 || max_blocks <= 0) {
    throw std::invalid_argument("counts must be positive");
  }
  int k = 1 + rng.below(std::min(max_blocks, house_count));
  std::vector<HouseId> houses = random_house_permutation(rng, house_count);
  // First k houses seed the blocks so none is empty; the rest land anywhere.
  std::vector<std::vector<HouseId>> blocks(static_cast<std::size_t>(k));
  for (int h = 0; h < house_count; ++h) {
    int b = h < k ? h : rng.below(k);
    blocks[static_cast<std::size_t>(b)].push_back(
        houses[static_cast<std::size_t>(h)]);
  }
  return Partition(std::move(blocks), house_count);
}

PreferenceRelation random_weak_order(Rng& rng, int house_count) {
  if (house_count <= 0) {
    throw std::invalid_argument("house count must be positive");
  }
  int k = 1 + rng.below(house_count);
  std::vector<HouseId> houses = random_house_permutation(rng, house_count);
  // k-1 distinct cut positions among the house_count-1 gaps.
  std::vector<int> gaps(static_cast<std::size_t>(house_count - 1));
  std::iota(gaps.begin(), gaps.end(), 1);
  rng.shuffle(gaps);
  std::vector<int> cuts(gaps.begin(), gaps.begin() + (k - 1));
  cuts.push_back(0);
  cuts.push_back(house_count);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::vector<HouseId>> classes;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    classes.emplace_back(houses.begin() + cuts[c], houses.begin() + cuts[c + 1]);
  }
  return PreferenceRelation(std::move(classes), house_count);
}

PreferenceRelation random_strict_order(Rng& rng, int house_count) {
  std::vector<HouseId> houses = random_house_permutation(rng, house_count);
  std::vector<std::vector<HouseId>> classes;
  classes.reserve(houses.size());
  for (HouseId h : houses) classes.push_back({h});
  return PreferenceRelation(std::move(classes), house_count);
}

PreferenceRelation random_oi_relation(Rng& rng, const Partition& partition) {
  std::vector<int> order(static_cast<std::size_t>(partition.block_count()));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::vector<HouseId>> classes;
  classes.reserve(order.size());
  for (int b : order) classes.push_back(partition.block_at(b));
  return PreferenceRelation(std::move(classes), partition.house_count());
}

AgentOrder random_agent_order(Rng& rng, int agent_count) {
  std::vector<AgentId> agents;
  agents.reserve(static_cast<std::size_t>(agent_count));
  for (int i = 0; i < agent_count; ++i) agents.push_back(AgentId(i));
  rng.shuffle(agents);
  return AgentOrder(std::move(agents));
}

TieBreakProfile random_tiebreak_profile(Rng& rng, int agent_count) {
  std::vector<AgentOrder> orders;
  orders.reserve(static_cast<std::size_t>(agent_count));
  for (int i = 0; i < agent_count; ++i) {
    orders.push_back(random_agent_order(rng, agent_count));
  }
  return TieBreakProfile(std::move(orders));
}

Market random_oi_market(Rng& rng, const Partition& partition) {
  std::vector<PreferenceRelation> profile;
  int n = partition.house_count();
  profile.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    profile.push_back(random_oi_relation(rng, partition));
  }
  return Market::with_identity_endowment(std::move(profile));
}

Market random_weak_market(Rng& rng, int agent_count) {
  std::vector<PreferenceRelation> profile;
  profile.reserve(static_cast<std::size_t>(agent_count));
  for (int i = 0; i < agent_count; ++i) {
    profile.push_back(random_weak_order(rng, agent_count));
  }
  return Market::with_identity_endowment(std::move(profile));
}

Market random_strict_market(Rng& rng, int agent_count) {
  std::vector<PreferenceRelation> profile;
  profile.reserve(static_cast<std::size_t>(agent_count));
  for (int i = 0; i < agent_count; ++i) {
    profile.push_back(random_strict_order(rng, agent_count));
  }
  return Market::with_identity_endowment(std::move(profile));
}

namespace {

// A weak order with at least one class of two or more houses.
PreferenceRelation random_tied_order(Rng& rng, int house_count) {
  while (true) {
    PreferenceRelation rel = random_weak_order(rng, house_count);
    if (!rel.is_strict()) return rel;
  }
}

std::vector<PreferenceRelation> non_oi_base(Rng& rng, int house_count) {
  if (house_count < 2) {
    throw std::invalid_argument(
        "a domain without a shared partition needs at least two houses");
  }
  // One relation with a tie plus one strict relation always disagree about
  // the tied pair, so no shared partition can exist.
  std::vector<PreferenceRelation> rels;
  rels.push_back(random_tied_order(rng, house_count));
  rels.push_back(random_strict_order(rng, house_count));
  int extra = rng.below(3);
  for (int e = 0; e < extra; ++e) {
    rels.push_back(random_weak_order(rng, house_count));
  }
  return rels;
}

}  // namespace

Domain random_non_oi_domain(Rng& rng, int house_count) {
  return Domain(non_oi_base(rng, house_count));
}

Domain random_non_oi_symmetric_domain(Rng& rng, int house_count) {
  std::vector<PreferenceRelation> rels = non_oi_base(rng, house_count);
  std::size_t original = rels.size();
  for (std::size_t r = 0; r < original; ++r) {
    rels.push_back(rels[r].reversed());
  }
  return Domain(std::move(rels));  // closed under reversal, so symmetric
}

std::pair<std::vector<AgentId>, std::vector<AgentId>> random_sandwich_sets(
    Rng& rng, const PreferenceRelation& alpha, const PreferenceRelation& beta,
    HouseId h1, HouseId h2) {
  int n = alpha.house_count();
  std::vector<AgentId> a_set;
  std::vector<AgentId> b_set;
  for (int i = 0; i < n; ++i) {
    HouseId wi(i);
    if (alpha.strictly_prefers(wi, h1) ||
        (alpha.indifferent(wi, h1) && rng.below(2) == 0)) {
      a_set.push_back(AgentId(i));
    } else if (beta.strictly_prefers(wi, h2) ||
               (beta.weakly_prefers(wi, h2) && rng.below(2) == 0)) {
      b_set.push_back(AgentId(i));
    }
  }
  return {std::move(a_set), std::move(b_set)};
}

}  // namespace ttc
