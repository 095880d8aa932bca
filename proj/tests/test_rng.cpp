#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "test_support.hpp"
#include "ttc/counterexamples.hpp"
#include "ttc/domain.hpp"
#include "ttc/rng.hpp"

using ttc::Domain;
using ttc::HouseId;
using ttc::Partition;
using ttc::PreferenceRelation;
using ttc::Rng;

TEST_CASE("equal seeds replay the same stream") {
  Rng a(0x1234);
  Rng b(0x1234);
  for (int i = 0; i < 50; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  for (int i = 0; i < 50; ++i) {
    CHECK(a.below(10) == b.below(10));
  }
}

TEST_CASE("forks depend on the origin seed and stream index only") {
  Rng parent(7);
  parent.next_u64();
  parent.next_u64();
  Rng fresh(7);

  Rng forked_late = parent.fork(3);
  Rng forked_fresh = fresh.fork(3);
  for (int i = 0; i < 20; ++i) {
    CHECK(forked_late.next_u64() == forked_fresh.next_u64());
  }

  Rng other_stream = fresh.fork(4);
  CHECK(fresh.fork(3).next_u64() != other_stream.next_u64());
}

TEST_CASE("bounded draws stay in range and reach every value") {
  Rng rng(9);
  CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
  for (int i = 0; i < 20; ++i) {
    CHECK(rng.below(1) == 0);
  }
  std::set<int> seen;
  for (int i = 0; i < 500; ++i) {
    int v = rng.below(7);
    CHECK(v >= 0);
    CHECK(v < 7);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);

  CHECK(!rng.chance(0, 5));
  CHECK(rng.chance(5, 5));
}

TEST_CASE("shuffles permute and replay by seed") {
  Rng a(21);
  Rng b(21);
  std::vector<int> first(12);
  std::iota(first.begin(), first.end(), 0);
  std::vector<int> second = first;
  a.shuffle(first);
  b.shuffle(second);
  CHECK(first == second);

  std::vector<int> sorted = first;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(12);
  std::iota(expected.begin(), expected.end(), 0);
  CHECK(sorted == expected);
}

TEST_CASE("house permutations cover the house set") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<HouseId> perm = ttc::random_house_permutation(rng, 6);
    std::vector<int> values;
    for (HouseId h : perm) values.push_back(h.value);
    std::sort(values.begin(), values.end());
    CHECK(values == std::vector<int>{0, 1, 2, 3, 4, 5});
  }
}

TEST_CASE("random partitions respect the block bound") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Partition p = ttc::random_partition(rng, 6, 3);
    CHECK(p.house_count() == 6);
    CHECK(p.block_count() >= 1);
    CHECK(p.block_count() <= 3);
  }
  // A bound above the house count is clamped, not an error.
  Partition wide = ttc::random_partition(rng, 3, 10);
  CHECK(wide.block_count() <= 3);
  CHECK_THROWS_AS(ttc::random_partition(rng, 0, 2), std::invalid_argument);
}

TEST_CASE("random weak orders visit strict and tied shapes") {
  Rng rng(13);
  bool saw_strict = false;
  bool saw_tie = false;
  for (int trial = 0; trial < 100; ++trial) {
    PreferenceRelation rel = ttc::random_weak_order(rng, 3);
    CHECK(rel.house_count() == 3);
    (rel.is_strict() ? saw_strict : saw_tie) = true;
  }
  CHECK(saw_strict);
  CHECK(saw_tie);
  CHECK(ttc::random_strict_order(rng, 5).is_strict());
}

TEST_CASE("objective relations reorder the partition's blocks") {
  Rng rng(19);
  Partition partition = ts::part({{0}, {1, 2}, {3, 4}}, 5);
  for (int trial = 0; trial < 30; ++trial) {
    PreferenceRelation rel = ttc::random_oi_relation(rng, partition);
    CHECK(ttc::induced_partition(rel).same_blocks(partition));
  }
}

TEST_CASE("random markets have the advertised shape") {
  Rng rng(23);
  Partition partition = ts::part({{0, 1}, {2, 3}}, 4);
  ttc::Market oi = ttc::random_oi_market(rng, partition);
  CHECK(oi.agent_count() == 4);
  CHECK(oi.endowment() == ts::houses({0, 1, 2, 3}));
  for (const PreferenceRelation& rel : oi.profile()) {
    CHECK(ttc::induced_partition(rel).same_blocks(partition));
  }

  ttc::Market weak = ttc::random_weak_market(rng, 5);
  CHECK(weak.agent_count() == 5);

  ttc::Market strict = ttc::random_strict_market(rng, 5);
  for (const PreferenceRelation& rel : strict.profile()) {
    CHECK(rel.is_strict());
  }

  ttc::TieBreakProfile tiebreak = ttc::random_tiebreak_profile(rng, 5);
  CHECK(tiebreak.agent_count() == 5);
}

TEST_CASE("generated non-objective domains never share a partition") {
  Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    int houses = 2 + rng.below(4);
    Domain domain = ttc::random_non_oi_domain(rng, houses);
    CHECK(domain.size() >= 2);
    CHECK(domain.house_count() == houses);
    CHECK(std::holds_alternative<ttc::IndifferenceWitness>(
        ttc::objective_partition(domain)));
  }
  CHECK_THROWS_AS(ttc::random_non_oi_domain(rng, 1), std::invalid_argument);
}

TEST_CASE("generated symmetric domains are symmetric and non-objective") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    int houses = 2 + rng.below(4);
    Domain domain = ttc::random_non_oi_symmetric_domain(rng, houses);
    CHECK(ttc::is_symmetric(domain));
    CHECK(!ttc::find_missing_reversal(domain).has_value());
    CHECK(std::holds_alternative<ttc::IndifferenceWitness>(
        ttc::objective_partition(domain)));
  }
}

TEST_CASE("generated sandwich sets satisfy the construction's preconditions") {
  Rng rng(37);
  PreferenceRelation alpha = ts::rel({{0}, {1, 2}, {3}}, 4);
  PreferenceRelation beta = ts::rel({{3}, {1}, {2}, {0}}, 4);
  for (int trial = 0; trial < 50; ++trial) {
    auto [a_set, b_set] =
        ttc::random_sandwich_sets(rng, alpha, beta, HouseId(1), HouseId(2));
    for (ttc::AgentId i : a_set) {
      CHECK(std::find(b_set.begin(), b_set.end(), i) == b_set.end());
    }
    // The construction validates its own preconditions, so building the
    // profile is the real check.
    ttc::SandwichProfile sandwich = ttc::sandwich_profile(
        alpha, beta, HouseId(1), HouseId(2), a_set, b_set);
    CHECK(sandwich.market.agent_count() == 4);
  }
}
