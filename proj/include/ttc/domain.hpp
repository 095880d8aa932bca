// Domain classification: objective indifferences and symmetry.
#pragma once

#include <optional>
#include <variant>

#include "ttc/market.hpp"

namespace ttc {

// Two relations disagreeing about one pair of houses: h1 and h2 are
// indifferent under domain relation alpha but strictly ordered under beta.
// Such a pair is exactly what rules out a shared objective partition.
struct IndifferenceWitness {
  int alpha = -1;
  int beta = -1;
  HouseId h1;
  HouseId h2;

  bool operator==(const IndifferenceWitness&) const = default;
};

// If every relation in the domain induces the same partition of the house
// set, returns that partition with blocks ordered as in the first relation.
// Otherwise returns the lexicographically first witness, scanning relation
// pairs (alpha, beta) in index order and house pairs (h1, h2) in index order.
std::variant<Partition, IndifferenceWitness> objective_partition(
    const Domain& domain);

bool is_objective_indifference(const Domain& domain);

// A strict comparison some relation makes that no relation reverses.
struct MissingReversal {
  HouseId h1;
  HouseId h2;

  bool operator==(const MissingReversal&) const = default;
};

// A domain is symmetric when every strict comparison appearing somewhere in
// it also appears reversed somewhere in it. Returns the first missing
// reversal in lexicographic house order, or nullopt if none is missing.
std::optional<MissingReversal> find_missing_reversal(const Domain& domain);

bool is_symmetric(const Domain& domain);

// All orderings of the blocks of a partition, i.e. the full preference
// domain whose indifference structure is exactly the given partition. Emits
// block-order permutations lexicographically, identity first, so
// objective_partition(enumerate_oi_domain(p)) round-trips to p exactly.
// Guard: at most 8 blocks (8! relations).
Domain enumerate_oi_domain(const Partition& partition);

// Every weak order over house_count houses, in a fixed deterministic order.
// Guard: at most 5 houses (541 weak orders).
Domain enumerate_weak_orders(int house_count);

}  // namespace ttc
