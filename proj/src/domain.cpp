#include "ttc/domain.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ttc {

std::variant<Partition, IndifferenceWitness> objective_partition(
    const Domain& domain) {
  const Partition base = induced_partition(domain.at(0));
  bool shared = true;
  for (int r = 1; r < domain.size() && shared; ++r) {
    shared = base.same_blocks(induced_partition(domain.at(r)));
  }
  if (shared) return base;

  // Some pair of relations disagrees about some pair of houses. Find the
  // lexicographically first disagreement where alpha ties what beta splits.
  int n = domain.house_count();
  for (int a = 0; a < domain.size(); ++a) {
    for (int b = 0; b < domain.size(); ++b) {
      if (a == b) continue;
      const PreferenceRelation& alpha = domain.at(a);
      const PreferenceRelation& beta = domain.at(b);
      for (int h1 = 0; h1 < n; ++h1) {
        for (int h2 = 0; h2 < n; ++h2) {
          if (h1 == h2) continue;
          if (alpha.indifferent(HouseId(h1), HouseId(h2)) &&
              beta.strictly_prefers(HouseId(h1), HouseId(h2))) {
            return IndifferenceWitness{a, b, HouseId(h1), HouseId(h2)};
          }
        }
      }
    }
  }
  // Unreachable: partitions that differ always disagree on some pair.
  throw std::logic_error("partitions differ but no witness found");
}

bool is_objective_indifference(const Domain& domain) {
  return std::holds_alternative<Partition>(objective_partition(domain));
}

std::optional<MissingReversal> find_missing_reversal(const Domain& domain) {
  int n = domain.house_count();
  for (int h1 = 0; h1 < n; ++h1) {
    for (int h2 = 0; h2 < n; ++h2) {
      if (h1 == h2) continue;
      bool stated = false;
      bool reversed = false;
      for (int r = 0; r < domain.size(); ++r) {
        if (domain.at(r).strictly_prefers(HouseId(h1), HouseId(h2))) {
          stated = true;
        }
        if (domain.at(r).strictly_prefers(HouseId(h2), HouseId(h1))) {
          reversed = true;
        }
      }
      if (stated && !reversed) {
        return MissingReversal{HouseId(h1), HouseId(h2)};
      }
    }
  }
  return std::nullopt;
}

bool is_symmetric(const Domain& domain) {
  return !find_missing_reversal(domain).has_value();
}

Domain enumerate_oi_domain(const Partition& partition) {
  int k = partition.block_count();
  if (k > 8) {
    throw GuardError("domain too large to enumerate: " + std::to_string(k) +
                     " blocks, guard is 8");
  }
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::vector<PreferenceRelation> relations;
  do {
    std::vector<std::vector<HouseId>> classes;
    classes.reserve(static_cast<std::size_t>(k));
    for (int b : order) {
      classes.push_back(partition.block_at(b));
    }
    relations.emplace_back(std::move(classes), partition.house_count());
  } while (std::next_permutation(order.begin(), order.end()));
  return Domain(std::move(relations));
}

namespace {

// Ordered set partitions of {0..n-1}, emitted by assigning each house in
// turn either to an existing class or to a new class in any gap. Every weak
// order arises exactly once: removing the last house recovers its unique
// predecessor.
void build_weak_orders(int n, int next, std::vector<std::vector<HouseId>>& acc,
                       std::vector<PreferenceRelation>& out) {
  if (next == n) {
    out.emplace_back(acc, n);
    return;
  }
  for (std::size_t c = 0; c < acc.size(); ++c) {
    acc[c].push_back(HouseId(next));
    build_weak_orders(n, next + 1, acc, out);
    acc[c].pop_back();
  }
  for (std::size_t c = 0; c <= acc.size(); ++c) {
    acc.insert(acc.begin() + static_cast<std::ptrdiff_t>(c),
               {HouseId(next)});
    build_weak_orders(n, next + 1, acc, out);
    acc.erase(acc.begin() + static_cast<std::ptrdiff_t>(c));
  }
}

}  // namespace

Domain enumerate_weak_orders(int house_count) {
  if (house_count <= 0) {
    throw std::invalid_argument("house count must be positive");
  }
  if (house_count > 5) {
    throw GuardError("domain too large to enumerate: " +
                     std::to_string(house_count) + " houses, guard is 5");
  }
  std::vector<PreferenceRelation> out;
  std::vector<std::vector<HouseId>> acc;
  build_weak_orders(house_count, 0, acc, out);
  return Domain(std::move(out));
}

}  // namespace ttc
