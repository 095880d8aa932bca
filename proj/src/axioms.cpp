#include "ttc/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ttc/engine.hpp"

namespace ttc {

namespace {

void guard_size(int n, int limit, const char* what) {
  if (n > limit) {
    throw GuardError(std::string(what) + ": market too large for exhaustive scan, n=" +
                     std::to_string(n) + " exceeds guard " +
                     std::to_string(limit));
  }
}

// y weakly improves on x for everyone, strictly for someone.
bool dominates(const Market& market, const std::vector<HouseId>& y,
               const Allocation& x) {
  bool strict = false;
  for (int i = 0; i < market.agent_count(); ++i) {
    const PreferenceRelation& rel = market.preference_of(AgentId(i));
    int ry = rel.rank_of(y[static_cast<std::size_t>(i)]);
    int rx = rel.rank_of(x.at(AgentId(i)));
    if (ry > rx) return false;
    if (ry < rx) strict = true;
  }
  return strict;
}

}  // namespace

std::optional<AgentId> ir_violator(const Market& market, const Allocation& x) {
  for (int i = 0; i < market.agent_count(); ++i) {
    const PreferenceRelation& rel = market.preference_of(AgentId(i));
    if (rel.strictly_prefers(market.endowment_of(AgentId(i)),
                             x.at(AgentId(i)))) {
      return AgentId(i);
    }
  }
  return std::nullopt;
}

bool is_individually_rational(const Market& market, const Allocation& x) {
  return !ir_violator(market, x).has_value();
}

std::vector<Allocation> pareto_dominators(const Market& market,
                                          const Allocation& x,
                                          std::size_t limit) {
  guard_size(market.agent_count(), 8, "pareto scan");
  int n = market.agent_count();
  std::vector<HouseId> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = HouseId(i);
  std::vector<Allocation> out;
  do {
    if (out.size() >= limit) break;
    if (dominates(market, y, x)) {
      out.emplace_back(y);
    }
  } while (std::next_permutation(y.begin(), y.end()));
  return out;
}

bool is_pareto_efficient(const Market& market, const Allocation& x) {
  return pareto_dominators(market, x, 1).empty();
}

std::optional<BlockingWitness> find_blocking(const Market& market,
                                             const Allocation& x,
                                             BlockMode mode) {
  guard_size(market.agent_count(), 7, "blocking scan");
  int n = market.agent_count();
  std::vector<int> coalition(static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q) {
    // Combinations of size q in lexicographic order.
    for (int i = 0; i < q; ++i) coalition[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<HouseId> houses;
      houses.reserve(static_cast<std::size_t>(q));
      for (int k = 0; k < q; ++k) {
        houses.push_back(
            market.endowment_of(AgentId(coalition[static_cast<std::size_t>(k)])));
      }
      std::sort(houses.begin(), houses.end());
      do {
        bool ok = true;
        bool strict = false;
        for (int k = 0; k < q && ok; ++k) {
          AgentId agent(coalition[static_cast<std::size_t>(k)]);
          const PreferenceRelation& rel = market.preference_of(agent);
          int ry = rel.rank_of(houses[static_cast<std::size_t>(k)]);
          int rx = rel.rank_of(x.at(agent));
          if (mode == BlockMode::Strong) {
            ok = ry < rx;
          } else {
            if (ry > rx) ok = false;
            if (ry < rx) strict = true;
          }
        }
        if (ok && (mode == BlockMode::Strong || strict)) {
          BlockingWitness witness;
          witness.mode = mode;
          for (int k = 0; k < q; ++k) {
            witness.coalition.push_back(
                AgentId(coalition[static_cast<std::size_t>(k)]));
          }
          witness.reallocation = houses;
          return witness;
        }
      } while (std::next_permutation(houses.begin(), houses.end()));

      // Advance the combination.
      int k = q - 1;
      while (k >= 0 && coalition[static_cast<std::size_t>(k)] == n - q + k) {
        --k;
      }
      if (k < 0) break;
      ++coalition[static_cast<std::size_t>(k)];
      for (int m = k + 1; m < q; ++m) {
        coalition[static_cast<std::size_t>(m)] =
            coalition[static_cast<std::size_t>(m - 1)] + 1;
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Allocation> unblocked_allocations(const Market& market,
                                              BlockMode mode) {
  guard_size(market.agent_count(), 7, "core scan");
  int n = market.agent_count();
  std::vector<HouseId> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = HouseId(i);
  std::vector<Allocation> out;
  do {
    Allocation candidate(y);
    if (!find_blocking(market, candidate, mode).has_value()) {
      out.push_back(std::move(candidate));
    }
  } while (std::next_permutation(y.begin(), y.end()));
  return out;
}

}  // namespace

std::vector<Allocation> core_allocations(const Market& market) {
  return unblocked_allocations(market, BlockMode::Weak);
}

std::vector<Allocation> weak_core_allocations(const Market& market) {
  return unblocked_allocations(market, BlockMode::Strong);
}

bool essentially_single_valued(const Market& market,
                               const std::vector<Allocation>& allocations) {
  for (std::size_t a = 0; a + 1 < allocations.size(); ++a) {
    for (std::size_t b = a + 1; b < allocations.size(); ++b) {
      for (int i = 0; i < market.agent_count(); ++i) {
        if (!market.preference_of(AgentId(i))
                 .indifferent(allocations[a].at(AgentId(i)),
                              allocations[b].at(AgentId(i)))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_monotone_pair(const Market& market, const TieBreakProfile& tiebreak,
                         const std::vector<PreferenceRelation>& shifted_profile) {
  if (shifted_profile.size() !=
      static_cast<std::size_t>(market.agent_count())) {
    throw std::invalid_argument("shifted profile size must match market");
  }
  TtcResult base = ttc_fixed(market, tiebreak);
  for (int i = 0; i < market.agent_count(); ++i) {
    const PreferenceRelation& before = market.preference_of(AgentId(i));
    const PreferenceRelation& after = shifted_profile[static_cast<std::size_t>(i)];
    if (after.house_count() != before.house_count()) {
      throw std::invalid_argument("shifted relation has wrong house count");
    }
    HouseId xi = base.allocation.at(AgentId(i));
    int rb = before.rank_of(xi);
    int ra = after.rank_of(xi);
    for (int h = 0; h < before.house_count(); ++h) {
      if (before.rank_of(HouseId(h)) >= rb && after.rank_of(HouseId(h)) < ra) {
        throw std::invalid_argument(
            "not a monotone transformation: lower contour set shrank");
      }
    }
  }
  TtcResult shifted = ttc_fixed(market.with_profile(shifted_profile), tiebreak);
  return base.allocation == shifted.allocation;
}

}  // namespace ttc
