#include "ttc/gsp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ttc/engine.hpp"

namespace ttc {

namespace {

ManipulationWitness verified_witness(const Market& market,
                                     const Domain& domain,
                                     const TieBreakProfile& tiebreak,
                                     const std::vector<int>& coalition,
                                     const std::vector<int>& choice,
                                     const Allocation& x,
                                     const Allocation& y) {
  // Recompute both outcomes through the public path and re-judge the
  // deviation before handing the witness out.
  std::vector<PreferenceRelation> reported = market.profile();
  ManipulationWitness witness{{}, {}, x, y};
  for (std::size_t k = 0; k < coalition.size(); ++k) {
    AgentId agent(coalition[k]);
    const PreferenceRelation& rel = domain.at(choice[k]);
    witness.coalition.push_back(agent);
    witness.misreports.push_back(rel);
    reported[static_cast<std::size_t>(agent.value)] = rel;
  }
  TtcResult truthful = ttc_fixed(market, tiebreak);
  TtcResult manipulated = ttc_fixed(market.with_profile(reported), tiebreak);
  if (truthful.allocation != x || manipulated.allocation != y) {
    throw std::logic_error("manipulation witness failed re-verification");
  }
  bool strict = false;
  for (AgentId agent : witness.coalition) {
    const PreferenceRelation& rel = market.preference_of(agent);
    if (rel.strictly_prefers(x.at(agent), y.at(agent))) {
      throw std::logic_error("manipulation witness failed re-verification");
    }
    if (rel.strictly_prefers(y.at(agent), x.at(agent))) strict = true;
  }
  if (!strict) {
    throw std::logic_error("manipulation witness failed re-verification");
  }
  return witness;
}

}  // namespace

std::optional<ManipulationWitness> find_group_manipulation(
    const Market& market, const Domain& domain, const TieBreakProfile& tiebreak,
    const GspSearchOptions& options) {
  int n = market.agent_count();
  if (domain.house_count() != n) {
    throw std::invalid_argument("domain house set must match market");
  }
  if (tiebreak.agent_count() != n) {
    throw std::invalid_argument("tie-break profile size must match market");
  }
  if (options.max_coalition == 0 || options.max_coalition < -1) {
    throw std::invalid_argument("max coalition must be positive or -1");
  }
  int d = domain.size();
  std::vector<int> truth(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto idx = domain.index_of(market.preference_of(AgentId(i)));
    if (!idx) {
      throw std::invalid_argument(
          "every true preference must lie in the domain");
    }
    truth[static_cast<std::size_t>(i)] = *idx;
  }

  // Tie-broken strict preference for every (relation, agent) pair; the inner
  // search then only swaps pointers.
  std::vector<std::vector<StrictPreference>> strict;
  strict.reserve(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    std::vector<StrictPreference> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      row.push_back(break_ties(domain.at(r), tiebreak.order_of(AgentId(i)),
                               market.endowment()));
    }
    strict.push_back(std::move(row));
  }

  // True-preference rank tables for judging deviations.
  std::vector<std::vector<int>> true_rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& row = true_rank[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(n));
    for (int h = 0; h < n; ++h) {
      row[static_cast<std::size_t>(h)] =
          market.preference_of(AgentId(i)).rank_of(HouseId(h));
    }
  }

  TtcScratch scratch(n);
  std::vector<const StrictPreference*> prof(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    prof[static_cast<std::size_t>(i)] =
        &strict[static_cast<std::size_t>(truth[static_cast<std::size_t>(i)])]
               [static_cast<std::size_t>(i)];
  }
  std::vector<HouseId> x(static_cast<std::size_t>(n));
  scratch.assign(market.endowment().data(), prof.data(), x.data());
  std::vector<int> x_rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    x_rank[static_cast<std::size_t>(i)] =
        true_rank[static_cast<std::size_t>(i)]
                 [static_cast<std::size_t>(x[static_cast<std::size_t>(i)].value)];
  }

  int max_q = options.max_coalition < 0
                  ? n
                  : std::min(options.max_coalition, n);
  std::uint64_t evals = 0;
  std::vector<int> coalition(static_cast<std::size_t>(n));
  std::vector<int> choice(static_cast<std::size_t>(n));
  std::vector<HouseId> y(static_cast<std::size_t>(n));

  for (int q = 1; q <= max_q; ++q) {
    for (int k = 0; k < q; ++k) coalition[static_cast<std::size_t>(k)] = k;
    while (true) {
      // Misreport tuples in ascending lexicographic order of domain indices,
      // last coalition slot fastest.
      for (int k = 0; k < q; ++k) {
        choice[static_cast<std::size_t>(k)] = 0;
        int agent = coalition[static_cast<std::size_t>(k)];
        prof[static_cast<std::size_t>(agent)] =
            &strict[0][static_cast<std::size_t>(agent)];
      }
      while (true) {
        if (++evals > options.max_evaluations) {
          throw GuardError(
              "group manipulation search budget exceeded after " +
              std::to_string(options.max_evaluations) +
              " coalition/misreport evaluations");
        }
        scratch.assign(market.endowment().data(), prof.data(), y.data());
        bool ok = true;
        bool strict_gain = false;
        for (int k = 0; k < q; ++k) {
          int agent = coalition[static_cast<std::size_t>(k)];
          int ry = true_rank[static_cast<std::size_t>(agent)]
                            [static_cast<std::size_t>(
                                y[static_cast<std::size_t>(agent)].value)];
          int rx = x_rank[static_cast<std::size_t>(agent)];
          if (ry > rx) {
            ok = false;
            break;
          }
          if (ry < rx) strict_gain = true;
        }
        if (ok && strict_gain) {
          std::vector<int> agents(coalition.begin(), coalition.begin() + q);
          std::vector<int> picks(choice.begin(), choice.begin() + q);
          return verified_witness(market, domain, tiebreak, agents, picks,
                                  Allocation(std::vector<HouseId>(x)),
                                  Allocation(std::vector<HouseId>(y)));
        }
        int k = q - 1;
        while (k >= 0 && choice[static_cast<std::size_t>(k)] == d - 1) {
          choice[static_cast<std::size_t>(k)] = 0;
          int agent = coalition[static_cast<std::size_t>(k)];
          prof[static_cast<std::size_t>(agent)] =
              &strict[0][static_cast<std::size_t>(agent)];
          --k;
        }
        if (k < 0) break;
        ++choice[static_cast<std::size_t>(k)];
        int agent = coalition[static_cast<std::size_t>(k)];
        prof[static_cast<std::size_t>(agent)] =
            &strict[static_cast<std::size_t>(
                choice[static_cast<std::size_t>(k)])]
                   [static_cast<std::size_t>(agent)];
      }
      // Back to truthful reports before the next coalition.
      for (int k = 0; k < q; ++k) {
        int agent = coalition[static_cast<std::size_t>(k)];
        prof[static_cast<std::size_t>(agent)] =
            &strict[static_cast<std::size_t>(
                truth[static_cast<std::size_t>(agent)])]
                   [static_cast<std::size_t>(agent)];
      }
      int k = q - 1;
      while (k >= 0 &&
             coalition[static_cast<std::size_t>(k)] == n - q + k) {
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

std::optional<ManipulationWitness> find_unilateral_manipulation(
    const Market& market, const Domain& domain, const TieBreakProfile& tiebreak,
    std::uint64_t max_evaluations) {
  GspSearchOptions options;
  options.max_coalition = 1;
  options.max_evaluations = max_evaluations;
  return find_group_manipulation(market, domain, tiebreak, options);
}

}  // namespace ttc
