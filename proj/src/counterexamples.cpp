#include "ttc/counterexamples.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ttc/domain.hpp"

namespace ttc {

namespace {

// Canonical relabeling: h1 becomes house 0, h2 becomes house 1, the rest
// keep their relative order. Constructions work in canonical labels with
// identity endowment; original_house maps back.
std::vector<int> canonical_map(int n, HouseId h1, HouseId h2) {
  std::vector<int> sigma(static_cast<std::size_t>(n), -1);
  sigma[static_cast<std::size_t>(h1.value)] = 0;
  sigma[static_cast<std::size_t>(h2.value)] = 1;
  int next = 2;
  for (int h = 0; h < n; ++h) {
    if (sigma[static_cast<std::size_t>(h)] == -1) {
      sigma[static_cast<std::size_t>(h)] = next++;
    }
  }
  return sigma;
}

PreferenceRelation relabel(const PreferenceRelation& rel,
                           const std::vector<int>& sigma) {
  std::vector<std::vector<HouseId>> classes;
  classes.reserve(rel.ranked_classes().size());
  for (const auto& cls : rel.ranked_classes()) {
    std::vector<HouseId> mapped;
    mapped.reserve(cls.size());
    for (HouseId h : cls) {
      mapped.push_back(HouseId(sigma[static_cast<std::size_t>(h.value)]));
    }
    classes.push_back(std::move(mapped));
  }
  return PreferenceRelation(std::move(classes), rel.house_count());
}

std::vector<HouseId> inverse_map(const std::vector<int>& sigma) {
  std::vector<HouseId> original(sigma.size());
  for (int h = 0; h < static_cast<int>(sigma.size()); ++h) {
    original[static_cast<std::size_t>(sigma[static_cast<std::size_t>(h)])] =
        HouseId(h);
  }
  return original;
}

Allocation swap_first_two(int n) {
  std::vector<HouseId> y(static_cast<std::size_t>(n));
  y[0] = HouseId(1);
  y[1] = HouseId(0);
  for (int i = 2; i < n; ++i) y[static_cast<std::size_t>(i)] = HouseId(i);
  return Allocation(std::move(y));
}

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("construction failed: ") + what);
}

}  // namespace

DisagreeingPair::DisagreeingPair(PreferenceRelation alpha_rel,
                                 PreferenceRelation beta_rel, HouseId first,
                                 HouseId second)
    : alpha(std::move(alpha_rel)),
      beta(std::move(beta_rel)),
      h1(first),
      h2(second) {
  if (alpha.house_count() != beta.house_count()) {
    throw std::invalid_argument("pair relations must share one house set");
  }
  if (!alpha.indifferent(h1, h2)) {
    throw std::invalid_argument("alpha must tie the two houses");
  }
  if (!beta.strictly_prefers(h1, h2)) {
    throw std::invalid_argument("beta must strictly order the two houses");
  }
}

SandwichProfile sandwich_profile(const PreferenceRelation& alpha,
                                 const PreferenceRelation& beta, HouseId h1,
                                 HouseId h2, const std::vector<AgentId>& a_set,
                                 const std::vector<AgentId>& b_set) {
  int n = alpha.house_count();
  if (beta.house_count() != n) {
    throw std::invalid_argument("relations must share one house set");
  }
  alpha.rank_of(h1);
  beta.rank_of(h2);

  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  std::vector<char> in_b(static_cast<std::size_t>(n), 0);
  for (AgentId a : a_set) {
    if (a.value < 0 || a.value >= n) {
      throw std::invalid_argument("agent out of range");
    }
    in_a[static_cast<std::size_t>(a.value)] = 1;
  }
  for (AgentId b : b_set) {
    if (b.value < 0 || b.value >= n) {
      throw std::invalid_argument("agent out of range");
    }
    if (in_a[static_cast<std::size_t>(b.value)]) {
      throw std::invalid_argument("sets not sandwiched: A and B overlap");
    }
    in_b[static_cast<std::size_t>(b.value)] = 1;
  }
  // With identity endowment, agent i's endowment is house i.
  for (int i = 0; i < n; ++i) {
    HouseId wi(i);
    if (in_a[static_cast<std::size_t>(i)]) {
      if (!alpha.weakly_prefers(wi, h1)) {
        throw std::invalid_argument(
            "sets not sandwiched: A member's endowment below h1 under alpha");
      }
    } else {
      if (alpha.strictly_prefers(wi, h1)) {
        throw std::invalid_argument(
            "sets not sandwiched: endowment strictly above h1 left out of A");
      }
      if (in_b[static_cast<std::size_t>(i)]) {
        if (!beta.weakly_prefers(wi, h2)) {
          throw std::invalid_argument(
              "sets not sandwiched: B member's endowment below h2 under beta");
        }
      } else if (beta.strictly_prefers(wi, h2)) {
        throw std::invalid_argument(
            "sets not sandwiched: endowment strictly above h2 left out of B");
      }
    }
  }

  std::vector<PreferenceRelation> profile;
  profile.reserve(static_cast<std::size_t>(n));
  std::vector<AgentId> frozen;
  for (int i = 0; i < n; ++i) {
    if (in_b[static_cast<std::size_t>(i)]) {
      profile.push_back(beta);
    } else {
      profile.push_back(alpha);  // A members and free agents alike
    }
    if (in_a[static_cast<std::size_t>(i)] || in_b[static_cast<std::size_t>(i)]) {
      frozen.push_back(AgentId(i));
    }
  }
  return SandwichProfile{Market::with_identity_endowment(std::move(profile)),
                         self_first_profile(n), std::move(frozen)};
}

ViolationInstance construct_pe_violation(const DisagreeingPair& pair) {
  int n = pair.alpha.house_count();
  if (n < 2) {
    throw std::invalid_argument("construction needs at least two houses");
  }
  std::vector<int> sigma = canonical_map(n, pair.h1, pair.h2);
  PreferenceRelation alpha = relabel(pair.alpha, sigma);
  PreferenceRelation beta = relabel(pair.beta, sigma);

  // Agent 0 owns the tied house 0; agent 1 owns house 1 and reports beta.
  // Everyone whose endowment is weakly alpha-above house 0 reports alpha,
  // except agent 1; the rest report beta.
  std::vector<PreferenceRelation> profile;
  std::vector<AgentId> alpha_agents;
  std::vector<AgentId> beta_agents;
  for (int i = 0; i < n; ++i) {
    bool in_a = i != 1 && alpha.weakly_prefers(HouseId(i), HouseId(0));
    if (in_a) {
      profile.push_back(alpha);
      alpha_agents.push_back(AgentId(i));
    } else {
      profile.push_back(beta);
      beta_agents.push_back(AgentId(i));
    }
  }
  Market market = Market::with_identity_endowment(std::move(profile));
  TieBreakProfile tiebreak = self_first_profile(n);

  TtcResult result = ttc_fixed(market, tiebreak);
  require(result.allocation.assignment() == market.endowment(),
          "outcome differs from endowment");
  Allocation improvement = swap_first_two(n);
  require(alpha.indifferent(HouseId(1), HouseId(0)), "agent 0 not indifferent");
  require(beta.strictly_prefers(HouseId(0), HouseId(1)),
          "agent 1 does not gain");

  return ViolationInstance{std::move(market),
                           std::move(tiebreak),
                           inverse_map(sigma),
                           std::move(alpha_agents),
                           std::move(beta_agents),
                           std::move(result.allocation),
                           std::move(improvement)};
}

ViolationInstance construct_cs_violation(const Domain& domain) {
  int n = domain.house_count();
  if (n < 2) {
    throw std::invalid_argument("construction needs at least two houses");
  }
  if (is_objective_indifference(domain)) {
    throw std::invalid_argument("domain has a shared objective partition");
  }
  // First (alpha, beta, h1, h2) under lexicographic scan such that alpha
  // ties h1 and h2, beta puts h1 strictly above h2, and no house tied with
  // h2 under alpha is strictly beta-above h1. The last condition is what
  // makes the swap allocation immune to blocking, hence a core member.
  for (int a = 0; a < domain.size(); ++a) {
    for (int b = 0; b < domain.size(); ++b) {
      if (a == b) continue;
      const PreferenceRelation& alpha = domain.at(a);
      const PreferenceRelation& beta = domain.at(b);
      for (int h1 = 0; h1 < n; ++h1) {
        for (int h2 = 0; h2 < n; ++h2) {
          if (h1 == h2) continue;
          if (!alpha.indifferent(HouseId(h1), HouseId(h2)) ||
              !beta.strictly_prefers(HouseId(h1), HouseId(h2))) {
            continue;
          }
          bool top_of_class = true;
          for (int h = 0; h < n && top_of_class; ++h) {
            if (alpha.indifferent(HouseId(h), HouseId(h2)) &&
                beta.strictly_prefers(HouseId(h), HouseId(h1))) {
              top_of_class = false;
            }
          }
          if (top_of_class) {
            return construct_pe_violation(DisagreeingPair(
                alpha, beta, HouseId(h1), HouseId(h2)));
          }
        }
      }
    }
  }
  // Unreachable: a non-objective domain always contains such a tuple (take
  // the beta-best house of a tied class that beta splits).
  throw std::logic_error("no normalized disagreeing pair found");
}

namespace {

ManipulationInstance build_gsp_instance(const PreferenceRelation& alpha,
                                        const PreferenceRelation& beta,
                                        const PreferenceRelation& gamma,
                                        HouseId h1, HouseId h2) {
  int n = alpha.house_count();
  std::vector<int> sigma = canonical_map(n, h1, h2);
  PreferenceRelation ca = relabel(alpha, sigma);
  PreferenceRelation cb = relabel(beta, sigma);
  PreferenceRelation cg = relabel(gamma, sigma);

  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  std::vector<char> in_b(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (i != 1 && ca.weakly_prefers(HouseId(i), HouseId(0))) {
      in_a[static_cast<std::size_t>(i)] = 1;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (i == 1 ||
        (!in_a[static_cast<std::size_t>(i)] &&
         cb.weakly_prefers(HouseId(i), HouseId(0)))) {
      in_b[static_cast<std::size_t>(i)] = 1;
    }
  }

  std::vector<PreferenceRelation> profile;
  std::vector<AgentId> alpha_agents;
  std::vector<AgentId> beta_agents;
  std::vector<AgentId> gamma_agents;
  for (int i = 0; i < n; ++i) {
    if (in_a[static_cast<std::size_t>(i)]) {
      profile.push_back(ca);
      alpha_agents.push_back(AgentId(i));
    } else if (in_b[static_cast<std::size_t>(i)]) {
      profile.push_back(cb);
      beta_agents.push_back(AgentId(i));
    } else {
      profile.push_back(cg);
      gamma_agents.push_back(AgentId(i));
    }
  }
  Market market = Market::with_identity_endowment(std::move(profile));
  TieBreakProfile tiebreak = self_first_profile(n);

  TtcResult truthful = ttc_fixed(market, tiebreak);
  require(truthful.allocation.at(AgentId(0)) == HouseId(0),
          "agent 0 does not keep its endowment");
  require(cb.strictly_prefers(HouseId(0), truthful.allocation.at(AgentId(1))),
          "agent 1 not strictly below house 0");

  Market misreported = market.with_preference(AgentId(0), cg);
  TtcResult deviated = ttc_fixed(misreported, tiebreak);
  require(deviated.allocation.at(AgentId(0)) == HouseId(1),
          "agent 0 does not receive house 1 after deviating");
  require(deviated.allocation.at(AgentId(1)) == HouseId(0),
          "agent 1 does not receive house 0 after deviating");

  ManipulationWitness witness{{AgentId(0), AgentId(1)},
                              {cg, cb},
                              std::move(truthful.allocation),
                              std::move(deviated.allocation)};
  return ManipulationInstance{std::move(market),
                              std::move(tiebreak),
                              inverse_map(sigma),
                              std::move(alpha_agents),
                              std::move(beta_agents),
                              std::move(gamma_agents),
                              std::move(witness)};
}

}  // namespace

ManipulationInstance construct_gsp_violation(const PreferenceRelation& alpha,
                                             const PreferenceRelation& beta,
                                             const PreferenceRelation& gamma) {
  int n = alpha.house_count();
  if (beta.house_count() != n || gamma.house_count() != n) {
    throw std::invalid_argument("relations must share one house set");
  }
  if (n < 2) {
    throw std::invalid_argument("construction needs at least two houses");
  }
  for (int h1 = 0; h1 < n; ++h1) {
    for (int h2 = 0; h2 < n; ++h2) {
      if (h1 == h2) continue;
      if (alpha.indifferent(HouseId(h1), HouseId(h2)) &&
          beta.strictly_prefers(HouseId(h1), HouseId(h2)) &&
          gamma.strictly_prefers(HouseId(h2), HouseId(h1))) {
        return build_gsp_instance(alpha, beta, gamma, HouseId(h1),
                                  HouseId(h2));
      }
    }
  }
  throw std::invalid_argument(
      "no house pair is tied by alpha, split by beta, and reversed by gamma");
}

ManipulationInstance construct_gsp_violation(const Domain& domain) {
  int n = domain.house_count();
  for (int h1 = 0; h1 < n; ++h1) {
    for (int h2 = 0; h2 < n; ++h2) {
      if (h1 == h2) continue;
      int a = -1;
      int b = -1;
      int c = -1;
      for (int r = 0; r < domain.size(); ++r) {
        const PreferenceRelation& rel = domain.at(r);
        if (a == -1 && rel.indifferent(HouseId(h1), HouseId(h2))) a = r;
        if (b == -1 && rel.strictly_prefers(HouseId(h1), HouseId(h2))) b = r;
        if (c == -1 && rel.strictly_prefers(HouseId(h2), HouseId(h1))) c = r;
      }
      if (a != -1 && b != -1 && c != -1) {
        return build_gsp_instance(domain.at(a), domain.at(b), domain.at(c),
                                  HouseId(h1), HouseId(h2));
      }
    }
  }
  throw std::invalid_argument(
      "domain has no house pair that is tied, split, and reversed");
}

}  // namespace ttc
