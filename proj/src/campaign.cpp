#include "ttc/campaign.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>

#include "json.hpp"
#include "ttc/axioms.hpp"
#include "ttc/counterexamples.hpp"
#include "ttc/domain.hpp"
#include "ttc/engine.hpp"
#include "ttc/gsp.hpp"
#include "ttc/rng.hpp"

namespace ttc {

namespace {

struct SeedOutcome {
  bool positive_ran = false;
  bool positive_ok = false;
  bool violation_ran = false;
  bool violation_ok = false;
  std::vector<std::string> failures;
  bool budget_exceeded = false;
};

int draw_agent_count(Rng& rng, const CampaignConfig& config) {
  return 2 + rng.below(config.max_agents - 1);
}

Partition draw_partition(Rng& rng, const CampaignConfig& config, int n) {
  return random_partition(rng, n, std::min(config.max_blocks, n));
}

bool contains(const std::vector<Allocation>& list, const Allocation& x) {
  return std::find(list.begin(), list.end(), x) != list.end();
}

// nullopt on pass, a reason on failure.
using CheckResult = std::optional<std::string>;

CheckResult positive_check(const CampaignConfig& config, Rng& rng) {
  switch (config.theorem) {
    case TheoremCampaign::ParetoEfficiency: {
      int n = draw_agent_count(rng, config);
      Market market = random_oi_market(rng, draw_partition(rng, config, n));
      TtcResult result = ttc_fixed(market, random_tiebreak_profile(rng, n));
      if (!is_pareto_efficient(market, result.allocation)) {
        return "outcome not pareto efficient on an objective-indifferences "
               "market";
      }
      return std::nullopt;
    }
    case TheoremCampaign::CoreSelection: {
      int n = draw_agent_count(rng, config);
      Market market = random_oi_market(rng, draw_partition(rng, config, n));
      TtcResult result = ttc_fixed(market, random_tiebreak_profile(rng, n));
      std::vector<Allocation> core = core_allocations(market);
      if (!core.empty() && !contains(core, result.allocation)) {
        return "outcome outside a non-empty core on an "
               "objective-indifferences market";
      }
      return std::nullopt;
    }
    case TheoremCampaign::GroupStrategyProofness: {
      int n = draw_agent_count(rng, config);
      Domain domain = enumerate_oi_domain(draw_partition(rng, config, n));
      std::vector<PreferenceRelation> profile;
      for (int i = 0; i < n; ++i) {
        profile.push_back(domain.at(rng.below(domain.size())));
      }
      Market market = Market::with_identity_endowment(std::move(profile));
      GspSearchOptions options;
      options.max_coalition = config.max_coalition;
      options.max_evaluations = config.max_evaluations;
      std::optional<ManipulationWitness> witness = find_group_manipulation(
          market, domain, random_tiebreak_profile(rng, n), options);
      if (witness) {
        std::ostringstream out;
        out << "manipulation found on an objective-indifferences domain by "
               "coalition of "
            << witness->coalition.size();
        return out.str();
      }
      return std::nullopt;
    }
    case TheoremCampaign::WeakCore: {
      int n = draw_agent_count(rng, config);
      Market market = random_weak_market(rng, n);
      TtcResult result = ttc_fixed(market, random_tiebreak_profile(rng, n));
      if (find_blocking(market, result.allocation, BlockMode::Strong)) {
        return "outcome strongly blocked, so outside the weak core";
      }
      return std::nullopt;
    }
  }
  return "unknown theorem";
}

CheckResult violation_check(const CampaignConfig& config, Rng& rng) {
  int houses = 2 + rng.below(config.max_agents - 1);
  switch (config.theorem) {
    case TheoremCampaign::ParetoEfficiency: {
      Domain domain = random_non_oi_domain(rng, houses);
      auto split = objective_partition(domain);
      const IndifferenceWitness& w = std::get<IndifferenceWitness>(split);
      ViolationInstance instance = construct_pe_violation(DisagreeingPair(
          domain.at(w.alpha), domain.at(w.beta), w.h1, w.h2));
      if (ttc_fixed(instance.market, instance.tiebreak).allocation !=
          instance.outcome) {
        return "constructed market does not reproduce the claimed outcome";
      }
      if (is_pareto_efficient(instance.market, instance.outcome)) {
        return "constructed outcome is pareto efficient after all";
      }
      return std::nullopt;
    }
    case TheoremCampaign::CoreSelection: {
      Domain domain = random_non_oi_domain(rng, houses);
      ViolationInstance instance = construct_cs_violation(domain);
      if (ttc_fixed(instance.market, instance.tiebreak).allocation !=
          instance.outcome) {
        return "constructed market does not reproduce the claimed outcome";
      }
      std::vector<Allocation> core = core_allocations(instance.market);
      if (core.empty()) return "constructed market has an empty core";
      if (contains(core, instance.outcome)) {
        return "constructed outcome lies in the core after all";
      }
      if (!contains(core, instance.improvement)) {
        return "claimed improvement is not a core allocation";
      }
      return std::nullopt;
    }
    case TheoremCampaign::GroupStrategyProofness: {
      Domain domain = random_non_oi_symmetric_domain(rng, houses);
      ManipulationInstance instance = construct_gsp_violation(domain);
      const ManipulationWitness& w = instance.witness;
      if (ttc_fixed(instance.market, instance.tiebreak).allocation !=
          w.truthful) {
        return "constructed market does not reproduce the truthful outcome";
      }
      std::vector<PreferenceRelation> deviated = instance.market.profile();
      for (std::size_t k = 0; k < w.coalition.size(); ++k) {
        deviated[static_cast<std::size_t>(w.coalition[k].value)] =
            w.misreports[k];
      }
      if (ttc_fixed(instance.market.with_profile(std::move(deviated)),
                    instance.tiebreak)
              .allocation != w.manipulated) {
        return "misreports do not reproduce the manipulated outcome";
      }
      bool strict = false;
      for (AgentId i : w.coalition) {
        const PreferenceRelation& rel = instance.market.preference_of(i);
        if (!rel.weakly_prefers(w.manipulated.at(i), w.truthful.at(i))) {
          return "a coalition member loses under the manipulation";
        }
        if (rel.strictly_prefers(w.manipulated.at(i), w.truthful.at(i))) {
          strict = true;
        }
      }
      if (!strict) return "no coalition member strictly gains";
      // The instance lives in canonical house labels, so cross-check the
      // search over a domain in the same label space: the truthful
      // relations plus the misreports.
      std::vector<PreferenceRelation> admissible = instance.market.profile();
      for (const PreferenceRelation& rel : w.misreports) {
        admissible.push_back(rel);
      }
      GspSearchOptions options;
      options.max_coalition = config.max_coalition;
      options.max_evaluations = config.max_evaluations;
      if (!find_group_manipulation(instance.market, Domain(admissible),
                                   instance.tiebreak, options)) {
        return "exhaustive search finds no manipulation on the constructed "
               "market";
      }
      return std::nullopt;
    }
    case TheoremCampaign::WeakCore:
      return std::nullopt;  // no violation side; never called
  }
  return "unknown theorem";
}

SeedOutcome run_seed(const CampaignConfig& config, const Rng& root, int seed) {
  SeedOutcome out;
  auto attempt = [&](const char* side, std::uint64_t stream, bool& ran,
                     bool& ok, auto check) {
    ran = true;
    ok = false;
    Rng rng = root.fork(stream);
    try {
      CheckResult failure = check(config, rng);
      if (failure) {
        std::ostringstream line;
        line << "seed " << seed << " (" << side << "): " << *failure;
        out.failures.push_back(line.str());
      } else {
        ok = true;
      }
    } catch (const GuardError& e) {
      out.budget_exceeded = true;
      std::ostringstream line;
      line << "seed " << seed << " (" << side << "): " << e.what();
      out.failures.push_back(line.str());
    } catch (const std::exception& e) {
      std::ostringstream line;
      line << "seed " << seed << " (" << side << "): " << e.what();
      out.failures.push_back(line.str());
    }
  };

  std::uint64_t base = 2 * static_cast<std::uint64_t>(seed);
  attempt("positive", base, out.positive_ran, out.positive_ok, positive_check);
  if (config.theorem != TheoremCampaign::WeakCore) {
    attempt("violation", base + 1, out.violation_ran, out.violation_ok,
            violation_check);
  }
  return out;
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config) {
  if (config.max_agents < 2) {
    throw std::invalid_argument("campaign needs max_agents >= 2");
  }
  if (config.max_blocks < 1) {
    throw std::invalid_argument("campaign needs max_blocks >= 1");
  }
  if (config.seeds < 0) {
    throw std::invalid_argument("campaign needs a non-negative seed count");
  }
  if (config.jobs < 1) {
    throw std::invalid_argument("campaign needs jobs >= 1");
  }

  std::vector<SeedOutcome> outcomes(static_cast<std::size_t>(config.seeds));
  const Rng root(config.master_seed);
  auto worker = [&](int w) {
    for (int s = w; s < config.seeds; s += config.jobs) {
      outcomes[static_cast<std::size_t>(s)] = run_seed(config, root, s);
    }
  };
  int jobs = std::min(config.jobs, std::max(config.seeds, 1));
  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (std::thread& t : threads) t.join();
  }

  CampaignReport report;
  report.theorem = config.theorem;
  for (const SeedOutcome& out : outcomes) {
    if (out.positive_ran) {
      ++report.positive_total;
      if (out.positive_ok) ++report.positive_pass;
    }
    if (out.violation_ran) {
      ++report.violation_total;
      if (out.violation_ok) ++report.violation_pass;
    }
    report.failures.insert(report.failures.end(), out.failures.begin(),
                           out.failures.end());
    report.budget_exceeded = report.budget_exceeded || out.budget_exceeded;
  }
  return report;
}

const char* campaign_name(TheoremCampaign theorem) {
  switch (theorem) {
    case TheoremCampaign::ParetoEfficiency: return "pareto-efficiency";
    case TheoremCampaign::CoreSelection: return "core-selection";
    case TheoremCampaign::GroupStrategyProofness:
      return "group-strategy-proofness";
    case TheoremCampaign::WeakCore: return "weak-core";
  }
  return "unknown";
}

std::string render_campaign_text(const CampaignReport& report) {
  std::ostringstream out;
  out << "campaign: " << campaign_name(report.theorem) << "\n";
  out << "positive: " << report.positive_pass << "/" << report.positive_total
      << "\n";
  if (report.violation_total > 0 || report.violation_pass > 0) {
    out << "violations: " << report.violation_pass << "/"
        << report.violation_total << "\n";
  }
  if (report.budget_exceeded) out << "budget exceeded: yes\n";
  if (!report.failures.empty()) {
    out << "failures:\n";
    for (const std::string& line : report.failures) {
      out << "  " << line << "\n";
    }
  }
  out << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_campaign_json(const CampaignReport& report) {
  nlohmann::ordered_json out = {
      {"campaign", campaign_name(report.theorem)},
      {"positive_pass", report.positive_pass},
      {"positive_total", report.positive_total},
      {"violation_pass", report.violation_pass},
      {"violation_total", report.violation_total},
      {"budget_exceeded", report.budget_exceeded},
      {"failures", report.failures},
      {"passed", report.all_passed()},
  };
  return out.dump(2) + "\n";
}

}  // namespace ttc
