// Seeded verification campaigns: sample instances, run the mechanism, judge
// the outcome with the oracles, and tally. Each seed's work depends only on
// (master seed, seed index), so seeds can run on any number of workers with
// identical results.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ttc {

enum class TheoremCampaign {
  ParetoEfficiency,      // efficient on OI markets; constructed failure off them
  CoreSelection,         // core-selecting on OI markets; constructed failure off them
  GroupStrategyProofness,// no group manipulation on OI; constructed one on symmetric non-OI
  WeakCore               // output always in the weak core
};

struct CampaignConfig {
  TheoremCampaign theorem = TheoremCampaign::ParetoEfficiency;
  int max_agents = 5;       // positive-side markets draw n from {2..max_agents}
  int max_blocks = 4;       // partition blocks capped at min(max_blocks, n)
  int seeds = 100;
  std::uint64_t master_seed = 1;
  int max_coalition = -1;   // group manipulation search depth; -1 means n
  std::uint64_t max_evaluations = 10'000'000;
  int jobs = 1;             // worker threads over seeds
};

struct CampaignReport {
  TheoremCampaign theorem = TheoremCampaign::ParetoEfficiency;
  int positive_pass = 0;
  int positive_total = 0;
  int violation_pass = 0;   // constructed-violation side, absent for WeakCore
  int violation_total = 0;
  std::vector<std::string> failures;  // one line per failing seed
  bool budget_exceeded = false;

  bool all_passed() const {
    return failures.empty() && !budget_exceeded &&
           positive_pass == positive_total &&
           violation_pass == violation_total;
  }
};

CampaignReport run_campaign(const CampaignConfig& config);

std::string render_campaign_text(const CampaignReport& report);
std::string render_campaign_json(const CampaignReport& report);

const char* campaign_name(TheoremCampaign theorem);

}  // namespace ttc
