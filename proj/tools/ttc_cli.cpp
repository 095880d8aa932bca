// Command-line front end: mechanism runs, audits, verification campaigns,
// random market generation, and the school-choice comparison.
//
// Exit codes: 0 success or all checks passed, 1 audit or campaign failures,
// 2 input errors, 3 enumeration guards or search budgets exceeded.
#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ttc/audit.hpp"
#include "ttc/campaign.hpp"
#include "ttc/domain.hpp"
#include "ttc/engine.hpp"
#include "ttc/market_io.hpp"
#include "ttc/rng.hpp"
#include "ttc/school.hpp"

namespace {

using ttc::AgentId;
using ttc::HouseId;

ttc::TieBreakProfile resolve_tiebreak(const ttc::MarketFile& file,
                                      const std::string& override_path) {
  if (!override_path.empty()) {
    return ttc::parse_tiebreak_file(override_path, file.agent_names);
  }
  if (file.tiebreak) return *file.tiebreak;
  bool all_strict = true;
  for (const ttc::PreferenceRelation& rel : file.market.profile()) {
    all_strict = all_strict && rel.is_strict();
  }
  if (!all_strict) {
    throw std::invalid_argument("tie-break profile required");
  }
  // With strict preferences every tie-break profile yields the same result.
  return ttc::self_first_profile(file.market.agent_count());
}

int cmd_run(const std::string& path, const std::string& tiebreak_path,
            bool audit, bool json) {
  ttc::MarketFile file = ttc::parse_market_file(path);
  ttc::TieBreakProfile tiebreak = resolve_tiebreak(file, tiebreak_path);
  if (!audit) {
    ttc::TtcResult result = ttc::ttc_fixed(file.market, tiebreak);
    std::cout << (json ? ttc::render_run_json(file, result)
                       : ttc::render_run_text(file, result));
    return 0;
  }
  ttc::AuditReport report = ttc::audit_market(file.market, tiebreak);
  std::cout << (json ? ttc::render_audit_json(file, report)
                     : ttc::render_audit_text(file, report));
  return report.passed() ? 0 : 1;
}

int cmd_verify(const ttc::CampaignConfig& config, bool json) {
  ttc::CampaignReport report = ttc::run_campaign(config);
  std::cout << (json ? ttc::render_campaign_json(report)
                     : ttc::render_campaign_text(report));
  if (report.budget_exceeded) return 3;
  return report.all_passed() ? 0 : 1;
}

int cmd_gen(int n, int blocks, std::uint64_t seed, const std::string& mode) {
  if (n < 1 || n > 26) {
    throw std::invalid_argument("gen needs 1 <= n <= 26 for letter names");
  }
  ttc::Rng rng(seed);
  std::vector<std::string> agent_names;
  std::vector<std::string> house_names;
  for (int i = 0; i < n; ++i) {
    agent_names.push_back(std::to_string(i + 1));
    house_names.push_back(std::string(1, static_cast<char>('a' + i)));
  }

  std::optional<ttc::Partition> partition;
  std::optional<ttc::TieBreakProfile> tiebreak;
  std::vector<ttc::PreferenceRelation> profile;
  if (mode == "oi") {
    partition = ttc::random_partition(rng, n, std::min(blocks, n));
    ttc::Domain domain = ttc::enumerate_oi_domain(*partition);
    for (int i = 0; i < n; ++i) {
      profile.push_back(domain.at(rng.below(domain.size())));
    }
    tiebreak = ttc::random_tiebreak_profile(rng, n);
  } else if (mode == "general") {
    for (int i = 0; i < n; ++i) {
      profile.push_back(ttc::random_weak_order(rng, n));
    }
    tiebreak = ttc::random_tiebreak_profile(rng, n);
  } else if (mode == "strict") {
    for (int i = 0; i < n; ++i) {
      profile.push_back(ttc::random_strict_order(rng, n));
    }
  } else {
    throw std::invalid_argument("mode must be oi, general, or strict");
  }

  ttc::MarketFile file{std::move(agent_names), std::move(house_names),
                       ttc::Market::with_identity_endowment(std::move(profile)),
                       std::move(tiebreak), std::move(partition)};
  std::cout << "# mode=" << mode << " n=" << n << " seed=" << seed << "\n"
            << ttc::serialize_market_file(file);
  return 0;
}

int cmd_school(const std::string& path, bool json) {
  ttc::SchoolFile file = ttc::parse_school_file(path);
  const ttc::SchoolMarket& market = file.market;
  int students = market.student_count();

  std::vector<HouseId> by_priority = ttc::ttc_priorities(market);

  std::vector<int> seats;
  if (file.seat_endowment) {
    seats = *file.seat_endowment;
  } else {
    if (market.total_capacity() != students) {
      throw std::invalid_argument(
          "seat endowment must be a bijection onto the seats; declare a "
          "seats line or match total capacity to the student count");
    }
    for (int i = 0; i < students; ++i) seats.push_back(i);
  }
  ttc::TieBreakProfile tiebreak =
      file.tiebreak ? *file.tiebreak : ttc::self_first_profile(students);
  ttc::SeatExpansion expansion = ttc::expand_seats(market);
  ttc::Allocation seat_result = ttc::ttc_seat_market(market, seats, tiebreak);
  std::vector<HouseId> by_seats = ttc::schools_of(market, seat_result);
  bool divergence = by_priority != by_seats;

  auto seat_name = [&](int seat) {
    const ttc::SeatLabel& label = expansion.seats[static_cast<std::size_t>(seat)];
    return file.school_name(label.school) + "." + std::to_string(label.copy);
  };

  if (json) {
    nlohmann::ordered_json priority = nlohmann::ordered_json::object();
    nlohmann::ordered_json seat_map = nlohmann::ordered_json::object();
    nlohmann::ordered_json seat_schools = nlohmann::ordered_json::object();
    for (int i = 0; i < students; ++i) {
      const std::string& student = file.student_name(AgentId(i));
      priority[student] = file.school_name(by_priority[static_cast<std::size_t>(i)]);
      seat_map[student] = seat_name(seat_result.at(AgentId(i)).value);
      seat_schools[student] =
          file.school_name(by_seats[static_cast<std::size_t>(i)]);
    }
    nlohmann::ordered_json out = {{"priority", std::move(priority)},
                                  {"seats", std::move(seat_map)},
                                  {"seat_schools", std::move(seat_schools)},
                                  {"divergence", divergence}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  auto school_line = [&](const std::vector<HouseId>& assignment) {
    std::ostringstream out;
    for (int i = 0; i < students; ++i) {
      out << (i ? " " : "") << file.student_name(AgentId(i)) << "="
          << file.school_name(assignment[static_cast<std::size_t>(i)]);
    }
    return out.str();
  };
  std::cout << "priority assignment: " << school_line(by_priority) << "\n";
  std::cout << "seat assignment:";
  for (int i = 0; i < students; ++i) {
    std::cout << " " << file.student_name(AgentId(i)) << "="
              << seat_name(seat_result.at(AgentId(i)).value);
  }
  std::cout << "\n";
  std::cout << "seat assignment schools: " << school_line(by_seats) << "\n";
  std::cout << "divergence: " << (divergence ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"top trading cycles with fixed tie-breaking"};
  app.require_subcommand(1);

  std::string market_path;
  std::string tiebreak_path;
  bool json = false;
  bool audit = false;

  CLI::App* run = app.add_subcommand("run", "run the mechanism on a market file");
  run->add_option("file", market_path, "market file")->required();
  run->add_option("--tiebreak", tiebreak_path,
                  "tie-break orders from a separate file");
  run->add_flag("--json", json, "machine-readable output");
  run->add_flag("--audit", audit, "also run every axiom oracle");

  CLI::App* audit_cmd =
      app.add_subcommand("audit", "run the mechanism and every axiom oracle");
  audit_cmd->add_option("file", market_path, "market file")->required();
  audit_cmd->add_option("--tiebreak", tiebreak_path,
                        "tie-break orders from a separate file");
  audit_cmd->add_flag("--json", json, "machine-readable output");

  ttc::CampaignConfig config;
  std::string theorem = "pe";
  CLI::App* verify =
      app.add_subcommand("verify", "seeded theorem verification campaign");
  verify
      ->add_option("--theorem", theorem,
                   "one of pe, cs, gsp, weakcore (default pe)")
      ->check(CLI::IsMember({"pe", "cs", "gsp", "weakcore"}));
  verify->add_option("--n", config.max_agents, "largest market size (default 5)");
  verify->add_option("--blocks", config.max_blocks,
                     "largest partition block count (default 4)");
  verify->add_option("--seeds", config.seeds, "seed count (default 100)");
  verify->add_option("--seed", config.master_seed, "master seed (default 1)");
  verify->add_option("--max-coalition", config.max_coalition,
                     "largest coalition searched; -1 means all agents");
  verify->add_option("--jobs", config.jobs, "worker threads (default 1)");
  verify->add_flag("--json", json, "machine-readable output");

  int gen_n = 4;
  int gen_blocks = 3;
  std::uint64_t gen_seed = 1;
  std::string gen_mode = "oi";
  CLI::App* gen = app.add_subcommand("gen", "generate a random market file");
  gen->add_option("--n", gen_n, "agent count (default 4, at most 26)");
  gen->add_option("--blocks", gen_blocks,
                  "partition block cap for oi mode (default 3)");
  gen->add_option("--seed", gen_seed, "generator seed (default 1)");
  gen->add_option("--mode", gen_mode, "oi, general, or strict (default oi)")
      ->check(CLI::IsMember({"oi", "general", "strict"}));

  CLI::App* school = app.add_subcommand(
      "school", "compare priority and seat-endowment mechanisms");
  school->add_option("file", market_path, "school market file")->required();
  school->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return cmd_run(market_path, tiebreak_path, audit, json);
    if (audit_cmd->parsed()) {
      return cmd_run(market_path, tiebreak_path, true, json);
    }
    if (verify->parsed()) {
      if (theorem == "pe") {
        config.theorem = ttc::TheoremCampaign::ParetoEfficiency;
      } else if (theorem == "cs") {
        config.theorem = ttc::TheoremCampaign::CoreSelection;
      } else if (theorem == "gsp") {
        config.theorem = ttc::TheoremCampaign::GroupStrategyProofness;
      } else {
        config.theorem = ttc::TheoremCampaign::WeakCore;
      }
      return cmd_verify(config, json);
    }
    if (gen->parsed()) return cmd_gen(gen_n, gen_blocks, gen_seed, gen_mode);
    if (school->parsed()) return cmd_school(market_path, json);
  } catch (const ttc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ttc::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
