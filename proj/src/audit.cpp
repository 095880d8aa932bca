#include "ttc/audit.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ttc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string allocation_line(const MarketFile& file, const Allocation& x) {
  std::ostringstream out;
  for (int a = 0; a < x.agent_count(); ++a) {
    out << (a ? " " : "") << file.agent_name(AgentId(a)) << "="
        << file.house_name(x.at(AgentId(a)));
  }
  return out.str();
}

std::string witness_line(const MarketFile& file, const BlockingWitness& w) {
  std::ostringstream out;
  out << "{";
  for (std::size_t k = 0; k < w.coalition.size(); ++k) {
    out << (k ? " " : "") << file.agent_name(w.coalition[k]);
  }
  out << "} via";
  for (std::size_t k = 0; k < w.coalition.size(); ++k) {
    out << " " << file.agent_name(w.coalition[k]) << "="
        << file.house_name(w.reallocation[k]);
  }
  return out.str();
}

ordered_json allocation_json(const MarketFile& file, const Allocation& x) {
  ordered_json out = ordered_json::object();
  for (int a = 0; a < x.agent_count(); ++a) {
    out[file.agent_name(AgentId(a))] = file.house_name(x.at(AgentId(a)));
  }
  return out;
}

ordered_json trace_json(const MarketFile& file, const ExecutionTrace& trace) {
  ordered_json cycles = ordered_json::array();
  for (const auto& cycle : trace.cycles) {
    ordered_json members = ordered_json::array();
    for (const CycleMember& m : cycle) {
      members.push_back({{"agent", file.agent_name(m.agent)},
                         {"house", file.house_name(m.house)}});
    }
    cycles.push_back(std::move(members));
  }
  return cycles;
}

ordered_json witness_json(const MarketFile& file, const BlockingWitness& w) {
  ordered_json coalition = ordered_json::array();
  ordered_json reallocation = ordered_json::object();
  for (std::size_t k = 0; k < w.coalition.size(); ++k) {
    coalition.push_back(file.agent_name(w.coalition[k]));
    reallocation[file.agent_name(w.coalition[k])] =
        file.house_name(w.reallocation[k]);
  }
  return {{"coalition", std::move(coalition)},
          {"reallocation", std::move(reallocation)}};
}

void append_trace_text(std::ostringstream& out, const MarketFile& file,
                       const TtcResult& result) {
  for (std::size_t c = 0; c < result.trace.cycles.size(); ++c) {
    out << "cycle " << c + 1 << ":";
    for (const CycleMember& m : result.trace.cycles[c]) {
      out << " " << file.agent_name(m.agent) << "->"
          << file.house_name(m.house);
    }
    out << "\n";
  }
  out << "allocation: " << allocation_line(file, result.allocation) << "\n";
}

}  // namespace

bool AuditReport::passed() const {
  return individually_rational && pareto_efficient &&
         (core_size == 0 || in_core) && in_weak_core;
}

AuditReport audit_market(const Market& market,
                         const TieBreakProfile& tiebreak) {
  if (market.agent_count() > 7) {
    throw GuardError("audit: market too large for exhaustive scan, n=" +
                     std::to_string(market.agent_count()) +
                     " exceeds guard 7");
  }
  TtcResult result = ttc_fixed(market, tiebreak);
  AuditReport report{result.allocation, result.trace, false, {}, false, {},
                     0, false, {}, 0, false, {}};

  report.ir_witness = ir_violator(market, result.allocation);
  report.individually_rational = !report.ir_witness.has_value();

  std::vector<Allocation> dominators =
      pareto_dominators(market, result.allocation, 1);
  report.pareto_efficient = dominators.empty();
  if (!dominators.empty()) report.dominator = dominators.front();

  std::vector<Allocation> core = core_allocations(market);
  report.core_size = core.size();
  report.in_core =
      core.empty() ||
      std::find(core.begin(), core.end(), result.allocation) != core.end();
  if (!report.in_core) {
    report.core_witness =
        find_blocking(market, result.allocation, BlockMode::Weak);
  }

  std::vector<Allocation> weak_core = weak_core_allocations(market);
  report.weak_core_size = weak_core.size();
  report.in_weak_core = std::find(weak_core.begin(), weak_core.end(),
                                  result.allocation) != weak_core.end();
  if (!report.in_weak_core) {
    report.weak_core_witness =
        find_blocking(market, result.allocation, BlockMode::Strong);
  }
  return report;
}

std::string render_run_text(const MarketFile& file, const TtcResult& result) {
  std::ostringstream out;
  append_trace_text(out, file, result);
  return out.str();
}

std::string render_run_json(const MarketFile& file, const TtcResult& result) {
  ordered_json out = {{"allocation", allocation_json(file, result.allocation)},
                      {"cycles", trace_json(file, result.trace)}};
  return out.dump(2) + "\n";
}

std::string render_audit_text(const MarketFile& file,
                              const AuditReport& report) {
  std::ostringstream out;
  append_trace_text(out, file,
                    TtcResult{report.allocation, report.trace});
  out << "individually rational: "
      << (report.individually_rational ? "yes" : "no");
  if (report.ir_witness) {
    out << " (agent " << file.agent_name(*report.ir_witness)
        << " prefers its endowment)";
  }
  out << "\n";
  out << "pareto efficient: " << (report.pareto_efficient ? "yes" : "no");
  if (report.dominator) {
    out << " (dominated by " << allocation_line(file, *report.dominator)
        << ")";
  }
  out << "\n";
  out << "core size: " << report.core_size << "\n";
  out << "in core: "
      << (report.core_size == 0 ? "vacuous" : report.in_core ? "yes" : "no");
  if (report.core_witness) {
    out << " (blocked by " << witness_line(file, *report.core_witness) << ")";
  }
  out << "\n";
  out << "weak core size: " << report.weak_core_size << "\n";
  out << "in weak core: " << (report.in_weak_core ? "yes" : "no");
  if (report.weak_core_witness) {
    out << " (blocked by " << witness_line(file, *report.weak_core_witness)
        << ")";
  }
  out << "\n";
  out << "audit: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_audit_json(const MarketFile& file,
                              const AuditReport& report) {
  ordered_json out = {
      {"allocation", allocation_json(file, report.allocation)},
      {"cycles", trace_json(file, report.trace)},
      {"individually_rational", report.individually_rational},
      {"pareto_efficient", report.pareto_efficient},
      {"core_size", report.core_size},
      {"in_core", report.in_core},
      {"weak_core_size", report.weak_core_size},
      {"in_weak_core", report.in_weak_core},
      {"passed", report.passed()},
  };
  if (report.ir_witness) {
    out["ir_violator"] = file.agent_name(*report.ir_witness);
  }
  if (report.dominator) {
    out["dominator"] = allocation_json(file, *report.dominator);
  }
  if (report.core_witness) {
    out["core_blocking"] = witness_json(file, *report.core_witness);
  }
  if (report.weak_core_witness) {
    out["weak_core_blocking"] = witness_json(file, *report.weak_core_witness);
  }
  return out.dump(2) + "\n";
}

}  // namespace ttc
