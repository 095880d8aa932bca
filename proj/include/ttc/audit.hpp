// Full axiom audit of one mechanism run, with re-verifiable witnesses.
#pragma once

#include <optional>
#include <string>

#include "ttc/axioms.hpp"
#include "ttc/engine.hpp"
#include "ttc/market_io.hpp"

namespace ttc {

struct AuditReport {
  Allocation allocation;
  ExecutionTrace trace;

  bool individually_rational = false;
  std::optional<AgentId> ir_witness;  // set when not individually rational

  bool pareto_efficient = false;
  std::optional<Allocation> dominator;  // set when not efficient

  std::size_t core_size = 0;
  bool in_core = false;  // vacuously true when the core is empty
  std::optional<BlockingWitness> core_witness;

  std::size_t weak_core_size = 0;
  bool in_weak_core = false;
  std::optional<BlockingWitness> weak_core_witness;

  // Individually rational, efficient, in the core whenever the core is
  // non-empty, and in the weak core.
  bool passed() const;
};

// Runs the mechanism and every oracle. Guard: n <= 7 (core enumeration).
AuditReport audit_market(const Market& market, const TieBreakProfile& tiebreak);

std::string render_audit_text(const MarketFile& file, const AuditReport& report);
std::string render_audit_json(const MarketFile& file, const AuditReport& report);

std::string render_run_text(const MarketFile& file, const TtcResult& result);
std::string render_run_json(const MarketFile& file, const TtcResult& result);

}  // namespace ttc
