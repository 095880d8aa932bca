#include "ttc/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ttc {

namespace {

// One round of state buffers for the cycle loop. All arrays have length n;
// stamp/round implement O(1) clearing of per-chase visit marks.
struct Buffers {
  int* owner;
  int* cursor;
  int* stamp;
  int* path;
  char* assigned;
  int* round;
};

// The shared cycle loop. Every unassigned agent conceptually points at the
// owner of its best house among houses whose owners are unassigned; we chase
// pointers from a start agent until one repeats, which closes a cycle, then
// trade along it. Cursors advance lazily and never retreat, so the whole run
// is O(n^2). An agent's cursor cannot pass the agent's own endowment while
// the agent is unassigned, which is what makes the loop bounded and the
// outcome individually rational.
void run_cycles(int n, const HouseId* endowment,
                const StrictPreference* const* prefs, CycleSelection selection,
                HouseId* out, std::vector<std::vector<CycleMember>>* trace,
                Buffers b) {
  for (int i = 0; i < n; ++i) {
    b.owner[endowment[i].value] = i;
    b.cursor[i] = 0;
    b.assigned[i] = 0;
  }
  int remaining = n;
  int scan_lo = 0;
  int scan_hi = n - 1;
  while (remaining > 0) {
    int start;
    if (selection == CycleSelection::LowestAgentFirst) {
      while (b.assigned[scan_lo]) ++scan_lo;
      start = scan_lo;
    } else {
      while (b.assigned[scan_hi]) --scan_hi;
      start = scan_hi;
    }

    ++*b.round;
    int len = 0;
    int cur = start;
    while (b.stamp[cur] != *b.round) {
      b.stamp[cur] = *b.round;
      b.path[len++] = cur;
      const HouseId* ranking = prefs[cur]->ranking().data();
      int c = b.cursor[cur];
      while (b.assigned[b.owner[ranking[c].value]]) ++c;
      b.cursor[cur] = c;
      cur = b.owner[ranking[c].value];
    }

    int pos = len - 1;
    while (b.path[pos] != cur) --pos;

    for (int k = pos; k < len; ++k) {
      int agent = b.path[k];
      out[agent] = prefs[agent]->ranking()[b.cursor[agent]];
      b.assigned[agent] = 1;
      --remaining;
    }

    if (trace) {
      int lowest = pos;
      for (int k = pos; k < len; ++k) {
        if (b.path[k] < b.path[lowest]) lowest = k;
      }
      std::vector<CycleMember> cycle;
      cycle.reserve(static_cast<std::size_t>(len - pos));
      for (int k = 0; k < len - pos; ++k) {
        int agent = b.path[pos + (lowest - pos + k) % (len - pos)];
        cycle.push_back({AgentId(agent), out[agent]});
      }
      trace->push_back(std::move(cycle));
    }
  }
}

}  // namespace

int ExecutionTrace::cycle_index_of(AgentId a) const {
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    for (const CycleMember& m : cycles[k]) {
      if (m.agent == a) return static_cast<int>(k);
    }
  }
  throw std::invalid_argument("agent not in trace");
}

TtcResult ttc_strict(const std::vector<HouseId>& endowment,
                     const std::vector<StrictPreference>& profile,
                     CycleSelection selection) {
  int n = static_cast<int>(endowment.size());
  if (n == 0) {
    throw std::invalid_argument("market must have at least one agent");
  }
  if (profile.size() != endowment.size()) {
    throw std::invalid_argument("profile size must match agent count");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    HouseId h = endowment[static_cast<std::size_t>(i)];
    if (h.value < 0 || h.value >= n || seen[static_cast<std::size_t>(h.value)]) {
      throw std::invalid_argument("endowment is not a bijection");
    }
    seen[static_cast<std::size_t>(h.value)] = 1;
    if (profile[static_cast<std::size_t>(i)].house_count() != n) {
      throw std::invalid_argument(
          "every preference must rank exactly the market's houses");
    }
  }

  std::vector<const StrictPreference*> prefs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    prefs[static_cast<std::size_t>(i)] = &profile[static_cast<std::size_t>(i)];
  }
  std::vector<int> owner(static_cast<std::size_t>(n));
  std::vector<int> cursor(static_cast<std::size_t>(n));
  std::vector<int> stamp(static_cast<std::size_t>(n), 0);
  std::vector<int> path(static_cast<std::size_t>(n));
  std::vector<char> assigned(static_cast<std::size_t>(n));
  std::vector<HouseId> out(static_cast<std::size_t>(n));
  int round = 0;

  ExecutionTrace trace;
  run_cycles(n, endowment.data(), prefs.data(), selection, out.data(),
             &trace.cycles,
             Buffers{owner.data(), cursor.data(), stamp.data(), path.data(),
                     assigned.data(), &round});
  return TtcResult{Allocation(std::move(out)), std::move(trace)};
}

TtcResult ttc_fixed(const Market& market, const TieBreakProfile& tiebreak,
                    CycleSelection selection) {
  if (tiebreak.agent_count() != market.agent_count()) {
    throw std::invalid_argument("tie-break profile size must match market");
  }
  std::vector<StrictPreference> broken =
      break_profile(market.profile(), tiebreak, market.endowment());
  return ttc_strict(market.endowment(), broken, selection);
}

void validate_trace(const std::vector<HouseId>& endowment,
                    const std::vector<StrictPreference>& profile,
                    const TtcResult& result) {
  int n = static_cast<int>(endowment.size());
  auto fail = [](const std::string& what) {
    throw std::logic_error("trace invariant violated: " + what);
  };
  if (result.allocation.agent_count() != n ||
      static_cast<int>(profile.size()) != n) {
    fail("sizes disagree");
  }

  std::vector<int> cycle_of(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < result.trace.cycles.size(); ++k) {
    const auto& cycle = result.trace.cycles[k];
    if (cycle.empty()) fail("empty cycle");
    for (std::size_t m = 0; m < cycle.size(); ++m) {
      const CycleMember& member = cycle[m];
      if (member.agent.value < 0 || member.agent.value >= n) {
        fail("agent out of range");
      }
      if (cycle_of[static_cast<std::size_t>(member.agent.value)] != -1) {
        fail("agent appears in two cycles");
      }
      cycle_of[static_cast<std::size_t>(member.agent.value)] =
          static_cast<int>(k);
      if (member.house !=
          result.allocation.at(member.agent)) {
        fail("trace house disagrees with allocation");
      }
      const CycleMember& next = cycle[(m + 1) % cycle.size()];
      if (member.house !=
          endowment[static_cast<std::size_t>(next.agent.value)]) {
        fail("member does not receive successor's endowment");
      }
      if (m > 0 && cycle[m].agent < cycle[0].agent) {
        fail("cycle not rotated to lowest agent");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (cycle_of[static_cast<std::size_t>(i)] == -1) {
      fail("agent missing from trace");
    }
  }

  for (int i = 0; i < n; ++i) {
    const StrictPreference& pref = profile[static_cast<std::size_t>(i)];
    HouseId xi = result.allocation.at(AgentId(i));
    if (pref.rank_of(xi) >
        pref.rank_of(endowment[static_cast<std::size_t>(i)])) {
      fail("agent assigned below its endowment");
    }
    // Anything an agent strictly prefers to its own assignment must have
    // left the market in a strictly earlier cycle.
    for (int j = 0; j < n; ++j) {
      HouseId xj = result.allocation.at(AgentId(j));
      if (pref.prefers(xj, xi) &&
          cycle_of[static_cast<std::size_t>(j)] >=
              cycle_of[static_cast<std::size_t>(i)]) {
        fail("strictly preferred house assigned in a later or equal cycle");
      }
    }
  }
}

TtcScratch::TtcScratch(int agent_count)
    : n_(agent_count),
      owner_(static_cast<std::size_t>(agent_count)),
      cursor_(static_cast<std::size_t>(agent_count)),
      stamp_(static_cast<std::size_t>(agent_count), 0),
      path_(static_cast<std::size_t>(agent_count)),
      assigned_(static_cast<std::size_t>(agent_count)) {
  if (agent_count <= 0) {
    throw std::invalid_argument("agent count must be positive");
  }
}

void TtcScratch::assign(const HouseId* endowment,
                        const StrictPreference* const* prefs, HouseId* out) {
  run_cycles(n_, endowment, prefs, CycleSelection::LowestAgentFirst, out,
             nullptr,
             Buffers{owner_.data(), cursor_.data(), stamp_.data(),
                     path_.data(), assigned_.data(), &round_});
}

}  // namespace ttc
