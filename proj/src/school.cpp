#include "ttc/school.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ttc {

SchoolMarket::SchoolMarket(std::vector<School> schools,
                           std::vector<StrictPreference> student_prefs)
    : schools_(std::move(schools)), student_prefs_(std::move(student_prefs)) {
  if (schools_.empty() || student_prefs_.empty()) {
    throw std::invalid_argument(
        "school market needs at least one school and one student");
  }
  int m = school_count();
  int n = student_count();
  for (const School& s : schools_) {
    if (s.capacity <= 0) {
      throw std::invalid_argument("school capacity must be positive");
    }
    total_capacity_ += s.capacity;
    if (s.priority.agent_count() != n) {
      throw std::invalid_argument(
          "every priority order must cover the students");
    }
  }
  for (const StrictPreference& pref : student_prefs_) {
    if (pref.house_count() != m) {
      throw std::invalid_argument(
          "every student preference must rank exactly the schools");
    }
  }
  if (total_capacity_ < n) {
    throw std::invalid_argument("total capacity below student count");
  }
}

std::vector<HouseId> ttc_priorities(const SchoolMarket& market) {
  return ttc_priorities(market, SchoolCycleSelection::LowestStudentFirst);
}

std::vector<HouseId> ttc_priorities(const SchoolMarket& market,
                                    SchoolCycleSelection selection) {
  int n = market.student_count();
  int m = market.school_count();
  std::vector<int> remaining(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) {
    remaining[static_cast<std::size_t>(s)] =
        market.school_at(HouseId(s)).capacity;
  }
  std::vector<char> assigned(static_cast<std::size_t>(n), 0);
  std::vector<int> student_cursor(static_cast<std::size_t>(n), 0);
  std::vector<int> school_cursor(static_cast<std::size_t>(m), 0);
  std::vector<int> stamp(static_cast<std::size_t>(n), 0);
  std::vector<int> path;
  path.reserve(static_cast<std::size_t>(n));
  std::vector<HouseId> out(static_cast<std::size_t>(n));

  // A student points at their best school with a free seat; a school points
  // at its highest-priority unassigned student. Chasing student -> school ->
  // student pointers from a start student must close a cycle; everyone in
  // the cycle is admitted where they point. Free seats always outnumber
  // unassigned students, so every pointer is well defined.
  auto pointed_school = [&](int student) {
    const StrictPreference& pref = market.preference_of(AgentId(student));
    int c = student_cursor[static_cast<std::size_t>(student)];
    while (remaining[static_cast<std::size_t>(pref.at_rank(c).value)] == 0) {
      ++c;
    }
    student_cursor[static_cast<std::size_t>(student)] = c;
    return pref.at_rank(c);
  };
  auto pointed_student = [&](HouseId school) {
    const AgentOrder& priority = market.school_at(school).priority;
    int c = school_cursor[static_cast<std::size_t>(school.value)];
    while (assigned[static_cast<std::size_t>(priority.at_position(c).value)]) {
      ++c;
    }
    school_cursor[static_cast<std::size_t>(school.value)] = c;
    return priority.at_position(c);
  };

  int unassigned = n;
  int round = 0;
  int scan_lo = 0;
  int scan_hi = n - 1;
  while (unassigned > 0) {
    int start;
    if (selection == SchoolCycleSelection::LowestStudentFirst) {
      while (assigned[static_cast<std::size_t>(scan_lo)]) ++scan_lo;
      start = scan_lo;
    } else {
      while (assigned[static_cast<std::size_t>(scan_hi)]) --scan_hi;
      start = scan_hi;
    }

    ++round;
    path.clear();
    int cur = start;
    while (stamp[static_cast<std::size_t>(cur)] != round) {
      stamp[static_cast<std::size_t>(cur)] = round;
      path.push_back(cur);
      cur = pointed_student(pointed_school(cur)).value;
    }
    std::size_t pos = path.size() - 1;
    while (path[pos] != cur) --pos;
    for (std::size_t k = pos; k < path.size(); ++k) {
      int student = path[k];
      HouseId school = pointed_school(student);
      out[static_cast<std::size_t>(student)] = school;
      assigned[static_cast<std::size_t>(student)] = 1;
      --remaining[static_cast<std::size_t>(school.value)];
      --unassigned;
    }
  }
  return out;
}

SeatExpansion expand_seats(const SchoolMarket& market) {
  int m = market.school_count();
  std::vector<SeatLabel> seats;
  seats.reserve(static_cast<std::size_t>(market.total_capacity()));
  std::vector<std::vector<HouseId>> blocks;
  blocks.reserve(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) {
    std::vector<HouseId> block;
    for (int copy = 1; copy <= market.school_at(HouseId(s)).capacity; ++copy) {
      block.push_back(HouseId(static_cast<int>(seats.size())));
      seats.push_back(SeatLabel{HouseId(s), copy});
    }
    blocks.push_back(std::move(block));
  }
  int total = static_cast<int>(seats.size());
  Partition school_blocks(blocks, total);

  std::vector<PreferenceRelation> lifted;
  lifted.reserve(static_cast<std::size_t>(market.student_count()));
  for (int i = 0; i < market.student_count(); ++i) {
    const StrictPreference& pref = market.preference_of(AgentId(i));
    std::vector<std::vector<HouseId>> classes;
    classes.reserve(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
      classes.push_back(blocks[static_cast<std::size_t>(pref.at_rank(r).value)]);
    }
    lifted.emplace_back(std::move(classes), total);
  }
  return SeatExpansion{std::move(seats), std::move(school_blocks),
                       std::move(lifted)};
}

Allocation ttc_seat_market(const SchoolMarket& market,
                           const std::vector<int>& seat_endowment,
                           const TieBreakProfile& tiebreak) {
  int n = market.student_count();
  if (market.total_capacity() != n) {
    throw std::invalid_argument(
        "seat endowment must be a bijection onto the seats, so total "
        "capacity must equal the student count");
  }
  if (static_cast<int>(seat_endowment.size()) != n) {
    throw std::invalid_argument("seat endowment must cover every student");
  }
  SeatExpansion expansion = expand_seats(market);
  std::vector<HouseId> endowment;
  endowment.reserve(static_cast<std::size_t>(n));
  for (int seat : seat_endowment) {
    if (seat < 0 || seat >= n) {
      throw std::invalid_argument("seat index out of range");
    }
    endowment.push_back(HouseId(seat));
  }
  Market housing(std::move(endowment), expansion.lifted);  // checks bijection
  return ttc_fixed(housing, tiebreak).allocation;
}

std::vector<HouseId> schools_of(const SchoolMarket& market,
                                const Allocation& seat_allocation) {
  SeatExpansion expansion = expand_seats(market);
  std::vector<HouseId> out;
  out.reserve(static_cast<std::size_t>(seat_allocation.agent_count()));
  for (int i = 0; i < seat_allocation.agent_count(); ++i) {
    out.push_back(
        expansion.seats
            .at(static_cast<std::size_t>(seat_allocation.at(AgentId(i)).value))
            .school);
  }
  return out;
}

}  // namespace ttc
