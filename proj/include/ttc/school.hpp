// School choice with capacities and priorities, and its seat-by-seat
// reading as a housing market with objective indifferences.
#pragma once

#include <string>
#include <vector>

#include "ttc/engine.hpp"
#include "ttc/market.hpp"
#include "ttc/tiebreak.hpp"

namespace ttc {

// Schools are HouseId values, students AgentId values.
struct School {
  int capacity = 1;
  AgentOrder priority;  // over students, best first
};

class SchoolMarket {
public:
  // Capacities must be positive and sum to at least the student count;
  // each priority order and each student preference must cover the whole
  // student and school set respectively.
  SchoolMarket(std::vector<School> schools,
               std::vector<StrictPreference> student_prefs);

  int school_count() const { return static_cast<int>(schools_.size()); }
  int student_count() const {
    return static_cast<int>(student_prefs_.size());
  }
  int total_capacity() const { return total_capacity_; }

  const School& school_at(HouseId s) const { return schools_.at(s.value); }
  const std::vector<School>& schools() const { return schools_; }
  const StrictPreference& preference_of(AgentId i) const {
    return student_prefs_.at(i.value);
  }
  const std::vector<StrictPreference>& preferences() const {
    return student_prefs_;
  }

private:
  std::vector<School> schools_;
  std::vector<StrictPreference> student_prefs_;
  int total_capacity_ = 0;
};

// Top trading cycles with capacities and priorities: students point at their
// favorite school with remaining capacity, each school points at its
// highest-priority unassigned student, and cycles trade. Cycle selection
// follows the pointer chain from the lowest-index unassigned student, like
// the housing engine. Returns student -> school.
std::vector<HouseId> ttc_priorities(const SchoolMarket& market);

enum class SchoolCycleSelection { LowestStudentFirst, HighestStudentFirst };
std::vector<HouseId> ttc_priorities(const SchoolMarket& market,
                                    SchoolCycleSelection selection);

// One seat per unit of capacity, seats of a school grouped consecutively.
struct SeatLabel {
  HouseId school;
  int copy = 1;  // 1-based within the school

  bool operator==(const SeatLabel&) const = default;
};

struct SeatExpansion {
  std::vector<SeatLabel> seats;            // seat index -> label
  Partition school_blocks;                 // seats grouped by school
  std::vector<PreferenceRelation> lifted;  // per student, over seats
};

// Lifts each student's strict ranking of schools to a weak order over
// seats, with a school's seats forming one indifference class. The lifted
// relations all induce school_blocks, so the seat market is an
// objective-indifferences market by construction.
SeatExpansion expand_seats(const SchoolMarket& market);

// Runs the housing mechanism on the seat expansion. seat_endowment gives
// each student the seat they start with and must be a bijection onto the
// seats, so total capacity must equal the student count here. The
// tie-breaking profile is over students (the seat owners). Returns the seat
// each student ends with.
Allocation ttc_seat_market(const SchoolMarket& market,
                           const std::vector<int>& seat_endowment,
                           const TieBreakProfile& tiebreak);

// Collapses a seat allocation to student -> school.
std::vector<HouseId> schools_of(const SchoolMarket& market,
                                const Allocation& seat_allocation);

}  // namespace ttc
