// Text format for market and school fixtures, with stable serialization.
//
// Market files are line oriented. '#' starts a comment, blank lines are
// skipped, and each remaining line is "key: value" with these keys:
//
//   agents: 1 2 3                     names, order fixes agent indices
//   houses: w1 w2 w3                  names, order fixes house indices
//   endowment: 1=w1 2=w2 3=w3        optional; defaults to positional
//   preferences 1: w2 w3 | w1        one per agent; '|' separates classes
//   tiebreak 1: 2 1 3                 optional; one per agent when present
//   partition: w1 | w2 w3             optional objective partition
//
// School files use:
//
//   schools: A B C
//   capacities: A=1 B=1 C=2
//   students: a b c1 c2
//   priority A: a b c1 c2             one per school
//   preferences a: C A B              strict, one per student
//   seats: a=A.1 b=B.1 c1=C.1 c2=C.2  optional seat endowment
//   tiebreak a: c1 c2 a b             optional, one per student
//
// Seat names are school name, dot, 1-based copy index.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ttc/market.hpp"
#include "ttc/school.hpp"
#include "ttc/tiebreak.hpp"

namespace ttc {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

private:
  int line_;
};

struct MarketFile {
  std::vector<std::string> agent_names;
  std::vector<std::string> house_names;
  Market market;
  std::optional<TieBreakProfile> tiebreak;
  std::optional<Partition> partition;

  const std::string& agent_name(AgentId i) const {
    return agent_names.at(i.value);
  }
  const std::string& house_name(HouseId h) const {
    return house_names.at(h.value);
  }
};

MarketFile parse_market_file(std::istream& in);
MarketFile parse_market_file(const std::string& path);
std::string serialize_market_file(const MarketFile& file);

// A file holding only "tiebreak <agent>: ..." lines, resolved against the
// market's agent names.
TieBreakProfile parse_tiebreak_file(std::istream& in,
                                    const std::vector<std::string>& agents);
TieBreakProfile parse_tiebreak_file(const std::string& path,
                                    const std::vector<std::string>& agents);

struct SchoolFile {
  std::vector<std::string> school_names;
  std::vector<std::string> student_names;
  SchoolMarket market;
  std::optional<std::vector<int>> seat_endowment;  // student -> seat index
  std::optional<TieBreakProfile> tiebreak;

  const std::string& school_name(HouseId s) const {
    return school_names.at(s.value);
  }
  const std::string& student_name(AgentId i) const {
    return student_names.at(i.value);
  }
};

SchoolFile parse_school_file(std::istream& in);
SchoolFile parse_school_file(const std::string& path);

}  // namespace ttc
