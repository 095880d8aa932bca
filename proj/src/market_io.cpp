#include "ttc/market_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ttc {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// One logical "key[: value]" line with its number; comments and blanks are
// already gone.
struct Line {
  int number;
  std::string key;     // up to the first ':'
  std::string value;   // after it
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string content = trim(raw);
    if (content.empty()) continue;
    std::size_t colon = content.find(':');
    if (colon == std::string::npos) {
      throw ParseError(number, "expected 'key: value'");
    }
    out.push_back(Line{number, trim(content.substr(0, colon)),
                       trim(content.substr(colon + 1))});
  }
  return out;
}

class NameTable {
public:
  NameTable(const char* kind) : kind_(kind) {}

  void declare(const std::vector<std::string>& names, int line) {
    if (names.empty()) {
      throw ParseError(line, std::string("no ") + kind_ + " names given");
    }
    for (const std::string& name : names) {
      if (name.find_first_of("|=:") != std::string::npos) {
        throw ParseError(line, "name '" + name + "' contains a reserved character");
      }
      if (index_.count(name)) {
        throw ParseError(line, std::string("duplicate ") + kind_ + " name '" +
                                   name + "'");
      }
      index_[name] = static_cast<int>(names_.size());
      names_.push_back(name);
    }
  }

  bool declared() const { return !names_.empty(); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  int resolve(const std::string& name, int line) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw ParseError(line, std::string("unknown ") + kind_ + " '" + name + "'");
    }
    return it->second;
  }

private:
  const char* kind_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

std::vector<std::vector<HouseId>> parse_classes(const std::string& value,
                                                const NameTable& houses,
                                                int line) {
  std::vector<std::vector<HouseId>> classes;
  for (const std::string& part : split_on(value, '|')) {
    std::vector<HouseId> cls;
    for (const std::string& name : tokens(part)) {
      cls.push_back(HouseId(houses.resolve(name, line)));
    }
    if (cls.empty()) {
      throw ParseError(line, "empty indifference class");
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

MarketFile parse_market_file(std::istream& in) {
  NameTable agents("agent");
  NameTable houses("house");
  std::vector<std::optional<std::vector<std::vector<HouseId>>>> prefs;
  std::vector<std::optional<std::vector<AgentId>>> tiebreaks;
  std::optional<std::vector<HouseId>> endowment;
  std::optional<std::vector<std::vector<HouseId>>> partition;
  int last_line = 0;

  for (const Line& line : read_lines(in)) {
    last_line = line.number;
    std::vector<std::string> key = tokens(line.key);
    if (key.empty()) throw ParseError(line.number, "missing key");
    const std::string& head = key[0];

    if (head == "agents" || head == "houses") {
      if (key.size() != 1) throw ParseError(line.number, "unexpected key");
      (head == "agents" ? agents : houses).declare(tokens(line.value),
                                                   line.number);
      if (head == "agents") {
        prefs.resize(static_cast<std::size_t>(agents.size()));
        tiebreaks.resize(static_cast<std::size_t>(agents.size()));
      }
      continue;
    }
    if (!agents.declared() || !houses.declared()) {
      throw ParseError(line.number,
                       "agents and houses must be declared first");
    }

    if (head == "endowment" && key.size() == 1) {
      std::vector<HouseId> result(
          static_cast<std::size_t>(agents.size()), HouseId(-1));
      for (const std::string& pair : tokens(line.value)) {
        std::vector<std::string> sides = split_on(pair, '=');
        if (sides.size() != 2) {
          throw ParseError(line.number,
                           "endowment entries look like agent=house");
        }
        int a = agents.resolve(sides[0], line.number);
        result[static_cast<std::size_t>(a)] =
            HouseId(houses.resolve(sides[1], line.number));
      }
      for (HouseId h : result) {
        if (h.value < 0) {
          throw ParseError(line.number, "endowment misses some agent");
        }
      }
      endowment = std::move(result);
    } else if (head == "preferences" && key.size() == 2) {
      int a = agents.resolve(key[1], line.number);
      if (prefs[static_cast<std::size_t>(a)]) {
        throw ParseError(line.number, "duplicate preferences for '" + key[1] + "'");
      }
      prefs[static_cast<std::size_t>(a)] =
          parse_classes(line.value, houses, line.number);
    } else if (head == "tiebreak" && key.size() == 2) {
      int a = agents.resolve(key[1], line.number);
      if (tiebreaks[static_cast<std::size_t>(a)]) {
        throw ParseError(line.number, "duplicate tiebreak for '" + key[1] + "'");
      }
      std::vector<AgentId> order;
      for (const std::string& name : tokens(line.value)) {
        order.push_back(AgentId(agents.resolve(name, line.number)));
      }
      tiebreaks[static_cast<std::size_t>(a)] = std::move(order);
    } else if (head == "partition" && key.size() == 1) {
      partition = parse_classes(line.value, houses, line.number);
    } else {
      throw ParseError(line.number, "unknown key '" + line.key + "'");
    }
  }

  if (!agents.declared() || !houses.declared()) {
    throw ParseError(last_line, "file declares no market");
  }
  if (agents.size() != houses.size()) {
    throw ParseError(last_line, "agent and house counts differ");
  }

  try {
    std::vector<PreferenceRelation> profile;
    for (int a = 0; a < agents.size(); ++a) {
      if (!prefs[static_cast<std::size_t>(a)]) {
        throw ParseError(last_line, "missing preferences for '" +
                                        agents.names()[static_cast<std::size_t>(a)] +
                                        "'");
      }
      profile.emplace_back(*prefs[static_cast<std::size_t>(a)], houses.size());
    }
    if (!endowment) {
      std::vector<HouseId> positional;
      for (int a = 0; a < agents.size(); ++a) positional.push_back(HouseId(a));
      endowment = std::move(positional);
    }

    MarketFile file{agents.names(), houses.names(),
                    Market(*endowment, std::move(profile)), std::nullopt,
                    std::nullopt};

    int with_tiebreak = 0;
    for (const auto& t : tiebreaks) {
      if (t) ++with_tiebreak;
    }
    if (with_tiebreak == agents.size()) {
      std::vector<AgentOrder> orders;
      for (const auto& t : tiebreaks) orders.emplace_back(*t);
      file.tiebreak = TieBreakProfile(std::move(orders));
    } else if (with_tiebreak != 0) {
      throw ParseError(last_line,
                       "tiebreak orders cover only part of the agents");
    }
    if (partition) {
      file.partition = Partition(*partition, houses.size());
    }
    return file;
  } catch (const std::invalid_argument& e) {
    // Structural validation failures point at the file as a whole.
    throw ParseError(last_line, e.what());
  }
}

MarketFile parse_market_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_market_file(in);
}

std::string serialize_market_file(const MarketFile& file) {
  std::ostringstream out;
  auto write_names = [&](const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << (i ? " " : "") << names[i];
    }
    out << "\n";
  };
  out << "agents: ";
  write_names(file.agent_names);
  out << "houses: ";
  write_names(file.house_names);
  out << "endowment:";
  for (int a = 0; a < file.market.agent_count(); ++a) {
    out << " " << file.agent_names[static_cast<std::size_t>(a)] << "="
        << file.house_name(file.market.endowment_of(AgentId(a)));
  }
  out << "\n";
  auto write_classes = [&](const std::vector<std::vector<HouseId>>& classes) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (c) out << " |";
      for (HouseId h : classes[c]) out << " " << file.house_name(h);
    }
    out << "\n";
  };
  for (int a = 0; a < file.market.agent_count(); ++a) {
    out << "preferences " << file.agent_names[static_cast<std::size_t>(a)]
        << ":";
    write_classes(file.market.preference_of(AgentId(a)).ranked_classes());
  }
  if (file.tiebreak) {
    for (int a = 0; a < file.market.agent_count(); ++a) {
      out << "tiebreak " << file.agent_names[static_cast<std::size_t>(a)]
          << ":";
      for (AgentId other : file.tiebreak->order_of(AgentId(a)).order()) {
        out << " " << file.agent_names[static_cast<std::size_t>(other.value)];
      }
      out << "\n";
    }
  }
  if (file.partition) {
    out << "partition:";
    write_classes(file.partition->blocks());
  }
  return out.str();
}

TieBreakProfile parse_tiebreak_file(std::istream& in,
                                    const std::vector<std::string>& agent_names) {
  NameTable agents("agent");
  agents.declare(agent_names, 0);
  std::vector<std::optional<AgentOrder>> orders(
      static_cast<std::size_t>(agents.size()));
  for (const Line& line : read_lines(in)) {
    std::vector<std::string> key = tokens(line.key);
    if (key.size() != 2 || key[0] != "tiebreak") {
      throw ParseError(line.number, "expected 'tiebreak <agent>: ...'");
    }
    int a = agents.resolve(key[1], line.number);
    std::vector<AgentId> order;
    for (const std::string& name : tokens(line.value)) {
      order.push_back(AgentId(agents.resolve(name, line.number)));
    }
    try {
      orders[static_cast<std::size_t>(a)] = AgentOrder(std::move(order));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
  }
  std::vector<AgentOrder> all;
  for (int a = 0; a < agents.size(); ++a) {
    if (!orders[static_cast<std::size_t>(a)]) {
      throw ParseError(0, "missing tiebreak for '" +
                              agent_names[static_cast<std::size_t>(a)] + "'");
    }
    all.push_back(*orders[static_cast<std::size_t>(a)]);
  }
  return TieBreakProfile(std::move(all));
}

TieBreakProfile parse_tiebreak_file(const std::string& path,
                                    const std::vector<std::string>& agent_names) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_tiebreak_file(in, agent_names);
}

SchoolFile parse_school_file(std::istream& in) {
  NameTable schools("school");
  NameTable students("student");
  std::vector<int> capacities;
  std::vector<std::optional<AgentOrder>> priorities;
  std::vector<std::optional<StrictPreference>> prefs;
  std::vector<std::optional<AgentOrder>> tiebreaks;
  std::vector<std::optional<int>> seats;
  bool have_seats = false;
  int last_line = 0;

  for (const Line& line : read_lines(in)) {
    last_line = line.number;
    std::vector<std::string> key = tokens(line.key);
    if (key.empty()) throw ParseError(line.number, "missing key");
    const std::string& head = key[0];

    if (head == "schools") {
      schools.declare(tokens(line.value), line.number);
      capacities.assign(static_cast<std::size_t>(schools.size()), -1);
      priorities.resize(static_cast<std::size_t>(schools.size()));
      continue;
    }
    if (head == "students") {
      students.declare(tokens(line.value), line.number);
      prefs.resize(static_cast<std::size_t>(students.size()));
      tiebreaks.resize(static_cast<std::size_t>(students.size()));
      seats.resize(static_cast<std::size_t>(students.size()));
      continue;
    }
    if (head == "capacities") {
      if (!schools.declared()) {
        throw ParseError(line.number, "schools must be declared first");
      }
      for (const std::string& pair : tokens(line.value)) {
        std::vector<std::string> sides = split_on(pair, '=');
        if (sides.size() != 2) {
          throw ParseError(line.number,
                           "capacity entries look like school=count");
        }
        int s = schools.resolve(sides[0], line.number);
        try {
          capacities[static_cast<std::size_t>(s)] = std::stoi(sides[1]);
        } catch (const std::exception&) {
          throw ParseError(line.number, "bad capacity '" + sides[1] + "'");
        }
      }
      continue;
    }
    if (!schools.declared() || !students.declared()) {
      throw ParseError(line.number,
                       "schools and students must be declared first");
    }

    if (head == "priority" && key.size() == 2) {
      int s = schools.resolve(key[1], line.number);
      std::vector<AgentId> order;
      for (const std::string& name : tokens(line.value)) {
        order.push_back(AgentId(students.resolve(name, line.number)));
      }
      try {
        priorities[static_cast<std::size_t>(s)] = AgentOrder(std::move(order));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (head == "preferences" && key.size() == 2) {
      int i = students.resolve(key[1], line.number);
      std::vector<HouseId> ranking;
      for (const std::string& name : tokens(line.value)) {
        ranking.push_back(HouseId(schools.resolve(name, line.number)));
      }
      try {
        prefs[static_cast<std::size_t>(i)] = StrictPreference(std::move(ranking));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (head == "tiebreak" && key.size() == 2) {
      int i = students.resolve(key[1], line.number);
      std::vector<AgentId> order;
      for (const std::string& name : tokens(line.value)) {
        order.push_back(AgentId(students.resolve(name, line.number)));
      }
      try {
        tiebreaks[static_cast<std::size_t>(i)] = AgentOrder(std::move(order));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (head == "seats" && key.size() == 1) {
      have_seats = true;
      // Seat indices follow school declaration order, capacity copies each.
      std::vector<int> offsets(static_cast<std::size_t>(schools.size()), 0);
      int running = 0;
      for (int s = 0; s < schools.size(); ++s) {
        if (capacities[static_cast<std::size_t>(s)] < 0) {
          throw ParseError(line.number,
                           "capacities must be declared before seats");
        }
        offsets[static_cast<std::size_t>(s)] = running;
        running += capacities[static_cast<std::size_t>(s)];
      }
      for (const std::string& pair : tokens(line.value)) {
        std::vector<std::string> sides = split_on(pair, '=');
        if (sides.size() != 2) {
          throw ParseError(line.number,
                           "seat entries look like student=School.copy");
        }
        int i = students.resolve(sides[0], line.number);
        std::vector<std::string> seat = split_on(sides[1], '.');
        if (seat.size() != 2) {
          throw ParseError(line.number, "seat names look like School.copy");
        }
        int s = schools.resolve(seat[0], line.number);
        int copy = 0;
        try {
          copy = std::stoi(seat[1]);
        } catch (const std::exception&) {
          throw ParseError(line.number, "bad seat copy '" + seat[1] + "'");
        }
        if (copy < 1 || copy > capacities[static_cast<std::size_t>(s)]) {
          throw ParseError(line.number, "seat copy out of range in '" +
                                            pair + "'");
        }
        seats[static_cast<std::size_t>(i)] =
            offsets[static_cast<std::size_t>(s)] + copy - 1;
      }
    } else {
      throw ParseError(line.number, "unknown key '" + line.key + "'");
    }
  }

  if (!schools.declared() || !students.declared()) {
    throw ParseError(last_line, "file declares no school market");
  }

  try {
    std::vector<School> school_list;
    for (int s = 0; s < schools.size(); ++s) {
      if (capacities[static_cast<std::size_t>(s)] < 0) {
        throw ParseError(last_line, "missing capacity for '" +
                                        schools.names()[static_cast<std::size_t>(s)] +
                                        "'");
      }
      if (!priorities[static_cast<std::size_t>(s)]) {
        throw ParseError(last_line, "missing priority for '" +
                                        schools.names()[static_cast<std::size_t>(s)] +
                                        "'");
      }
      school_list.push_back(School{capacities[static_cast<std::size_t>(s)],
                                   *priorities[static_cast<std::size_t>(s)]});
    }
    std::vector<StrictPreference> pref_list;
    for (int i = 0; i < students.size(); ++i) {
      if (!prefs[static_cast<std::size_t>(i)]) {
        throw ParseError(last_line, "missing preferences for '" +
                                        students.names()[static_cast<std::size_t>(i)] +
                                        "'");
      }
      pref_list.push_back(*prefs[static_cast<std::size_t>(i)]);
    }

    SchoolFile file{schools.names(), students.names(),
                    SchoolMarket(std::move(school_list), std::move(pref_list)),
                    std::nullopt, std::nullopt};

    if (have_seats) {
      std::vector<int> endowment;
      for (int i = 0; i < students.size(); ++i) {
        if (!seats[static_cast<std::size_t>(i)]) {
          throw ParseError(last_line, "missing seat for '" +
                                          students.names()[static_cast<std::size_t>(i)] +
                                          "'");
        }
        endowment.push_back(*seats[static_cast<std::size_t>(i)]);
      }
      file.seat_endowment = std::move(endowment);
    }

    int with_tiebreak = 0;
    for (const auto& t : tiebreaks) {
      if (t) ++with_tiebreak;
    }
    if (with_tiebreak == students.size()) {
      std::vector<AgentOrder> orders;
      for (const auto& t : tiebreaks) orders.push_back(*t);
      file.tiebreak = TieBreakProfile(std::move(orders));
    } else if (with_tiebreak != 0) {
      throw ParseError(last_line,
                       "tiebreak orders cover only part of the students");
    }
    return file;
  } catch (const std::invalid_argument& e) {
    throw ParseError(last_line, e.what());
  }
}

SchoolFile parse_school_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_school_file(in);
}

}  // namespace ttc
