// Strong index types and shared error categories.
#pragma once

#include <compare>
#include <stdexcept>

namespace ttc {

// Agents and houses are dense 0-based indices within one market. The wrapper
// types exist so the two index spaces cannot be mixed up silently.
struct AgentId {
  int value = -1;
  constexpr AgentId() = default;
  constexpr explicit AgentId(int v) : value(v) {}
  constexpr auto operator<=>(const AgentId&) const = default;
};

struct HouseId {
  int value = -1;
  constexpr HouseId() = default;
  constexpr explicit HouseId(int v) : value(v) {}
  constexpr auto operator<=>(const HouseId&) const = default;
};

enum class Comparison { StrictlyPrefers, Indifferent, StrictlyDisprefers };

// Thrown when an exhaustive enumeration guard or a search budget would be
// exceeded. The CLI maps this to its own exit code so callers can tell
// "instance too large" apart from "instance invalid".
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace ttc
