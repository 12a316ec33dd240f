#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kaa/regex.hpp"

namespace kaa {

/// Label value reserved for ε-transitions.
inline constexpr char kEpsilon = '\0';

struct Transition {
  std::size_t src;
  char label; // kEpsilon or a letter
  std::size_t dst;

  friend auto operator<=>(const Transition &, const Transition &) = default;
};

/// Nondeterministic automaton with ε-moves and a set of initial states.
struct Nfa {
  Alphabet sigma;
  std::size_t states = 0;
  std::set<Transition> delta;
  std::set<std::size_t> initial;
  std::set<std::size_t> finals;

  explicit Nfa(Alphabet a, std::size_t n = 0) : sigma(std::move(a)), states(n) {}

  std::size_t add_state() { return states++; }
  void add(std::size_t src, char label, std::size_t dst);
  bool has_epsilon() const;

  /// Checks index ranges and labels; throws std::invalid_argument.
  void validate() const;

  /// Schema: {states, alphabet, transitions:[[src, label|"eps", dst]],
  /// initial:[...], finals:[...]}.
  nlohmann::json to_json() const;
  static Nfa from_json(const nlohmann::json &j);

  friend bool operator==(const Nfa &, const Nfa &) = default;
};

/// Brute-force acceptance by simulating the state-set (ε-closures included).
bool nfa_accepts(const Nfa &a, std::string_view word);

/// Adds a fresh initial state with ε-moves to the old initial states when
/// there is more than one; otherwise returns the input.
Nfa single_initial(const Nfa &a);

} // namespace kaa
