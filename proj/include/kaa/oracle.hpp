#pragma once

// Classical automata algorithms used as the independent reference for every
// diagrammatic result. Nothing here may depend on the rewrite or normal-form
// code.

#include <cstddef>
#include <vector>

#include "kaa/nfa.hpp"
#include "kaa/regex.hpp"

namespace kaa::oracle {

/// Complete deterministic automaton; state 0 is initial.
struct Dfa {
  Alphabet sigma;
  std::size_t states = 0;
  std::vector<bool> finals;
  std::vector<std::size_t> delta; // states * |sigma|

  std::size_t next(std::size_t q, std::size_t a) const {
    return delta[q * sigma.size() + a];
  }
};

/// Thompson construction.
Nfa thompson(const Regex &e, const Alphabet &sigma);

/// ε-free automaton with the same language (forward ε-closure).
Nfa eps_close(const Nfa &a);

/// Reachable-subset construction; the empty subset is kept as the sink.
/// The input must be ε-free.
Dfa subset_construction(const Nfa &a);

/// Hopcroft partition refinement followed by canonical renumbering.
Language hopcroft_minimise(const Dfa &d);

/// reverse; determinise; reverse; determinise; canonicalise.
Language brzozowski_minimise(const Nfa &a);

Nfa reversed(const Nfa &a);
Nfa as_nfa(const Dfa &d);

/// hopcroft_minimise(subset_construction(eps_close(a))).
Language nfa_language(const Nfa &a);

/// Same value as denote_regex, computed bottom-up over shared subterms:
/// small subterms go through denote_regex, larger ones combine the
/// languages of their operands. For expressions whose tree is far larger
/// than their node graph.
Language denote_shared(const Regex &e, const Alphabet &sigma);

/// Throws AlphabetError when the alphabets differ.
bool nfa_lang_equal(const Nfa &a, const Nfa &b);

/// Canonical breadth-first renumbering of the reachable part of a complete
/// DFA, without merging states.
Language canonical(const Dfa &d);

} // namespace kaa::oracle
