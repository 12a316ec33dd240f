#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "kaa/diagram.hpp"
#include "kaa/nfa.hpp"
#include "kaa/regex.hpp"

namespace kaa {

/// Formal sum of letters, kEpsilon standing for the empty word.
using Coeff = std::set<char>;

std::string coeff_str(const Coeff &c); // "0", "a+b", "eps+a"

/// Copy layer, scalar layer, merge layer; entries indexed (input, output).
struct MatrixDiagram {
  std::size_t n_in = 0, m_out = 0;
  std::vector<std::vector<Coeff>> entries;

  MatrixDiagram() = default;
  MatrixDiagram(std::size_t n, std::size_t m)
      : n_in(n), m_out(m), entries(n, std::vector<Coeff>(m)) {}

  bool eps_free() const;
  /// eps_free, and each input reaches at most one output per letter.
  bool deterministic() const;

  friend bool operator==(const MatrixDiagram &, const MatrixDiagram &) = default;
};

/// A matrix-diagram with its first `l` outputs fed back to its first `l`
/// inputs. Rows: l loop wires then n inputs; columns: l loop wires then m
/// outputs.
struct Representation {
  Alphabet sigma;
  std::size_t l = 0, n = 1, m = 1;
  MatrixDiagram core;

  explicit Representation(Alphabet a, std::size_t loops = 0, std::size_t in = 1,
                          std::size_t out = 1)
      : sigma(std::move(a)), l(loops), n(in), m(out), core(loops + in, loops + out) {}

  Coeff &ll(std::size_t i, std::size_t j) { return core.entries[i][j]; }
  const Coeff &ll(std::size_t i, std::size_t j) const { return core.entries[i][j]; }
  Coeff &nl(std::size_t k, std::size_t j) { return core.entries[l + k][j]; }
  const Coeff &nl(std::size_t k, std::size_t j) const { return core.entries[l + k][j]; }
  Coeff &lm(std::size_t i, std::size_t k) { return core.entries[i][l + k]; }
  const Coeff &lm(std::size_t i, std::size_t k) const { return core.entries[i][l + k]; }
  const Coeff &nm(std::size_t a, std::size_t b) const { return core.entries[l + a][l + b]; }

  /// Loop block ε-free over `sigma`, input and output blocks within {ε},
  /// input-to-output block empty. Throws std::invalid_argument.
  void validate() const;
  /// Loop block deterministic and each input marks exactly one loop wire
  /// (no loop wires at all is allowed only when l = 0).
  bool deterministic() const;

  /// {alphabet, l, n, m, entries:[[["a","eps"], ...], ...]}.
  nlohmann::json to_json() const;
  static Representation from_json(const nlohmann::json &j);

  friend bool operator==(const Representation &, const Representation &) = default;
};

/// Inductive encoding of a regex as a left-to-right atomic diagram > -> >.
Term regex_to_diagram(const Regex &e);

/// Feedback of the first `loops` wires of f : >^(loops+a) -> >^(loops+b),
/// built from cups and caps.
Term trace_term(const Term &f, std::size_t loops);

/// Copy, scalar, permutation and merge layers for the given entries
/// (ε allowed, giving plain wires).
Term matrix_diagram_term(const MatrixDiagram &md);

Term representation_to_diagram(const Representation &r);
/// Port graph of representation_to_diagram, without building the term.
PortGraph representation_to_graph(const Representation &r);

class EncodingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Transition-matrix encoding; needs exactly one initial state.
Term nfa_to_diagram_matrix(const Nfa &a);
/// One merge/copy pair per state; needs exactly one initial state.
Term nfa_to_diagram_graph(const Nfa &a);

/// States of the result: one per input, then one per action of the
/// atomised diagram. Bends first; throws BoundaryError on a red boundary.
Representation diagram_to_representation(const Term &d, const Alphabet &sigma);
/// Same for an atomic graph whose boundary is all `>`.
Representation graph_to_representation(const PortGraph &g, const Alphabet &sigma);

/// Needs n = m = 1.
Nfa representation_to_nfa(const Representation &r);
/// ε-moves are closed over forwards first; one loop wire per state.
Representation representation_from_nfa(const Nfa &a);

/// Inclusion system of a left-to-right diagram, one `<=` per line.
std::string emit_inequalities(const Term &d);

} // namespace kaa
