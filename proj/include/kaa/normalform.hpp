#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "kaa/diagram.hpp"
#include "kaa/regex.hpp"

namespace kaa {

/// Regex-valued matrix; rows are inputs, columns outputs.
struct GeneralisedMatrix {
  std::size_t n_in = 0, m_out = 0;
  std::vector<std::vector<Regex>> entries;

  const Regex &at(std::size_t i, std::size_t j) const { return entries[i][j]; }
  /// `[e11, e12; e21, e22]`.
  std::string str() const;
};

/// Language-valued matrix of a left-to-right diagram.
struct DenotationMatrix {
  std::size_t n_in = 0, m_out = 0;
  std::vector<std::vector<Language>> entries;

  const Language &at(std::size_t i, std::size_t j) const { return entries[i][j]; }
  nlohmann::json to_json() const;
};

class NotLeftToRight : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// State elimination over the wires of the port graph, last wire first.
/// Black wires are ε-edges, actions are labelled by the value of their red
/// input, cups and caps close loops. Throws NotLeftToRight.
GeneralisedMatrix to_generalised_matrix(const Term &d);
GeneralisedMatrix to_generalised_matrix(const PortGraph &g);

/// Language of each entry of to_generalised_matrix, read off the wire
/// automaton of the diagram. Throws NotLeftToRight, or AlphabetError if an
/// atom is not in `sigma`.
DenotationMatrix denote(const Term &d, const Alphabet &sigma);
DenotationMatrix denote(const PortGraph &g, const Alphabet &sigma);

class InterfaceMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Both sides are bent first. Throws InterfaceMismatch or BoundaryError.
bool sem_equal(const Term &d, const Term &e, const Alphabet &sigma);
/// Entrywise inclusion.
bool sem_leq(const Term &d, const Term &e, const Alphabet &sigma);
/// Same on port graphs; bends only when the boundary is not all `>`.
bool sem_equal(const PortGraph &g, const PortGraph &h, const Alphabet &sigma);

/// Regex carried by a red wire whose producers form a closed red subgraph.
/// Throws std::invalid_argument on a boundary or black producer.
Regex red_wire_value(const PortGraph &g, std::size_t wire);

/// Evaluates a purely red diagram as a substitution; one regex per output.
std::vector<Regex> eval_red(const Term &d, const std::vector<Regex> &env);

/// Units on every input but `i`, deletes on every output but `j` (0-based).
Term restrict(const Term &d, std::size_t i, std::size_t j);

/// Connectivity of a diagram built from copy, delete, merge and unit only.
std::vector<std::vector<bool>> relation_normal_form(const Term &d);

/// copy on each input; d and e side by side; merge on each output.
Term sum_term(const Term &d, const Term &e);

} // namespace kaa
