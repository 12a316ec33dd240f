#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kaa/diagram.hpp"
#include "kaa/regex.hpp"

namespace kaa {

/// Regex assignment for the red metavariables of a schema (`e`, `f`), or
/// the letter parameter `a` as an Atom.
using Subst = std::map<std::string, Regex>;

struct AxiomSchema {
  std::string id;
  std::vector<std::string> metavars; // red inputs, in boundary order
  bool letter = false;               // parameterised by a letter `a`
  std::string summary;
};

/// Every equation of the theory, in catalog order A1 .. E15.
const std::vector<AxiomSchema> &axiom_catalog();

/// Macro steps citing derived laws: cpy, del, co-cpy, co-del, plus the
/// extraction of a representation and the renumbering of loop wires.
const std::vector<std::string> &macro_ids();

bool is_axiom(const std::string &id);
bool is_macro(const std::string &id);
const AxiomSchema &axiom_schema(const std::string &id);

class SubstError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Both sides with the metavariable inputs left open as leading red
/// boundary wires. Only letter schemas read `s`.
std::pair<Term, Term> axiom_open_sides(const std::string &id, const Subst &s = {});

/// Both sides with every metavariable input fed by its state term. Throws
/// SubstError unless `s` covers exactly the schema's metavariables.
std::pair<Term, Term> axiom_sides(const std::string &id, const Subst &s);

/// Closed sides further composed with actions on every red output, making
/// purely red equations comparable as diagrams over > wires.
std::pair<Term, Term> axiom_acting_sides(const std::string &id, const Subst &s);

struct SoundnessReport {
  std::string id;
  std::size_t samples = 0;
  bool sound = true;
  std::string failure; // first counterexample, if any
};

/// sem_equal on `samples` seeded substitutions (and eval_red syntactic
/// equality for the purely red block).
SoundnessReport check_axiom(const std::string &id, std::size_t samples,
                            std::uint64_t seed, const Alphabet &sigma);

} // namespace kaa
