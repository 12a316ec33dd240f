#pragma once

#include <utility>

#include <json.hpp>

#include "kaa/encode.hpp"
#include "kaa/rewrite.hpp"

namespace kaa {

/// Port graph of representation_to_diagram(r); every trace below starts
/// and ends on such graphs.
PortGraph representation_graph(const Representation &r);

/// Merges nondeterministic successors into subset wires, lowest source wire
/// first, letters in alphabet order. Original wires are kept. One CPY step
/// per merge. Needs n = m = 1.
std::pair<Representation, RewriteTrace> determinise(const Representation &r);

/// Transposed core: initial and accepting wires swap, languages reverse.
Representation reverse(const Representation &r);

/// reverse; determinise; reverse, logged as COCPY steps on the forward side.
std::pair<Representation, RewriteTrace> co_determinise(const Representation &r);

/// Drops loop wires unreachable from the input (CODEL) and those that
/// cannot reach the output (DEL).
std::pair<Representation, RewriteTrace> trim_useless(const Representation &r);

class NotDeterministic : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Adds one garbage wire receiving every missing transition.
std::pair<Representation, RewriteTrace> totalise(const Representation &r);

/// Breadth-first renumbering of loop wires from the initial wire.
Representation canonical_numbering(const Representation &r);

/// Bend, atomise, and read off a representation (one REP step). The trace
/// starts at the bent input diagram.
std::pair<Representation, RewriteTrace> extract_representation(const Term &d,
                                                               const Alphabet &sigma);

/// Atomise, extract, trim, co-determinise, trim, determinise, trim, and
/// renumber. The trace starts at the bent input diagram.
std::pair<Representation, RewriteTrace> minimise(const Term &d, const Alphabet &sigma);

struct EquivCertificate {
  bool equivalent = false;
  Representation left, right;
  RewriteTrace left_trace, right_trace;

  nlohmann::json to_json() const;
};

/// Compares the minimal representations of both sides.
EquivCertificate decide_equiv(const Term &d, const Term &e, const Alphabet &sigma);

} // namespace kaa
