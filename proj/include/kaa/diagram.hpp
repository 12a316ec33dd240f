#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace kaa {

/// Generating objects: the red expression wire and the two language wires.
enum class Obj : std::uint8_t { Red, Right, Left };

using Interface = std::vector<Obj>;

char obj_char(Obj o); // 'R', '>' or '<'
Obj obj_from_char(char c);
std::string interface_str(const Interface &i); // "I" when empty

enum class Gen : std::uint8_t {
  RedCopy,
  RedDelete,
  Star,
  Prod,
  One,
  Sum,
  Zero,
  Atom,
  Action,
  BlackCopy,
  BlackDelete,
  BlackMerge,
  BlackUnit,
  Cap,
  Cup,
};

/// A generator together with its letter (Atom only). The order of Gen
/// values is the label rank used by canonical forms.
struct Label {
  Gen gen;
  char letter = 0;

  bool red() const noexcept { return gen <= Gen::Atom; }
  const Interface &dom() const;
  const Interface &cod() const;
  /// Name in diagram text, e.g. `copy` or `atom[a]`.
  std::string name() const;

  friend auto operator<=>(const Label &, const Label &) = default;
};

class TypeError : public std::runtime_error {
public:
  TypeError(const std::string &what, std::string path)
      : std::runtime_error(what + " (at " + (path.empty() ? "root" : path) + ")"),
        path_(std::move(path)) {}
  const std::string &path() const noexcept { return path_; }

private:
  std::string path_;
};

/// Immutable composition term over the generators.
class Term {
public:
  enum class Kind : std::uint8_t { Gen, Id, Sym, Seq, Par };

  static Term gen(Label l);
  static Term gen(Gen g) { return gen(Label{g}); }
  static Term atom(char letter) { return gen(Label{Gen::Atom, letter}); }
  static Term id(Interface i);
  static Term id(Obj o) { return id(Interface{o}); }
  static Term sym(Obj a, Obj b);
  static Term seq(Term first, Term second);
  static Term par(Term top, Term bottom);
  /// Left-nested folds; an empty list of factors needs `unit`.
  static Term seq_all(const std::vector<Term> &ts);
  static Term par_all(const std::vector<Term> &ts);

  Kind kind() const noexcept { return node_->kind; }
  const Label &label() const { return node_->label; }
  const Interface &objects() const { return node_->objects; } // Id, Sym
  const Term &first() const { return *node_->a; }
  const Term &second() const { return *node_->b; }

  /// Number of Gen leaves.
  std::size_t size() const;

private:
  struct Node {
    Kind kind;
    Label label{Gen::RedCopy};
    Interface objects;
    std::shared_ptr<const Term> a, b;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Domain and codomain; throws TypeError naming the offending subterm path
/// (e.g. `seq.1/par.0`).
std::pair<Interface, Interface> typecheck(const Term &t);

/// `Id(i)` placed beside `t`: i·dom(t) -> i·cod(t) etc. Empty sides vanish.
Term with_ids(const Interface &before, const Term &t, const Interface &after);

// ---- port graphs --------------------------------------------------------------

struct Endpoint {
  static constexpr std::size_t kBoundary = SIZE_MAX;
  std::size_t node; // kBoundary for an interface position
  std::size_t port; // port index, or boundary position

  bool boundary() const noexcept { return node == kBoundary; }
  friend auto operator<=>(const Endpoint &, const Endpoint &) = default;
};

/// Directed from an output port (or domain position) to an input port (or
/// codomain position).
struct Wire {
  Endpoint src;
  Endpoint dst;
  Obj type;
};

/// Per-port wire lookup for a PortGraph.
struct Incidence {
  std::vector<std::vector<std::size_t>> in, out; // node -> port -> wire
  std::vector<std::size_t> dom, cod;            // position -> wire
};

/// A diagram modulo the laws of symmetric monoidal categories: generator
/// nodes with ordered ports, wires, and ordered boundaries.
struct PortGraph {
  std::vector<Label> nodes;
  std::vector<Wire> wires;
  Interface dom, cod;

  /// Every port attached to exactly one wire, endpoint types consistent.
  /// Throws std::invalid_argument.
  void validate() const;
  Incidence incidence() const;
  bool acyclic() const;

  /// Canonical text: boundary-anchored traversal, floating components
  /// ordered by their own minimal encodings.
  std::string canonical_form() const;
  /// Lowercase hex SHA-256 of canonical_form().
  std::string digest() const;

  nlohmann::json to_json() const;
  static PortGraph from_json(const nlohmann::json &j);
};

inline constexpr const char *kDigestAlgorithm = "sha256";

PortGraph to_port_graph(const Term &t);
/// A term whose port graph is isomorphic to `g`; `g` must be acyclic.
Term to_term(const PortGraph &g);

bool smc_equal(const PortGraph &g, const PortGraph &h);
bool smc_equal(const Term &s, const Term &t);

bool is_left_to_right(const Term &t);
bool is_left_to_right(const PortGraph &g);
/// Every red node is an Atom.
bool is_atomic(const Term &t);
bool is_atomic(const PortGraph &g);

/// Graphviz text with wires coloured by type and boundary anchors ranked at
/// the sides; deterministic for a fixed term.
std::string render_dot(const Term &t);

// ---- wire bending -------------------------------------------------------------

class BoundaryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bends every `<` on the boundary so the result has only `>` on both sides.
/// Inputs of the result: the `>` of the domain, then the `<` of the codomain;
/// outputs: the `>` of the codomain, then the `<` of the domain. Throws
/// BoundaryError for red boundary objects. Left-to-right terms are returned
/// unchanged.
Term bend_to_left_to_right(const Term &t);

/// Inverse of bend_to_left_to_right for the original interface pair.
Term unbend(const Term &bent, const Interface &dom, const Interface &cod);

/// Straightens zig-zags (cup meeting cap) and removes closed cup-cap loops
/// until none remain.
PortGraph yank_normalise(PortGraph g);

} // namespace kaa
