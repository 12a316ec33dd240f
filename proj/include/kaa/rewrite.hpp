#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kaa/axioms.hpp"
#include "kaa/diagram.hpp"
#include "kaa/encode.hpp"

namespace kaa {

enum class Direction { LeftToRight, RightToLeft };

/// The redex inside a host graph: its nodes, and the wires crossing its
/// border (inputs first, then outputs, in the order of the schema side).
struct Anchor {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> boundary;
};

struct RewriteStep {
  std::string axiom;
  Direction dir = Direction::LeftToRight;
  Anchor anchor;
  std::map<std::string, std::string> subst; // metavariable -> regex text
  /// Macro steps only: the replacement subdiagram as a port graph, and the
  /// laws the step stands for.
  std::optional<PortGraph> replacement;
  std::vector<std::string> via;
};

struct RewriteTrace {
  std::string initial, final;
  std::vector<RewriteStep> steps;

  bool empty() const noexcept { return steps.empty(); }
  /// Appends `next`, whose initial digest must equal our final one.
  void extend(const RewriteTrace &next);

  nlohmann::json to_json() const;
  static RewriteTrace from_json(const nlohmann::json &j);
};

/// Failure while applying or replaying a step; `step` is its index in the
/// trace (or SIZE_MAX for digest checks on the whole trace).
class ReplayError : public std::runtime_error {
public:
  enum class Kind { InitialDigest, FinalDigest, UnknownAxiom, AnchorMismatch, BadSubst };
  ReplayError(Kind k, std::size_t step, const std::string &what)
      : std::runtime_error(what), kind_(k), step_(step) {}
  Kind kind() const noexcept { return kind_; }
  std::size_t step() const noexcept { return step_; }

private:
  Kind kind_;
  std::size_t step_;
};

/// Result of a step: the new graph, and where the replacement landed.
struct StepResult {
  PortGraph graph;
  Anchor placed;
};

/// Excises the anchored redex and splices the other side of the axiom in
/// its place. Throws ReplayError (with step index 0) on a mismatch.
StepResult apply_step(const PortGraph &g, const RewriteStep &s,
                      const Alphabet &sigma);

PortGraph replay_trace(const PortGraph &g0, const RewriteTrace &t,
                       const Alphabet &sigma);

/// First occurrence of the given side of an axiom, or nullopt. The
/// substitution is read off the host's red wires.
std::optional<RewriteStep> find_redex(const PortGraph &g, const std::string &axiom,
                                      Direction dir);

/// Rewrites a left-to-right diagram until its only red generators are
/// atoms, using the red comonoid laws and the action laws.
std::pair<Term, RewriteTrace> atomise(const Term &d);
std::pair<PortGraph, RewriteTrace> atomise(const PortGraph &g);

} // namespace kaa
