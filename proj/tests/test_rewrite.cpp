#include <doctest.h>

#include "kaa/encode.hpp"
#include "kaa/kad.hpp"
#include "kaa/normalform.hpp"
#include "kaa/rewrite.hpp"

using namespace kaa;

namespace {

const Alphabet ab("ab");

Term graph_term(const PortGraph &g) { return to_term(g); }

} // namespace

TEST_CASE("a single step rewrites the redex and keeps the meaning") {
  Term t = parse_kad("copy ; del | id:> ; scalar[a]", ab);
  PortGraph g = to_port_graph(t);
  auto step = find_redex(g, "B2", Direction::LeftToRight);
  REQUIRE(step);
  StepResult r = apply_step(g, *step, ab);
  r.graph.validate();
  CHECK(r.graph.nodes.size() < g.nodes.size());
  CHECK(sem_equal(graph_term(r.graph), t, ab));
  CHECK(smc_equal(r.graph, to_port_graph(parse_kad("scalar[a]", ab))));
}

TEST_CASE("steps in both directions") {
  Term t = parse_kad("scalar[a+b]", ab);
  PortGraph g = to_port_graph(t);
  auto c4 = find_redex(g, "C4", Direction::LeftToRight);
  REQUIRE(c4);
  CHECK(c4->subst.at("e") == "a");
  CHECK(c4->subst.at("f") == "b");
  PortGraph h = apply_step(g, *c4, ab).graph;
  CHECK(sem_equal(graph_term(h), t, ab));
  auto back = find_redex(h, "C4", Direction::RightToLeft);
  REQUIRE(back);
  CHECK(smc_equal(apply_step(h, *back, ab).graph, g));
}

TEST_CASE("no redex") {
  CHECK_FALSE(find_redex(to_port_graph(parse_kad("scalar[a]", ab)), "C5", Direction::LeftToRight));
}

TEST_CASE("atomise gives an atomic diagram with a replayable trace") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Regex e = random_regex(seed, 4, ab);
    Term d = scalar_term(e);
    auto [t, trace] = atomise(d);
    CHECK(is_atomic(t));
    CHECK(sem_equal(t, d, ab));
    CHECK(trace.initial == to_port_graph(d).digest());
    CHECK(trace.final == to_port_graph(t).digest());
    CHECK(replay_trace(to_port_graph(d), trace, ab).digest() == trace.final);
    for (const auto &s : trace.steps)
      CHECK(is_axiom(s.axiom));
  }
}

TEST_CASE("atomise leaves atomic diagrams alone") {
  Term d = regex_to_diagram(parse_regex("(ab)*", ab));
  auto [t, trace] = atomise(d);
  CHECK(trace.empty());
  CHECK(smc_equal(t, d));
}

TEST_CASE("trace JSON round trip") {
  auto [t, trace] = atomise(scalar_term(parse_regex("(a+b)*ab", ab)));
  nlohmann::json j = trace.to_json();
  CHECK(j.at("digest_alg") == "sha256");
  RewriteTrace back = RewriteTrace::from_json(j);
  CHECK(back.to_json() == j);
}

TEST_CASE("replay failures are classified") {
  Term d = scalar_term(parse_regex("a*b+1", ab));
  auto [t, trace] = atomise(d);
  REQUIRE(trace.steps.size() >= 2);
  PortGraph g0 = to_port_graph(d);

  RewriteTrace bad = trace;
  bad.steps[1].axiom = "Q7";
  try {
    replay_trace(g0, bad, ab);
    FAIL("unknown axiom accepted");
  } catch (const ReplayError &e) {
    CHECK(e.kind() == ReplayError::Kind::UnknownAxiom);
    CHECK(e.step() == 1);
  }

  bad = trace;
  bad.steps[0].anchor.nodes.back() += 1000;
  try {
    replay_trace(g0, bad, ab);
    FAIL("bad anchor accepted");
  } catch (const ReplayError &e) {
    CHECK(e.kind() == ReplayError::Kind::AnchorMismatch);
  }

  bad = trace;
  bad.final[0] = bad.final[0] == '0' ? '1' : '0';
  try {
    replay_trace(g0, bad, ab);
    FAIL("bad digest accepted");
  } catch (const ReplayError &e) {
    CHECK(e.kind() == ReplayError::Kind::FinalDigest);
  }

  CHECK_THROWS_AS(replay_trace(to_port_graph(parse_kad("id:>", ab)), trace, ab), ReplayError);
}

TEST_CASE("extend checks the join") {
  auto [t1, a] = atomise(scalar_term(parse_regex("a+b", ab)));
  auto [t2, b] = atomise(scalar_term(parse_regex("ab", ab)));
  CHECK_THROWS(a.extend(b));
  RewriteTrace c = a;
  c.extend(RewriteTrace{a.final, a.final, {}});
  CHECK(c.steps.size() == a.steps.size());
}
