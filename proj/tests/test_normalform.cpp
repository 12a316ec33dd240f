#include <doctest.h>

#include <random>

#include "kaa/kad.hpp"
#include "kaa/normalform.hpp"
#include "kaa/oracle.hpp"
#include "support.hpp"

using namespace kaa;
using kaa::testing::flow_nfa;
using kaa::testing::random_black_interface;
using kaa::testing::random_diagram;

namespace {

const Alphabet ab("ab");
constexpr Obj R = Obj::Right;

Language lang(const char *e) { return denote_regex(parse_regex(e, ab), ab); }

void check_against_flow(const Term &t) {
  Term b = bend_to_left_to_right(t);
  PortGraph g = to_port_graph(b);
  DenotationMatrix d = denote(b, ab);
  REQUIRE(d.n_in == g.dom.size());
  REQUIRE(d.m_out == g.cod.size());
  for (std::size_t i = 0; i < d.n_in; ++i)
    for (std::size_t j = 0; j < d.m_out; ++j)
      REQUIRE_MESSAGE(lang_equal(d.at(i, j), oracle::nfa_language(flow_nfa(g, i, j, ab))),
                      to_kad(t) << " entry " << i << "," << j);
}

} // namespace

TEST_CASE("generalised matrix of small diagrams") {
  CHECK(to_generalised_matrix(parse_kad("id:>", ab)).str() == "[1]");
  CHECK(to_generalised_matrix(parse_kad("del", ab)).m_out == 0);
  GeneralisedMatrix c = to_generalised_matrix(parse_kad("copy", ab));
  CHECK(c.n_in == 1);
  CHECK(c.m_out == 2);
  CHECK(lang_equal(denote_regex(c.at(0, 1), ab), lang("1")));
  CHECK(lang_equal(denote(parse_kad("scalar[ab*]", ab), ab).at(0, 0), lang("ab*")));
}

TEST_CASE("actions compose in flow order") {
  Term t = parse_kad("scalar[a] ; scalar[b]", ab);
  CHECK(lang_equal(denote(t, ab).at(0, 0), lang("ab")));
}

TEST_CASE("feedback gives a star") {
  Term loop = parse_kad("cup | id:> ; id:> | sym:<> ; merge | id:< ; copy | id:< ; "
                        "id:> | scalar[a] | id:< ; id:> | sym:>< ; id:> | cap",
                        ab);
  CHECK(lang_equal(denote(loop, ab).at(0, 0), lang("a*")));
}

TEST_CASE("denotation agrees with the wire automaton") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i)
    check_against_flow(random_diagram(rng, random_black_interface(rng, 3), 10, ab));
}

TEST_CASE("generalised matrix entries denote the same languages") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    Term t = bend_to_left_to_right(random_diagram(rng, random_black_interface(rng, 3), 10, ab));
    GeneralisedMatrix gm = to_generalised_matrix(t);
    DenotationMatrix d = denote(t, ab);
    for (std::size_t r = 0; r < gm.n_in; ++r)
      for (std::size_t c = 0; c < gm.m_out; ++c)
        REQUIRE(lang_equal(denote_regex(gm.at(r, c), ab), d.at(r, c)));
  }
}

TEST_CASE("shared evaluation matches the direct construction") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Regex e = random_regex(seed, 6, ab);
    Regex f = Regex::prod(Regex::sum(e, Regex::star(e)), Regex::star(Regex::prod(e, e)));
    CHECK(lang_equal(oracle::denote_shared(f, ab), denote_regex(f, ab)));
  }
}

TEST_CASE("non left-to-right input is rejected") {
  CHECK_THROWS_AS(to_generalised_matrix(parse_kad("cup", ab)), NotLeftToRight);
  CHECK_THROWS_AS(denote(parse_kad("cup", ab), ab), NotLeftToRight);
}

TEST_CASE("restrict picks one entry") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    Term t = bend_to_left_to_right(random_diagram(rng, {R, R}, 12, ab));
    DenotationMatrix d = denote(t, ab);
    for (std::size_t i = 0; i < d.n_in; ++i)
      for (std::size_t j = 0; j < d.m_out; ++j)
        CHECK(lang_equal(denote(restrict(t, i, j), ab).at(0, 0), d.at(i, j)));
  }
}

TEST_CASE("sum_term is entrywise union") {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 50; ++k) {
    Term s = bend_to_left_to_right(random_diagram(rng, {R}, 10, ab));
    auto [dom, cod] = typecheck(s);
    Term t = bend_to_left_to_right(random_diagram(rng, {R}, 10, ab));
    if (typecheck(t) != std::pair{dom, cod})
      continue;
    DenotationMatrix u = denote(sum_term(s, t), ab), a = denote(s, ab), b = denote(t, ab);
    for (std::size_t i = 0; i < u.n_in; ++i)
      for (std::size_t j = 0; j < u.m_out; ++j) {
        CHECK(lang_subset(a.at(i, j), u.at(i, j)));
        CHECK(lang_subset(b.at(i, j), u.at(i, j)));
        for (const auto &w : kaa::testing::words_upto(ab, 5))
          CHECK(member(u.at(i, j), w) == (member(a.at(i, j), w) || member(b.at(i, j), w)));
      }
  }
}

TEST_CASE("relation normal form is connectivity") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    Term t = random_diagram(rng, {R, R}, 8, ab, false);
    if (!is_left_to_right(t))
      continue;
    auto rel = relation_normal_form(t);
    DenotationMatrix d = denote(t, ab);
    for (std::size_t i = 0; i < d.n_in; ++i)
      for (std::size_t j = 0; j < d.m_out; ++j)
        CHECK(rel[i][j] == !d.at(i, j).empty());
  }
}

TEST_CASE("sem_equal and sem_leq") {
  CHECK(sem_equal(parse_kad("scalar[(a+b)*]", ab), parse_kad("scalar[(a*b*)*]", ab), ab));
  CHECK_FALSE(sem_equal(parse_kad("scalar[a]", ab), parse_kad("scalar[b]", ab), ab));
  CHECK(sem_leq(parse_kad("scalar[a]", ab), parse_kad("scalar[a+b]", ab), ab));
  CHECK_FALSE(sem_leq(parse_kad("scalar[a+b]", ab), parse_kad("scalar[a]", ab), ab));
  CHECK_THROWS_AS(sem_equal(parse_kad("copy", ab), parse_kad("id:>", ab), ab), InterfaceMismatch);
  // a zig-zag is the identity
  CHECK(sem_equal(parse_kad("cup | id:> ; id:> | cap", ab), parse_kad("id:>", ab), ab));
}

TEST_CASE("red evaluation") {
  auto v = eval_red(parse_kad("rcopy ; prod", ab), {Regex::atom('a')});
  REQUIRE(v.size() == 1);
  CHECK(v[0].str() == "aa");
  auto w = eval_red(parse_kad("star | rone ; rsum", ab), {Regex::atom('b')});
  CHECK(lang_equal(denote_regex(w[0], ab), lang("b*")));
  PortGraph g = to_port_graph(parse_kad("state[a+b] | id:> ; act", ab));
  for (std::size_t k = 0; k < g.wires.size(); ++k)
    if (g.wires[k].type == Obj::Red && !g.wires[k].dst.boundary() && g.nodes[g.wires[k].dst.node].gen == Gen::Action)
      CHECK(lang_equal(denote_regex(red_wire_value(g, k), ab), lang("a+b")));
}
