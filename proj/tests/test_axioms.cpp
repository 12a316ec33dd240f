#include <doctest.h>

#include "kaa/axioms.hpp"
#include "kaa/normalform.hpp"

using namespace kaa;

namespace {
const Alphabet ab("ab");

Subst sample(const AxiomSchema &a, std::uint64_t seed) {
  Subst s;
  for (const auto &v : a.metavars)
    s.insert_or_assign(v, random_regex(seed++, 3, ab));
  if (a.letter)
    s.insert_or_assign("a", Regex::atom('b'));
  return s;
}
} // namespace

TEST_CASE("catalog shape") {
  const auto &cat = axiom_catalog();
  CHECK(cat.size() == 40);
  CHECK(cat.front().id == "A1");
  CHECK(cat.back().id == "E15");
  CHECK(is_axiom("B12"));
  CHECK_FALSE(is_axiom("CPY"));
  CHECK(is_macro("CPY"));
  CHECK(is_macro("PERM"));
  CHECK_FALSE(is_macro("A1"));
  CHECK_THROWS(axiom_schema("Z9"));
}

TEST_CASE("both sides of every equation share an interface") {
  for (const auto &a : axiom_catalog()) {
    auto [l, r] = axiom_sides(a.id, sample(a, 3));
    CHECK_MESSAGE(typecheck(l) == typecheck(r), a.id);
    auto [ol, orr] = axiom_open_sides(a.id, sample(a, 3));
    CHECK_MESSAGE(typecheck(ol) == typecheck(orr), a.id);
    for (std::size_t k = 0; k < a.metavars.size(); ++k)
      CHECK(typecheck(ol).first.at(k) == Obj::Red);
  }
}

TEST_CASE("sides are distinct diagrams") {
  for (const auto &a : axiom_catalog()) {
    auto [l, r] = axiom_open_sides(a.id, sample(a, 1));
    CHECK_MESSAGE(!smc_equal(to_port_graph(l), to_port_graph(r)), a.id);
  }
}

TEST_CASE("every equation is sound on random instances") {
  for (const auto &a : axiom_catalog()) {
    SoundnessReport r = check_axiom(a.id, 20, 42, ab);
    CHECK_MESSAGE(r.sound, a.id << ": " << r.failure);
    CHECK(r.samples == 20);
  }
}

TEST_CASE("sound over a larger alphabet too") {
  const Alphabet abc("abc");
  for (const auto &a : axiom_catalog())
    CHECK_MESSAGE(check_axiom(a.id, 5, 7, abc).sound, a.id);
}

TEST_CASE("purely red equations evaluate to equal languages") {
  for (const auto &a : axiom_catalog()) {
    if (a.id[0] != 'E')
      continue;
    Subst s = sample(a, 11);
    auto [l, r] = axiom_open_sides(a.id, s);
    std::vector<Regex> env;
    for (const auto &v : a.metavars)
      env.push_back(s.at(v));
    auto x = eval_red(l, env), y = eval_red(r, env);
    REQUIRE(x.size() == y.size());
    for (std::size_t k = 0; k < x.size(); ++k)
      CHECK_MESSAGE(lang_equal(denote_regex(x[k], ab), denote_regex(y[k], ab)), a.id);
  }
}

TEST_CASE("substitutions must match the metavariables") {
  const auto &c1 = axiom_schema("C1");
  REQUIRE(c1.metavars.size() == 2);
  CHECK_THROWS_AS(axiom_sides("C1", {{"e", Regex::atom('a')}}), SubstError);
  CHECK_THROWS_AS(axiom_sides("C1", {{"e", Regex::atom('a')}, {"f", Regex::one()}, {"g", Regex::one()}}),
                  SubstError);
}

TEST_CASE("a wrong equation is caught") {
  auto [l, r] = axiom_acting_sides("C4", {{"e", Regex::atom('a')}, {"f", Regex::atom('b')}});
  auto [l2, r2] = axiom_acting_sides("C1", {{"e", Regex::atom('a')}, {"f", Regex::atom('b')}});
  CHECK(sem_equal(l, r, ab));
  CHECK_FALSE(sem_equal(l, r2, ab));
}
