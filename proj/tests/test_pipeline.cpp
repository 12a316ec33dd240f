#include <doctest.h>

#include <random>

#include "kaa/kad.hpp"
#include "kaa/normalform.hpp"
#include "kaa/oracle.hpp"
#include "kaa/pipeline.hpp"
#include "support.hpp"

using namespace kaa;
using kaa::testing::random_nfa;
using kaa::testing::rep_language;
using kaa::testing::words_upto;

namespace {

const Alphabet ab("ab");
const Alphabet abc("abc");

bool reachable_and_live(const Representation &r) {
  std::vector<bool> fwd(r.l, false), bwd(r.l, false);
  for (std::size_t j = 0; j < r.l; ++j)
    fwd[j] = r.nl(0, j).count(kEpsilon) > 0;
  for (std::size_t i = 0; i < r.l; ++i)
    bwd[i] = r.lm(i, 0).count(kEpsilon) > 0;
  for (std::size_t round = 0; round < r.l; ++round)
    for (std::size_t i = 0; i < r.l; ++i)
      for (std::size_t j = 0; j < r.l; ++j)
        if (!r.ll(i, j).empty()) {
          fwd[j] = fwd[j] || fwd[i];
          bwd[i] = bwd[i] || bwd[j];
        }
  for (std::size_t k = 0; k < r.l; ++k)
    if (!fwd[k] || !bwd[k])
      return false;
  return true;
}

void check_trace(const Representation &from, const Representation &to, const RewriteTrace &t,
                 const Alphabet &sigma) {
  PortGraph g0 = representation_graph(from);
  CHECK(t.initial == g0.digest());
  CHECK(t.final == representation_graph(to).digest());
  CHECK(replay_trace(g0, t, sigma).digest() == t.final);
}

} // namespace

TEST_CASE("determinise") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    Representation r = representation_from_nfa(random_nfa(rng, 5, abc));
    auto [d, trace] = determinise(r);
    d.validate();
    CHECK(d.deterministic());
    CHECK(d.l <= (std::size_t{1} << r.l));
    CHECK(lang_equal(rep_language(d), rep_language(r)));
    check_trace(r, d, trace, abc);
  }
}

TEST_CASE("reverse mirrors the language") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    Representation r = representation_from_nfa(random_nfa(rng, 5, ab));
    Language fwd = rep_language(r), bwd = rep_language(reverse(r));
    for (const auto &w : words_upto(ab, 6))
      REQUIRE(member(bwd, std::string(w.rbegin(), w.rend())) == member(fwd, w));
    CHECK(reverse(reverse(r)) == r);
  }
}

TEST_CASE("co_determinise") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    Representation r = representation_from_nfa(random_nfa(rng, 5, ab));
    auto [c, trace] = co_determinise(r);
    CHECK(reverse(c).deterministic());
    CHECK(lang_equal(rep_language(c), rep_language(r)));
    check_trace(r, c, trace, ab);
  }
}

TEST_CASE("trim_useless") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 100; ++i) {
    Representation r = representation_from_nfa(random_nfa(rng, 6, ab));
    auto [t, trace] = trim_useless(r);
    CHECK(reachable_and_live(t));
    CHECK(t.l <= r.l);
    CHECK(lang_equal(rep_language(t), rep_language(r)));
    check_trace(r, t, trace, ab);
  }
}

TEST_CASE("totalise") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 60; ++i) {
    Representation r = representation_from_nfa(random_nfa(rng, 4, ab));
    if (!r.deterministic())
      CHECK_THROWS_AS(totalise(r), NotDeterministic);
    auto [d, t0] = determinise(r);
    auto [t, trace] = totalise(d);
    for (std::size_t q = 0; q < t.l; ++q)
      for (char c : ab.letters()) {
        std::size_t targets = 0;
        for (std::size_t p = 0; p < t.l; ++p)
          targets += t.ll(q, p).count(c);
        CHECK(targets == 1);
      }
    CHECK(lang_equal(rep_language(t), rep_language(r)));
    check_trace(d, t, trace, ab);
  }
}

TEST_CASE("canonical numbering") {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 50; ++i) {
    Representation r = representation_from_nfa(random_nfa(rng, 5, ab));
    Representation c = canonical_numbering(r);
    CHECK(lang_equal(rep_language(c), rep_language(r)));
    CHECK(canonical_numbering(c) == c);
  }
}

TEST_CASE("minimise reaches the minimal state count") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Regex e = random_regex(seed, 5, ab);
    Term d = regex_to_diagram(e);
    auto [m, trace] = minimise(d, ab);
    Language l = denote_regex(e, ab);
    REQUIRE_MESSAGE(m.l == l.live_states(), e.str());
    CHECK(m.deterministic());
    CHECK(lang_equal(rep_language(m), l));
    CHECK(trace.initial == to_port_graph(d).digest());
    CHECK(trace.final == representation_graph(m).digest());
  }
}

TEST_CASE("minimal representations are canonical") {
  auto min = [](const char *e) { return minimise(regex_to_diagram(parse_regex(e, ab)), ab).first; };
  CHECK(min("(a+b)*") == min("(a*b*)*"));
  CHECK(min("a(ba)*") == min("(ab)*a"));
  CHECK_FALSE(min("a*") == min("a*a"));
  CHECK(min("0").l == 0);
}

TEST_CASE("minimise replays, including from non-atomic and bent inputs") {
  Term d = parse_kad("scalar[(a+b)*ab]", ab);
  auto [m, trace] = minimise(d, ab);
  CHECK(m.l == 3);
  CHECK(replay_trace(to_port_graph(d), trace, ab).digest() == trace.final);

  Term snake = parse_kad("cup | scalar[a*] ; id:> | cap", ab);
  auto [m2, t2] = minimise(snake, ab);
  CHECK(m2.l == 1);
  CHECK(replay_trace(to_port_graph(bend_to_left_to_right(snake)), t2, ab).digest() == t2.final);
}

TEST_CASE("minimise needs one input and one output") {
  CHECK_THROWS_AS(minimise(parse_kad("copy", ab), ab), InterfaceMismatch);
}

TEST_CASE("decide_equiv agrees with the oracle") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Regex e = random_regex(seed, 4, ab), f = random_regex(seed + 7777, 4, ab);
    EquivCertificate c = decide_equiv(regex_to_diagram(e), regex_to_diagram(f), ab);
    CHECK(c.equivalent == lang_equal(denote_regex(e, ab), denote_regex(f, ab)));
    EquivCertificate self = decide_equiv(regex_to_diagram(e), regex_to_diagram(Regex::sum(e, e)), ab);
    CHECK(self.equivalent);
  }
  EquivCertificate c = decide_equiv(regex_to_diagram(parse_regex("(a+b)*", ab)),
                                    regex_to_diagram(parse_regex("(a*b*)*", ab)), ab);
  nlohmann::json j = c.to_json();
  CHECK(j.at("equivalent") == true);
  CHECK(j.at("left").contains("trace"));
}
