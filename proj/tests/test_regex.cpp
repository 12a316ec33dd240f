#include <doctest.h>

#include "kaa/regex.hpp"
#include "support.hpp"

using namespace kaa;
using kaa::testing::naive_match;
using kaa::testing::words_upto;

namespace {
const Alphabet ab("ab");
}

TEST_CASE("parse precedence: star over product over sum") {
  CHECK(parse_regex("a+bc*", Alphabet("abc")).ast() == "Sum(Atom(a),Prod(Atom(b),Star(Atom(c))))");
}

TEST_CASE("parse shapes") {
  CHECK(parse_regex("ab*", ab).ast() == "Prod(Atom(a),Star(Atom(b)))");
  CHECK(parse_regex("(a+b)*", ab).ast() == "Star(Sum(Atom(a),Atom(b)))");
  CHECK(parse_regex("a.b", ab).ast() == "Prod(Atom(a),Atom(b))");
  CHECK(parse_regex("0+1", ab).ast() == "Sum(Zero,One)");
  CHECK(parse_regex("a**", ab).ast() == "Star(Star(Atom(a)))");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_regex("a+", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("(ab", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("", ab), ParseError);
  CHECK_THROWS(parse_regex("ac", ab));
}

TEST_CASE("alphabet rejects reserved characters") {
  CHECK_THROWS_AS(Alphabet("a+"), AlphabetError);
  CHECK_THROWS_AS(Alphabet("aa"), AlphabetError);
}

TEST_CASE("str re-parses to the same tree") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Regex e = random_regex(seed, 5, ab);
    CHECK(parse_regex(e.str(), ab) == e);
  }
}

TEST_CASE("random_regex is deterministic and depth bounded") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(random_regex(seed, 4, ab) == random_regex(seed, 4, ab));
    CHECK(random_regex(seed, 4, ab).depth() <= 4);
  }
}

TEST_CASE("nullable agrees with the empty word") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Regex e = random_regex(seed, 5, ab);
    CHECK(e.nullable() == naive_match(e, ""));
  }
}

TEST_CASE("denote_regex agrees with a backtracking matcher") {
  const auto words = words_upto(ab, 6);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Regex e = random_regex(seed, 5, ab);
    Language l = denote_regex(e, ab);
    for (const auto &w : words)
      REQUIRE_MESSAGE(member(l, w) == naive_match(e, w), e.str() << " on '" << w << "'");
  }
}

TEST_CASE("equal languages give equal canonical values") {
  CHECK(lang_equal(denote_regex(parse_regex("(a+b)*", ab), ab),
                   denote_regex(parse_regex("(a*b*)*", ab), ab)));
  CHECK(lang_equal(denote_regex(parse_regex("a(ba)*", ab), ab),
                   denote_regex(parse_regex("(ab)*a", ab), ab)));
  CHECK_FALSE(lang_equal(denote_regex(parse_regex("a*", ab), ab),
                         denote_regex(parse_regex("a*a", ab), ab)));
}

TEST_CASE("lang_subset") {
  auto l = [](const char *s) { return denote_regex(parse_regex(s, ab), ab); };
  CHECK(lang_subset(l("ab"), l("(a+b)*")));
  CHECK(lang_subset(l("0"), l("a")));
  CHECK_FALSE(lang_subset(l("a*"), l("aa*")));
}

TEST_CASE("simplified constructors keep the language") {
  const auto words = words_upto(ab, 5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Regex e = random_regex(seed, 3, ab), f = random_regex(seed + 1000, 3, ab);
    for (const auto &w : words) {
      CHECK(naive_match(simplified_sum(e, f), w) == naive_match(Regex::sum(e, f), w));
      CHECK(naive_match(simplified_prod(e, f), w) == naive_match(Regex::prod(e, f), w));
      CHECK(naive_match(simplified_star(e), w) == naive_match(Regex::star(e), w));
    }
  }
}

TEST_CASE("live_states of small languages") {
  auto l = [](const char *s) { return denote_regex(parse_regex(s, ab), ab); };
  CHECK(l("0").live_states() == 0);
  CHECK(l("1").live_states() == 1);
  CHECK(l("(a+b)*").live_states() == 1);
  CHECK(l("ab").live_states() == 3);
  CHECK(l("ab(a+ab)*").live_states() == 4);
}

TEST_CASE("Language JSON round trip") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Language l = denote_regex(random_regex(seed, 4, ab), ab);
    CHECK(lang_equal(Language::from_json(l.to_json()), l));
  }
}
