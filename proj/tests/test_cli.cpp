#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kaa/axioms.hpp"
#include "kaa/cli.hpp"
#include "kaa/kad.hpp"
#include "kaa/rewrite.hpp"
#include "support.hpp"

using namespace kaa;

namespace {

const Alphabet ab("ab");

struct Result {
  int code;
  std::string out, err;
};

Result kaa_run(std::vector<std::string> args) {
  args.insert(args.begin(), "kaa");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name) {
  auto dir = std::filesystem::temp_directory_path() / "kaa_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path &p, const std::string &text) {
  std::ofstream(p) << text;
}

std::string read(const std::filesystem::path &p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Strips the brackets of a 1x1 matrix printout.
Regex single_entry(const std::string &out) {
  auto open = out.find('['), close = out.rfind(']');
  REQUIRE(open != std::string::npos);
  REQUIRE(close != std::string::npos);
  return parse_regex(out.substr(open + 1, close - open - 1), ab);
}

} // namespace

TEST_CASE("parse-regex prints the tree or the text") {
  Result r = kaa_run({"parse-regex", "a(b+1)*", "--str"});
  CHECK(r.code == 0);
  CHECK(parse_regex(r.out.substr(0, r.out.size() - 1), ab) == parse_regex("a(b+1)*", ab));
  CHECK(kaa_run({"parse-regex", "a(b+1)*"}).code == 0);
  CHECK(kaa_run({"parse-regex", "a(b"}).code == 2);
  CHECK(kaa_run({"parse-regex", "c"}).code == 2);
}

TEST_CASE("encode and denote the worked regex") {
  auto kad = scratch("worked.kad");
  Result enc = kaa_run({"encode", "regex", "ab(a+ab)*", "-o", kad.string()});
  REQUIRE(enc.code == 0);
  Result den = kaa_run({"denote", kad.string()});
  REQUIRE(den.code == 0);
  CHECK(lang_equal(denote_regex(single_entry(den.out), ab),
                   denote_regex(parse_regex("ab(a+ab)*", ab), ab)));
}

TEST_CASE("encode nfa in both styles") {
  auto nfa = scratch("worked.json");
  write(nfa, R"({"states":3,"alphabet":["a","b"],"initial":[0],"finals":[2],
                 "transitions":[[0,"a",1],[1,"b",2],[2,"a",1],[2,"a",2]]})");
  for (const char *style : {"matrix", "graph"}) {
    Result enc = kaa_run({"encode", "nfa", nfa.string(), "--style", style});
    REQUIRE(enc.code == 0);
    Term t = parse_kad(enc.out, ab);
    CHECK(lang_equal(denote(bend_to_left_to_right(t), ab).at(0, 0),
                     denote_regex(parse_regex("ab(a+ab)*", ab), ab)));
  }
  CHECK(kaa_run({"encode", "nfa", nfa.string(), "--style", "fancy"}).code == 2);
  CHECK(kaa_run({"encode", "dfa", "a"}).code == 2);
}

TEST_CASE("equiv verdicts and exit codes") {
  auto a1 = scratch("star.kad"), a2 = scratch("unrolled.kad"), cert = scratch("cert.json");
  write(a1, "scalar[a*]");
  write(a2, "scalar[1+aa*]");
  Result r = kaa_run({"equiv", a1.string(), a2.string(), "--trace", cert.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "equivalent\n");
  auto j = nlohmann::json::parse(read(cert));
  CHECK(j.at("equivalent") == true);
  CHECK(j.at("left").contains("trace"));

  Result no = kaa_run({"equiv", "scalar[a*]", "scalar[aa*]"});
  CHECK(no.code == 1);
  CHECK(no.out == "not equivalent\n");
  CHECK(kaa_run({"equiv", a1.string(), a2.string(), "--oracle"}).code == 0);
  CHECK(kaa_run({"equiv", a1.string(), a2.string(), "--both"}).code == 0);
  CHECK(kaa_run({"equiv", "scalar[a]", "scalar[b]", "--both"}).code == 1);
  CHECK(kaa_run({"equiv", a1.string(), a2.string(), "--both", "--oracle"}).code == 2);
  CHECK(kaa_run({"equiv", "scalar[a]", "copy"}).code == 2);
}

TEST_CASE("leq") {
  CHECK(kaa_run({"leq", "scalar[a]", "scalar[a*]"}).code == 0);
  Result r = kaa_run({"leq", "scalar[a*]", "scalar[a]"});
  CHECK(r.code == 1);
  CHECK(r.out == "not included\n");
}

TEST_CASE("traces written by transforming commands replay") {
  auto d = scratch("d.kad");
  write(d, to_kad(regex_to_diagram(parse_regex("(a+ab)*b", ab))));
  for (const char *cmd : {"atomise", "determinise", "minimise"}) {
    auto tr = scratch(std::string(cmd) + ".trace.json");
    Result r = kaa_run({cmd, d.string(), "--trace", tr.string()});
    REQUIRE_MESSAGE(r.code == 0, cmd << ": " << r.err);
    Result rep = kaa_run({"trace-replay", d.string(), tr.string()});
    CHECK_MESSAGE(rep.code == 0, cmd << ": " << rep.err);
    CHECK(rep.out.rfind("ok ", 0) == 0);
  }
  auto tr = scratch("minimise.trace.json");
  auto j = nlohmann::json::parse(read(tr));
  j["final"] = std::string(64, '0');
  auto bad = scratch("bad.trace.json");
  write(bad, j.dump());
  Result rep = kaa_run({"trace-replay", d.string(), bad.string()});
  CHECK(rep.code == 1);
  CHECK(rep.err.find("final digest") != std::string::npos);
}

TEST_CASE("minimise output is a representation with the minimal loop count") {
  Result r = kaa_run({"minimise", "scalar[(a+b)*a]"});
  REQUIRE(r.code == 0);
  Representation rep = Representation::from_json(nlohmann::json::parse(r.out));
  CHECK(rep.l == denote_regex(parse_regex("(a+b)*a", ab), ab).live_states());
}

TEST_CASE("axioms-check and axioms-list") {
  Result r = kaa_run({"axioms-check", "--samples", "20", "--seed", "7"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    CHECK(line.size() > 6);
    CHECK(line.substr(line.size() - 6) == " sound");
    ++n;
  }
  CHECK(n == axiom_catalog().size());
  Result l = kaa_run({"axioms-list"});
  CHECK(l.code == 0);
  CHECK(std::count(l.out.begin(), l.out.end(), '\n') == static_cast<long>(axiom_catalog().size()));
}

TEST_CASE("output is byte identical across runs") {
  for (const char *seed : {"1", "2", "99"})
    CHECK(kaa_run({"random-regex", "--seed", seed}).out ==
          kaa_run({"random-regex", "--seed", seed}).out);
  CHECK(kaa_run({"minimise", "scalar[(ab)*]"}).out == kaa_run({"minimise", "scalar[(ab)*]"}).out);
  CHECK(kaa_run({"render", "scalar[a]"}).out.rfind("digraph", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(kaa_run({}).code == 2);
  CHECK(kaa_run({"frobnicate"}).code == 2);
  CHECK(kaa_run({"denote"}).code == 2);
  CHECK(kaa_run({"denote", "scalar[a]", "--format", "xml"}).code == 2);
  CHECK(kaa_run({"denote", "scalar[c]"}).code == 2);
  CHECK(kaa_run({"trace-replay", "scalar[a]", "/nonexistent/trace.json"}).code == 2);
  CHECK(kaa_run({"--help"}).code == 0);
}

TEST_CASE("inequalities and reverse") {
  Result r = kaa_run({"inequalities", "scalar[ab]"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("eps <= X0\n", 0) == 0);
  Result rev = kaa_run({"reverse", "scalar[ab]"});
  REQUIRE(rev.code == 0);
  Representation rep = Representation::from_json(nlohmann::json::parse(rev.out));
  CHECK(lang_equal(testing::rep_language(rep), denote_regex(parse_regex("ba", ab), ab)));
}
