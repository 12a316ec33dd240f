#include "kaa/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kaa/axioms.hpp"
#include "kaa/encode.hpp"
#include "kaa/kad.hpp"
#include "kaa/normalform.hpp"
#include "kaa/oracle.hpp"
#include "kaa/pipeline.hpp"
#include "kaa/rewrite.hpp"

namespace kaa {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string &path, const std::string &text) {
  std::ofstream o(path);
  if (!o)
    throw UsageError("cannot write " + path);
  o << text;
}

bool is_file(const std::string &path) {
  std::error_code ec;
  return std::filesystem::is_regular_file(path, ec);
}

bool ends_with(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// A .kad or .json file, or inline diagram text.
Term load_diagram(const std::string &arg, const Alphabet &sigma, const std::string &format) {
  const bool file = is_file(arg);
  const std::string text = file ? slurp(arg) : arg;
  const bool json = format == "json" || (format.empty() && file && ends_with(arg, ".json"));
  if (!json)
    return parse_kad(text, sigma);
  const auto j = nlohmann::json::parse(text);
  if (j.contains("transitions"))
    return nfa_to_diagram_matrix(single_initial(Nfa::from_json(j)));
  if (j.contains("nodes"))
    return to_term(PortGraph::from_json(j));
  throw UsageError(arg + ": JSON is neither an NFA nor a port graph");
}

class Output {
public:
  Output(std::ostream &out, std::string path) : out_(out), path_(std::move(path)) {}
  std::ostream &stream() { return buffer_; }
  void flush() {
    if (path_.empty())
      out_ << buffer_.str();
    else
      spit(path_, buffer_.str());
  }

private:
  std::ostream &out_;
  std::string path_;
  std::ostringstream buffer_;
};

void write_trace(const std::string &path, const RewriteTrace &t) {
  if (!path.empty())
    spit(path, t.to_json().dump(2) + "\n");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"String-diagram calculus for finite-state automata", "kaa"};
  app.require_subcommand(1);

  std::string alphabet = "ab", format, output, trace_path, style = "matrix", render_fmt = "dot";
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  int depth = 5;
  bool oracle = false, both = false, show_str = false;
  std::vector<std::string> pos;

  auto common = [&](CLI::App *c) {
    c->add_option("--alphabet", alphabet, "letters of the alphabet");
    c->add_option("--format", format, "input format: kad or json")
        ->check(CLI::IsMember({"kad", "json"}));
    c->add_option("-o", output, "write the result to a file");
  };

  auto *parse_cmd = app.add_subcommand("parse-regex", "parse a regex and print its syntax tree");
  parse_cmd->add_option("regex", pos)->required()->expected(1);
  parse_cmd->add_flag("--str", show_str, "print concrete syntax instead of the tree");
  common(parse_cmd);

  auto *encode_cmd = app.add_subcommand("encode", "encode a regex or an NFA as a diagram");
  encode_cmd->add_option("args", pos, "kind (regex or nfa) and input")->required()->expected(2);
  encode_cmd->add_option("--style", style)->check(CLI::IsMember({"matrix", "graph"}));
  common(encode_cmd);

  auto *denote_cmd = app.add_subcommand("denote", "regex matrix of a diagram");
  denote_cmd->add_option("diagram", pos)->required()->expected(1);
  common(denote_cmd);

  auto *atomise_cmd = app.add_subcommand("atomise", "unfold red expressions into letters");
  atomise_cmd->add_option("diagram", pos)->required()->expected(1);
  atomise_cmd->add_option("--trace", trace_path);
  common(atomise_cmd);

  auto *det_cmd = app.add_subcommand("determinise", "deterministic representation of a diagram");
  det_cmd->add_option("diagram", pos)->required()->expected(1);
  det_cmd->add_option("--trace", trace_path);
  common(det_cmd);

  auto *min_cmd = app.add_subcommand("minimise", "minimal representation of a diagram");
  min_cmd->add_option("diagram", pos)->required()->expected(1);
  min_cmd->add_option("--trace", trace_path);
  common(min_cmd);

  auto *equiv_cmd = app.add_subcommand("equiv", "decide equality of two diagrams");
  equiv_cmd->add_option("args", pos, "left and right diagrams")->required()->expected(2);
  equiv_cmd->add_option("--trace", trace_path, "write the certificate");
  auto *oracle_flag = equiv_cmd->add_flag("--oracle", oracle, "use the language oracle");
  equiv_cmd->add_flag("--both", both, "run both procedures and compare")->excludes(oracle_flag);
  common(equiv_cmd);

  auto *leq_cmd = app.add_subcommand("leq", "decide inclusion of two diagrams");
  leq_cmd->add_option("args", pos, "left and right diagrams")->required()->expected(2);
  common(leq_cmd);

  auto *rev_cmd = app.add_subcommand("reverse", "reversed representation of a diagram");
  rev_cmd->add_option("diagram", pos)->required()->expected(1);
  common(rev_cmd);

  auto *list_cmd = app.add_subcommand("axioms-list", "list the equations");
  common(list_cmd);

  auto *check_cmd = app.add_subcommand("axioms-check", "check every equation on samples");
  check_cmd->add_option("--samples", samples);
  check_cmd->add_option("--seed", seed);
  common(check_cmd);

  auto *render_cmd = app.add_subcommand("render", "draw a diagram");
  render_cmd->add_option("diagram", pos)->required()->expected(1);
  render_cmd->add_option("-f", render_fmt)->check(CLI::IsMember({"dot"}));
  common(render_cmd);

  auto *replay_cmd = app.add_subcommand("trace-replay", "check a rewrite trace");
  replay_cmd->add_option("args", pos, "diagram and trace file")->required()->expected(2);
  common(replay_cmd);

  auto *ineq_cmd = app.add_subcommand("inequalities", "inclusion system of a diagram");
  ineq_cmd->add_option("diagram", pos)->required()->expected(1);
  common(ineq_cmd);

  auto *random_cmd = app.add_subcommand("random-regex", "seeded random regex");
  random_cmd->add_option("--seed", seed);
  random_cmd->add_option("--depth", depth)->check(CLI::PositiveNumber);
  common(random_cmd);

  try {
    std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 2;
  }

  try {
    const Alphabet sigma(alphabet);
    Output result(out, output);
    std::ostream &os = result.stream();
    int code = 0;

    if (parse_cmd->parsed()) {
      Regex e = parse_regex(pos[0], sigma);
      os << (show_str ? e.str() : e.ast()) << "\n";
    } else if (encode_cmd->parsed()) {
      Term t = Term::id(Interface{});
      if (pos[0] == "regex") {
        t = regex_to_diagram(parse_regex(pos[1], sigma));
      } else if (pos[0] == "nfa") {
        const std::string text = is_file(pos[1]) ? slurp(pos[1]) : pos[1];
        Nfa a = single_initial(Nfa::from_json(nlohmann::json::parse(text)));
        t = style == "graph" ? nfa_to_diagram_graph(a) : nfa_to_diagram_matrix(a);
      } else {
        throw UsageError("encode: kind must be regex or nfa");
      }
      if (format == "json")
        os << to_port_graph(t).to_json().dump(2) << "\n";
      else
        os << to_kad(t) << "\n";
    } else if (denote_cmd->parsed()) {
      Term t = bend_to_left_to_right(load_diagram(pos[0], sigma, format));
      if (format == "json")
        os << denote(t, sigma).to_json().dump(2) << "\n";
      else
        os << to_generalised_matrix(t).str() << "\n";
    } else if (atomise_cmd->parsed()) {
      auto [t, trace] = atomise(bend_to_left_to_right(load_diagram(pos[0], sigma, format)));
      write_trace(trace_path, trace);
      os << to_kad(t) << "\n";
    } else if (det_cmd->parsed()) {
      auto [r, trace] = extract_representation(load_diagram(pos[0], sigma, format), sigma);
      auto [d, t2] = determinise(r);
      trace.extend(t2);
      write_trace(trace_path, trace);
      os << d.to_json().dump(2) << "\n";
    } else if (min_cmd->parsed()) {
      auto [r, trace] = minimise(load_diagram(pos[0], sigma, format), sigma);
      write_trace(trace_path, trace);
      os << r.to_json().dump(2) << "\n";
    } else if (equiv_cmd->parsed()) {
      Term d = load_diagram(pos[0], sigma, format), e = load_diagram(pos[1], sigma, format);
      bool verdict = false;
      if (oracle) {
        verdict = sem_equal(d, e, sigma);
      } else {
        EquivCertificate c = decide_equiv(d, e, sigma);
        if (!trace_path.empty())
          spit(trace_path, c.to_json().dump(2) + "\n");
        verdict = c.equivalent;
        if (both && verdict != sem_equal(d, e, sigma)) {
          err << "kaa: diagrammatic and oracle verdicts disagree\n";
          return 1;
        }
      }
      os << (verdict ? "equivalent" : "not equivalent") << "\n";
      code = verdict ? 0 : 1;
    } else if (leq_cmd->parsed()) {
      bool verdict = sem_leq(load_diagram(pos[0], sigma, format),
                             load_diagram(pos[1], sigma, format), sigma);
      os << (verdict ? "included" : "not included") << "\n";
      code = verdict ? 0 : 1;
    } else if (rev_cmd->parsed()) {
      auto [r, trace] = extract_representation(load_diagram(pos[0], sigma, format), sigma);
      os << reverse(r).to_json().dump(2) << "\n";
    } else if (list_cmd->parsed()) {
      for (const auto &a : axiom_catalog())
        os << a.id << "\t" << a.summary << "\n";
    } else if (check_cmd->parsed()) {
      for (const auto &a : axiom_catalog()) {
        SoundnessReport r = check_axiom(a.id, samples, seed, sigma);
        os << a.id << " " << (r.sound ? "sound" : "UNSOUND: " + r.failure) << "\n";
        if (!r.sound)
          code = 1;
      }
    } else if (render_cmd->parsed()) {
      os << render_dot(load_diagram(pos[0], sigma, format));
    } else if (replay_cmd->parsed()) {
      Term d = load_diagram(pos[0], sigma, format);
      RewriteTrace t = RewriteTrace::from_json(nlohmann::json::parse(slurp(pos[1])));
      PortGraph g0 = to_port_graph(d);
      if (g0.digest() != t.initial)
        g0 = to_port_graph(bend_to_left_to_right(d));
      try {
        PortGraph g = replay_trace(g0, t, sigma);
        os << "ok " << t.steps.size() << " steps, final " << g.digest() << "\n";
      } catch (const ReplayError &e) {
        result.flush();
        err << "kaa: replay failed: " << e.what() << "\n";
        return 1;
      }
    } else if (ineq_cmd->parsed()) {
      os << emit_inequalities(bend_to_left_to_right(load_diagram(pos[0], sigma, format)));
    } else if (random_cmd->parsed()) {
      os << random_regex(seed, depth, sigma).str() << "\n";
    }
    result.flush();
    return code;
  } catch (const std::exception &e) {
    err << "kaa: " << e.what() << "\n";
    return 2;
  }
}

} // namespace kaa
