#include "kaa/rewrite.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "kaa/kad.hpp"
#include "kaa/normalform.hpp"

namespace kaa {

// ---- traces -------------------------------------------------------------------

void RewriteTrace::extend(const RewriteTrace &next) {
  if (next.initial != final)
    throw std::invalid_argument("trace extension does not start where this one ends");
  steps.insert(steps.end(), next.steps.begin(), next.steps.end());
  final = next.final;
}

nlohmann::json RewriteTrace::to_json() const {
  using nlohmann::json;
  json ss = json::array();
  for (const auto &s : steps) {
    json st = {{"axiom", s.axiom},
               {"dir", s.dir == Direction::LeftToRight ? "lr" : "rl"},
               {"anchor", {{"nodes", s.anchor.nodes}, {"boundary", s.anchor.boundary}}},
               {"subst", s.subst}};
    if (s.replacement)
      st["replacement"] = s.replacement->to_json();
    if (!s.via.empty())
      st["via"] = s.via;
    ss.push_back(st);
  }
  return {{"digest_alg", kDigestAlgorithm}, {"initial", initial}, {"steps", ss}, {"final", final}};
}

RewriteTrace RewriteTrace::from_json(const nlohmann::json &j) {
  if (j.contains("digest_alg") && j.at("digest_alg").get<std::string>() != kDigestAlgorithm)
    throw std::invalid_argument("unsupported digest algorithm '" +
                                j.at("digest_alg").get<std::string>() + "'");
  RewriteTrace t;
  t.initial = j.at("initial").get<std::string>();
  t.final = j.at("final").get<std::string>();
  for (const auto &st : j.at("steps")) {
    RewriteStep s;
    s.axiom = st.at("axiom").get<std::string>();
    auto dir = st.at("dir").get<std::string>();
    if (dir != "lr" && dir != "rl")
      throw std::invalid_argument("step direction must be lr or rl");
    s.dir = dir == "lr" ? Direction::LeftToRight : Direction::RightToLeft;
    s.anchor.nodes = st.at("anchor").at("nodes").get<std::vector<std::size_t>>();
    s.anchor.boundary = st.at("anchor").at("boundary").get<std::vector<std::size_t>>();
    if (st.contains("subst"))
      s.subst = st.at("subst").get<std::map<std::string, std::string>>();
    if (st.contains("replacement"))
      s.replacement = PortGraph::from_json(st.at("replacement"));
    if (st.contains("via"))
      s.via = st.at("via").get<std::vector<std::string>>();
    t.steps.push_back(std::move(s));
  }
  return t;
}

// ---- subgraphs ----------------------------------------------------------------

namespace {

using Kind = ReplayError::Kind;

[[noreturn]] void mismatch(const std::string &what) {
  throw ReplayError(Kind::AnchorMismatch, 0, what);
}

// The anchored part of g as a graph of its own; boundary wires
// anchor.boundary[0..n_in) become its domain, the rest its codomain.
PortGraph extract(const PortGraph &g, const Anchor &a, std::size_t n_in) {
  if (n_in > a.boundary.size())
    mismatch("anchor has fewer boundary wires than the pattern has inputs");
  std::map<std::size_t, std::size_t> local;
  for (auto n : a.nodes) {
    if (n >= g.nodes.size())
      mismatch("anchor node " + std::to_string(n) + " does not exist");
    if (!local.emplace(n, local.size()).second)
      mismatch("anchor repeats node " + std::to_string(n));
  }
  auto inside = [&](const Endpoint &e) { return !e.boundary() && local.count(e.node); };
  auto loc = [&](const Endpoint &e) { return Endpoint{local.at(e.node), e.port}; };

  PortGraph sub;
  for (auto n : a.nodes)
    sub.nodes.push_back(g.nodes[n]);
  std::map<std::size_t, std::size_t> in_pos, out_pos;
  for (std::size_t k = 0; k < a.boundary.size(); ++k) {
    auto w = a.boundary[k];
    if (w >= g.wires.size())
      mismatch("anchor wire " + std::to_string(w) + " does not exist");
    auto &slot = k < n_in ? in_pos : out_pos;
    if (!slot.emplace(w, k < n_in ? k : k - n_in).second)
      mismatch("anchor repeats wire " + std::to_string(w));
    (k < n_in ? sub.dom : sub.cod).push_back(g.wires[w].type);
  }
  for (std::size_t w = 0; w < g.wires.size(); ++w) {
    const Wire &x = g.wires[w];
    const bool is_in = in_pos.count(w), is_out = out_pos.count(w);
    if (is_in && inside(x.src))
      mismatch("input wire " + std::to_string(w) + " starts inside the redex");
    if (is_out && inside(x.dst))
      mismatch("output wire " + std::to_string(w) + " ends inside the redex");
    if (is_in && is_out) {
      sub.wires.push_back({{Endpoint::kBoundary, in_pos[w]}, {Endpoint::kBoundary, out_pos[w]}, x.type});
    } else if (is_in) {
      if (!inside(x.dst))
        mismatch("input wire " + std::to_string(w) + " does not enter the redex");
      sub.wires.push_back({{Endpoint::kBoundary, in_pos[w]}, loc(x.dst), x.type});
    } else if (is_out) {
      if (!inside(x.src))
        mismatch("output wire " + std::to_string(w) + " does not leave the redex");
      sub.wires.push_back({loc(x.src), {Endpoint::kBoundary, out_pos[w]}, x.type});
    } else if (inside(x.src) && inside(x.dst)) {
      sub.wires.push_back({loc(x.src), loc(x.dst), x.type});
    } else if (inside(x.src) || inside(x.dst)) {
      mismatch("wire " + std::to_string(w) + " crosses the redex border but is not in the anchor");
    }
  }
  try {
    sub.validate();
  } catch (const std::invalid_argument &e) {
    mismatch(std::string("anchored subgraph is malformed: ") + e.what());
  }
  return sub;
}

StepResult splice(const PortGraph &g, const Anchor &a, std::size_t n_in, const PortGraph &rep) {
  std::set<std::size_t> dead(a.nodes.begin(), a.nodes.end());
  std::set<std::size_t> crossing(a.boundary.begin(), a.boundary.end());
  std::vector<std::size_t> remap(g.nodes.size(), SIZE_MAX);
  StepResult out;
  PortGraph &h = out.graph;
  h.dom = g.dom;
  h.cod = g.cod;
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    if (!dead.count(n)) {
      remap[n] = h.nodes.size();
      h.nodes.push_back(g.nodes[n]);
    }
  auto outer = [&](Endpoint e) {
    if (!e.boundary())
      e.node = remap[e.node];
    return e;
  };
  for (std::size_t w = 0; w < g.wires.size(); ++w) {
    const Wire &x = g.wires[w];
    if (crossing.count(w) || (!x.src.boundary() && dead.count(x.src.node)))
      continue;
    h.wires.push_back({outer(x.src), outer(x.dst), x.type});
  }
  std::vector<Endpoint> from(n_in), to(a.boundary.size() - n_in);
  for (std::size_t k = 0; k < a.boundary.size(); ++k) {
    const Wire &x = g.wires[a.boundary[k]];
    if (k < n_in)
      from[k] = outer(x.src);
    else
      to[k - n_in] = outer(x.dst);
  }
  const std::size_t offset = h.nodes.size();
  for (std::size_t n = 0; n < rep.nodes.size(); ++n) {
    out.placed.nodes.push_back(h.nodes.size());
    h.nodes.push_back(rep.nodes[n]);
  }
  out.placed.boundary.assign(rep.dom.size() + rep.cod.size(), SIZE_MAX);
  for (const auto &x : rep.wires) {
    Endpoint s = x.src.boundary() ? from[x.src.port] : Endpoint{x.src.node + offset, x.src.port};
    Endpoint d = x.dst.boundary() ? to[x.dst.port] : Endpoint{x.dst.node + offset, x.dst.port};
    if (x.src.boundary())
      out.placed.boundary[x.src.port] = h.wires.size();
    if (x.dst.boundary())
      out.placed.boundary[rep.dom.size() + x.dst.port] = h.wires.size();
    h.wires.push_back({s, d, x.type});
  }
  try {
    h.validate();
  } catch (const std::invalid_argument &e) {
    mismatch(std::string("splice produced a malformed graph: ") + e.what());
  }
  if (!h.acyclic())
    mismatch("splice would create a directed cycle");
  return out;
}

Subst parse_subst(const RewriteStep &s, const Alphabet &sigma) {
  Subst out;
  for (const auto &[k, v] : s.subst) {
    try {
      out.emplace(k, parse_regex(v, sigma));
    } catch (const std::exception &e) {
      throw ReplayError(Kind::BadSubst, 0, "substitution " + k + " = '" + v + "': " + e.what());
    }
  }
  return out;
}

} // namespace

StepResult apply_step(const PortGraph &g, const RewriteStep &s, const Alphabet &sigma) {
  if (is_macro(s.axiom)) {
    if (!s.replacement)
      throw ReplayError(Kind::BadSubst, 0, s.axiom + " step carries no replacement");
    const PortGraph &rep = *s.replacement;
    try {
      rep.validate();
    } catch (const std::exception &e) {
      throw ReplayError(Kind::BadSubst, 0, std::string("malformed replacement: ") + e.what());
    }
    PortGraph before = extract(g, s.anchor, rep.dom.size());
    if (before.dom != rep.dom || before.cod != rep.cod)
      mismatch("replacement interface " + interface_str(rep.dom) + " -> " +
               interface_str(rep.cod) + " does not fit the anchor");
    bool same = false;
    try {
      same = sem_equal(before, rep, sigma);
    } catch (const std::exception &e) {
      mismatch(std::string("cannot compare replacement: ") + e.what());
    }
    if (!same)
      mismatch(s.axiom + " replacement is not equivalent to the anchored subdiagram");
    return splice(g, s.anchor, rep.dom.size(), rep);
  }

  if (!is_axiom(s.axiom))
    throw ReplayError(Kind::UnknownAxiom, 0, "unknown axiom '" + s.axiom + "'");
  const AxiomSchema &schema = axiom_schema(s.axiom);
  const Subst subst = parse_subst(s, sigma);
  {
    std::set<std::string> want(schema.metavars.begin(), schema.metavars.end());
    if (schema.letter)
      want.insert("a");
    std::set<std::string> got;
    for (const auto &[k, v] : subst)
      got.insert(k);
    if (want != got)
      throw ReplayError(Kind::BadSubst, 0, "substitution does not match the schema of " + s.axiom);
    if (schema.letter && subst.at("a").kind() != Regex::Kind::Atom)
      throw ReplayError(Kind::BadSubst, 0, "letter parameter must be a single letter");
  }
  auto [lhs, rhs] = axiom_open_sides(s.axiom, subst);
  const Term &from = s.dir == Direction::LeftToRight ? lhs : rhs;
  const Term &to = s.dir == Direction::LeftToRight ? rhs : lhs;
  const PortGraph pattern = to_port_graph(from);
  PortGraph before = extract(g, s.anchor, pattern.dom.size());
  if (!smc_equal(before, pattern))
    mismatch("anchored subgraph is not an instance of " + s.axiom +
             (s.dir == Direction::LeftToRight ? " (lhs)" : " (rhs)"));
  for (std::size_t k = 0; k < schema.metavars.size(); ++k) {
    Regex host = Regex::one();
    try {
      host = red_wire_value(g, s.anchor.boundary[k]);
    } catch (const std::exception &e) {
      throw ReplayError(Kind::BadSubst, 0, "cannot evaluate red input " + schema.metavars[k] +
                                               ": " + e.what());
    }
    if (!(host == subst.at(schema.metavars[k])))
      throw ReplayError(Kind::BadSubst, 0, "red input " + schema.metavars[k] + " carries " +
                                               host.str() + ", not " +
                                               subst.at(schema.metavars[k]).str());
  }
  return splice(g, s.anchor, pattern.dom.size(), to_port_graph(to));
}

PortGraph replay_trace(const PortGraph &g0, const RewriteTrace &t, const Alphabet &sigma) {
  if (g0.digest() != t.initial)
    throw ReplayError(Kind::InitialDigest, SIZE_MAX,
                      "initial digest mismatch: diagram is " + g0.digest());
  PortGraph g = g0;
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    try {
      g = apply_step(g, t.steps[k], sigma).graph;
    } catch (const ReplayError &e) {
      throw ReplayError(e.kind(), k, "step " + std::to_string(k) + " (" + t.steps[k].axiom +
                                         "): " + e.what());
    }
  }
  if (g.digest() != t.final)
    throw ReplayError(Kind::FinalDigest, SIZE_MAX,
                      "final digest mismatch: replay ends at " + g.digest());
  return g;
}

// ---- matching -----------------------------------------------------------------

namespace {

// Grows a match of the connected pattern from pattern node 0 sitting on
// host node `start`; fills the anchor in pattern boundary order.
std::optional<Anchor> match_at(const PortGraph &g, const Incidence &inc, const PortGraph &p,
                               const Incidence &pinc, std::size_t start) {
  if (p.nodes.empty() || !(g.nodes[start] == p.nodes[0]))
    return std::nullopt;
  std::vector<std::size_t> image(p.nodes.size(), SIZE_MAX);
  std::set<std::size_t> used;
  std::vector<std::size_t> dom_w(p.dom.size(), SIZE_MAX), cod_w(p.cod.size(), SIZE_MAX);
  std::queue<std::size_t> work;
  image[0] = start;
  used.insert(start);
  work.push(0);

  auto bind = [&](std::size_t q, const Endpoint &host) {
    if (host.boundary() || !(g.nodes[host.node] == p.nodes[q]))
      return false;
    if (image[q] == SIZE_MAX) {
      if (used.count(host.node))
        return false;
      image[q] = host.node;
      used.insert(host.node);
      work.push(q);
      return true;
    }
    return image[q] == host.node;
  };

  while (!work.empty()) {
    auto pn = work.front();
    work.pop();
    auto hn = image[pn];
    for (std::size_t k = 0; k < pinc.in[pn].size(); ++k) {
      const Wire &pw = p.wires[pinc.in[pn][k]];
      const std::size_t hw = inc.in[hn][k];
      const Endpoint &hs = g.wires[hw].src;
      if (pw.src.boundary()) {
        if (dom_w[pw.src.port] != SIZE_MAX && dom_w[pw.src.port] != hw)
          return std::nullopt;
        dom_w[pw.src.port] = hw;
      } else if (hs.port != pw.src.port || !bind(pw.src.node, hs)) {
        return std::nullopt;
      }
    }
    for (std::size_t k = 0; k < pinc.out[pn].size(); ++k) {
      const Wire &pw = p.wires[pinc.out[pn][k]];
      const std::size_t hw = inc.out[hn][k];
      const Endpoint &hd = g.wires[hw].dst;
      if (pw.dst.boundary()) {
        if (cod_w[pw.dst.port] != SIZE_MAX && cod_w[pw.dst.port] != hw)
          return std::nullopt;
        cod_w[pw.dst.port] = hw;
      } else if (hd.port != pw.dst.port || !bind(pw.dst.node, hd)) {
        return std::nullopt;
      }
    }
  }
  Anchor a;
  for (auto n : image) {
    if (n == SIZE_MAX)
      return std::nullopt;
    a.nodes.push_back(n);
  }
  for (auto w : dom_w) {
    if (w == SIZE_MAX)
      return std::nullopt;
    a.boundary.push_back(w);
  }
  for (auto w : cod_w) {
    if (w == SIZE_MAX)
      return std::nullopt;
    a.boundary.push_back(w);
  }
  return a;
}

std::optional<RewriteStep> redex_with(const PortGraph &g, const Incidence &inc,
                                      const std::string &axiom, Direction dir,
                                      const Subst &letter, std::size_t only_start) {
  const AxiomSchema &schema = axiom_schema(axiom);
  auto [lhs, rhs] = axiom_open_sides(axiom, letter);
  const PortGraph p = to_port_graph(dir == Direction::LeftToRight ? lhs : rhs);
  if (p.nodes.empty())
    return std::nullopt;
  const Incidence pinc = p.incidence();
  for (std::size_t h = 0; h < g.nodes.size(); ++h) {
    if (only_start != SIZE_MAX && h != only_start)
      continue;
    auto a = match_at(g, inc, p, pinc, h);
    if (!a)
      continue;
    RewriteStep s{axiom, dir, *a, {}, std::nullopt, {}};
    try {
      for (std::size_t k = 0; k < schema.metavars.size(); ++k)
        s.subst[schema.metavars[k]] = red_wire_value(g, a->boundary[k]).str();
      if (schema.letter)
        s.subst["a"] = letter.at("a").str();
      if (!smc_equal(extract(g, *a, p.dom.size()), p))
        continue;
    } catch (const std::exception &) {
      continue;
    }
    return s;
  }
  return std::nullopt;
}

std::optional<RewriteStep> find_redex_from(const PortGraph &g, const std::string &axiom,
                                           Direction dir, std::size_t only_start) {
  const Incidence inc = g.incidence();
  if (!axiom_schema(axiom).letter)
    return redex_with(g, inc, axiom, dir, {}, only_start);
  std::set<char> letters;
  for (const auto &l : g.nodes)
    if (l.gen == Gen::Atom)
      letters.insert(l.letter);
  for (char c : letters)
    if (auto s = redex_with(g, inc, axiom, dir, {{"a", Regex::atom(c)}}, only_start))
      return s;
  return std::nullopt;
}

} // namespace

std::optional<RewriteStep> find_redex(const PortGraph &g, const std::string &axiom,
                                      Direction dir) {
  return find_redex_from(g, axiom, dir, SIZE_MAX);
}

// ---- atomisation --------------------------------------------------------------

namespace {

// The red-comonoid law pushing `consumer` past the node producing its input.
const char *push_law(Gen producer, Gen consumer) {
  const bool copy = consumer == Gen::RedCopy;
  switch (producer) {
  case Gen::Atom:
    return copy ? "E6" : "E7";
  case Gen::One:
    return copy ? "E10" : "E11";
  case Gen::Zero:
    return copy ? "E15" : "E14b";
  case Gen::Star:
    return copy ? "E4" : "E5";
  case Gen::Prod:
    return copy ? "E8" : "E9";
  case Gen::Sum:
    return copy ? "E14a" : "E13";
  default:
    return nullptr;
  }
}

const char *action_law(Gen producer) {
  switch (producer) {
  case Gen::Prod:
    return "C1";
  case Gen::One:
    return "C2";
  case Gen::Zero:
    return "C3";
  case Gen::Sum:
    return "C4";
  case Gen::Star:
    return "C5";
  default:
    return nullptr;
  }
}

} // namespace

std::pair<PortGraph, RewriteTrace> atomise(const PortGraph &g0) {
  PortGraph g = g0;
  RewriteTrace t;
  t.initial = t.final = g.digest();
  if (is_atomic(g))
    return {g, t};
  const Alphabet any(std::string("abcdefghijklmnopqrstuvwxyz"));
  for (;;) {
    const Incidence inc = g.incidence();
    std::optional<RewriteStep> step;
    // Copies and deletes first, then actions on composite expressions.
    for (std::size_t n = 0; n < g.nodes.size() && !step; ++n) {
      const Gen gen = g.nodes[n].gen;
      if (gen != Gen::RedCopy && gen != Gen::RedDelete)
        continue;
      const Endpoint &src = g.wires[inc.in[n][0]].src;
      if (src.boundary())
        continue;
      if (const char *law = push_law(g.nodes[src.node].gen, gen))
        step = find_redex_from(g, law, Direction::LeftToRight, src.node);
    }
    for (std::size_t n = 0; n < g.nodes.size() && !step; ++n) {
      if (g.nodes[n].gen != Gen::Action)
        continue;
      const Endpoint &src = g.wires[inc.in[n][0]].src;
      if (src.boundary())
        continue;
      if (const char *law = action_law(g.nodes[src.node].gen))
        step = find_redex_from(g, law, Direction::LeftToRight, src.node);
    }
    if (!step)
      break;
    // Letters never matter for the syntactic laws; any alphabet parses them.
    Alphabet sigma = any;
    {
      std::string letters;
      for (const auto &l : g.nodes)
        if (l.gen == Gen::Atom && letters.find(l.letter) == std::string::npos)
          letters.push_back(l.letter);
      if (!letters.empty())
        sigma = Alphabet(letters);
    }
    g = apply_step(g, *step, sigma).graph;
    t.steps.push_back(*step);
  }
  t.final = g.digest();
  return {g, t};
}

std::pair<Term, RewriteTrace> atomise(const Term &d) {
  auto [g, t] = atomise(to_port_graph(d));
  return {t.empty() ? d : to_term(g), t};
}

} // namespace kaa
