#include "kaa/encode.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <tuple>

#include "kaa/kad.hpp"
#include "kaa/normalform.hpp"
#include "kaa/rewrite.hpp"

namespace kaa {

std::string coeff_str(const Coeff &c) {
  if (c.empty())
    return "0";
  std::string s;
  for (char x : c) {
    if (!s.empty())
      s += "+";
    s += x == kEpsilon ? std::string("eps") : std::string(1, x);
  }
  return s;
}

bool MatrixDiagram::eps_free() const {
  for (const auto &row : entries)
    for (const auto &c : row)
      if (c.count(kEpsilon))
        return false;
  return true;
}

bool MatrixDiagram::deterministic() const {
  if (!eps_free())
    return false;
  for (const auto &row : entries) {
    std::set<char> seen;
    for (const auto &c : row)
      for (char x : c)
        if (!seen.insert(x).second)
          return false;
  }
  return true;
}

void Representation::validate() const {
  if (core.n_in != l + n || core.m_out != l + m ||
      core.entries.size() != core.n_in)
    throw std::invalid_argument("representation: core is not (l+n) x (l+m)");
  for (const auto &row : core.entries)
    if (row.size() != core.m_out)
      throw std::invalid_argument("representation: ragged core");
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      for (char x : ll(i, j)) {
        if (x == kEpsilon)
          throw std::invalid_argument("representation: eps in the loop block");
        if (!sigma.contains(x))
          throw std::invalid_argument(std::string("representation: letter '") + x +
                                      "' outside the alphabet");
      }
  auto indicator = [](const Coeff &c) {
    return c.empty() || (c.size() == 1 && c.count(kEpsilon));
  };
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < l; ++j)
      if (!indicator(nl(k, j)))
        throw std::invalid_argument("representation: input block entry is not 0 or eps");
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < m; ++k)
      if (!indicator(lm(i, k)))
        throw std::invalid_argument("representation: output block entry is not 0 or eps");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (!nm(a, b).empty())
        throw std::invalid_argument("representation: input-to-output block is not 0");
}

bool Representation::deterministic() const {
  for (std::size_t i = 0; i < l; ++i) {
    std::set<char> seen;
    for (std::size_t j = 0; j < l; ++j)
      for (char x : ll(i, j))
        if (x == kEpsilon || !seen.insert(x).second)
          return false;
  }
  if (l == 0)
    return true;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t marks = 0;
    for (std::size_t j = 0; j < l; ++j)
      marks += nl(k, j).count(kEpsilon);
    if (marks != 1)
      return false;
  }
  return true;
}

nlohmann::json Representation::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &row : core.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto &c : row) {
      nlohmann::json cell = nlohmann::json::array();
      for (char x : c)
        cell.push_back(x == kEpsilon ? std::string("eps") : std::string(1, x));
      r.push_back(cell);
    }
    rows.push_back(r);
  }
  return {{"alphabet", sigma.letters()}, {"l", l}, {"n", n}, {"m", m}, {"entries", rows}};
}

Representation Representation::from_json(const nlohmann::json &j) {
  Representation r(Alphabet(j.at("alphabet").get<std::string>()),
                   j.at("l").get<std::size_t>(), j.at("n").get<std::size_t>(),
                   j.at("m").get<std::size_t>());
  const auto &rows = j.at("entries");
  if (rows.size() != r.core.n_in)
    throw std::invalid_argument("representation: wrong number of rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != r.core.m_out)
      throw std::invalid_argument("representation: wrong number of columns");
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      for (const auto &cell : rows[i][k]) {
        auto s = cell.get<std::string>();
        if (s == "eps")
          r.core.entries[i][k].insert(kEpsilon);
        else if (s.size() == 1)
          r.core.entries[i][k].insert(s[0]);
        else
          throw std::invalid_argument("representation: bad coefficient '" + s + "'");
      }
  }
  r.validate();
  return r;
}

// ---- building port graphs ------------------------------------------------------

namespace {

Endpoint bnd(std::size_t k) { return {Endpoint::kBoundary, k}; }

// Port graph under construction. Wires are first made of virtual segments
// that identities join together; each joined class becomes one wire.
class Linker {
public:
  PortGraph g;

  std::size_t node(Label l) {
    g.nodes.push_back(l);
    return g.nodes.size() - 1;
  }
  std::size_t fresh() {
    parent_.push_back(parent_.size());
    from_.emplace_back();
    to_.emplace_back();
    return parent_.size() - 1;
  }
  void from(std::size_t v, Endpoint e) { set(from_, find(v), e); }
  void to(std::size_t v, Endpoint e) { set(to_, find(v), e); }
  void join(std::size_t v, std::size_t w) {
    v = find(v);
    w = find(w);
    if (v == w)
      throw std::logic_error("linker: joining a segment to itself");
    parent_[w] = v;
    if (from_[w])
      set(from_, v, *from_[w]);
    if (to_[w])
      set(to_, v, *to_[w]);
  }

  /// k segments leaving the copy tree rooted at v.
  std::vector<std::size_t> fanout(std::size_t v, std::size_t k) {
    if (k == 0) {
      to(v, {node(Label{Gen::BlackDelete}), 0});
      return {};
    }
    std::vector<std::size_t> out;
    for (; k > 1; --k) {
      auto c = node(Label{Gen::BlackCopy});
      to(v, {c, 0});
      auto b = fresh();
      from(b, {c, 0});
      out.push_back(b);
      v = fresh();
      from(v, {c, 1});
    }
    out.push_back(v);
    return out;
  }

  /// k segments entering the merge tree that feeds v.
  std::vector<std::size_t> fanin(std::size_t v, std::size_t k) {
    if (k == 0) {
      from(v, {node(Label{Gen::BlackUnit}), 0});
      return {};
    }
    std::vector<std::size_t> in;
    for (; k > 1; --k) {
      auto mg = node(Label{Gen::BlackMerge});
      from(v, {mg, 0});
      auto b = fresh();
      to(b, {mg, 0});
      in.push_back(b);
      v = fresh();
      to(v, {mg, 1});
    }
    in.push_back(v);
    return in;
  }

  /// Connects src to dst through scalar[label] (or directly for ε).
  void edge(std::size_t src, std::size_t dst, char label) {
    if (label == kEpsilon) {
      join(src, dst);
      return;
    }
    auto at = node(Label{Gen::Atom, label});
    auto act = node(Label{Gen::Action});
    g.wires.push_back({{at, 0}, {act, 0}, Obj::Red});
    to(src, {act, 1});
    from(dst, {act, 0});
  }

  /// Connects src to dst backwards in the layout, through a cup and a cap.
  void feedback(std::size_t src, std::size_t dst) {
    auto cup = node(Label{Gen::Cup});
    auto cap = node(Label{Gen::Cap});
    to(src, {cap, 1});
    g.wires.push_back({{cup, 1}, {cap, 0}, Obj::Left});
    from(dst, {cup, 0});
  }

  PortGraph finish() {
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (find(v) != v)
        continue;
      if (!from_[v] || !to_[v])
        throw std::logic_error("linker: dangling segment");
      g.wires.push_back({*from_[v], *to_[v], Obj::Right});
    }
    g.validate();
    return g;
  }

private:
  std::size_t find(std::size_t v) {
    while (parent_[v] != v)
      v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  static void set(std::vector<std::optional<Endpoint>> &slot, std::size_t v, Endpoint e) {
    if (slot[v] && !(*slot[v] == e))
      throw std::logic_error("linker: segment end assigned twice");
    slot[v] = e;
  }

  std::vector<std::size_t> parent_;
  std::vector<std::optional<Endpoint>> from_, to_;
};

void build_matrix(Linker &lk, const MatrixDiagram &md, const std::vector<std::size_t> &ins,
                  const std::vector<std::size_t> &outs) {
  std::vector<std::size_t> k_out(md.n_in, 0), k_in(md.m_out, 0);
  for (std::size_t i = 0; i < md.n_in; ++i)
    for (std::size_t j = 0; j < md.m_out; ++j) {
      k_out[i] += md.entries[i][j].size();
      k_in[j] += md.entries[i][j].size();
    }
  std::vector<std::vector<std::size_t>> src(md.n_in), dst(md.m_out);
  for (std::size_t i = 0; i < md.n_in; ++i)
    src[i] = lk.fanout(ins[i], k_out[i]);
  for (std::size_t j = 0; j < md.m_out; ++j)
    dst[j] = lk.fanin(outs[j], k_in[j]);
  std::vector<std::size_t> used_out(md.n_in, 0), used_in(md.m_out, 0);
  for (std::size_t i = 0; i < md.n_in; ++i)
    for (std::size_t j = 0; j < md.m_out; ++j)
      for (char x : md.entries[i][j])
        lk.edge(src[i][used_out[i]++], dst[j][used_in[j]++], x);
}

// The traced matrix graph: the first `loops` outputs come back as the first
// `loops` inputs through cup/cap pairs.
PortGraph traced_matrix_graph(const MatrixDiagram &md, std::size_t loops) {
  Linker lk;
  const std::size_t n = md.n_in - loops, m = md.m_out - loops;
  lk.g.dom.assign(n, Obj::Right);
  lk.g.cod.assign(m, Obj::Right);
  std::vector<std::size_t> ins, outs;
  for (std::size_t k = 0; k < md.n_in; ++k)
    ins.push_back(lk.fresh());
  for (std::size_t k = 0; k < md.m_out; ++k)
    outs.push_back(lk.fresh());
  for (std::size_t k = 0; k < loops; ++k) {
    auto cup = lk.node(Label{Gen::Cup});
    auto cap = lk.node(Label{Gen::Cap});
    lk.from(ins[k], {cup, 0});
    lk.to(outs[k], {cap, 1});
    lk.g.wires.push_back({{cup, 1}, {cap, 0}, Obj::Left});
  }
  for (std::size_t k = 0; k < n; ++k)
    lk.from(ins[loops + k], bnd(k));
  for (std::size_t k = 0; k < m; ++k)
    lk.to(outs[loops + k], bnd(k));
  build_matrix(lk, md, ins, outs);
  return lk.finish();
}

} // namespace

Term matrix_diagram_term(const MatrixDiagram &md) {
  return to_term(traced_matrix_graph(md, 0));
}

Term trace_term(const Term &f, std::size_t loops) {
  Term t = f;
  for (std::size_t k = 0; k < loops; ++k) {
    auto [dom, cod] = typecheck(t);
    if (dom.empty() || cod.empty() || dom[0] != Obj::Right || cod[0] != Obj::Right)
      throw TypeError("trace needs a leading > wire on both sides", "");
    Interface x(dom.begin() + 1, dom.end()), y(cod.begin() + 1, cod.end());
    Term open = Term::seq(with_ids({}, Term::gen(Gen::Cup), x),
                          with_ids({}, Term::sym(Obj::Right, Obj::Left), x));
    Term body = Term::seq(open, Term::par(Term::id(Obj::Left), t));
    t = Term::seq(body, with_ids({}, Term::gen(Gen::Cap), y));
  }
  return t;
}

PortGraph representation_to_graph(const Representation &r) {
  r.validate();
  return traced_matrix_graph(r.core, r.l);
}

Term representation_to_diagram(const Representation &r) {
  return to_term(representation_to_graph(r));
}

Term regex_to_diagram(const Regex &e) {
  const Obj B = Obj::Right;
  switch (e.kind()) {
  case Regex::Kind::Zero:
    return Term::seq(Term::gen(Gen::BlackDelete), Term::gen(Gen::BlackUnit));
  case Regex::Kind::One:
    return Term::id(B);
  case Regex::Kind::Atom:
    return scalar_term(e);
  case Regex::Kind::Sum:
    return Term::seq(Term::seq(Term::gen(Gen::BlackCopy),
                               Term::par(regex_to_diagram(e.lhs()), regex_to_diagram(e.rhs()))),
                     Term::gen(Gen::BlackMerge));
  case Regex::Kind::Prod:
    return Term::seq(regex_to_diagram(e.lhs()), regex_to_diagram(e.rhs()));
  case Regex::Kind::Star: {
    Term body = Term::seq(Term::seq(Term::gen(Gen::BlackMerge), Term::gen(Gen::BlackCopy)),
                          Term::par(regex_to_diagram(e.inner()), Term::id(B)));
    return trace_term(body, 1);
  }
  }
  throw std::logic_error("regex_to_diagram: unknown regex kind");
}

namespace {

std::size_t the_initial(const Nfa &a) {
  a.validate();
  if (a.initial.size() != 1)
    throw EncodingError("encoding needs exactly one initial state, got " +
                        std::to_string(a.initial.size()));
  return *a.initial.begin();
}

} // namespace

Term nfa_to_diagram_matrix(const Nfa &a) {
  const std::size_t q0 = the_initial(a), Q = a.states;
  MatrixDiagram md(Q + 1, Q + 1);
  for (const auto &t : a.delta)
    md.entries[t.src][t.dst].insert(t.label);
  md.entries[Q][q0].insert(kEpsilon);
  for (auto f : a.finals)
    md.entries[f][Q].insert(kEpsilon);
  return to_term(traced_matrix_graph(md, Q));
}

Term nfa_to_diagram_graph(const Nfa &a) {
  const std::size_t q0 = the_initial(a), Q = a.states;
  Linker lk;
  lk.g.dom = {Obj::Right};
  lk.g.cod = {Obj::Right};
  std::vector<std::size_t> k_in(Q, 0), k_out(Q, 0);
  for (const auto &t : a.delta) {
    ++k_out[t.src];
    ++k_in[t.dst];
  }
  ++k_in[q0];
  for (auto f : a.finals)
    ++k_out[f];

  std::vector<std::vector<std::size_t>> ins(Q), outs(Q);
  for (std::size_t q = 0; q < Q; ++q) {
    auto s = lk.fresh();
    ins[q] = lk.fanin(s, k_in[q]);
    outs[q] = lk.fanout(s, k_out[q]);
  }
  std::vector<std::size_t> next_in(Q, 0), next_out(Q, 0);
  lk.from(ins[q0][next_in[q0]++], bnd(0));
  for (const auto &t : a.delta) {
    auto src = outs[t.src][next_out[t.src]++];
    auto dst = ins[t.dst][next_in[t.dst]++];
    if (t.dst > t.src) {
      lk.edge(src, dst, t.label);
    } else {
      auto mid = lk.fresh();
      lk.edge(src, mid, t.label);
      lk.feedback(mid, dst);
    }
  }
  auto out = lk.fresh();
  lk.to(out, bnd(0));
  auto accept = lk.fanin(out, a.finals.size());
  std::size_t k = 0;
  for (auto f : a.finals)
    lk.join(outs[f][next_out[f]++], accept[k++]);
  return to_term(lk.finish());
}

Representation diagram_to_representation(const Term &d, const Alphabet &sigma) {
  auto [dom, cod] = typecheck(d);
  for (const auto &side : {dom, cod})
    if (std::find(side.begin(), side.end(), Obj::Red) != side.end())
      throw BoundaryError("diagram_to_representation: red object on the boundary");
  return graph_to_representation(atomise(to_port_graph(bend_to_left_to_right(d))).first, sigma);
}

Representation graph_to_representation(const PortGraph &g, const Alphabet &sigma) {
  if (!is_atomic(g))
    throw std::invalid_argument("graph_to_representation: graph is not atomic");
  for (const auto &side : {g.dom, g.cod})
    for (auto o : side)
      if (o != Obj::Right)
        throw NotLeftToRight("graph_to_representation: boundary must be all >");
  const Incidence inc = g.incidence();

  // ε-successors of every wire.
  std::vector<std::vector<std::size_t>> eps(g.wires.size());
  std::vector<std::size_t> actions;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const auto &I = inc.in[v];
    const auto &O = inc.out[v];
    switch (g.nodes[v].gen) {
    case Gen::BlackCopy:
      eps[I[0]] = {O[0], O[1]};
      break;
    case Gen::BlackMerge:
      eps[I[0]].push_back(O[0]);
      eps[I[1]].push_back(O[0]);
      break;
    case Gen::Cup:
      eps[O[1]].push_back(O[0]);
      break;
    case Gen::Cap:
      eps[I[1]].push_back(I[0]);
      break;
    case Gen::Action:
      actions.push_back(v);
      break;
    default:
      break;
    }
  }
  std::map<std::size_t, std::size_t> state_of_action;
  for (std::size_t k = 0; k < actions.size(); ++k)
    state_of_action[actions[k]] = g.dom.size() + k;

  const std::size_t n = g.dom.size(), m = g.cod.size();
  Representation r(sigma, n + actions.size(), n, m);
  std::vector<std::size_t> base(inc.dom);
  for (auto v : actions)
    base.push_back(inc.out[v][0]);

  for (std::size_t s = 0; s < base.size(); ++s) {
    std::vector<bool> seen(g.wires.size(), false);
    std::vector<std::size_t> stack{base[s]};
    while (!stack.empty()) {
      auto w = stack.back();
      stack.pop_back();
      if (seen[w])
        continue;
      seen[w] = true;
      for (auto x : eps[w])
        stack.push_back(x);
      const Endpoint &e = g.wires[w].dst;
      if (e.boundary()) {
        r.lm(s, e.port).insert(kEpsilon);
      } else if (g.nodes[e.node].gen == Gen::Action && e.port == 1) {
        Regex val = red_wire_value(g, inc.in[e.node][0]);
        if (val.kind() != Regex::Kind::Atom)
          throw std::logic_error("diagram_to_representation: non-atomic action");
        if (!sigma.contains(val.letter()))
          throw AlphabetError(std::string("letter '") + val.letter() +
                              "' not in alphabet " + sigma.letters());
        r.ll(s, state_of_action[e.node]).insert(val.letter());
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    r.nl(k, k).insert(kEpsilon);
  r.validate();
  return r;
}

Nfa representation_to_nfa(const Representation &r) {
  r.validate();
  if (r.n != 1 || r.m != 1)
    throw std::invalid_argument("representation_to_nfa needs one input and one output");
  Nfa a(r.sigma, r.l);
  for (std::size_t i = 0; i < r.l; ++i) {
    for (std::size_t j = 0; j < r.l; ++j)
      for (char x : r.ll(i, j))
        a.add(i, x, j);
    if (!r.nl(0, i).empty())
      a.initial.insert(i);
    if (!r.lm(i, 0).empty())
      a.finals.insert(i);
  }
  return a;
}

Representation representation_from_nfa(const Nfa &a) {
  a.validate();
  const std::size_t Q = a.states;
  std::vector<std::vector<std::size_t>> eps(Q);
  for (const auto &t : a.delta)
    if (t.label == kEpsilon)
      eps[t.src].push_back(t.dst);
  Representation r(a.sigma, Q, 1, 1);
  for (std::size_t q = 0; q < Q; ++q) {
    std::vector<bool> seen(Q, false);
    std::vector<std::size_t> stack{q};
    while (!stack.empty()) {
      auto p = stack.back();
      stack.pop_back();
      if (seen[p])
        continue;
      seen[p] = true;
      for (auto x : eps[p])
        stack.push_back(x);
    }
    for (const auto &t : a.delta)
      if (t.label != kEpsilon && seen[t.src])
        r.ll(q, t.dst).insert(t.label);
    for (auto f : a.finals)
      if (seen[f])
        r.lm(q, 0).insert(kEpsilon);
  }
  for (auto q : a.initial)
    r.nl(0, q).insert(kEpsilon);
  r.validate();
  return r;
}

// ---- inequality systems --------------------------------------------------------

namespace {

constexpr std::size_t kNoSource = SIZE_MAX;

struct Inclusion {
  std::size_t src; // kNoSource: the constant ε
  std::string label; // empty: plain inclusion
  std::size_t tgt;

  auto key() const { return std::tie(src, label, tgt); }
  bool operator<(const Inclusion &o) const { return key() < o.key(); }
  bool operator==(const Inclusion &o) const { return key() == o.key(); }
};

} // namespace

std::string emit_inequalities(const Term &d) {
  const PortGraph g = to_port_graph(d);
  if (!is_left_to_right(g))
    throw NotLeftToRight("emit_inequalities needs a left-to-right diagram");
  const Incidence inc = g.incidence();
  std::vector<Inclusion> cs;
  for (auto w : inc.dom)
    cs.push_back({kNoSource, "", w});
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const auto &I = inc.in[v];
    const auto &O = inc.out[v];
    switch (g.nodes[v].gen) {
    case Gen::Action: {
      Regex r = red_wire_value(g, I[0]);
      std::string label = r.kind() == Regex::Kind::Atom ? r.str() : "(" + r.str() + ")";
      cs.push_back({I[1], label, O[0]});
      break;
    }
    case Gen::BlackCopy:
      cs.push_back({I[0], "", O[0]});
      cs.push_back({I[0], "", O[1]});
      break;
    case Gen::BlackMerge:
      cs.push_back({I[0], "", O[0]});
      cs.push_back({I[1], "", O[0]});
      break;
    case Gen::Cup:
      cs.push_back({O[1], "", O[0]});
      break;
    case Gen::Cap:
      cs.push_back({I[1], "", I[0]});
      break;
    default:
      break;
    }
  }
  std::set<std::size_t> outputs(inc.cod.begin(), inc.cod.end());

  auto tidy = [&] {
    std::erase_if(cs, [](const Inclusion &c) { return c.label.empty() && c.src == c.tgt; });
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  };
  tidy();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t w = 0; w < g.wires.size() && !changed; ++w) {
      std::vector<std::size_t> in, out;
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].tgt == w)
          in.push_back(k);
        if (cs[k].src == w)
          out.push_back(k);
      }
      if (in.empty() && out.empty())
        continue;
      if (in.size() == 1 && cs[in[0]].label.empty() && cs[in[0]].src != kNoSource) {
        // w equals its only predecessor.
        const std::size_t u = cs[in[0]].src;
        cs.erase(cs.begin() + in[0]);
        for (auto &c : cs) {
          if (c.src == w)
            c.src = u;
          if (c.tgt == w)
            c.tgt = u;
        }
        if (outputs.erase(w))
          outputs.insert(u);
        changed = true;
      } else if (!outputs.count(w) && out.size() == 1 && cs[out[0]].label.empty()) {
        // w only feeds one wire: substitute that wire for it.
        const std::size_t v = cs[out[0]].tgt;
        cs.erase(cs.begin() + out[0]);
        for (auto &c : cs)
          if (c.tgt == w)
            c.tgt = v;
        changed = true;
      }
      if (changed)
        tidy();
    }
  }

  // Number variables breadth-first from the inputs.
  std::map<std::size_t, std::size_t> num;
  std::queue<std::size_t> work;
  auto visit = [&](std::size_t w) {
    if (num.emplace(w, num.size()).second)
      work.push(w);
  };
  for (const auto &c : cs)
    if (c.src == kNoSource)
      visit(c.tgt);
  while (!work.empty()) {
    auto w = work.front();
    work.pop();
    std::vector<std::pair<std::string, std::size_t>> next;
    for (const auto &c : cs)
      if (c.src == w)
        next.emplace_back(c.label, c.tgt);
    std::sort(next.begin(), next.end());
    for (const auto &[label, t] : next)
      visit(t);
  }
  for (const auto &c : cs) {
    if (c.src != kNoSource)
      visit(c.src);
    visit(c.tgt);
  }

  std::vector<std::tuple<long, std::size_t, std::string>> lines;
  for (const auto &c : cs)
    lines.emplace_back(c.src == kNoSource ? -1L : static_cast<long>(num[c.src]),
                       num[c.tgt], c.label);
  std::sort(lines.begin(), lines.end());
  std::ostringstream os;
  for (const auto &[s, t, label] : lines) {
    if (s < 0)
      os << "eps";
    else
      os << label << "X" << s;
    os << " <= X" << t << "\n";
  }
  return os.str();
}

} // namespace kaa
