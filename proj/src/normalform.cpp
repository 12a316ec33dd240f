#include "kaa/normalform.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kaa/oracle.hpp"

namespace kaa {

std::string GeneralisedMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_in; ++i) {
    if (i)
      os << "; ";
    for (std::size_t j = 0; j < m_out; ++j)
      os << (j ? ", " : "") << entries[i][j].str();
  }
  os << "]";
  return os.str();
}

nlohmann::json DenotationMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &row : entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto &l : row)
      r.push_back(l.to_json());
    rows.push_back(r);
  }
  return {{"n_in", n_in}, {"m_out", m_out}, {"entries", rows}};
}

namespace {

Regex red_value(const PortGraph &g, const Incidence &inc, std::size_t wire,
                const std::vector<Regex> *env, std::map<std::size_t, Regex> &memo) {
  if (auto it = memo.find(wire); it != memo.end())
    return it->second;
  const Wire &w = g.wires[wire];
  if (w.type != Obj::Red)
    throw std::invalid_argument("red evaluation reached a black wire");
  Regex v = Regex::one();
  if (w.src.boundary()) {
    if (!env)
      throw std::invalid_argument("red wire is fed from the boundary");
    v = (*env)[w.src.port];
  } else {
    const std::size_t n = w.src.node;
    auto arg = [&](std::size_t k) { return red_value(g, inc, inc.in[n][k], env, memo); };
    switch (g.nodes[n].gen) {
    case Gen::Atom:
      v = Regex::atom(g.nodes[n].letter);
      break;
    case Gen::One:
      v = Regex::one();
      break;
    case Gen::Zero:
      v = Regex::zero();
      break;
    case Gen::Star:
      v = Regex::star(arg(0));
      break;
    case Gen::Prod:
      v = Regex::prod(arg(0), arg(1));
      break;
    case Gen::Sum:
      v = Regex::sum(arg(0), arg(1));
      break;
    case Gen::RedCopy:
      v = arg(0);
      break;
    default:
      throw std::invalid_argument("red wire produced by " + g.nodes[n].name());
    }
  }
  memo.emplace(wire, v);
  return v;
}

void add_edge(std::vector<std::map<std::size_t, Regex>> &out,
              std::vector<std::map<std::size_t, Regex>> &in, std::size_t u,
              std::size_t v, const Regex &r) {
  if (r.kind() == Regex::Kind::Zero)
    return;
  auto it = out[u].find(v);
  Regex total = it == out[u].end() ? r : simplified_sum(it->second, r);
  out[u].insert_or_assign(v, total);
  in[v].insert_or_assign(u, total);
}

} // namespace

Regex red_wire_value(const PortGraph &g, std::size_t wire) {
  std::map<std::size_t, Regex> memo;
  return red_value(g, g.incidence(), wire, nullptr, memo);
}

GeneralisedMatrix to_generalised_matrix(const PortGraph &g) {
  if (!is_left_to_right(g))
    throw NotLeftToRight("generalised matrix needs a left-to-right diagram, got " +
                         interface_str(g.dom) + " -> " + interface_str(g.cod));
  const Incidence inc = g.incidence();
  const std::size_t W = g.wires.size(), n = g.dom.size(), m = g.cod.size();
  const std::size_t V = W + n + m;
  std::vector<std::map<std::size_t, Regex>> out(V), in(V);
  std::map<std::size_t, Regex> memo;
  const Regex eps = Regex::one();

  for (std::size_t k = 0; k < n; ++k)
    add_edge(out, in, W + k, inc.dom[k], eps);
  for (std::size_t k = 0; k < m; ++k)
    add_edge(out, in, inc.cod[k], W + n + k, eps);
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const auto &I = inc.in[v];
    const auto &O = inc.out[v];
    switch (g.nodes[v].gen) {
    case Gen::Action:
      add_edge(out, in, I[1], O[0], red_value(g, inc, I[0], nullptr, memo));
      break;
    case Gen::BlackCopy:
      add_edge(out, in, I[0], O[0], eps);
      add_edge(out, in, I[0], O[1], eps);
      break;
    case Gen::BlackMerge:
      add_edge(out, in, I[0], O[0], eps);
      add_edge(out, in, I[1], O[0], eps);
      break;
    case Gen::Cup:
      add_edge(out, in, O[1], O[0], eps);
      break;
    case Gen::Cap:
      add_edge(out, in, I[1], I[0], eps);
      break;
    default:
      break;
    }
  }

  for (std::size_t v = W; v-- > 0;) {
    Regex loop = eps;
    if (auto it = out[v].find(v); it != out[v].end())
      loop = simplified_star(it->second);
    out[v].erase(v);
    in[v].erase(v);
    for (const auto &[u, r1] : in[v]) {
      out[u].erase(v);
      for (const auto &[w, r2] : out[v])
        add_edge(out, in, u, w, simplified_prod(simplified_prod(r1, loop), r2));
    }
    for (const auto &[w, r2] : out[v])
      in[w].erase(v);
    out[v].clear();
    in[v].clear();
  }

  GeneralisedMatrix gm;
  gm.n_in = n;
  gm.m_out = m;
  gm.entries.assign(n, std::vector<Regex>(m, Regex::zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto &[w, r] : out[W + i])
      if (w >= W + n)
        gm.entries[i][w - W - n] = r;
  return gm;
}

GeneralisedMatrix to_generalised_matrix(const Term &d) {
  return to_generalised_matrix(to_port_graph(d));
}

namespace {

// Automaton on the wires of g: black structure moves silently, an action
// runs an automaton for the regex on its red input. Same language as the
// generalised matrix entries, without the blow-up of eliminated regexes.
Nfa wire_automaton(const PortGraph &g, const Incidence &inc, const Alphabet &sigma) {
  Nfa a(sigma, g.wires.size());
  std::map<std::size_t, Regex> memo;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const auto &i = inc.in[v];
    const auto &o = inc.out[v];
    switch (g.nodes[v].gen) {
    case Gen::BlackCopy:
      a.add(i[0], kEpsilon, o[0]);
      a.add(i[0], kEpsilon, o[1]);
      break;
    case Gen::BlackMerge:
      a.add(i[0], kEpsilon, o[0]);
      a.add(i[1], kEpsilon, o[0]);
      break;
    case Gen::Cup:
      a.add(o[1], kEpsilon, o[0]);
      break;
    case Gen::Cap:
      a.add(i[1], kEpsilon, i[0]);
      break;
    case Gen::Action: {
      const Regex e = red_value(g, inc, i[0], nullptr, memo);
      if (auto bad = foreign_letters(e, sigma); !bad.empty())
        throw AlphabetError("letters '" + bad + "' not in alphabet " + sigma.letters());
      const Nfa sub = oracle::thompson(e, sigma);
      const std::size_t base = a.states;
      a.states += sub.states;
      for (const auto &t : sub.delta)
        a.add(base + t.src, t.label, base + t.dst);
      for (auto q : sub.initial)
        a.add(i[1], kEpsilon, base + q);
      for (auto q : sub.finals)
        a.add(base + q, kEpsilon, o[0]);
      break;
    }
    default:
      break;
    }
  }
  return a;
}

} // namespace

DenotationMatrix denote(const PortGraph &g, const Alphabet &sigma) {
  if (!is_left_to_right(g))
    throw NotLeftToRight("denotation needs a left-to-right diagram, got " +
                         interface_str(g.dom) + " -> " + interface_str(g.cod));
  const Incidence inc = g.incidence();
  Nfa a = wire_automaton(g, inc, sigma);
  DenotationMatrix dm;
  dm.n_in = g.dom.size();
  dm.m_out = g.cod.size();
  dm.entries.resize(dm.n_in);
  for (std::size_t i = 0; i < dm.n_in; ++i)
    for (std::size_t j = 0; j < dm.m_out; ++j) {
      a.initial = {inc.dom[i]};
      a.finals = {inc.cod[j]};
      dm.entries[i].push_back(oracle::nfa_language(a));
    }
  return dm;
}

DenotationMatrix denote(const Term &d, const Alphabet &sigma) {
  return denote(to_port_graph(d), sigma);
}

namespace {

template <class Cmp>
bool compare_matrices(const DenotationMatrix &x, const DenotationMatrix &y, Cmp cmp) {
  for (std::size_t i = 0; i < x.n_in; ++i)
    for (std::size_t j = 0; j < x.m_out; ++j)
      if (!cmp(x.at(i, j), y.at(i, j)))
        return false;
  return true;
}

template <class Cmp>
bool compare_sem(const Term &d, const Term &e, const Alphabet &sigma, Cmp cmp) {
  if (typecheck(d) != typecheck(e))
    throw InterfaceMismatch("diagrams have different interfaces");
  return compare_matrices(denote(bend_to_left_to_right(d), sigma),
                          denote(bend_to_left_to_right(e), sigma), cmp);
}

bool flows_right(const Interface &i) {
  return std::all_of(i.begin(), i.end(), [](Obj o) { return o == Obj::Right; });
}

template <class Cmp>
bool compare_sem(const PortGraph &g, const PortGraph &h, const Alphabet &sigma, Cmp cmp) {
  if (g.dom != h.dom || g.cod != h.cod)
    throw InterfaceMismatch("diagrams have different interfaces");
  if (!flows_right(g.dom) || !flows_right(g.cod))
    return compare_sem(to_term(g), to_term(h), sigma, cmp);
  return compare_matrices(denote(g, sigma), denote(h, sigma), cmp);
}

} // namespace

bool sem_equal(const Term &d, const Term &e, const Alphabet &sigma) {
  return compare_sem(d, e, sigma, lang_equal);
}

bool sem_leq(const Term &d, const Term &e, const Alphabet &sigma) {
  return compare_sem(d, e, sigma, lang_subset);
}

bool sem_equal(const PortGraph &g, const PortGraph &h, const Alphabet &sigma) {
  return compare_sem(g, h, sigma, lang_equal);
}

std::vector<Regex> eval_red(const Term &d, const std::vector<Regex> &env) {
  const PortGraph g = to_port_graph(d);
  for (const auto &l : g.nodes)
    if (!l.red())
      throw std::invalid_argument("eval_red: black generator " + l.name());
  if (env.size() != g.dom.size())
    throw std::invalid_argument("eval_red: expected " + std::to_string(g.dom.size()) +
                                " inputs, got " + std::to_string(env.size()));
  const Incidence inc = g.incidence();
  std::map<std::size_t, Regex> memo;
  std::vector<Regex> result;
  for (auto w : inc.cod)
    result.push_back(red_value(g, inc, w, &env, memo));
  return result;
}

Term restrict(const Term &d, std::size_t i, std::size_t j) {
  auto [dom, cod] = typecheck(d);
  if (!is_left_to_right(d))
    throw NotLeftToRight("restrict needs a left-to-right diagram");
  if (i >= dom.size() || j >= cod.size())
    throw std::out_of_range("restrict: index (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside " +
                            std::to_string(dom.size()) + "x" + std::to_string(cod.size()));
  std::vector<Term> pre, post;
  for (std::size_t k = 0; k < dom.size(); ++k)
    pre.push_back(k == i ? Term::id(Obj::Right) : Term::gen(Gen::BlackUnit));
  for (std::size_t k = 0; k < cod.size(); ++k)
    post.push_back(k == j ? Term::id(Obj::Right) : Term::gen(Gen::BlackDelete));
  return Term::seq(Term::seq(Term::par_all(pre), d), Term::par_all(post));
}

std::vector<std::vector<bool>> relation_normal_form(const Term &d) {
  const PortGraph g = to_port_graph(d);
  for (const auto &l : g.nodes)
    if (l.gen != Gen::BlackCopy && l.gen != Gen::BlackDelete &&
        l.gen != Gen::BlackMerge && l.gen != Gen::BlackUnit)
      throw std::invalid_argument("relation_normal_form: foreign generator " + l.name());
  const Incidence inc = g.incidence();
  std::vector<std::vector<bool>> rel(g.dom.size(), std::vector<bool>(g.cod.size(), false));
  for (std::size_t i = 0; i < g.dom.size(); ++i) {
    std::vector<std::size_t> stack{inc.dom[i]};
    std::vector<bool> seen(g.wires.size(), false);
    while (!stack.empty()) {
      auto w = stack.back();
      stack.pop_back();
      if (seen[w])
        continue;
      seen[w] = true;
      const Endpoint &e = g.wires[w].dst;
      if (e.boundary()) {
        rel[i][e.port] = true;
        continue;
      }
      for (auto next : inc.out[e.node])
        stack.push_back(next);
    }
  }
  return rel;
}

Term sum_term(const Term &d, const Term &e) {
  if (typecheck(d) != typecheck(e))
    throw InterfaceMismatch("sum_term: diagrams have different interfaces");
  const PortGraph f = to_port_graph(d), h = to_port_graph(e);
  const std::size_t n = f.dom.size(), m = f.cod.size();
  PortGraph g;
  g.dom = f.dom;
  g.cod = f.cod;
  // Nodes: copies, then f, then h, then merges.
  for (std::size_t k = 0; k < n; ++k)
    g.nodes.push_back(Label{Gen::BlackCopy});
  const std::size_t f_at = g.nodes.size();
  g.nodes.insert(g.nodes.end(), f.nodes.begin(), f.nodes.end());
  const std::size_t h_at = g.nodes.size();
  g.nodes.insert(g.nodes.end(), h.nodes.begin(), h.nodes.end());
  const std::size_t merge_at = g.nodes.size();
  for (std::size_t k = 0; k < m; ++k)
    g.nodes.push_back(Label{Gen::BlackMerge});
  for (std::size_t k = 0; k < n; ++k) {
    if (g.dom[k] != Obj::Right)
      throw NotLeftToRight("sum_term needs a left-to-right diagram");
    g.wires.push_back({{Endpoint::kBoundary, k}, {k, 0}, Obj::Right});
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (g.cod[k] != Obj::Right)
      throw NotLeftToRight("sum_term needs a left-to-right diagram");
    g.wires.push_back({{merge_at + k, 0}, {Endpoint::kBoundary, k}, Obj::Right});
  }
  auto embed = [&](const PortGraph &p, std::size_t at, std::size_t branch) {
    for (auto w : p.wires) {
      w.src = w.src.boundary() ? Endpoint{w.src.port, branch}
                               : Endpoint{w.src.node + at, w.src.port};
      w.dst = w.dst.boundary() ? Endpoint{merge_at + w.dst.port, branch}
                               : Endpoint{w.dst.node + at, w.dst.port};
      g.wires.push_back(w);
    }
  };
  embed(f, f_at, 0);
  embed(h, h_at, 1);
  return to_term(g);
}

} // namespace kaa
