#include "kaa/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "kaa/kad.hpp"
#include "kaa/normalform.hpp"

namespace kaa {

PortGraph representation_graph(const Representation &r) {
  return representation_to_graph(r);
}

namespace {

// A single-input single-output representation opened up for editing.
struct Machine {
  Alphabet sigma;
  std::vector<std::vector<Coeff>> ll;
  std::vector<bool> init, fin;

  explicit Machine(const Representation &r) : sigma(r.sigma) {
    if (r.n != 1 || r.m != 1)
      throw std::invalid_argument("expected a representation with one input and one output");
    r.validate();
    ll.assign(r.l, std::vector<Coeff>(r.l));
    for (std::size_t i = 0; i < r.l; ++i) {
      for (std::size_t j = 0; j < r.l; ++j)
        ll[i][j] = r.ll(i, j);
      init.push_back(!r.nl(0, i).empty());
      fin.push_back(!r.lm(i, 0).empty());
    }
  }

  std::size_t size() const { return ll.size(); }

  std::size_t add_state() {
    for (auto &row : ll)
      row.emplace_back();
    ll.emplace_back(size() + 1);
    init.push_back(false);
    fin.push_back(false);
    return size() - 1;
  }

  Representation rep() const {
    Representation r(sigma, size(), 1, 1);
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j)
        r.ll(i, j) = ll[i][j];
      if (init[i])
        r.nl(0, i).insert(kEpsilon);
      if (fin[i])
        r.lm(i, 0).insert(kEpsilon);
    }
    return r;
  }

  Machine keep(const std::vector<bool> &alive) const {
    Machine out = *this;
    out.ll.clear();
    out.init.clear();
    out.fin.clear();
    for (std::size_t i = 0; i < size(); ++i) {
      if (!alive[i])
        continue;
      std::vector<Coeff> row;
      for (std::size_t j = 0; j < size(); ++j)
        if (alive[j])
          row.push_back(ll[i][j]);
      out.ll.push_back(std::move(row));
      out.init.push_back(init[i]);
      out.fin.push_back(fin[i]);
    }
    return out;
  }
};

Anchor whole(const PortGraph &g) {
  Anchor a;
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    a.nodes.push_back(n);
  const Incidence inc = g.incidence();
  a.boundary = inc.dom;
  a.boundary.insert(a.boundary.end(), inc.cod.begin(), inc.cod.end());
  return a;
}

// Records whole-diagram macro steps from one representation to the next.
class Logger {
public:
  explicit Logger(const Representation &start) : g_(representation_graph(start)) {
    trace_.initial = g_.digest();
  }

  void step(const std::string &id, const Representation &next, std::vector<std::string> via) {
    PortGraph h = representation_to_graph(next);
    trace_.steps.push_back({id, Direction::LeftToRight, whole(g_), {}, h, std::move(via)});
    g_ = std::move(h);
  }

  RewriteTrace finish() {
    trace_.final = g_.digest();
    return trace_;
  }

private:
  PortGraph g_;
  RewriteTrace trace_;
};

const std::vector<std::string> kCpyVia = {"D1", "CPY", "B7", "B8", "B9", "D3"};

// Subset merging; `each` sees the machine after every merge.
Machine determinise_machine(Machine m, const std::function<void(const Machine &)> &each) {
  std::map<std::set<std::size_t>, std::size_t> by_key;
  std::vector<std::set<std::size_t>> key;
  for (std::size_t i = 0; i < m.size(); ++i) {
    key.push_back({i});
    by_key.emplace(key.back(), i);
  }
  // Builds (or finds) the wire standing for the union of `parts`.
  auto subset_state = [&](const std::vector<std::size_t> &parts) {
    std::set<std::size_t> k;
    for (auto p : parts)
      k.insert(key[p].begin(), key[p].end());
    if (auto it = by_key.find(k); it != by_key.end())
      return it->second;
    std::size_t s = m.add_state();
    for (auto p : parts) {
      for (std::size_t j = 0; j < m.size(); ++j)
        m.ll[s][j].insert(m.ll[p][j].begin(), m.ll[p][j].end());
      if (m.fin[p])
        m.fin[s] = true;
    }
    key.push_back(k);
    by_key.emplace(k, s);
    return s;
  };

  if (m.size() > 0) {
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.init[i])
        starts.push_back(i);
    if (starts.size() != 1) {
      std::size_t s = subset_state(starts);
      std::fill(m.init.begin(), m.init.end(), false);
      m.init[s] = true;
      each(m);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < m.size() && !changed; ++i)
      for (std::size_t a = 0; a < m.sigma.size() && !changed; ++a) {
        const char x = m.sigma[a];
        std::vector<std::size_t> targets;
        for (std::size_t j = 0; j < m.size(); ++j)
          if (m.ll[i][j].count(x))
            targets.push_back(j);
        if (targets.size() < 2)
          continue;
        std::size_t s = subset_state(targets);
        for (auto j : targets)
          m.ll[i][j].erase(x);
        m.ll[i][s].insert(x);
        each(m);
        changed = true;
      }
  }
  return m;
}

} // namespace

std::pair<Representation, RewriteTrace> determinise(const Representation &r) {
  Machine start(r);
  Logger log(r);
  Machine m = determinise_machine(start, [&](const Machine &x) {
    log.step("CPY", x.rep(), kCpyVia);
  });
  return {m.rep(), log.finish()};
}

Representation reverse(const Representation &r) {
  r.validate();
  Representation out(r.sigma, r.l, r.m, r.n);
  for (std::size_t i = 0; i < out.core.n_in; ++i)
    for (std::size_t j = 0; j < out.core.m_out; ++j)
      out.core.entries[i][j] = r.core.entries[j][i];
  return out;
}

std::pair<Representation, RewriteTrace> co_determinise(const Representation &r) {
  Logger log(r);
  Machine m = determinise_machine(Machine(reverse(r)), [&](const Machine &x) {
    log.step("COCPY", reverse(x.rep()), kCpyVia);
  });
  return {reverse(m.rep()), log.finish()};
}

std::pair<Representation, RewriteTrace> trim_useless(const Representation &r) {
  Machine m(r);
  Logger log(r);
  auto sweep = [&](bool forward) {
    std::vector<bool> seen(m.size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (forward ? m.init[i] : m.fin[i])
        stack.push_back(i);
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      if (seen[i])
        continue;
      seen[i] = true;
      for (std::size_t j = 0; j < m.size(); ++j)
        if (!(forward ? m.ll[i][j] : m.ll[j][i]).empty())
          stack.push_back(j);
    }
    return seen;
  };
  auto reach = sweep(true);
  if (std::find(reach.begin(), reach.end(), false) != reach.end()) {
    m = m.keep(reach);
    log.step("CODEL", m.rep(), {"CODEL", "B5", "B8", "D4"});
  }
  auto coreach = sweep(false);
  if (std::find(coreach.begin(), coreach.end(), false) != coreach.end()) {
    m = m.keep(coreach);
    log.step("DEL", m.rep(), {"DEL", "B2", "B9", "D2"});
  }
  return {m.rep(), log.finish()};
}

std::pair<Representation, RewriteTrace> totalise(const Representation &r) {
  if (!r.deterministic())
    throw NotDeterministic("totalise needs a deterministic representation");
  Machine m(r);
  Logger log(r);
  const std::size_t dead = m.add_state();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t a = 0; a < m.sigma.size(); ++a) {
      bool has = false;
      for (std::size_t j = 0; j < m.size() && !has; ++j)
        has = m.ll[i][j].count(m.sigma[a]) > 0;
      if (!has)
        m.ll[i][dead].insert(m.sigma[a]);
    }
  log.step("DEL", m.rep(), {"B2", "DEL", "B9"});
  return {m.rep(), log.finish()};
}

Representation canonical_numbering(const Representation &r) {
  Machine m(r);
  std::vector<std::size_t> order, number(m.size(), SIZE_MAX);
  std::queue<std::size_t> work;
  auto visit = [&](std::size_t q) {
    if (number[q] != SIZE_MAX)
      return;
    number[q] = order.size();
    order.push_back(q);
    work.push(q);
  };
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.init[i])
      visit(i);
  while (!work.empty()) {
    auto q = work.front();
    work.pop();
    for (std::size_t a = 0; a < m.sigma.size(); ++a)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (m.ll[q][j].count(m.sigma[a]))
          visit(j);
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    visit(i);
  Machine out = m;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out.init[number[i]] = m.init[i];
    out.fin[number[i]] = m.fin[i];
    for (std::size_t j = 0; j < m.size(); ++j)
      out.ll[number[i]][number[j]] = m.ll[i][j];
  }
  return out.rep();
}

std::pair<Representation, RewriteTrace> extract_representation(const Term &d,
                                                               const Alphabet &sigma) {
  const Term bent = bend_to_left_to_right(d);
  auto [g, trace] = atomise(to_port_graph(bent));
  Representation r = graph_to_representation(g, sigma);
  RewriteTrace rep;
  rep.initial = trace.final;
  const PortGraph t = representation_to_graph(r);
  rep.steps.push_back({"REP", Direction::LeftToRight, whole(g), {}, t,
                       {"B1", "B2", "B4", "B5", "B10", "B12", "A1"}});
  rep.final = t.digest();
  trace.extend(rep);
  return {r, trace};
}

std::pair<Representation, RewriteTrace> minimise(const Term &d, const Alphabet &sigma) {
  auto [dom, cod] = typecheck(bend_to_left_to_right(d));
  if (dom.size() != 1 || cod.size() != 1)
    throw InterfaceMismatch("minimise needs a diagram with one input and one output, got " +
                            interface_str(dom) + " -> " + interface_str(cod));
  auto [r, trace] = extract_representation(d, sigma);
  using Stage = std::pair<Representation, RewriteTrace> (*)(const Representation &);
  for (Stage stage : {Stage(trim_useless), Stage(co_determinise), Stage(trim_useless),
                      Stage(determinise), Stage(trim_useless)}) {
    auto [next, t] = stage(r);
    trace.extend(t);
    r = std::move(next);
  }
  Representation canon = canonical_numbering(r);
  if (!(canon == r)) {
    RewriteTrace perm;
    perm.initial = trace.final;
    const PortGraph t = representation_to_graph(canon);
    perm.steps.push_back({"PERM", Direction::LeftToRight, whole(representation_graph(r)), {},
                          t, {}});
    perm.final = t.digest();
    trace.extend(perm);
  }
  return {canon, trace};
}

nlohmann::json EquivCertificate::to_json() const {
  return {{"equivalent", equivalent},
          {"left", {{"normal_form", left.to_json()}, {"trace", left_trace.to_json()}}},
          {"right", {{"normal_form", right.to_json()}, {"trace", right_trace.to_json()}}}};
}

EquivCertificate decide_equiv(const Term &d, const Term &e, const Alphabet &sigma) {
  if (typecheck(d) != typecheck(e))
    throw InterfaceMismatch("decide_equiv: diagrams have different interfaces");
  auto [l, lt] = minimise(d, sigma);
  auto [r, rt] = minimise(e, sigma);
  EquivCertificate c{false, l, r, lt, rt};
  c.equivalent = smc_equal(representation_graph(l), representation_graph(r));
  return c;
}

} // namespace kaa
