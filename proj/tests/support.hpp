#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kaa/diagram.hpp"
#include "kaa/encode.hpp"
#include "kaa/nfa.hpp"
#include "kaa/normalform.hpp"
#include "kaa/oracle.hpp"
#include "kaa/regex.hpp"

namespace kaa::testing {

inline std::vector<std::string> words_upto(const Alphabet &sigma, std::size_t n) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : sigma.letters())
        out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

// Backtracking matcher straight from the grammar.
inline bool naive_match(const Regex &e, const std::string &w) {
  std::map<std::tuple<const void *, std::size_t, std::size_t>, bool> memo;
  std::function<bool(const Regex &, std::size_t, std::size_t)> go =
      [&](const Regex &r, std::size_t i, std::size_t j) -> bool {
    auto key = std::make_tuple(static_cast<const void *>(&r), i, j);
    switch (r.kind()) {
    case Regex::Kind::Zero:
      return false;
    case Regex::Kind::One:
      return i == j;
    case Regex::Kind::Atom:
      return j == i + 1 && w[i] == r.letter();
    default:
      break;
    }
    if (auto it = memo.find(key); it != memo.end())
      return it->second;
    bool v = false;
    if (r.kind() == Regex::Kind::Sum) {
      v = go(r.lhs(), i, j) || go(r.rhs(), i, j);
    } else if (r.kind() == Regex::Kind::Prod) {
      for (std::size_t k = i; k <= j && !v; ++k)
        v = go(r.lhs(), i, k) && go(r.rhs(), k, j);
    } else {
      v = i == j;
      for (std::size_t k = i + 1; k <= j && !v; ++k)
        v = go(r.inner(), i, k) && go(r, k, j);
    }
    memo[key] = v;
    return v;
  };
  return go(e, 0, w.size());
}

inline Nfa random_nfa(std::mt19937_64 &rng, std::size_t max_states, const Alphabet &sigma) {
  std::uniform_int_distribution<std::size_t> pick_n(1, max_states);
  const std::size_t n = pick_n(rng);
  Nfa a(sigma, n);
  std::uniform_int_distribution<std::size_t> q(0, n - 1);
  std::bernoulli_distribution coin(0.3);
  for (std::size_t s = 0; s < n; ++s)
    for (char c : sigma.letters())
      for (std::size_t t = 0; t < n; ++t)
        if (coin(rng))
          a.add(s, c, t);
  a.initial.insert(0);
  for (std::size_t s = 0; s < n; ++s)
    if (coin(rng))
      a.finals.insert(s);
  if (a.finals.empty())
    a.finals.insert(q(rng));
  return a;
}

// Layered random diagram from `dom`. Cups never feed caps directly, so the
// result has nothing to yank. Red wires left at the end are deleted.
inline Term random_diagram(std::mt19937_64 &rng, const Interface &dom, int layers,
                           const Alphabet &sigma, bool red = true) {
  struct Slot {
    Obj type;
    bool from_cup;
  };
  std::vector<Slot> cur;
  for (auto o : dom)
    cur.push_back({o, false});
  auto iface = [&] {
    Interface i;
    for (auto &s : cur)
      i.push_back(s.type);
    return i;
  };
  std::vector<Term> steps{Term::id(dom)};
  std::uniform_int_distribution<int> pick_gen(0, 15);
  std::uniform_int_distribution<std::size_t> pick_letter(0, sigma.size() - 1);
  for (int k = 0; k < layers;) {
    int g = pick_gen(rng);
    Label l{Gen::RedCopy};
    Interface d, c;
    if (g == 15) {
      if (cur.size() < 2)
        continue;
    } else {
      l = Label{static_cast<Gen>(g)};
      if (l.gen == Gen::Atom)
        l.letter = sigma.letters()[pick_letter(rng)];
      if (l.red() && !red)
        continue;
      if (l.gen == Gen::Action && !red)
        continue;
      d = l.dom();
      c = l.cod();
    }
    std::size_t width = g == 15 ? 2 : d.size();
    if (width > cur.size())
      continue;
    std::uniform_int_distribution<std::size_t> pick_pos(0, cur.size() - width);
    std::size_t p = pick_pos(rng);
    bool fits = true;
    for (std::size_t i = 0; i < d.size(); ++i)
      fits = fits && cur[p + i].type == d[i];
    if (g != 15 && l.gen == Gen::Cap && (cur[p].from_cup || cur[p + 1].from_cup))
      fits = false;
    if (!fits)
      continue;
    const Interface now = iface();
    Interface before(now.begin(), now.begin() + p);
    Interface after(now.begin() + p + width, now.end());
    std::vector<Slot> mid;
    if (g == 15) {
      steps.push_back(with_ids(before, Term::sym(cur[p].type, cur[p + 1].type), after));
      mid = {cur[p + 1], cur[p]};
    } else {
      steps.push_back(with_ids(before, Term::gen(l), after));
      for (auto o : c)
        mid.push_back({o, l.gen == Gen::Cup});
    }
    cur.erase(cur.begin() + p, cur.begin() + p + width);
    cur.insert(cur.begin() + p, mid.begin(), mid.end());
    ++k;
  }
  for (std::size_t p = cur.size(); p-- > 0;)
    if (cur[p].type == Obj::Red) {
      const Interface now = iface();
      Interface before(now.begin(), now.begin() + p);
      Interface after(now.begin() + p + 1, now.end());
      steps.push_back(with_ids(before, Term::gen(Gen::RedDelete), after));
      cur.erase(cur.begin() + p);
    }
  return Term::seq_all(steps);
}

inline Interface random_black_interface(std::mt19937_64 &rng, std::size_t max) {
  std::uniform_int_distribution<std::size_t> n(0, max);
  std::bernoulli_distribution left(0.4);
  Interface i(n(rng));
  for (auto &o : i)
    o = left(rng) ? Obj::Left : Obj::Right;
  return i;
}

// NFA over the wires of a port graph: black structure moves along wires
// silently, an action reads a word of the regex on its red input. Initial
// state is domain position `i`, final is codomain position `j`.
inline Nfa flow_nfa(const PortGraph &g, std::size_t i, std::size_t j, const Alphabet &sigma) {
  const Incidence inc = g.incidence();
  Nfa a(sigma, g.wires.size());
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const auto &in = inc.in[n];
    const auto &out = inc.out[n];
    switch (g.nodes[n].gen) {
    case Gen::BlackCopy:
      a.add(in[0], kEpsilon, out[0]);
      a.add(in[0], kEpsilon, out[1]);
      break;
    case Gen::BlackMerge:
      a.add(in[0], kEpsilon, out[0]);
      a.add(in[1], kEpsilon, out[0]);
      break;
    case Gen::Cup:
      a.add(out[1], kEpsilon, out[0]);
      break;
    case Gen::Cap:
      a.add(in[1], kEpsilon, in[0]);
      break;
    case Gen::Action: {
      Nfa sub = oracle::thompson(red_wire_value(g, in[0]), sigma);
      const std::size_t base = a.states;
      a.states += sub.states;
      for (const auto &t : sub.delta)
        a.add(base + t.src, t.label, base + t.dst);
      for (auto q : sub.initial)
        a.add(in[1], kEpsilon, base + q);
      for (auto q : sub.finals)
        a.add(base + q, kEpsilon, out[0]);
      break;
    }
    default:
      break;
    }
  }
  a.initial.insert(inc.dom[i]);
  a.finals.insert(inc.cod[j]);
  return a;
}

// Loop wires as states, one extra state for the input and one for the output.
inline Language rep_language(const Representation &r) {
  Nfa a(r.sigma, r.l + 2);
  const std::size_t in = r.l, out = r.l + 1;
  for (std::size_t i = 0; i < r.l; ++i)
    for (std::size_t j = 0; j < r.l; ++j)
      for (char c : r.ll(i, j))
        a.add(i, c, j);
  for (std::size_t j = 0; j < r.l; ++j)
    if (r.nl(0, j).count(kEpsilon))
      a.add(in, kEpsilon, j);
  for (std::size_t i = 0; i < r.l; ++i)
    if (r.lm(i, 0).count(kEpsilon))
      a.add(i, kEpsilon, out);
  a.initial.insert(in);
  a.finals.insert(out);
  return oracle::nfa_language(a);
}

} // namespace kaa::testing
