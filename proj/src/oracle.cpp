#include "kaa/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace kaa {

// ---- Nfa --------------------------------------------------------------------

void Nfa::add(std::size_t src, char label, std::size_t dst) {
  delta.insert(Transition{src, label, dst});
}

bool Nfa::has_epsilon() const {
  return std::any_of(delta.begin(), delta.end(),
                     [](const Transition &t) { return t.label == kEpsilon; });
}

void Nfa::validate() const {
  for (const auto &t : delta) {
    if (t.src >= states || t.dst >= states)
      throw std::invalid_argument("NFA transition refers to a missing state");
    if (t.label != kEpsilon && !sigma.contains(t.label))
      throw std::invalid_argument(std::string("NFA label '") + t.label +
                                  "' not in alphabet");
  }
  for (auto q : initial)
    if (q >= states)
      throw std::invalid_argument("NFA initial state out of range");
  for (auto q : finals)
    if (q >= states)
      throw std::invalid_argument("NFA final state out of range");
}

nlohmann::json Nfa::to_json() const {
  nlohmann::json letters = nlohmann::json::array();
  for (char c : sigma.letters())
    letters.push_back(std::string(1, c));
  nlohmann::json trans = nlohmann::json::array();
  for (const auto &t : delta)
    trans.push_back({t.src,
                     t.label == kEpsilon ? std::string("eps")
                                         : std::string(1, t.label),
                     t.dst});
  return {{"states", states},
          {"alphabet", letters},
          {"transitions", trans},
          {"initial", initial},
          {"finals", finals}};
}

Nfa Nfa::from_json(const nlohmann::json &j) {
  std::string letters;
  for (const auto &l : j.at("alphabet")) {
    auto s = l.get<std::string>();
    if (s.size() != 1)
      throw std::invalid_argument("NFA alphabet entries must be single letters");
    letters += s;
  }
  Nfa a{Alphabet(letters), j.at("states").get<std::size_t>()};
  for (const auto &t : j.at("transitions")) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("NFA transition must be [src, label, dst]");
    auto label = t[1].get<std::string>();
    char c;
    if (label == "eps")
      c = kEpsilon;
    else if (label.size() == 1)
      c = label[0];
    else
      throw std::invalid_argument("NFA label must be a letter or \"eps\"");
    a.add(t[0].get<std::size_t>(), c, t[2].get<std::size_t>());
  }
  for (const auto &q : j.at("initial"))
    a.initial.insert(q.get<std::size_t>());
  for (const auto &q : j.at("finals"))
    a.finals.insert(q.get<std::size_t>());
  a.validate();
  return a;
}

namespace {

std::vector<std::vector<std::size_t>> eps_successors(const Nfa &a) {
  std::vector<std::vector<std::size_t>> succ(a.states);
  for (const auto &t : a.delta)
    if (t.label == kEpsilon)
      succ[t.src].push_back(t.dst);
  return succ;
}

std::vector<bool> closure_of(const std::vector<bool> &set,
                             const std::vector<std::vector<std::size_t>> &eps) {
  std::vector<bool> out(set);
  std::vector<std::size_t> stack;
  for (std::size_t q = 0; q < out.size(); ++q)
    if (out[q])
      stack.push_back(q);
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (auto r : eps[q])
      if (!out[r]) {
        out[r] = true;
        stack.push_back(r);
      }
  }
  return out;
}

} // namespace

bool nfa_accepts(const Nfa &a, std::string_view word) {
  auto eps = eps_successors(a);
  std::vector<bool> cur(a.states, false);
  for (auto q : a.initial)
    cur[q] = true;
  cur = closure_of(cur, eps);
  for (char c : word) {
    if (!a.sigma.contains(c))
      throw AlphabetError(std::string("foreign letter '") + c + "'");
    std::vector<bool> nxt(a.states, false);
    for (const auto &t : a.delta)
      if (t.label == c && cur[t.src])
        nxt[t.dst] = true;
    cur = closure_of(nxt, eps);
  }
  return std::any_of(a.finals.begin(), a.finals.end(),
                     [&](std::size_t q) { return cur[q]; });
}

Nfa single_initial(const Nfa &a) {
  if (a.initial.size() == 1)
    return a;
  Nfa out = a;
  auto fresh = out.add_state();
  for (auto q : a.initial)
    out.add(fresh, kEpsilon, q);
  out.initial = {fresh};
  return out;
}

namespace oracle {

Nfa thompson(const Regex &e, const Alphabet &sigma) {
  Nfa a{sigma};
  struct Fragment {
    std::size_t start, end;
  };
  auto build = [&](auto &&self, const Regex &r) -> Fragment {
    switch (r.kind()) {
    case Regex::Kind::Zero:
      return {a.add_state(), a.add_state()};
    case Regex::Kind::One: {
      Fragment f{a.add_state(), a.add_state()};
      a.add(f.start, kEpsilon, f.end);
      return f;
    }
    case Regex::Kind::Atom: {
      Fragment f{a.add_state(), a.add_state()};
      a.add(f.start, r.letter(), f.end);
      return f;
    }
    case Regex::Kind::Sum: {
      Fragment l = self(self, r.lhs()), rr = self(self, r.rhs());
      Fragment f{a.add_state(), a.add_state()};
      a.add(f.start, kEpsilon, l.start);
      a.add(f.start, kEpsilon, rr.start);
      a.add(l.end, kEpsilon, f.end);
      a.add(rr.end, kEpsilon, f.end);
      return f;
    }
    case Regex::Kind::Prod: {
      Fragment l = self(self, r.lhs()), rr = self(self, r.rhs());
      a.add(l.end, kEpsilon, rr.start);
      return {l.start, rr.end};
    }
    case Regex::Kind::Star: {
      Fragment body = self(self, r.inner());
      Fragment f{a.add_state(), a.add_state()};
      a.add(f.start, kEpsilon, body.start);
      a.add(f.start, kEpsilon, f.end);
      a.add(body.end, kEpsilon, body.start);
      a.add(body.end, kEpsilon, f.end);
      return f;
    }
    }
    throw std::logic_error("thompson: unknown regex kind");
  };
  Fragment f = build(build, e);
  a.initial = {f.start};
  a.finals = {f.end};
  return a;
}

Nfa eps_close(const Nfa &a) {
  auto eps = eps_successors(a);
  Nfa out{a.sigma, a.states};
  out.initial = a.initial;
  for (std::size_t q = 0; q < a.states; ++q) {
    std::vector<bool> start(a.states, false);
    start[q] = true;
    auto cl = closure_of(start, eps);
    for (std::size_t p = 0; p < a.states; ++p) {
      if (!cl[p])
        continue;
      if (a.finals.count(p))
        out.finals.insert(q);
    }
    for (const auto &t : a.delta)
      if (t.label != kEpsilon && cl[t.src])
        out.add(q, t.label, t.dst);
  }
  return out;
}

Dfa subset_construction(const Nfa &a) {
  if (a.has_epsilon())
    throw std::invalid_argument("subset_construction: input has ε-moves");
  const std::size_t k = a.sigma.size();
  std::vector<std::vector<std::vector<std::size_t>>> succ(
      a.states, std::vector<std::vector<std::size_t>>(k));
  for (const auto &t : a.delta)
    succ[t.src][a.sigma.index(t.label)].push_back(t.dst);

  using Subset = std::vector<std::size_t>; // sorted
  std::map<Subset, std::size_t> ids;
  std::vector<Subset> subsets;
  Dfa d{a.sigma};
  auto intern = [&](Subset s) {
    auto [it, fresh] = ids.emplace(s, subsets.size());
    if (fresh) {
      subsets.push_back(std::move(s));
      d.delta.resize(subsets.size() * k);
    }
    return it->second;
  };
  intern(Subset(a.initial.begin(), a.initial.end()));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<bool> hit(a.states, false);
      for (auto q : subsets[i])
        for (auto r : succ[q][c])
          hit[r] = true;
      Subset s;
      for (std::size_t r = 0; r < a.states; ++r)
        if (hit[r])
          s.push_back(r);
      auto id = intern(std::move(s));
      d.delta[i * k + c] = id;
    }
  }
  d.states = subsets.size();
  d.finals.resize(d.states);
  for (std::size_t i = 0; i < d.states; ++i)
    d.finals[i] = std::any_of(subsets[i].begin(), subsets[i].end(),
                              [&](std::size_t q) { return a.finals.count(q); });
  return d;
}

Language canonical(const Dfa &d) {
  const std::size_t k = d.sigma.size();
  std::vector<std::size_t> order, number(d.states, SIZE_MAX);
  std::queue<std::size_t> work;
  number[0] = 0;
  order.push_back(0);
  work.push(0);
  while (!work.empty()) {
    auto q = work.front();
    work.pop();
    for (std::size_t c = 0; c < k; ++c) {
      auto r = d.next(q, c);
      if (number[r] == SIZE_MAX) {
        number[r] = order.size();
        order.push_back(r);
        work.push(r);
      }
    }
  }
  std::vector<bool> finals(order.size());
  std::vector<std::size_t> delta(order.size() * k);
  for (std::size_t i = 0; i < order.size(); ++i) {
    finals[i] = d.finals[order[i]];
    for (std::size_t c = 0; c < k; ++c)
      delta[i * k + c] = number[d.next(order[i], c)];
  }
  return Language(d.sigma, order.size(), std::move(finals), std::move(delta));
}

Language hopcroft_minimise(const Dfa &input) {
  // Work on the reachable part in canonical numbering.
  Language reach = canonical(input);
  const std::size_t n = reach.states(), k = reach.alphabet().size();

  std::vector<std::vector<std::vector<std::size_t>>> pred(
      k, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t c = 0; c < k; ++c)
      pred[c][reach.next(q, c)].push_back(q);

  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(n);
  {
    std::vector<std::size_t> acc, rej;
    for (std::size_t q = 0; q < n; ++q)
      (reach.accepting(q) ? acc : rej).push_back(q);
    for (auto *b : {&acc, &rej})
      if (!b->empty()) {
        for (auto q : *b)
          block_of[q] = blocks.size();
        blocks.push_back(std::move(*b));
      }
  }
  std::vector<bool> in_work(blocks.size(), true);
  std::vector<std::size_t> work;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    work.push_back(b);

  while (!work.empty()) {
    auto splitter = work.back();
    work.pop_back();
    in_work[splitter] = false;
    const std::vector<std::size_t> members = blocks[splitter];
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<bool> in_x(n, false);
      std::vector<std::size_t> touched;
      for (auto q : members)
        for (auto p : pred[c][q])
          if (!in_x[p]) {
            in_x[p] = true;
            touched.push_back(block_of[p]);
          }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (auto y : touched) {
        std::vector<std::size_t> inside, outside;
        for (auto q : blocks[y])
          (in_x[q] ? inside : outside).push_back(q);
        if (outside.empty())
          continue;
        auto fresh = blocks.size();
        blocks[y] = std::move(inside);
        blocks.push_back(std::move(outside));
        for (auto q : blocks[fresh])
          block_of[q] = fresh;
        in_work.push_back(false);
        if (in_work[y]) {
          in_work[fresh] = true;
          work.push_back(fresh);
        } else {
          auto smaller = blocks[y].size() <= blocks[fresh].size() ? y : fresh;
          in_work[smaller] = true;
          work.push_back(smaller);
        }
      }
    }
  }

  Dfa quotient{reach.alphabet()};
  quotient.states = blocks.size();
  quotient.finals.resize(blocks.size());
  quotient.delta.resize(blocks.size() * k);
  // Renumber so that the block of state 0 comes first.
  std::vector<std::size_t> rename(blocks.size());
  std::size_t next_id = 1;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    rename[b] = b == block_of[0] ? 0 : next_id++;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto rep = blocks[b].front();
    quotient.finals[rename[b]] = reach.accepting(rep);
    for (std::size_t c = 0; c < k; ++c)
      quotient.delta[rename[b] * k + c] = rename[block_of[reach.next(rep, c)]];
  }
  return canonical(quotient);
}

Nfa reversed(const Nfa &a) {
  Nfa out{a.sigma, a.states};
  for (const auto &t : a.delta)
    out.add(t.dst, t.label, t.src);
  out.initial = a.finals;
  out.finals = a.initial;
  return out;
}

Nfa as_nfa(const Dfa &d) {
  Nfa out{d.sigma, d.states};
  for (std::size_t q = 0; q < d.states; ++q) {
    for (std::size_t c = 0; c < d.sigma.size(); ++c)
      out.add(q, d.sigma[c], d.next(q, c));
    if (d.finals[q])
      out.finals.insert(q);
  }
  out.initial = {0};
  return out;
}

Language brzozowski_minimise(const Nfa &a) {
  Dfa back = subset_construction(eps_close(reversed(a)));
  Dfa forth = subset_construction(reversed(as_nfa(back)));
  return canonical(forth);
}

Language nfa_language(const Nfa &a) {
  return hopcroft_minimise(subset_construction(eps_close(a)));
}

namespace {

// Places the DFA of `l` into `a` and returns the state offset.
std::size_t embed(Nfa &a, const Language &l) {
  const std::size_t base = a.states;
  a.states += l.states();
  for (std::size_t q = 0; q < l.states(); ++q)
    for (std::size_t c = 0; c < l.alphabet().size(); ++c)
      a.add(base + q, l.alphabet()[c], base + l.next(q, c));
  return base;
}

std::vector<std::size_t> final_states(const Language &l, std::size_t base) {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < l.states(); ++q)
    if (l.accepting(q))
      out.push_back(base + q);
  return out;
}

Language combine(Regex::Kind kind, const Language &x, const Language *y) {
  Nfa a(x.alphabet(), 1);
  a.initial.insert(0);
  const std::size_t bx = embed(a, x);
  a.add(0, kEpsilon, bx);
  if (kind == Regex::Kind::Star) {
    a.finals.insert(0);
    for (auto f : final_states(x, bx))
      a.add(f, kEpsilon, 0);
    return nfa_language(a);
  }
  const std::size_t by = embed(a, *y);
  if (kind == Regex::Kind::Sum) {
    a.add(0, kEpsilon, by);
    for (auto f : final_states(x, bx))
      a.finals.insert(f);
  } else {
    for (auto f : final_states(x, bx))
      a.add(f, kEpsilon, by);
  }
  for (auto f : final_states(*y, by))
    a.finals.insert(f);
  return nfa_language(a);
}

} // namespace

Language denote_shared(const Regex &e, const Alphabet &sigma) {
  constexpr std::size_t kSmall = 32;
  std::unordered_map<const void *, std::size_t> size;
  auto tree_size = [&](auto &&self, const Regex &r) -> std::size_t {
    if (auto it = size.find(r.node_id()); it != size.end())
      return it->second;
    std::size_t n = 1;
    if (r.kind() == Regex::Kind::Star)
      n += self(self, r.inner());
    else if (r.kind() == Regex::Kind::Sum || r.kind() == Regex::Kind::Prod)
      n += self(self, r.lhs()) + self(self, r.rhs());
    n = std::min(n, kSmall + 1);
    size.emplace(r.node_id(), n);
    return n;
  };
  std::unordered_map<const void *, Language> memo;
  auto go = [&](auto &&self, const Regex &r) -> Language {
    if (auto it = memo.find(r.node_id()); it != memo.end())
      return it->second;
    Language l = tree_size(tree_size, r) <= kSmall ? denote_regex(r, sigma)
                 : r.kind() == Regex::Kind::Star
                     ? combine(r.kind(), self(self, r.inner()), nullptr)
                     : [&] {
                         Language rhs = self(self, r.rhs());
                         return combine(r.kind(), self(self, r.lhs()), &rhs);
                       }();
    memo.emplace(r.node_id(), l);
    return l;
  };
  return go(go, e);
}

bool nfa_lang_equal(const Nfa &a, const Nfa &b) {
  if (a.sigma != b.sigma)
    throw AlphabetError("nfa_lang_equal: alphabet mismatch");
  return nfa_language(a) == nfa_language(b);
}

} // namespace oracle
} // namespace kaa
