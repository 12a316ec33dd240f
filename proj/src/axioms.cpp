#include "kaa/axioms.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "kaa/encode.hpp"
#include "kaa/kad.hpp"
#include "kaa/normalform.hpp"

namespace kaa {

const std::vector<AxiomSchema> &axiom_catalog() {
  static const std::vector<AxiomSchema> catalog = {
      {"A1", {}, false, "snake for a > wire"},
      {"A2", {}, false, "snake for a < wire"},
      {"A3", {}, false, "a closed loop vanishes"},
      {"B1", {}, false, "copy is coassociative"},
      {"B2", {}, false, "delete is a counit for copy"},
      {"B3", {}, false, "copy is cocommutative"},
      {"B4", {}, false, "merge is associative"},
      {"B5", {}, false, "unit is a unit for merge"},
      {"B6", {}, false, "merge is commutative"},
      {"B7", {}, false, "merge then copy is a bialgebra"},
      {"B8", {}, false, "unit then copy"},
      {"B9", {}, false, "merge then delete"},
      {"B10", {}, false, "copy then merge is the identity"},
      {"B11", {}, false, "unit then delete is empty"},
      {"B12", {}, false, "feedback of merge then copy is the identity"},
      {"C1", {"e", "f"}, false, "acting by a product"},
      {"C2", {}, false, "acting by one"},
      {"C3", {}, false, "acting by zero"},
      {"C4", {"e", "f"}, false, "acting by a sum"},
      {"C5", {"e"}, false, "acting by a star"},
      {"D1", {"e"}, false, "action then copy"},
      {"D2", {"e"}, false, "action then delete"},
      {"D3", {"e"}, false, "merge then action"},
      {"D4", {"e"}, false, "unit then action"},
      {"E1", {"e"}, false, "red copy is coassociative"},
      {"E2L", {"e"}, false, "red delete is a left counit"},
      {"E2R", {"e"}, false, "red delete is a right counit"},
      {"E3", {"e"}, false, "red copy is cocommutative"},
      {"E4", {"e"}, false, "star commutes with copy"},
      {"E5", {"e"}, false, "star commutes with delete"},
      {"E6", {}, true, "letter commutes with copy"},
      {"E7", {}, true, "letter commutes with delete"},
      {"E8", {"e", "f"}, false, "product commutes with copy"},
      {"E9", {"e", "f"}, false, "product commutes with delete"},
      {"E10", {}, false, "one commutes with copy"},
      {"E11", {}, false, "one commutes with delete"},
      {"E13", {"e", "f"}, false, "sum commutes with delete"},
      {"E14a", {"e", "f"}, false, "sum commutes with copy"},
      {"E14b", {}, false, "zero commutes with delete"},
      {"E15", {}, false, "zero commutes with copy"},
  };
  return catalog;
}

const std::vector<std::string> &macro_ids() {
  static const std::vector<std::string> ids = {"CPY", "DEL", "COCPY", "CODEL", "REP", "PERM"};
  return ids;
}

bool is_axiom(const std::string &id) {
  const auto &c = axiom_catalog();
  return std::any_of(c.begin(), c.end(), [&](const AxiomSchema &a) { return a.id == id; });
}

bool is_macro(const std::string &id) {
  const auto &m = macro_ids();
  return std::find(m.begin(), m.end(), id) != m.end();
}

const AxiomSchema &axiom_schema(const std::string &id) {
  for (const auto &a : axiom_catalog())
    if (a.id == id)
      return a;
  throw std::invalid_argument("unknown axiom '" + id + "'");
}

namespace {

constexpr Obj R = Obj::Red, B = Obj::Right, L = Obj::Left;

Term G(Gen g) { return Term::gen(g); }
Term I(Interface i) { return Term::id(std::move(i)); }
Term S(Obj a, Obj b) { return Term::sym(a, b); }
Term seq(std::initializer_list<Term> ts) { return Term::seq_all(ts); }
Term par(std::initializer_list<Term> ts) { return Term::par_all(ts); }

// a ; copy-like ; (x|x) with the middle wires crossed, for E8/E14a/B7.
Term bialgebra(Term copy2, Term op2, Obj o) {
  return seq({par({copy2, copy2}), par({I({o}), S(o, o), I({o})}), par({op2, op2})});
}

char letter_of(const Subst &s) {
  auto it = s.find("a");
  if (it == s.end() || it->second.kind() != Regex::Kind::Atom)
    throw SubstError("letter schema needs an atom for 'a'");
  return it->second.letter();
}

} // namespace

std::pair<Term, Term> axiom_open_sides(const std::string &id, const Subst &s) {
  const Term copy = G(Gen::BlackCopy), del = G(Gen::BlackDelete), merge = G(Gen::BlackMerge),
             unit = G(Gen::BlackUnit), cup = G(Gen::Cup), cap = G(Gen::Cap),
             act = G(Gen::Action), rcopy = G(Gen::RedCopy), rdel = G(Gen::RedDelete);

  if (id == "A1")
    return {seq({par({cup, I({B})}), par({I({B}), cap})}), I({B})};
  if (id == "A2")
    return {seq({par({I({L}), cup}), par({cap, I({L})})}), I({L})};
  if (id == "A3")
    return {seq({cup, S(B, L), cap}), I({})};

  if (id == "B1")
    return {seq({copy, par({copy, I({B})})}), seq({copy, par({I({B}), copy})})};
  if (id == "B2")
    return {seq({copy, par({del, I({B})})}), I({B})};
  if (id == "B3")
    return {seq({copy, S(B, B)}), copy};
  if (id == "B4")
    return {seq({par({merge, I({B})}), merge}), seq({par({I({B}), merge}), merge})};
  if (id == "B5")
    return {seq({par({unit, I({B})}), merge}), I({B})};
  if (id == "B6")
    return {seq({S(B, B), merge}), merge};
  if (id == "B7")
    return {seq({merge, copy}), bialgebra(copy, merge, B)};
  if (id == "B8")
    return {seq({unit, copy}), par({unit, unit})};
  if (id == "B9")
    return {seq({merge, del}), par({del, del})};
  if (id == "B10")
    return {seq({copy, merge}), I({B})};
  if (id == "B11")
    return {seq({unit, del}), I({})};
  if (id == "B12")
    return {trace_term(seq({merge, copy}), 1), I({B})};

  if (id == "C1")
    return {seq({par({G(Gen::Prod), I({B})}), act}),
            seq({par({S(R, R), I({B})}), par({I({R}), act}), act})};
  if (id == "C2")
    return {seq({par({G(Gen::One), I({B})}), act}), I({B})};
  if (id == "C3")
    return {seq({par({G(Gen::Zero), I({B})}), act}), seq({del, unit})};
  if (id == "C4")
    return {seq({par({G(Gen::Sum), I({B})}), act}),
            seq({par({I({R, R}), copy}), par({I({R}), S(R, B), I({B})}), par({act, act}), merge})};
  if (id == "C5") {
    Term body = seq({par({S(B, R), I({B})}), par({I({R}), merge}), par({I({R}), copy}),
                     par({act, I({B})})});
    return {seq({par({G(Gen::Star), I({B})}), act}), trace_term(body, 1)};
  }

  if (id == "D1")
    return {seq({act, copy}),
            seq({par({rcopy, copy}), par({I({R}), S(R, B), I({B})}), par({act, act})})};
  if (id == "D2")
    return {seq({act, del}), par({rdel, del})};
  if (id == "D3")
    return {seq({par({I({R}), merge}), act}),
            seq({par({rcopy, I({B, B})}), par({I({R}), S(R, B), I({B})}), par({act, act}), merge})};
  if (id == "D4")
    return {seq({par({I({R}), unit}), act}), par({rdel, unit})};

  if (id == "E1")
    return {seq({rcopy, par({rcopy, I({R})})}), seq({rcopy, par({I({R}), rcopy})})};
  if (id == "E2L")
    return {seq({rcopy, par({rdel, I({R})})}), I({R})};
  if (id == "E2R")
    return {seq({rcopy, par({I({R}), rdel})}), I({R})};
  if (id == "E3")
    return {seq({rcopy, S(R, R)}), rcopy};
  if (id == "E4")
    return {seq({G(Gen::Star), rcopy}), seq({rcopy, par({G(Gen::Star), G(Gen::Star)})})};
  if (id == "E5")
    return {seq({G(Gen::Star), rdel}), rdel};
  if (id == "E6") {
    Term a = Term::atom(letter_of(s));
    return {seq({a, rcopy}), par({a, a})};
  }
  if (id == "E7")
    return {seq({Term::atom(letter_of(s)), rdel}), I({})};
  if (id == "E8")
    return {seq({G(Gen::Prod), rcopy}), bialgebra(rcopy, G(Gen::Prod), R)};
  if (id == "E9")
    return {seq({G(Gen::Prod), rdel}), par({rdel, rdel})};
  if (id == "E10")
    return {seq({G(Gen::One), rcopy}), par({G(Gen::One), G(Gen::One)})};
  if (id == "E11")
    return {seq({G(Gen::One), rdel}), I({})};
  if (id == "E13")
    return {seq({G(Gen::Sum), rdel}), par({rdel, rdel})};
  if (id == "E14a")
    return {seq({G(Gen::Sum), rcopy}), bialgebra(rcopy, G(Gen::Sum), R)};
  if (id == "E14b")
    return {seq({G(Gen::Zero), rdel}), I({})};
  if (id == "E15")
    return {seq({G(Gen::Zero), rcopy}), par({G(Gen::Zero), G(Gen::Zero)})};

  throw std::invalid_argument("unknown axiom '" + id + "'");
}

namespace {

void check_subst(const AxiomSchema &a, const Subst &s) {
  std::set<std::string> want(a.metavars.begin(), a.metavars.end());
  if (a.letter)
    want.insert("a");
  std::set<std::string> got;
  for (const auto &[k, v] : s)
    got.insert(k);
  if (want != got)
    throw SubstError("substitution for " + a.id + " must bind exactly {" + [&] {
      std::string x;
      for (const auto &w : want)
        x += (x.empty() ? "" : ",") + w;
      return x;
    }() + "}");
}

Term close(const Term &side, const AxiomSchema &a, const Subst &s) {
  if (a.metavars.empty())
    return side;
  auto [dom, cod] = typecheck(side);
  std::vector<Term> feed;
  for (const auto &v : a.metavars)
    feed.push_back(state_term(s.at(v)));
  Interface rest(dom.begin() + a.metavars.size(), dom.end());
  if (!rest.empty())
    feed.push_back(Term::id(rest));
  return Term::seq(Term::par_all(feed), side);
}

// R^k >^k -> >^k, each red wire acting on its own > wire.
Term act_each(std::size_t k) {
  PortGraph g;
  g.dom.assign(k, R);
  g.dom.insert(g.dom.end(), k, B);
  g.cod.assign(k, B);
  for (std::size_t i = 0; i < k; ++i) {
    g.nodes.push_back(Label{Gen::Action});
    g.wires.push_back({{Endpoint::kBoundary, i}, {i, 0}, R});
    g.wires.push_back({{Endpoint::kBoundary, k + i}, {i, 1}, B});
    g.wires.push_back({{i, 0}, {Endpoint::kBoundary, i}, B});
  }
  return to_term(g);
}

} // namespace

std::pair<Term, Term> axiom_sides(const std::string &id, const Subst &s) {
  const AxiomSchema &a = axiom_schema(id);
  check_subst(a, s);
  auto [lhs, rhs] = axiom_open_sides(id, s);
  return {close(lhs, a, s), close(rhs, a, s)};
}

std::pair<Term, Term> axiom_acting_sides(const std::string &id, const Subst &s) {
  auto [lhs, rhs] = axiom_sides(id, s);
  auto [dom, cod] = typecheck(lhs);
  const std::size_t k = static_cast<std::size_t>(std::count(cod.begin(), cod.end(), R));
  if (k == 0)
    return {lhs, rhs};
  if (k != cod.size() || !dom.empty())
    throw std::logic_error("axiom_acting_sides: mixed red and black outputs");
  auto act = [&](const Term &t) {
    return Term::seq(Term::par(t, Term::id(Interface(k, B))), act_each(k));
  };
  return {act(lhs), act(rhs)};
}

SoundnessReport check_axiom(const std::string &id, std::size_t samples, std::uint64_t seed,
                            const Alphabet &sigma) {
  const AxiomSchema &a = axiom_schema(id);
  SoundnessReport rep{id, samples, true, ""};
  std::mt19937_64 rng(seed ^ std::hash<std::string>{}(id));
  for (std::size_t k = 0; k < samples && rep.sound; ++k) {
    Subst s;
    for (const auto &v : a.metavars)
      s.emplace(v, random_regex(rng(), 3, sigma));
    if (a.letter)
      s.emplace("a", Regex::atom(sigma[rng() % sigma.size()]));
    auto describe = [&] {
      std::string x;
      for (const auto &[v, e] : s)
        x += (x.empty() ? "" : ", ") + v + " = " + e.str();
      return x.empty() ? std::string("no substitution") : x;
    };
    auto [lhs, rhs] = axiom_acting_sides(id, s);
    if (!sem_equal(lhs, rhs, sigma)) {
      rep.sound = false;
      rep.failure = "denotations differ under " + describe();
      break;
    }
    if (id[0] == 'E') {
      auto [ol, orr] = axiom_open_sides(id, s);
      std::vector<Regex> env;
      for (const auto &v : a.metavars)
        env.push_back(s.at(v));
      if (!(eval_red(ol, env) == eval_red(orr, env))) {
        rep.sound = false;
        rep.failure = "red evaluation differs under " + describe();
      }
    }
  }
  return rep;
}

} // namespace kaa
