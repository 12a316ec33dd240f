#include "kaa/regex.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <random>
#include <unordered_set>

#include "kaa/oracle.hpp"

namespace kaa {

// ---- Alphabet ---------------------------------------------------------------

bool Alphabet::reserved(char c) noexcept {
  static constexpr std::string_view kReserved = "01+*.()[]|;:<>,#\"\\";
  return c == kEpsilon || !std::isgraph(static_cast<unsigned char>(c)) ||
         kReserved.find(c) != std::string_view::npos;
}

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  if (letters_.empty())
    throw AlphabetError("alphabet must not be empty");
  std::string seen;
  for (char c : letters_) {
    if (reserved(c))
      throw AlphabetError(std::string("reserved character in alphabet: '") +
                          c + "'");
    if (seen.find(c) != std::string::npos)
      throw AlphabetError(std::string("duplicate letter '") + c + "'");
    seen.push_back(c);
  }
}

bool Alphabet::contains(char c) const noexcept {
  return letters_.find(c) != std::string::npos;
}

std::size_t Alphabet::index(char c) const {
  auto pos = letters_.find(c);
  if (pos == std::string::npos)
    throw AlphabetError(std::string("letter '") + c + "' not in alphabet \"" +
                        letters_ + "\"");
  return pos;
}

// ---- Regex ------------------------------------------------------------------

Regex Regex::zero() { return Regex(std::make_shared<const Node>(Node{Kind::Zero})); }
Regex Regex::one() { return Regex(std::make_shared<const Node>(Node{Kind::One})); }
Regex Regex::atom(char letter) {
  return Regex(std::make_shared<const Node>(Node{Kind::Atom, letter}));
}
Regex Regex::sum(Regex lhs, Regex rhs) {
  return Regex(std::make_shared<const Node>(
      Node{Kind::Sum, 0, std::make_shared<const Regex>(std::move(lhs)),
           std::make_shared<const Regex>(std::move(rhs))}));
}
Regex Regex::prod(Regex lhs, Regex rhs) {
  return Regex(std::make_shared<const Node>(
      Node{Kind::Prod, 0, std::make_shared<const Regex>(std::move(lhs)),
           std::make_shared<const Regex>(std::move(rhs))}));
}
Regex Regex::star(Regex inner) {
  return Regex(std::make_shared<const Node>(
      Node{Kind::Star, 0, std::make_shared<const Regex>(std::move(inner))}));
}

bool operator==(const Regex &a, const Regex &b) {
  if (a.node_ == b.node_)
    return true;
  if (a.kind() != b.kind())
    return false;
  switch (a.kind()) {
  case Regex::Kind::Zero:
  case Regex::Kind::One:
    return true;
  case Regex::Kind::Atom:
    return a.letter() == b.letter();
  case Regex::Kind::Star:
    return a.inner() == b.inner();
  case Regex::Kind::Sum:
  case Regex::Kind::Prod:
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

std::size_t Regex::depth() const {
  switch (kind()) {
  case Kind::Zero:
  case Kind::One:
  case Kind::Atom:
    return 1;
  case Kind::Star:
    return 1 + inner().depth();
  default:
    return 1 + std::max(lhs().depth(), rhs().depth());
  }
}

bool Regex::nullable() const {
  switch (kind()) {
  case Kind::Zero:
  case Kind::Atom:
    return false;
  case Kind::One:
  case Kind::Star:
    return true;
  case Kind::Sum:
    return lhs().nullable() || rhs().nullable();
  case Kind::Prod:
    return lhs().nullable() && rhs().nullable();
  }
  return false;
}

namespace {

int precedence(Regex::Kind k) {
  switch (k) {
  case Regex::Kind::Sum:
    return 0;
  case Regex::Kind::Prod:
    return 1;
  case Regex::Kind::Star:
    return 2;
  default:
    return 3;
  }
}

void print(const Regex &e, int context, std::string &out) {
  const bool wrap = precedence(e.kind()) < context;
  if (wrap)
    out.push_back('(');
  switch (e.kind()) {
  case Regex::Kind::Zero:
    out.push_back('0');
    break;
  case Regex::Kind::One:
    out.push_back('1');
    break;
  case Regex::Kind::Atom:
    out.push_back(e.letter());
    break;
  case Regex::Kind::Sum:
    print(e.lhs(), 0, out);
    out.push_back('+');
    print(e.rhs(), 1, out);
    break;
  case Regex::Kind::Prod:
    print(e.lhs(), 1, out);
    print(e.rhs(), 2, out);
    break;
  case Regex::Kind::Star:
    print(e.inner(), 2, out);
    out.push_back('*');
    break;
  }
  if (wrap)
    out.push_back(')');
}

void dump(const Regex &e, std::string &out) {
  switch (e.kind()) {
  case Regex::Kind::Zero:
    out += "Zero";
    return;
  case Regex::Kind::One:
    out += "One";
    return;
  case Regex::Kind::Atom:
    out += "Atom(";
    out.push_back(e.letter());
    out += ")";
    return;
  case Regex::Kind::Star:
    out += "Star(";
    dump(e.inner(), out);
    out += ")";
    return;
  case Regex::Kind::Sum:
  case Regex::Kind::Prod:
    out += e.kind() == Regex::Kind::Sum ? "Sum(" : "Prod(";
    dump(e.lhs(), out);
    out += ",";
    dump(e.rhs(), out);
    out += ")";
    return;
  }
}

} // namespace

std::string Regex::str() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

std::string Regex::ast() const {
  std::string out;
  dump(*this, out);
  return out;
}

Regex simplified_sum(const Regex &a, const Regex &b) {
  if (a.kind() == Regex::Kind::Zero)
    return b;
  if (b.kind() == Regex::Kind::Zero)
    return a;
  return Regex::sum(a, b);
}

Regex simplified_prod(const Regex &a, const Regex &b) {
  if (a.kind() == Regex::Kind::Zero || b.kind() == Regex::Kind::Zero)
    return Regex::zero();
  if (a.kind() == Regex::Kind::One)
    return b;
  if (b.kind() == Regex::Kind::One)
    return a;
  return Regex::prod(a, b);
}

Regex simplified_star(const Regex &a) {
  if (a.kind() == Regex::Kind::Zero || a.kind() == Regex::Kind::One)
    return Regex::one();
  return Regex::star(a);
}

// ---- parser -----------------------------------------------------------------

namespace {

class RegexParser {
public:
  RegexParser(std::string_view text, const Alphabet &sigma)
      : text_(text), sigma_(sigma) {}

  Regex parse() {
    skip();
    Regex e = sum();
    skip();
    if (pos_ != text_.size())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

private:
  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_primary(char c) const {
    return c == '0' || c == '1' || c == '(' ||
           (c != '\0' && !Alphabet::reserved(c));
  }

  Regex sum() {
    Regex e = product();
    while (peek() == '+') {
      ++pos_;
      e = Regex::sum(e, product());
    }
    return e;
  }

  Regex product() {
    Regex e = starred();
    for (;;) {
      char c = peek();
      if (c == '.') {
        ++pos_;
        e = Regex::prod(e, starred());
      } else if (starts_primary(c)) {
        e = Regex::prod(e, starred());
      } else {
        return e;
      }
    }
  }

  Regex starred() {
    Regex e = primary();
    while (peek() == '*') {
      ++pos_;
      e = Regex::star(e);
    }
    return e;
  }

  Regex primary() {
    char c = peek();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of expression", pos_);
    if (c == '0') {
      ++pos_;
      return Regex::zero();
    }
    if (c == '1') {
      ++pos_;
      return Regex::one();
    }
    if (c == '(') {
      std::size_t open = pos_++;
      Regex e = sum();
      if (peek() != ')')
        throw ParseError("unbalanced '(' opened at " + std::to_string(open),
                         pos_);
      ++pos_;
      return e;
    }
    if (!Alphabet::reserved(c)) {
      if (!sigma_.contains(c))
        throw ParseError(std::string("unknown letter '") + c + "'", pos_);
      ++pos_;
      return Regex::atom(c);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const Alphabet &sigma_;
  std::size_t pos_ = 0;
};

} // namespace

Regex parse_regex(std::string_view text, const Alphabet &sigma) {
  return RegexParser(text, sigma).parse();
}

std::string foreign_letters(const Regex &e, const Alphabet &sigma) {
  std::string out;
  std::unordered_set<const void *> seen;
  auto walk = [&](auto &&self, const Regex &r) -> void {
    if (!seen.insert(r.node_id()).second)
      return;
    switch (r.kind()) {
    case Regex::Kind::Atom:
      if (!sigma.contains(r.letter()) &&
          out.find(r.letter()) == std::string::npos)
        out.push_back(r.letter());
      break;
    case Regex::Kind::Star:
      self(self, r.inner());
      break;
    case Regex::Kind::Sum:
    case Regex::Kind::Prod:
      self(self, r.lhs());
      self(self, r.rhs());
      break;
    default:
      break;
    }
  };
  walk(walk, e);
  return out;
}

Regex random_regex(std::uint64_t seed, int max_depth, const Alphabet &sigma) {
  if (max_depth < 1)
    throw std::invalid_argument("random_regex: max_depth must be >= 1");
  std::mt19937_64 rng(seed);
  // weights: 0, 1, letter, sum, product, star
  std::discrete_distribution<int> leaf({1, 2, 7}), node({1, 2, 7, 8, 8, 4});
  std::uniform_int_distribution<std::size_t> letter(0, sigma.size() - 1);
  auto gen = [&](auto &&self, int budget) -> Regex {
    switch (budget <= 1 ? leaf(rng) : node(rng)) {
    case 0:
      return Regex::zero();
    case 1:
      return Regex::one();
    case 2:
      return Regex::atom(sigma[letter(rng)]);
    case 3: {
      Regex l = self(self, budget - 1);
      return Regex::sum(l, self(self, budget - 1));
    }
    case 4: {
      Regex l = self(self, budget - 1);
      return Regex::prod(l, self(self, budget - 1));
    }
    default:
      return Regex::star(self(self, budget - 1));
    }
  };
  return gen(gen, max_depth);
}

// ---- Language ---------------------------------------------------------------

Language::Language(Alphabet sigma, std::size_t states, std::vector<bool> finals,
                   std::vector<std::size_t> delta)
    : sigma_(std::move(sigma)), states_(states), finals_(std::move(finals)),
      delta_(std::move(delta)) {
  if (states_ == 0 || finals_.size() != states_ ||
      delta_.size() != states_ * sigma_.size())
    throw std::invalid_argument("Language: inconsistent DFA dimensions");
  for (auto t : delta_)
    if (t >= states_)
      throw std::invalid_argument("Language: transition target out of range");
}

bool Language::empty() const { return live_states() == 0; }

std::size_t Language::live_states() const {
  std::vector<std::vector<std::size_t>> preds(states_);
  for (std::size_t q = 0; q < states_; ++q)
    for (std::size_t a = 0; a < sigma_.size(); ++a)
      preds[next(q, a)].push_back(q);
  std::vector<bool> live(finals_);
  std::queue<std::size_t> work;
  for (std::size_t q = 0; q < states_; ++q)
    if (live[q])
      work.push(q);
  while (!work.empty()) {
    auto q = work.front();
    work.pop();
    for (auto p : preds[q])
      if (!live[p]) {
        live[p] = true;
        work.push(p);
      }
  }
  return static_cast<std::size_t>(std::count(live.begin(), live.end(), true));
}

nlohmann::json Language::to_json() const {
  nlohmann::json finals = nlohmann::json::array();
  for (std::size_t q = 0; q < states_; ++q)
    if (finals_[q])
      finals.push_back(q);
  return {{"alphabet", sigma_.letters()},
          {"states", states_},
          {"initial", 0},
          {"finals", finals},
          {"delta", delta_}};
}

Language Language::from_json(const nlohmann::json &j) {
  Alphabet sigma(j.at("alphabet").get<std::string>());
  auto n = j.at("states").get<std::size_t>();
  if (j.at("initial").get<std::size_t>() != 0)
    throw std::invalid_argument("Language: canonical form has initial state 0");
  std::vector<bool> finals(n, false);
  for (auto q : j.at("finals")) {
    auto idx = q.get<std::size_t>();
    if (idx >= n)
      throw std::invalid_argument("Language: final state out of range");
    finals[idx] = true;
  }
  return Language(std::move(sigma), n, std::move(finals),
                  j.at("delta").get<std::vector<std::size_t>>());
}

Language denote_regex(const Regex &e, const Alphabet &sigma) {
  if (auto bad = foreign_letters(e, sigma); !bad.empty())
    throw AlphabetError("expression uses letters outside the alphabet: " + bad);
  using namespace oracle;
  return hopcroft_minimise(subset_construction(eps_close(thompson(e, sigma))));
}

bool lang_equal(const Language &x, const Language &y) {
  if (x.alphabet() != y.alphabet())
    throw AlphabetError("lang_equal: alphabet mismatch");
  return x == y;
}

bool lang_subset(const Language &x, const Language &y) {
  if (x.alphabet() != y.alphabet())
    throw AlphabetError("lang_subset: alphabet mismatch");
  const std::size_t k = x.alphabet().size();
  std::vector<bool> seen(x.states() * y.states(), false);
  std::queue<std::pair<std::size_t, std::size_t>> work;
  work.emplace(0, 0);
  seen[0] = true;
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop();
    if (x.accepting(p) && !y.accepting(q))
      return false;
    for (std::size_t a = 0; a < k; ++a) {
      auto np = x.next(p, a), nq = y.next(q, a);
      if (!seen[np * y.states() + nq]) {
        seen[np * y.states() + nq] = true;
        work.emplace(np, nq);
      }
    }
  }
  return true;
}

bool member(const Language &x, std::string_view word) {
  std::size_t q = x.initial();
  for (char c : word)
    q = x.next(q, x.alphabet().index(c));
  return x.accepting(q);
}

} // namespace kaa
