#include "kaa/kad.hpp"

#include <cctype>
#include <map>

namespace kaa {

Term state_term(const Regex &e) {
  switch (e.kind()) {
  case Regex::Kind::Zero:
    return Term::gen(Gen::Zero);
  case Regex::Kind::One:
    return Term::gen(Gen::One);
  case Regex::Kind::Atom:
    return Term::atom(e.letter());
  case Regex::Kind::Sum:
    return Term::seq(Term::par(state_term(e.lhs()), state_term(e.rhs())),
                     Term::gen(Gen::Sum));
  case Regex::Kind::Prod:
    return Term::seq(Term::par(state_term(e.lhs()), state_term(e.rhs())),
                     Term::gen(Gen::Prod));
  case Regex::Kind::Star:
    return Term::seq(state_term(e.inner()), Term::gen(Gen::Star));
  }
  throw std::logic_error("state_term: unknown regex kind");
}

Term scalar_term(const Regex &e) {
  return Term::seq(Term::par(state_term(e), Term::id(Obj::Right)),
                   Term::gen(Gen::Action));
}

namespace {

class KadParser {
public:
  KadParser(std::string_view text, const Alphabet &sigma)
      : text_(text), sigma_(sigma) {}

  Term parse() {
    Term t = sequence();
    skip();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(what, pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term sequence() {
    Term t = parallel();
    while (eat(';'))
      t = Term::seq(t, parallel());
    return t;
  }

  Term parallel() {
    Term t = primary();
    while (eat('|'))
      t = Term::par(t, primary());
    return t;
  }

  Term primary() {
    if (eat('(')) {
      Term t = sequence();
      if (!eat(')'))
        fail("expected ')'");
      return t;
    }
    skip();
    const std::size_t start = pos_;
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      word.push_back(text_[pos_++]);
    if (word.empty())
      fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                               : std::string("unexpected end of input"));

    if (word == "id" || word == "sym") {
      if (pos_ >= text_.size() || text_[pos_] != ':')
        fail("expected ':' after " + word);
      ++pos_;
      Interface objs;
      if (word == "id" && pos_ < text_.size() && text_[pos_] == 'I') {
        ++pos_;
        return Term::id(objs);
      }
      while (pos_ < text_.size() &&
             (text_[pos_] == 'R' || text_[pos_] == '>' || text_[pos_] == '<'))
        objs.push_back(obj_from_char(text_[pos_++]));
      if (word == "sym") {
        if (objs.size() != 2)
          fail("sym takes exactly two objects");
        return Term::sym(objs[0], objs[1]);
      }
      if (objs.empty())
        fail("id needs objects or I");
      return Term::id(objs);
    }

    if (word == "atom" || word == "scalar" || word == "state") {
      if (pos_ >= text_.size() || text_[pos_] != '[')
        fail("expected '[' after " + word);
      const std::size_t open = ++pos_;
      while (pos_ < text_.size() && text_[pos_] != ']')
        ++pos_;
      if (pos_ >= text_.size())
        fail("unterminated '['");
      std::string_view arg = text_.substr(open, pos_ - open);
      ++pos_;
      if (word == "atom") {
        if (arg.size() != 1 || !sigma_.contains(arg[0])) {
          pos_ = open;
          fail("atom needs one letter of the alphabet");
        }
        return Term::atom(arg[0]);
      }
      Regex e = Regex::one();
      try {
        e = parse_regex(arg, sigma_);
      } catch (const ParseError &err) {
        throw ParseError(std::string("in ") + word + ": " + err.what(),
                         open + err.position());
      }
      return word == "scalar" ? scalar_term(e) : state_term(e);
    }

    static const std::map<std::string, Gen> names = {
        {"rcopy", Gen::RedCopy}, {"rdel", Gen::RedDelete}, {"star", Gen::Star},
        {"prod", Gen::Prod},     {"rone", Gen::One},       {"rsum", Gen::Sum},
        {"rzero", Gen::Zero},    {"act", Gen::Action},     {"copy", Gen::BlackCopy},
        {"del", Gen::BlackDelete}, {"merge", Gen::BlackMerge},
        {"unit", Gen::BlackUnit}, {"cap", Gen::Cap},      {"cup", Gen::Cup},
    };
    auto it = names.find(word);
    if (it == names.end()) {
      pos_ = start;
      fail("unknown generator '" + word + "'");
    }
    return Term::gen(it->second);
  }

  std::string_view text_;
  const Alphabet &sigma_;
  std::size_t pos_ = 0;
};

} // namespace

Term parse_kad(std::string_view text, const Alphabet &sigma) {
  Term t = KadParser(text, sigma).parse();
  typecheck(t);
  return t;
}

std::string to_kad(const Term &t) {
  switch (t.kind()) {
  case Term::Kind::Gen:
    return t.label().name();
  case Term::Kind::Id:
    return "id:" + interface_str(t.objects());
  case Term::Kind::Sym:
    return "sym:" + interface_str(t.objects());
  case Term::Kind::Seq: {
    std::string rhs = to_kad(t.second());
    if (t.second().kind() == Term::Kind::Seq)
      rhs = "(" + rhs + ")";
    return to_kad(t.first()) + " ; " + rhs;
  }
  case Term::Kind::Par: {
    auto wrap = [](const Term &s, bool right) {
      std::string x = to_kad(s);
      if (s.kind() == Term::Kind::Seq || (right && s.kind() == Term::Kind::Par))
        return "(" + x + ")";
      return x;
    };
    return wrap(t.first(), false) + " | " + wrap(t.second(), true);
  }
  }
  throw std::logic_error("to_kad: unknown term kind");
}

} // namespace kaa
