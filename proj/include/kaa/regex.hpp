#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace kaa {

/// Raised for malformed textual input; `position` is a byte offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class AlphabetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Ordered set of single-character letters. Characters with a syntactic
/// role in regex or diagram text (0 1 + * . ( ) [ ] etc.) are reserved.
class Alphabet {
public:
  explicit Alphabet(std::string_view letters);

  const std::string &letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool contains(char c) const noexcept;
  /// Position of `c` in alphabet order; throws AlphabetError if absent.
  std::size_t index(char c) const;
  char operator[](std::size_t i) const { return letters_[i]; }

  static bool reserved(char c) noexcept;

  friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
  std::string letters_;
};

/// Immutable regular-expression syntax tree with shared subterms.
class Regex {
public:
  enum class Kind : std::uint8_t { Zero, One, Atom, Sum, Prod, Star };

  static Regex zero();
  static Regex one();
  static Regex atom(char letter);
  static Regex sum(Regex lhs, Regex rhs);
  static Regex prod(Regex lhs, Regex rhs);
  static Regex star(Regex inner);

  Kind kind() const noexcept { return node_->kind; }
  char letter() const noexcept { return node_->letter; }
  const Regex &lhs() const { return *node_->lhs; }
  const Regex &rhs() const { return *node_->rhs; }
  /// Operand of Star.
  const Regex &inner() const { return *node_->lhs; }

  std::size_t depth() const;
  /// Whether the empty word belongs to the language (syntactic).
  bool nullable() const;

  /// Concrete syntax; re-parses to a structurally identical tree.
  std::string str() const;
  /// Prefix dump, e.g. `Prod(Atom(a),Star(One))`.
  std::string ast() const;

  /// Identity of the shared node; equal for copies of the same value.
  const void *node_id() const noexcept { return node_.get(); }

  friend bool operator==(const Regex &a, const Regex &b);

private:
  struct Node {
    Kind kind;
    char letter = 0;
    std::shared_ptr<const Regex> lhs, rhs;
  };
  explicit Regex(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Unit/zero absorbing constructors: e.1 = e, e+0 = e, 0.e = 0, 0* = 1, 1* = 1.
Regex simplified_sum(const Regex &a, const Regex &b);
Regex simplified_prod(const Regex &a, const Regex &b);
Regex simplified_star(const Regex &a);

/// Parses `+` (sum), juxtaposition or `.` (product), postfix `*`,
/// literals `0` `1`, letters of `sigma`, and parentheses.
Regex parse_regex(std::string_view text, const Alphabet &sigma);

/// Letters appearing in `e` that are not in `sigma` (empty if none).
std::string foreign_letters(const Regex &e, const Alphabet &sigma);

/// Seeded generator. Letters outweigh 0 and 1, inner nodes outweigh
/// leaves; leaves only once `max_depth` is reached.
Regex random_regex(std::uint64_t seed, int max_depth, const Alphabet &sigma);

/// A regular language, kept as its canonical minimal complete DFA.
/// States are numbered breadth-first from the initial state (always 0),
/// following letters in alphabet order; equal languages give equal values.
class Language {
public:
  Language(Alphabet sigma, std::size_t states, std::vector<bool> finals,
           std::vector<std::size_t> delta);

  const Alphabet &alphabet() const noexcept { return sigma_; }
  std::size_t states() const noexcept { return states_; }
  std::size_t initial() const noexcept { return 0; }
  bool accepting(std::size_t q) const { return finals_[q]; }
  const std::vector<bool> &finals() const noexcept { return finals_; }
  std::size_t next(std::size_t q, std::size_t letter_index) const {
    return delta_[q * sigma_.size() + letter_index];
  }
  const std::vector<std::size_t> &delta() const noexcept { return delta_; }

  bool empty() const;
  /// Number of states that can still reach an accepting state.
  std::size_t live_states() const;

  nlohmann::json to_json() const;
  static Language from_json(const nlohmann::json &j);

  friend bool operator==(const Language &, const Language &) = default;

private:
  Alphabet sigma_;
  std::size_t states_;
  std::vector<bool> finals_;
  std::vector<std::size_t> delta_;
};

Language denote_regex(const Regex &e, const Alphabet &sigma);

/// Throws AlphabetError when the alphabets differ.
bool lang_equal(const Language &x, const Language &y);
/// Inclusion of x in y, by search of the product automaton.
bool lang_subset(const Language &x, const Language &y);
/// Throws AlphabetError on a letter outside the alphabet.
bool member(const Language &x, std::string_view word);

} // namespace kaa
