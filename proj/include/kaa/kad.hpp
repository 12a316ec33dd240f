#pragma once

#include <string>
#include <string_view>

#include "kaa/diagram.hpp"
#include "kaa/regex.hpp"

namespace kaa {

/// Parses one diagram expression in the text format:
///
///     rcopy rdel star prod rone rsum rzero atom[x]
///     act copy del merge unit cap cup
///     id:R> id:I sym:R>  state[e] scalar[e]
///
/// `;` composes sequentially, `|` in parallel (binds tighter), parentheses
/// group. The result is typechecked.
Term parse_kad(std::string_view text, const Alphabet &sigma);

/// Text that parse_kad reads back to an identical term (sugar is not
/// reintroduced).
std::string to_kad(const Term &t);

/// The red state of a regex, I -> R, built from rone rzero atom rsum prod star.
Term state_term(const Regex &e);
/// state_term(e) | id:> ; act, of type > -> >.
Term scalar_term(const Regex &e);

} // namespace kaa
