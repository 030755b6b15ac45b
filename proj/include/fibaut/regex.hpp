// Regular expressions over tuple alphabets.
#pragma once

#include <string_view>

#include "fibaut/automaton.hpp"

namespace fibaut {

class RegexError : public AutomatonError {
 public:
  RegexError(const std::string& msg, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Minimal DFA for the exact language of `pattern`.
///
/// Symbols are written `[b1,...,bk]`; for arity 1 bare `0` and `1` are also
/// accepted. Operators: concatenation, `|`, `*`, `+`, `?` and parentheses;
/// `()` denotes the empty word. No padding closure is applied.
Automaton regex_compile(std::string_view pattern, int arity);

}  // namespace fibaut
