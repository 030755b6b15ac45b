// Primitive relations of <N, +, <> over Fibonacci representations.
//
// Every relation here accepts only tuples whose tracks are valid (no "11"),
// is closed under leading all-zero padding, and is minimal.
#pragma once

#include <cstdint>
#include <initializer_list>

#include "fibaut/automaton.hpp"

namespace fibaut {

/// Strings without a "11" factor (leading zeros allowed).
Automaton valid();
/// Restricts every track of `a` to valid strings.
Automaton restrict_valid(const Automaton& a);
/// All tuples of valid strings.
Automaton valid_tuple(int arity);

Automaton eq();
Automaton lt();
Automaton leq();

/// x + y = z, tracks (x, y, z).
Automaton add();
/// Balance-automaton construction with an explicit pruning bound.
Automaton add_with_bound(int bound);
/// Pruning bound used by add() after self-validation.
int add_bound();

/// n = c, arity 1.
Automaton const_value(std::uint64_t c);
/// z = c * n, tracks (n, z).
Automaton const_mul(std::uint64_t c);
/// z = floor(n / c), tracks (n, z).
Automaton const_div(std::uint64_t c);

/// DFAO whose output at n is the last digit of the representation of n.
Automaton fibword();

/// Conjunction of relations whose tracks are mapped into a common arity,
/// followed by existential projection of the listed tracks.
struct Lifted {
  const Automaton& automaton;
  std::initializer_list<int> positions;
};
Automaton conjoin(int arity, std::initializer_list<Lifted> parts, std::initializer_list<int> project_tracks = {});

}  // namespace fibaut
