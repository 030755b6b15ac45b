// Deterministic automata over k-track binary alphabets.
//
// A single Automaton type covers DFAs (outputs 0/1, 1 = accepting) and DFAOs
// (outputs are small non-negative integers, kUndefined marks inputs outside the
// domain). Symbols pack a k-tuple of bits with track 0 in the most significant
// position, so numeric symbol order equals lexicographic tuple order. Symbol 0
// (all tracks zero) is the padding symbol.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibaut {

using StateId = std::uint32_t;
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

inline constexpr int kMaxArity = 20;
inline constexpr int kUndefined = -1;

enum class Kind { dfa, dfao };

class AutomatonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bit of `track` in a symbol of the given arity.
constexpr int symbol_bit(Symbol s, int track, int arity) {
  return static_cast<int>((s >> (arity - 1 - track)) & 1u);
}

class Automaton {
 public:
  Automaton() : Automaton(Kind::dfa, 0) {}
  Automaton(Kind kind, int arity);

  Kind kind() const { return kind_; }
  bool is_dfao() const { return kind_ == Kind::dfao; }
  int arity() const { return arity_; }
  std::size_t alphabet_size() const { return std::size_t{1} << arity_; }
  std::size_t num_states() const { return output_.size(); }
  StateId initial() const { return initial_; }

  StateId next(StateId q, Symbol s) const { return trans_[q * alphabet_size() + s]; }
  int output(StateId q) const { return output_[q]; }
  bool accepting(StateId q) const { return output_[q] == 1; }

  StateId add_state(int output);
  void set_initial(StateId q);
  void set_transition(StateId from, Symbol s, StateId to);
  void set_output(StateId q, int output);

  /// Raw row-major transition table (state * alphabet_size + symbol).
  const std::vector<StateId>& transitions() const { return trans_; }
  const std::vector<int>& outputs() const { return output_; }

  /// Throws AutomatonError unless every transition targets a valid state.
  void check_complete() const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  Kind kind_;
  int arity_;
  StateId initial_ = 0;
  std::vector<StateId> trans_;
  std::vector<int> output_;
};

/// Nondeterministic automaton with epsilon moves; used transiently.
struct Nfa {
  int arity = 0;
  std::vector<std::vector<std::vector<StateId>>> next;  // [state][symbol]
  std::vector<std::vector<StateId>> epsilon;
  std::vector<StateId> initial;
  std::vector<bool> accepting;

  explicit Nfa(int arity_ = 0) : arity(arity_) {}
  StateId add_state(bool accept = false);
  void add_transition(StateId from, Symbol s, StateId to);
  void add_epsilon(StateId from, StateId to);
  std::size_t num_states() const { return accepting.size(); }
};

Automaton make_universal(int arity);
Automaton make_empty(int arity);
/// DFAO of arity `arity` with a constant output.
Automaton make_constant_dfao(int arity, int value);

enum class BoolOp { conj, disj, exclusive, equiv, implies };

/// Product construction over reachable pairs; both operands must be DFAs of
/// equal arity.
Automaton product(const Automaton& a, const Automaton& b, BoolOp op);
Automaton intersect(const Automaton& a, const Automaton& b);
Automaton unite(const Automaton& a, const Automaton& b);
Automaton complement(const Automaton& a);

Automaton determinize(const Nfa& n);
Nfa to_nfa(const Automaton& d);

/// Minimal automaton with canonical numbering: unreachable states dropped,
/// states numbered in BFS order from the initial state, symbols visited in
/// increasing order.
Automaton minimize(const Automaton& a);
inline Automaton minimize_dfao(const Automaton& a) { return minimize(a); }

/// Accepts 0^j w iff the input accepts 0^k w for some k >= 0.
Automaton zero_normalize(const Automaton& a);
/// True if membership (or output) is invariant under leading padding symbols.
bool is_zero_normalized(const Automaton& a);

/// Existential projection of one track; the dropped value may be longer than
/// the remaining tracks. Input should be zero-normalized; output is
/// zero-normalized and minimal.
Automaton project(const Automaton& a, int track);

/// Re-embeds the tracks of `a` into a wider alphabet: old track i becomes new
/// track positions[i]. Unmapped new tracks are unconstrained.
Automaton cylindrify(const Automaton& a, int new_arity, std::span<const int> positions);

/// Restricts a DFA to symbols whose bits on tracks i and j agree and drops
/// track j.
Automaton identify_tracks(const Automaton& a, int i, int j);

/// DFAO emitting `value` of the part accepting the input, `default_value` if
/// no part accepts. Throws AutomatonError (with a witness word) when two parts
/// overlap.
Automaton combine(std::span<const std::pair<Automaton, int>> parts, int default_value = 0);
/// Outputs kUndefined for inputs rejected by `domain`.
Automaton restrict_domain(const Automaton& dfao, const Automaton& domain);
/// DFA accepting the inputs on which the DFAO outputs `value`.
Automaton dfao_level_set(const Automaton& dfao, int value);
/// Converts a DFA to a DFAO with outputs 0/1 and back.
Automaton as_dfao(const Automaton& dfa);

StateId run(const Automaton& a, std::span<const Symbol> word);
bool accepts(const Automaton& a, std::span<const Symbol> word);
/// Output on the canonical representation of n (arity 1).
int dfao_value(const Automaton& a, std::uint64_t n);

bool is_empty(const Automaton& a);
/// A shortest accepted word, if any.
std::optional<Word> find_accepted(const Automaton& a);
bool equivalent(const Automaton& a, const Automaton& b);
/// Accepted words of length at most max_length in shortlex order.
std::vector<Word> sample_language(const Automaton& a, std::size_t limit, std::size_t max_length);

/// Index of the empty-language sink (DFA) or undefined-output sink (DFAO).
std::optional<StateId> dead_state(const Automaton& a);
/// State count of the minimal automaton, not counting its dead state.
std::size_t reported_state_count(const Automaton& a);

/// Word of tuple symbols for the zero-padded representations of `values`.
Word encode_tuple(std::span<const std::uint64_t> values, std::size_t min_length = 0);
Word parse_word(std::string_view text, int arity);
std::string format_symbol(Symbol s, int arity);
std::string format_word(std::span<const Symbol> w, int arity);

std::string serialize(const Automaton& a);
Automaton deserialize(std::string_view text);
std::string export_dot(const Automaton& a, std::string_view name = "A");

}  // namespace fibaut
