// First-order queries over Fibonacci-synchronized relations, compiled to
// automata.
//
// The accepted language is the Walnut dialect used for Fibonacci
// representations:
//
//   formula  := quantified | equiv
//   equiv    := implies ('<=>' implies)*
//   implies  := disj ('=>' implies)?
//   disj     := conj ('|' conj)*
//   conj     := unary ('&' unary)*
//   unary    := '~' unary | quantified | atom | '(' formula ')'
//   quantified := ('A' | 'E') var (',' var)* formula    -- scope extends right
//   atom     := term cmp term | '$' name '(' term, ... ')' | Name '[' term ']' ('='|'!=') '@' int
//   term     := product (('+'|'-') product)*
//   product  := primary (('*'|'/') primary)*      -- one side of * and the right of / constant
//   primary  := number | var | '(' term ')'
//
// Free variables bind to tracks in lexicographic name order. Subtraction is
// relational: t1 - t2 denotes the u with u + t2 = t1 and is undefined (the
// enclosing atom is false) when t2 > t1.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibaut/automaton.hpp"

namespace fibaut {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Term {
  enum class Kind { variable, constant, plus, minus, times, divide };
  Kind kind = Kind::constant;
  std::string name;          // variable
  std::uint64_t value = 0;   // constant; factor (times) or divisor (divide)
  std::vector<Term> args;    // plus/minus: 2, times/divide: 1

  static Term variable(std::string n);
  static Term constant(std::uint64_t v);
};

struct Formula {
  enum class Kind {
    compare,
    relation,
    dfao_test,
    negation,
    conjunction,
    disjunction,
    implication,
    equivalence,
    exists,
    forall
  };
  enum class Cmp { eq, ne, lt, le, gt, ge };

  Kind kind = Kind::compare;
  Cmp cmp = Cmp::eq;                 // compare; dfao_test uses eq/ne
  std::string name;                  // relation or DFAO name
  std::vector<Term> terms;           // compare: 2; relation: args; dfao_test: 1
  int value = 0;                     // dfao_test output
  std::vector<std::string> variables;  // quantifiers
  std::vector<Formula> children;

  /// Free variables, sorted.
  std::vector<std::string> free_variables() const;
  std::string to_string() const;
};

/// Parses a formula; a leading `?msd_fib` is ignored.
Formula parse_formula(std::string_view text);

struct Command {
  enum class Kind { def, eval, reg, combine };
  Kind kind = Kind::eval;
  std::string name;
  std::string text;                                 // formula or regex source
  int arity = 0;                                    // reg
  std::vector<std::pair<std::string, int>> parts;   // combine
  std::size_t line = 0;         // line of the keyword
  std::size_t text_line = 0;    // position of the quoted text
  std::size_t text_column = 0;
};

/// Parses a script of def/eval/reg/combine commands. Commands end at ':' or
/// ';' or at the end of a line outside quotes; '#' starts a comment.
std::vector<Command> parse_script(std::string_view text);

/// Named automata visible to formulas: relations (DFAs, `$name(...)`) and
/// sequences (DFAOs, `Name[...]`).
class Catalog {
 public:
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  const Automaton& get(const std::string& name) const;
  const Automaton* find(const std::string& name) const;
  /// Throws CompileError if the name exists, unless `overwrite` is set.
  void define(const std::string& name, Automaton a, bool overwrite = false);
  void erase(const std::string& name) { entries_.erase(name); }
  std::vector<std::string> names() const;
  const std::map<std::string, Automaton>& entries() const { return entries_; }

 private:
  std::map<std::string, Automaton> entries_;
};

struct CompiledQuery {
  Automaton automaton;               // over `variables`, sorted
  std::vector<std::string> variables;
};

/// Compiles formulas against a catalog snapshot.
class Compiler {
 public:
  explicit Compiler(const Catalog& catalog) : catalog_(catalog) {}

  CompiledQuery compile(const Formula& f);
  /// True iff the closed formula holds. Throws CompileError if free
  /// variables remain.
  bool eval(const Formula& f);

 private:
  struct TermValue {
    std::string variable;
    std::optional<CompiledQuery> constraint;  // over variables incl. `variable`
    bool fresh = false;
  };

  CompiledQuery compile_atom(const Formula& f);
  TermValue compile_term(const Term& t);
  std::string fresh_variable();
  CompiledQuery apply(const Automaton& rel, const std::vector<std::string>& args);
  CompiledQuery with_terms(CompiledQuery base, std::vector<TermValue> values);

  const Catalog& catalog_;
  int fresh_counter_ = 0;
};

/// Aligns a query to a superset of its variables (sorted), constraining new
/// tracks to valid representations.
CompiledQuery align(const CompiledQuery& q, const std::vector<std::string>& variables);
CompiledQuery conjoin(const CompiledQuery& a, const CompiledQuery& b);
CompiledQuery negate(const CompiledQuery& q);
CompiledQuery exists(const CompiledQuery& q, const std::string& variable);

/// Outcome of executing one command.
struct CommandResult {
  Command command;
  std::optional<bool> truth;     // eval, or def of a closed formula
  std::size_t states = 0;        // reported state count of the stored automaton
};

/// Executes commands against a mutable catalog.
class Engine {
 public:
  explicit Engine(Catalog& catalog) : catalog_(catalog) {}

  CommandResult execute(const Command& cmd);
  bool eval(std::string_view formula);
  /// Compiles and stores a formula; redefinition with an equivalent automaton
  /// is accepted, otherwise requires `overwrite`.
  const Automaton& define(const std::string& name, std::string_view formula, bool overwrite = false);
  Catalog& catalog() { return catalog_; }

 private:
  void store(const std::string& name, Automaton a, bool overwrite);

  Catalog& catalog_;
};

}  // namespace fibaut
