// Guess-and-check synthesis: learn an automaton from oracle data, then certify
// it with first-order queries.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fibaut/automaton.hpp"
#include "fibaut/logic.hpp"

namespace fibaut {

class LearnError : public AutomatonError {
 public:
  LearnError(const std::string& msg, Word witness) : AutomatonError(msg), witness_(std::move(witness)) {}
  const Word& witness() const { return witness_; }

 private:
  Word witness_;
};

/// Membership queries for the learner.
class MembershipOracle {
 public:
  virtual ~MembershipOracle() = default;
  virtual int arity() const = 0;
  virtual bool member(const Word& w) const = 0;
  /// Accepted words u.v with |v| <= max_suffix, as sorted suffix keys (see
  /// suffix_key). The default enumerates every suffix.
  virtual std::vector<std::uint64_t> row(const Word& prefix, std::size_t max_suffix) const;
};

/// Packs a suffix of length <= 56 / arity into a sortable key.
std::uint64_t suffix_key(const Word& suffix, int arity);

/// Minimal DFA consistent with the oracle on all words of length <= bound.
///
/// Prefixes up to depth bound - ceil(bound/2) are explored breadth-first and
/// identified by their rows over suffixes of length <= ceil(bound/2); the
/// one-symbol extensions of the deepest prefixes are matched on the shorter
/// suffixes that stay within the bound.
Automaton guess_dfa(const MembershipOracle& oracle, std::size_t bound);
Automaton guess_dfa(std::function<bool(const Word&)> member, int arity, std::size_t bound);

using IntegerFunction = std::function<std::uint64_t(std::uint64_t)>;

/// Synchronized automaton for n -> f(n), trained on n < samples.
Automaton guess_synchronized(const IntegerFunction& f, std::uint64_t samples);
/// DFAO over valid inputs for a function with small range, trained on
/// n < samples; one classifier per value, combined.
Automaton guess_dfao(const std::function<int(std::uint64_t)>& f, std::uint64_t samples);

/// Outcome of one certification query.
struct Check {
  std::string name;
  std::string formula;
  bool holds = false;
};

struct Verdict {
  std::vector<Check> checks;
  std::string error;  // compile failure, if any

  bool certified() const;
  /// First failing check, if any.
  const Check* failure() const;
};

/// Runs the listed closed formulas with `$cand` bound to the candidate.
/// `setup` holds reg/def commands executed first.
Verdict run_certificate(const Automaton& candidate, const std::string& setup,
                        const std::vector<std::pair<std::string, std::string>>& formulas);

/// Totality and uniqueness of a relation of arity 2.
Verdict certify_function(const Automaton& candidate);

struct RecurrenceSpec {
  enum class Kind { fibonacci, nested, lucas };
  Kind kind = Kind::fibonacci;
  long x = 1;  // fibonacci only: a(n) = x F_{j+1} - y a(n - F_j)
  long y = 1;
};

/// Function checks, base values (0,0) and (1,1), and the defining recurrence.
Verdict certify_recurrence(const Automaton& candidate, RecurrenceSpec spec = {});

/// Function checks, (0,0), strict monotonicity, and complementarity of the
/// ranges of z(n) and z(n) + n over n >= 1.
Verdict certify_wythoff(const Automaton& candidate);

using Certificate = std::function<Verdict(const Automaton&)>;

struct SynthesisReport {
  std::string name;
  std::optional<Automaton> candidate;
  std::uint64_t training_bound = 0;
  std::vector<std::uint64_t> attempted;
  Verdict verdict;
  std::string note;  // learner failures along the schedule

  bool certified() const { return candidate.has_value() && verdict.certified(); }
  std::string to_json() const;
};

std::vector<std::uint64_t> default_schedule();

/// Guess with increasing sample counts until the certificate holds.
SynthesisReport synthesize_certified(const std::string& name, const IntegerFunction& f, const Certificate& certificate,
                                     const std::vector<std::uint64_t>& schedule = default_schedule());

}  // namespace fibaut
