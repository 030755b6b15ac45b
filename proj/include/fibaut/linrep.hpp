// Integer linear representations (L, mu, R): value(w) = L mu(w_1) ... mu(w_t) R.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "fibaut/automaton.hpp"

namespace fibaut {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

class LinRepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LinRep {
  std::string alphabet;  // one character per letter
  IntVector L;
  std::vector<IntMatrix> mu;  // parallel to alphabet
  IntVector R;

  std::size_t dimension() const { return L.size(); }
  /// Throws LinRepError on inconsistent dimensions.
  void validate() const;
};

/// Over {0,1}: the value on w counts the values of `summed_track` whose
/// (zero-padded) tuple with w on the other track is accepted. `pad` leading
/// zeros are folded into L, so evaluating on encode(n) covers summed values
/// with up to |encode(n)| + pad digits.
LinRep counting_linrep(const Automaton& rel, int summed_track = 0, unsigned pad = 2);

mpz_class evaluate(const LinRep& lr, std::string_view w);
/// value = value(a) - value(b).
LinRep subtract(const LinRep& a, const LinRep& b);

/// A word with nonzero value, if any (row-space closure over Q).
std::optional<std::string> nonzero_witness(const LinRep& lr);
inline bool is_zero(const LinRep& lr) { return !nonzero_witness(lr).has_value(); }

/// C(b) = 0, C(d) = 1, C(vb) = F_{i+2j-1} + C(v), C(vd) = F_{i+2j-1} - C(v),
/// with i, j the numbers of b and d in the whole word.
mpz_class carlitz_C(std::string_view u);
LinRep carlitz_linrep();

/// Both relations (n, f(n)) are total functions with equal occurrence counts
/// for every padded representation.
bool check_permutation(const Automaton& rel_a, const Automaton& rel_b);

struct DistinctnessResult {
  bool same_range = false;
  bool injective = false;
  bool order_preserved = false;
  bool holds() const { return same_range && injective && order_preserved; }
};
/// Whether s' is the distinctness transform of s (both relations (n, value)).
DistinctnessResult check_distinct_transform(const Automaton& s, const Automaton& s_prime);

/// Text form: "linrep r alphabet", then L, each mu(letter) and R as rows.
std::string serialize(const LinRep& lr);
LinRep deserialize_linrep(std::string_view text);

}  // namespace fibaut
