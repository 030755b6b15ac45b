// Exact oracles for the sequences studied with the engine.
//
// Single values are computed with arbitrary precision; the *_table functions
// return prefixes as machine integers and are what the learner and the tests
// consume.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "fibaut/numeration.hpp"

namespace fibaut::seqs {

using Table = std::vector<std::uint64_t>;

/// a(0) = 0, a(1) = 1, a(n) = F_{j+1} - a(n - F_j) for F_j < n <= F_{j+1}, j >= 2.
Natural a105774(const Natural& n);
Table a105774_table(std::size_t count);

/// a_{x,y}(n) = n for n <= 1, else x F_{j+1} - y a_{x,y}(n - F_j). May be negative.
mpz_class a_xy(long x, long y, const Natural& n);
std::vector<std::int64_t> a_xy_table(long x, long y, std::size_t count);

/// b(n) = n for n <= 1, else F_{j+1} - b(b(n - F_j)).
Natural nested_b(const Natural& n);
Table nested_b_table(std::size_t count);

/// Lucas-indexed analogue: with the Lucas numbers ordered L_1 = 1 < L_2 = 3 <
/// L_3 = 4 < ..., v(0) = 0, v(1) = 1 and v(n) = L_{j+1} - v(n - L_j) for
/// L_j < n <= L_{j+1}, j >= 1.
Natural lucas_variant(const Natural& n);
Table lucas_variant_table(std::size_t count);

/// Number of m with a(m) = n (scanned over m <= 3n + 3).
unsigned count_c(std::uint64_t n);
Table count_c_table(std::size_t count);

enum class PositionKind { p0, p1, p2 };
/// The first `count` indices n (from 0) with count_c(n) = 0, 1 or 2.
Table positions(PositionKind kind, std::size_t count);

/// Values of a in ascending order (with multiplicity).
Table sorted_a(std::size_t count);
/// Values of a in order of first appearance.
Table distinct_transform(std::size_t count);
/// Lengths of the maximal blocks of equal consecutive values of a.
Table run_lengths(std::size_t count);

/// Least m with a(m) >= n.
std::uint64_t w(std::uint64_t n);
Table w_table(std::size_t count);

/// n > 0 with a(m) > a(n) for every m > n, for n <= limit.
std::vector<bool> suffix_minima(std::size_t limit);
/// n with a(n) = n, for n <= limit.
std::vector<bool> fixed_points(std::size_t limit);

/// s(n) = a(F_n) and t(n) = a(L_n).
Natural s(unsigned n);
Natural t(unsigned n);
/// L_n/10 + F_n/2 + (n even ? -(-1)^{n/2}/5 : 2(-1)^{(n-1)/2}/5).
mpq_class s_closed(unsigned n);
/// 3L_n/10 + 3F_n/2 + (n even ? 2(-1)^{n/2}/5 : (-1)^{(n-1)/2}/5).
mpq_class t_closed(unsigned n);

/// x(n) = a(beattyB(n)) - beattyB(a(n)).
std::int64_t comp_x(std::uint64_t n);
/// compD(n) = compC(a(n)) - a(beattyB(n)) - a(n).
std::int64_t comp_d(std::uint64_t n);

/// Disambiguation of letters that are reused with different meanings.
struct NameEntry {
  std::string_view letter;
  std::string_view context;
  std::string_view oracle;
  std::string_view meaning;
};
const std::vector<NameEntry>& name_map();

/// Named oracles as signed prefix tables (used by `oracle-table`).
std::vector<std::string> oracle_names();
std::optional<std::vector<std::int64_t>> oracle_table(std::string_view name, std::size_t count);

}  // namespace fibaut::seqs
