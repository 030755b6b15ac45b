// Zeckendorf (Fibonacci) numeration and exact Beatty-function oracles.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fibaut {

/// Arbitrary-precision natural number.
using Natural = mpz_class;

/// A bit string of Fibonacci digits, most significant first.
///
/// Instances produced by encode() are canonical: no two adjacent 1s and no
/// leading zero. Arbitrary strings (as read off automaton tracks) may be
/// wrapped too; decode() accepts anything.
class ZeckendorfString {
 public:
  ZeckendorfString() = default;
  explicit ZeckendorfString(std::vector<std::uint8_t> digits);
  /// Parses a string of '0'/'1' characters. Throws std::invalid_argument otherwise.
  static ZeckendorfString from_text(std::string_view bits);

  const std::vector<std::uint8_t>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return digits_[i]; }

  /// No "11" factor and no leading zero.
  bool is_canonical() const;
  /// No "11" factor (leading zeros allowed).
  bool is_valid() const;

  /// Left-pads with zeros to the given length (no-op if already longer).
  ZeckendorfString padded(std::size_t length) const;
  std::string to_string() const;

  friend bool operator==(const ZeckendorfString&, const ZeckendorfString&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

Natural fib(unsigned k);
Natural lucas(unsigned k);
/// Fibonacci number as a machine word; k must be at most 93.
std::uint64_t fib64(unsigned k);
std::uint64_t lucas64(unsigned k);

/// Greedy Zeckendorf representation; encode(0) is the empty string.
ZeckendorfString encode(const Natural& n);
ZeckendorfString encode(std::uint64_t n);

/// [x]_F: the value of an arbitrary digit string, digit i (0-based from the
/// right) weighted by F_{i+2}.
Natural decode(const ZeckendorfString& s);
std::uint64_t decode64(const ZeckendorfString& s);

Natural isqrt(const Natural& n);

/// floor(phi * n), computed as floor((n + isqrt(5 n^2)) / 2).
Natural floor_phi(const Natural& n);
std::uint64_t floor_phi(std::uint64_t n);
/// floor(phi^2 * n) = floor(phi * n) + n.
Natural floor_phi2(const Natural& n);
std::uint64_t floor_phi2(std::uint64_t n);
/// floor(phi * n + 1/2) = floor((floor(2 phi n) + 1) / 2).
Natural floor_phi_half(const Natural& n);
std::uint64_t floor_phi_half(std::uint64_t n);
/// floor(phi^2 * n + 1/2).
Natural floor_phi2_half(const Natural& n);
std::uint64_t floor_phi2_half(std::uint64_t n);

/// Number of digits in the canonical representation of n.
std::size_t zeckendorf_length(std::uint64_t n);

}  // namespace fibaut
