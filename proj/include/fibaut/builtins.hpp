// The builtin catalog: primitive relations, the Beatty automata and the
// Fibonacci word, optionally cached in an on-disk store.
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fibaut/automaton.hpp"
#include "fibaut/logic.hpp"

namespace fibaut {

class CatalogError : public AutomatonError {
 public:
  using AutomatonError::AutomatonError;
};

/// Directory of `.aut` files, one automaton per name.
class Store {
 public:
  explicit Store(std::filesystem::path dir) : dir_(std::move(dir)) {}
  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path path_of(const std::string& name) const;
  std::optional<Automaton> load(const std::string& name) const;
  void save(const std::string& name, const Automaton& a) const;
  std::vector<std::string> names() const;

 private:
  std::filesystem::path dir_;
};

struct BuildOptions {
  std::optional<Store> store;
  bool rebuild = false;
  std::vector<std::uint64_t> schedule;  // empty: default_schedule()
  std::uint64_t oracle_limit = 100000;
  std::function<void(const std::string&)> log;
};

/// Loads `name` from the store unless rebuilding; otherwise builds it and
/// saves the result.
Automaton cached(const BuildOptions& opts, const std::string& name, const std::function<Automaton()>& build);

/// z = floor(phi n), synthesized and certified (Wythoff pair), then checked
/// against the oracle for n < 2^20.
Automaton phin(const BuildOptions& opts = {});

/// Minimal DFAO for n mod k, checked for n < oracle_limit.
Automaton mod_dfao(unsigned k, const BuildOptions& opts = {});

/// valid, eq, lt, leq, add, phin, phi2n, fibword (also as F), a007067,
/// a007064, a035487, a004937, a003623. Throws CatalogError on a failed check.
Catalog builtin_catalog(const BuildOptions& opts = {});

/// Pairs (n, f(n)) accepted for n < limit and (n, f(n) + 1) rejected.
bool agrees_with(const Automaton& rel, const std::function<std::uint64_t(std::uint64_t)>& f, std::uint64_t limit);

}  // namespace fibaut
