#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfsplice/io.hpp"
#include "hfsplice/knot_system.hpp"

namespace hfsplice {

struct PropertyTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct Counterexample {
  std::size_t trial = 0;
  std::string property;
  std::string detail;
  Json input;
};

struct SelftestConfig {
  std::uint64_t seed = 20240601;
  std::size_t trials = 200;
  std::size_t max_rank = 4;
  /// Right-handed trefoil data; when present, iota(R_r(K)) is also compared with splice(R, K).
  std::optional<KnotSystem> trefoil_right;
};

struct SelftestResult {
  std::vector<PropertyTally> tally;
  std::optional<Counterexample> first_failure;
  /// Observations that are reported but do not fail the run.
  std::vector<std::string> findings;

  bool ok() const { return !first_failure.has_value(); }
};

SelftestResult run_selftest(const SelftestConfig& cfg);
Json to_json(const SelftestResult& r);

/// Independent row reduction on an unpacked copy; used to cross-check rank().
std::size_t reference_rank(const Gf2Matrix& m);

}  // namespace hfsplice
