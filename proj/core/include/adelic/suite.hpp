#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adelic/residue.hpp"

namespace adelic {

struct SuiteConfig {
  std::string scheme = "P1/Q";
  std::uint64_t seed = 1;
  int trials = 10;
  int order_cap = kDefaultOrderCap;
  /// Identity names; empty selects every suite applicable to the scheme.
  std::vector<std::string> suites;

  /// Checks trials >= 1, order_cap >= 4, known suite names and the scheme.
  void validate() const;
  /// Plain "key = value" lines (scheme, seed, trials, order-cap, suite);
  /// '#' starts a comment; suite may repeat or hold a comma list.
  static SuiteConfig parse(const std::string& text);
  static SuiteConfig load(const std::string& path);
};

struct Failure {
  int instance = 0;
  std::uint64_t seed = 0;  ///< instance seed; rerun with derive_seed inputs
  std::string input;
  std::string detail;
};

struct IdentityReport {
  std::string name;
  std::string scheme;
  std::uint64_t seed = 0;
  int instances = 0;
  std::vector<Failure> failures;
  double seconds = 0;
};

struct Report {
  std::vector<IdentityReport> identities;  ///< sorted by name
  bool ok() const;
};

/// All identity names, in a fixed order.
const std::vector<std::string>& suite_names();
bool suite_applies(const std::string& name, const Scheme& X);
/// Runs `trials` instances of one identity; instance i draws its inputs from
/// derive_seed(seed, name, i).
IdentityReport run_identity(const std::string& name, const Scheme& X, std::uint64_t seed, int trials,
                            int cap = kDefaultOrderCap);
Report run_suite(const SuiteConfig& config);

}  // namespace adelic
