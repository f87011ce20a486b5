#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibsum/rational.hpp"

namespace fibsum {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Suite configuration, parsed from a flat key=value file ('#' comments).
struct SuiteConfig {
  std::vector<std::string> families{"all"};  // entry-id prefixes or "all"
  long long max_m = 2, max_n = 2, max_q = 2, max_p = 1;
  long long n_probe = 96;
  BigRational threshold = BigRational::parse("1/1000000000000000");
  std::uint64_t seed = 1;
  std::string output = "-";

  // finite-identity grid bounds (the acceptance grid uses 3/2/10)
  long long finite_max_mnq = 3, finite_max_p = 2, finite_max_N = 10;

  // identity sweep bounds
  std::uint64_t sweep_range = 2000, sweep_trials = 2000;

  bool family_selected(const std::string& id) const;

  /// Parses file contents; unknown keys and bad values raise ConfigError
  /// with the line number.
  static SuiteConfig parse(const std::string& text);
  static SuiteConfig load(const std::string& path);  // throws ConfigError
};

}  // namespace fibsum
