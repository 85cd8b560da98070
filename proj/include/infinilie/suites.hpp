#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "infinilie/context.hpp"
#include "infinilie/report.hpp"

namespace infinilie {

struct SuiteConfig {
  Exponent trunc{8};
  std::int64_t ramification = 12;
  std::uint64_t seed = 1;
  std::int64_t height = 9;           // coefficient height of sampled rationals
  std::map<std::string, int> samples;  // per-suite overrides of the default counts
  bool inject_fault = false;           // perturbs one field-axioms identity; for testing reports

  int count(const std::string& suite) const;
  Context context() const;
  /// Throws ConfigError unless trunc ≥ 4, counts ≥ 1 and the suite names are known.
  void validate() const;
};

/// Suite names in their canonical order.
const std::vector<std::string>& suite_names();
int default_samples(const std::string& suite);

/// Flat ini file: [run] trunc, ramification, seed, height, inject_fault;
/// [samples] <suite> = count. Values override those in `base`.
SuiteConfig load_config(const std::string& path, SuiteConfig base = {});

/// Runs one suite; throws DomainError for an unknown name.
Report run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace infinilie
