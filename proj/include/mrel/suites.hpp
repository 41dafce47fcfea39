#pragma once

#include <cstdint>
#include <vector>

#include "mrel/report.hpp"

namespace mrel {

struct SuiteContext {
  const SuiteConfig& cfg;
  std::uint64_t seed;

  int samples_or(int fallback) const { return cfg.samples.value_or(fallback); }
  bool exact() const { return cfg.mode == Mode::kExact; }
};

std::vector<CheckRecord> suite_algebra(const SuiteContext& ctx);
std::vector<CheckRecord> suite_linalg(const SuiteContext& ctx);
std::vector<CheckRecord> suite_lorentz(const SuiteContext& ctx);
std::vector<CheckRecord> suite_entities(const SuiteContext& ctx);
std::vector<CheckRecord> suite_fields(const SuiteContext& ctx);
std::vector<CheckRecord> suite_variants(const SuiteContext& ctx);

/// Validates `cfg` (ConfigError on bad values) and runs the selected suites.
/// Suites run concurrently; records come back sorted by check_id.
Report run(SuiteConfig cfg);

}  // namespace mrel
