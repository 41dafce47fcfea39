#pragma once

#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mrel/scalar.hpp"

namespace mrel {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "mrel-report/1";

enum class Mode { kExact, kFloat };

std::string to_string(Mode m);

struct SuiteConfig {
  std::vector<std::string> suites;
  Mode mode = Mode::kExact;
  std::uint64_t seed = 7;
  /// Overrides every suite's default sample count when set.
  std::optional<int> samples;
  double tol = 1e-5;
  double fd_step = 1e-4;
  std::vector<Rational> betas;
  std::optional<std::string> output_path;

  /// Fills defaults and throws ConfigError on invalid values.
  void validate();
};

const std::vector<std::string>& known_suites();

struct CheckRecord {
  std::string check_id;
  std::string paper_anchor;
  std::string inputs_digest;
  std::optional<double> residual;
  double tolerance = 0.0;
  bool pass = false;
  int samples = 0;
  std::optional<std::string> error;
  std::optional<std::string> detail;
};

struct Report {
  SuiteConfig config;
  std::vector<CheckRecord> records;
  double runtime_ms = 0.0;

  int passed() const;
  int failed() const { return static_cast<int>(records.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }
};

nlohmann::json to_json(const Report& r, bool include_timing = true);

/// FNV-1a over the textual form of every input fed in.
class Digest {
public:
  void add(std::string_view s) {
    for (char ch : s) feed(static_cast<unsigned char>(ch));
    feed(0x1f);
  }
  template <Scalar S>
  void add(const S& x) {
    add(std::string_view(ScalarTraits<S>::to_string(x)));
  }
  std::string hex() const;

private:
  void feed(unsigned char b) {
    h_ ^= b;
    h_ *= 1099511628211ULL;
  }
  std::uint64_t h_ = 1469598103934665603ULL;
};

/// Accumulates one record over many samples.
///
/// tolerance 0 means every residual must be exactly zero. Otherwise the record
/// passes when the largest residual is below the tolerance.
class Check {
public:
  Check(std::string id, std::string anchor, double tolerance)
      : id_(std::move(id)), anchor_(std::move(anchor)), tol_(tolerance) {}

  Digest& digest() { return digest_; }

  void residual(double r) {
    ++samples_;
    if (std::isnan(r)) {
      non_finite_ = true;
    } else if (r > worst_) {
      worst_ = r;
    }
  }

  /// Relative residual in float mode, exact residual (must be 0) otherwise.
  template <Scalar S>
  void absorb(const Residual<S>& r) {
    if constexpr (is_exact_v<S>) {
      double v = to_double(r.value);
      if (r.value != 0 && v == 0.0) v = 1e-300;
      residual(v);
    } else {
      residual(r.value / r.scale);
    }
  }

  void expect(bool ok) { residual(ok ? 0.0 : 1.0); }

  void fail(const std::exception& e) { error_ = e.what(); }
  void fail(std::string why) { error_ = std::move(why); }
  void set_detail(std::string d) { detail_ = std::move(d); }

  CheckRecord finish() const;

private:
  std::string id_;
  std::string anchor_;
  double tol_;
  Digest digest_;
  double worst_ = 0.0;
  int samples_ = 0;
  bool non_finite_ = false;
  std::optional<std::string> error_;
  std::optional<std::string> detail_;
};

/// Runs `body(check)` and turns any escaping exception into a failed record.
template <class Body>
CheckRecord run_check(std::string id, std::string anchor, double tolerance, Body&& body) {
  Check c(std::move(id), std::move(anchor), tolerance);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(e);
  }
  return c.finish();
}

}  // namespace mrel
