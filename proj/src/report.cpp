#include "mrel/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mrel/errors.hpp"

namespace mrel {

std::string to_string(Mode m) { return m == Mode::kExact ? "exact" : "float"; }

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"algebra", "linalg", "lorentz", "entities", "fields", "variants"};
  return names;
}

void SuiteConfig::validate() {
  if (suites.empty()) suites = known_suites();
  for (const auto& s : suites) {
    if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end()) {
      throw ConfigError("unknown suite: " + s);
    }
  }
  std::sort(suites.begin(), suites.end());
  suites.erase(std::unique(suites.begin(), suites.end()), suites.end());
  if (samples && *samples < 1) throw ConfigError("--samples must be >= 1");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ConfigError("--tol must be positive");
  if (!(fd_step > 0.0) || !std::isfinite(fd_step)) throw ConfigError("--fd-step must be positive");
  if (betas.empty()) betas = {Rational(3, 5), Rational(5, 13), Rational(8, 17), Rational(20, 29)};
  for (const auto& b : betas) {
    if (!(b > 0) || !(b < 1)) throw ConfigError("--beta values must lie in (0, 1), got " + b.get_str());
    if (mode == Mode::kExact) {
      const Rational g2 = 1 - b * b;
      if (!mpz_perfect_square_p(g2.get_num_mpz_t()) || !mpz_perfect_square_p(g2.get_den_mpz_t())) {
        throw ConfigError("exact mode needs a rational Lorentz factor, " + b.get_str() + " has none");
      }
    }
  }
}

int Report::passed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; }));
}

std::string Digest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
  return buf;
}

CheckRecord Check::finish() const {
  CheckRecord r;
  r.check_id = id_;
  r.paper_anchor = anchor_;
  r.inputs_digest = digest_.hex();
  r.tolerance = tol_;
  r.samples = samples_;
  r.detail = detail_;
  if (error_) {
    r.error = error_;
    r.pass = false;
    return r;
  }
  if (non_finite_) {
    r.error = "non-finite residual";
    return r;
  }
  if (samples_ == 0) {
    r.error = "no samples evaluated";
    return r;
  }
  r.residual = worst_;
  r.pass = tol_ == 0.0 ? worst_ == 0.0 : worst_ < tol_;
  return r;
}

nlohmann::json to_json(const Report& rep, bool include_timing) {
  using nlohmann::json;
  json cfg;
  cfg["suites"] = rep.config.suites;
  cfg["mode"] = to_string(rep.config.mode);
  cfg["seed"] = rep.config.seed;
  cfg["samples"] = rep.config.samples ? json(*rep.config.samples) : json(nullptr);
  cfg["tol"] = rep.config.tol;
  cfg["fd_step"] = rep.config.fd_step;
  json betas = json::array();
  for (const auto& b : rep.config.betas) betas.push_back(b.get_str());
  cfg["beta"] = betas;

  json records = json::array();
  for (const auto& r : rep.records) {
    json j;
    j["check_id"] = r.check_id;
    j["paper_anchor"] = r.paper_anchor;
    j["inputs_digest"] = r.inputs_digest;
    j["residual"] = r.residual ? json(*r.residual) : json(nullptr);
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["samples"] = r.samples;
    if (r.error) j["error"] = *r.error;
    if (r.detail) j["detail"] = *r.detail;
    records.push_back(std::move(j));
  }

  json summary;
  summary["total"] = rep.records.size();
  summary["passed"] = rep.passed();
  summary["failed"] = rep.failed();
  if (include_timing) summary["runtime_ms"] = std::round(rep.runtime_ms * 1000.0) / 1000.0;

  json out;
  out["schema"] = kReportSchema;
  out["tool_version"] = kToolVersion;
  out["config"] = cfg;
  out["summary"] = summary;
  out["records"] = records;
  return out;
}

}  // namespace mrel
