#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mrel/errors.hpp"
#include "mrel/malgebra.hpp"
#include "mrel/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MREL_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw mrel::ConfigError(std::string("MREL_SEED is not an unsigned integer: ") + env);
  }
  return 7;
}

void print_summary(const mrel::Report& rep) {
  std::cerr << "mrel: " << rep.records.size() << " checks, " << rep.passed() << " passed, " << rep.failed()
            << " failed (" << static_cast<long>(rep.runtime_ms) << " ms)\n";
  for (const auto& r : rep.records) {
    if (r.pass) continue;
    std::cerr << "  FAIL " << r.check_id;
    if (r.error) {
      std::cerr << ": " << *r.error;
    } else if (r.residual) {
      std::cerr << ": residual " << *r.residual << " (tolerance " << r.tolerance << ")";
    }
    std::cerr << "\n";
  }
}

int print_variants(bool witnesses) {
  for (const auto& v : mrel::sign_variants()) {
    const auto cls = mrel::classify(v, 1000, 7);
    std::cout << v.key_string() << "  " << mrel::classification_row(v, cls) << "\n";
    if (!witnesses) continue;
    for (const auto* f : {&cls.commutative, &cls.associative, &cls.has_two_sided_unit, &cls.has_left_unit}) {
      if (!f->holds && !f->witness.empty()) std::cout << "      " << f->witness << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks the pseudo-complex relativity identities and writes a JSON report."};
  app.require_subcommand(1);

  mrel::SuiteConfig cfg;
  std::string mode = "exact";
  std::vector<std::string> betas;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::string out;
  bool no_timing = false;

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suites", cfg.suites, "Comma-separated subset of algebra,linalg,lorentz,entities,fields,variants")
      ->delimiter(',');
  verify->add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--seed", seed, "Base seed (default: $MREL_SEED or 7)");
  verify->add_option("--samples", samples, "Sample count for every suite");
  verify->add_option("--tol", cfg.tol, "Finite-difference identity tolerance");
  verify->add_option("--fd-step", cfg.fd_step, "Relative finite-difference step");
  verify->add_option("--beta", betas, "Comma-separated speed ratios, e.g. 3/5,5/13")->delimiter(',');
  verify->add_option("--out", out, "Write the report here instead of standard output");
  verify->add_flag("--no-timing", no_timing, "Leave runtime out of the report");

  bool witnesses = false;
  auto* variants = app.add_subcommand("variants", "Print the sign-variant classification table");
  variants->add_flag("--witnesses", witnesses, "Print counterexamples under each row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (variants->parsed()) return print_variants(witnesses);

  try {
    cfg.mode = mode == "float" ? mrel::Mode::kFloat : mrel::Mode::kExact;
    cfg.seed = seed ? *seed : default_seed();
    cfg.samples = samples;
    for (const auto& b : betas) cfg.betas.push_back(mrel::parse_rational(b));
    if (!out.empty()) cfg.output_path = out;

    const mrel::Report rep = mrel::run(cfg);
    const std::string text = mrel::to_json(rep, !no_timing).dump(2) + "\n";
    if (rep.config.output_path) {
      std::ofstream f(*rep.config.output_path);
      if (!f) throw mrel::ConfigError("cannot write " + *rep.config.output_path);
      f << text;
    } else {
      std::cout << text;
    }
    print_summary(rep);
    return rep.all_pass() ? 0 : kExitFail;
  } catch (const mrel::ConfigError& e) {
    std::cerr << "mrel: " << e.what() << "\n";
    return kExitConfig;
  }
}
