#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>

#include "mrel/rng.hpp"
#include "mrel/suites.hpp"

namespace mrel {

Report run(SuiteConfig cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  using SuiteFn = std::vector<CheckRecord> (*)(const SuiteContext&);
  static const std::map<std::string, SuiteFn> table{
      {"algebra", suite_algebra}, {"linalg", suite_linalg},   {"lorentz", suite_lorentz},
      {"entities", suite_entities}, {"fields", suite_fields}, {"variants", suite_variants},
  };

  std::vector<std::future<std::vector<CheckRecord>>> jobs;
  for (const auto& name : cfg.suites) {
    const SuiteFn fn = table.at(name);
    const std::uint64_t seed = derive_seed(cfg.seed, name);
    jobs.push_back(std::async(std::launch::async, [fn, seed, &cfg] { return fn(SuiteContext{cfg, seed}); }));
  }

  Report rep;
  for (auto& j : jobs) {
    auto recs = j.get();
    rep.records.insert(rep.records.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  std::sort(rep.records.begin(), rep.records.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; });
  rep.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep.config = std::move(cfg);
  return rep;
}

}  // namespace mrel
