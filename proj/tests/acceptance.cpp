// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mrel/malgebra.hpp"
#include "mrel/suites.hpp"

using namespace mrel;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

const CheckRecord* find(const Report& r, const std::string& id) {
  for (const auto& rec : r.records)
    if (rec.check_id == id) return &rec;
  return nullptr;
}

// All listed ids must be present and passing.
Outcome require(const Report& r, const std::vector<std::string>& ids, const std::string& mode) {
  Outcome o;
  for (const auto& id : ids) {
    const CheckRecord* rec = find(r, id);
    if (rec == nullptr) {
      o.ok = false;
      o.note += " missing " + id + " (" + mode + ")";
    } else if (!rec->pass) {
      o.ok = false;
      o.note += " " + id + " (" + mode + ")";
      if (rec->error) o.note += ": " + *rec->error;
    }
  }
  return o;
}

Outcome both(Outcome a, const Outcome& b) {
  a.ok = a.ok && b.ok;
  a.note += b.note;
  return a;
}

std::vector<std::string> with_prefix(const Report& r, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& rec : r.records)
    if (rec.check_id.rfind(prefix, 0) == 0) out.push_back(rec.check_id);
  return out;
}

// Chart written out independently: products ee, ei, ie, ii as (sign, is_i).
using Chart = std::array<std::pair<int, int>, 4>;
const std::map<std::string, Chart> kChart = {
    {"+++", {{{1, 0}, {1, 1}, {-1, 1}, {-1, 0}}}}, {"+-+", {{{1, 0}, {1, 1}, {1, 1}, {1, 0}}}},
    {"-++", {{{-1, 0}, {-1, 1}, {-1, 1}, {-1, 0}}}}, {"--+", {{{-1, 0}, {-1, 1}, {1, 1}, {1, 0}}}},
    {"++-", {{{1, 0}, {-1, 1}, {1, 1}, {-1, 0}}}}, {"+--", {{{1, 0}, {-1, 1}, {-1, 1}, {1, 0}}}},
    {"-+-", {{{-1, 0}, {1, 1}, {1, 1}, {-1, 0}}}}, {"---", {{{-1, 0}, {1, 1}, {-1, 1}, {1, 0}}}},
};

using V2 = std::array<long, 2>;

V2 chart_mul(const Chart& c, const V2& x, const V2& y) {
  V2 out{0, 0};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out[c[a * 2 + b].second] += c[a * 2 + b].first * x[a] * y[b];
  return out;
}

struct Flags {
  bool comm, assoc, unit, left_unit;
};

Flags chart_flags(const Chart& c) {
  const V2 basis[2] = {{1, 0}, {0, 1}};
  Flags f{true, true, false, false};
  for (auto& x : basis)
    for (auto& y : basis) {
      if (chart_mul(c, x, y) != chart_mul(c, y, x)) f.comm = false;
      for (auto& z : basis)
        if (chart_mul(c, chart_mul(c, x, y), z) != chart_mul(c, x, chart_mul(c, y, z))) f.assoc = false;
    }
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      const V2 u{a, b};
      bool left = true, right = true;
      for (auto& x : basis) {
        if (chart_mul(c, u, x) != x) left = false;
        if (chart_mul(c, x, u) != x) right = false;
      }
      f.left_unit = f.left_unit || left;
      f.unit = f.unit || (left && right);
    }
  return f;
}

Outcome criterion12() {
  Outcome o;
  for (const auto& v : sign_variants()) {
    const auto it = kChart.find(v.key_string());
    if (it == kChart.end()) {
      o.ok = false;
      o.note += " unknown key " + v.key_string();
      continue;
    }
    for (int k = 0; k < 4; ++k) {
      const auto& t = v.table[k];
      if (t.sign != it->second[k].first || (t.basis == Basis::I) != (it->second[k].second == 1)) {
        o.ok = false;
        o.note += " table " + v.key_string();
      }
    }
    const Flags want = chart_flags(it->second);
    const auto got = classify(v, 1000, 7);
    if (got.commutative.holds != want.comm || got.associative.holds != want.assoc ||
        got.has_two_sided_unit.holds != want.unit || got.has_left_unit.holds != want.left_unit) {
      o.ok = false;
      o.note += " flags " + v.key_string();
    }
  }
  const auto ppp = classify(default_variant(), 1000, 7);
  if (ppp.commutative.holds || ppp.associative.holds || ppp.has_two_sided_unit.holds || !ppp.has_left_unit.holds ||
      ppp.has_left_unit.witness != "1e+0i") {
    o.ok = false;
    o.note += " +++ flags";
  }
  for (const auto& v : sign_variants()) {
    if (v.key_string() != "+-+") continue;
    const auto c = classify(v, 1000, 7);
    if (!c.commutative.holds || !c.associative.holds || !c.has_two_sided_unit.holds) {
      o.ok = false;
      o.note += " +-+ flags";
    }
  }
  return o;
}

}  // namespace

int main() {
  SuiteConfig exact_cfg;
  exact_cfg.mode = Mode::kExact;
  SuiteConfig float_cfg;
  float_cfg.mode = Mode::kFloat;
  float_cfg.suites = {"lorentz", "entities"};
  const Report ex = run(exact_cfg);
  const Report fl = run(float_cfg);

  std::vector<std::string> items;
  for (const auto& id : with_prefix(ex, "malgebra."))
    if (id.find(".item") != std::string::npos) items.push_back(id);

  const std::vector<std::string> entity_ids = {
      "physents.delta.consistency", "physents.em_vector.consistency", "physents.em_tensor.consistency",
      "physents.em_tensor_dual.consistency", "physents.angmom.consistency"};

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"algebra identities, all 15 items, exact",
       [&] {
         Outcome o = require(ex, items, "exact");
         if (items.size() != 15) {
           o.ok = false;
           o.note += " expected 15 item records, found " + std::to_string(items.size());
         }
         return o;
       }},
      {"inverse law and singular set", [&] { return require(ex, {"malgebra.invert.law"}, "exact"); }},
      {"matrix dot associativity and action compatibility",
       [&] { return require(ex, {"mlinalg.dot_mm.associative", "mlinalg.dot_mv.compatible"}, "exact"); }},
      {"real 6x6 embedding homomorphism and boost display",
       [&] {
         return require(ex, {"mlinalg.embed.homomorphism_mm", "mlinalg.embed.homomorphism_mv",
                             "mlinalg.embed.boost_display"},
                        "exact");
       }},
      {"Lorentz consistency exact and float",
       [&] {
         return both(require(ex, {"lorentz.consistency_residual.random"}, "exact"),
                     require(fl, {"lorentz.consistency_residual.random"}, "float"));
       }},
      {"entity consistency exact and float",
       [&] { return both(require(ex, entity_ids, "exact"), require(fl, entity_ids, "float")); }},
      {"inversion identity and composition gap witness",
       [&] { return require(ex, {"lorentz.reverse_representation.random", "lorentz.composition_gap.witness"}, "exact"); }},
      {"field identities and plane-wave forward check",
       [&] {
         return require(ex,
                        {"fieldcalc.identity_a2_curlB.random", "fieldcalc.identity_a1_curlE.random",
                         "fieldcalc.identity_a1_curlE.permuted", "fieldcalc.continuity_identity.random",
                         "fieldcalc.plane_wave.a1_sum", "fieldcalc.plane_wave.a2_sum", "fieldcalc.plane_wave.a3_sum",
                         "fieldcalc.plane_wave.a4_sum"},
                        "float");
       }},
      {"tensor divergence and translation identities",
       [&] {
         return require(ex,
                        {"fieldcalc.a3_divergence.tensor", "fieldcalc.a3_divergence.dual",
                         "fieldcalc.a4_translation.tensor", "fieldcalc.a4_translation.dual"},
                        "float");
       }},
      {"radial speed identity and Newtonian limit",
       [&] { return require(ex, {"fieldcalc.radial_residual.random", "fieldcalc.newtonian_check.grid"}, "float"); }},
      {"invariance of assumption sums under boosts",
       [&] {
         return require(ex,
                        {"fieldcalc.invariance_check.em_a1", "fieldcalc.invariance_check.em_a2",
                         "fieldcalc.invariance_check.cc_a1", "fieldcalc.invariance_check.cc_a2"},
                        "float");
       }},
      {"sign-variant classification", [] { return criterion12(); }},
      {"deterministic reports",
       [&] {
         Outcome o;
         SuiteConfig a;
         a.seed = 11;
         a.samples = 50;
         const std::string first = to_json(run(a), false).dump();
         const std::string second = to_json(run(a), false).dump();
         o.ok = first == second && to_json(ex, false).dump() == to_json(run(exact_cfg), false).dump();
         if (!o.ok) o.note = " reports differ";
         return o;
       }},
  };

  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::printf("[%s] criterion %zu: %s%s\n", o.ok ? "PASS" : "FAIL", n + 1, criteria[n].first.c_str(),
                o.ok ? "" : (" --" + o.note).c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
