#include "mrel/malgebra.hpp"
#include "mrel/suites.hpp"

namespace mrel {

std::vector<CheckRecord> suite_variants(const SuiteContext& ctx) {
  const int samples = ctx.samples_or(1000);
  std::vector<CheckRecord> out;
  for (const SignVariant& v : sign_variants()) {
    const std::string key = v.key_string();
    out.push_back(run_check("malgebra.classify." + key, "multiplication chart of sign variants", 0.0, [&](Check& c) {
      c.digest().add(key);
      const AlgebraClassification cls = classify(v, samples, ctx.seed);
      std::string detail = classification_row(v, cls);
      for (const auto* f : {&cls.commutative, &cls.associative, &cls.has_two_sided_unit, &cls.has_left_unit}) {
        if (!f->holds && !f->witness.empty()) detail += "; " + f->witness;
      }
      c.set_detail(detail);
      c.expect(true);
      if (key == "+++") {
        c.expect(!cls.commutative.holds && !cls.associative.holds && !cls.has_two_sided_unit.holds &&
                 cls.has_left_unit.holds && cls.has_left_unit.witness == "1e+0i");
      } else if (key == "+-+") {
        c.expect(cls.commutative.holds && cls.associative.holds && cls.has_two_sided_unit.holds);
      }
    }));
  }
  out.push_back(run_check("malgebra.reproduces_complex.none", "complex numbers are not among the variants", 0.0,
                          [&](Check& c) {
                            for (const SignVariant& v : sign_variants()) c.expect(!reproduces_complex(v));
                          }));
  return out;
}

}  // namespace mrel
