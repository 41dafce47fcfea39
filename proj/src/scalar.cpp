#include "mrel/scalar.hpp"

#include <cstdio>
#include <string>

#include "mrel/errors.hpp"

namespace mrel {

std::string ScalarTraits<double>::to_string(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Rational ScalarTraits<Rational>::sqrt(const Rational& x) {
  if (sgn(x) < 0) throw InexactSqrt("sqrt of negative rational " + x.get_str());
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    throw InexactSqrt("sqrt(" + x.get_str() + ") is irrational");
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw ConfigError("empty rational");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw ConfigError("mixed decimal/fraction: " + s);
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::string den = "1" + std::string(s.size() - dot - 1, '0');
      if (digits == "-" || digits.empty()) throw ConfigError("bad decimal: " + s);
      Rational q{mpz_class(digits, 10), mpz_class(den, 10)};
      q.canonicalize();
      return q;
    }
    Rational q(s, 10);
    if (q.get_den() == 0) throw ConfigError("zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ConfigError("not a rational number: " + s);
  }
}

}  // namespace mrel
