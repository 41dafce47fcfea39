#pragma once

// Scalar field abstraction: exact rationals (GMP) or 64-bit floats.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

namespace mrel {

using Rational = mpq_class;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double sqrt(double x) { return std::sqrt(x); }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static std::string to_string(double x);
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  /// Exact square root; throws InexactSqrt unless numerator and denominator are perfect squares.
  static Rational sqrt(const Rational& x);
  static Rational abs(const Rational& x) { return ::abs(x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <class S>
concept Scalar = requires(const S& a) {
  { ScalarTraits<S>::exact } -> std::convertible_to<bool>;
  { ScalarTraits<S>::to_double(a) } -> std::convertible_to<double>;
};

template <Scalar S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

template <Scalar S>
S abs_of(const S& x) {
  return ScalarTraits<S>::abs(x);
}

template <Scalar S>
double to_double(const S& x) {
  return ScalarTraits<S>::to_double(x);
}

/// Equality in exact mode, |a − b| ≤ tol in float mode.
template <Scalar S>
bool near(const S& a, const S& b, double tol) {
  if constexpr (is_exact_v<S>) {
    return a == b;
  } else {
    return std::fabs(a - b) <= tol;
  }
}

template <Scalar S>
S make_rational(long num, long den) {
  if constexpr (is_exact_v<S>) {
    Rational q(num, den);
    q.canonicalize();
    return q;
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

/// Converts an exact rational into the working scalar (identity in exact mode).
template <Scalar S>
S from_rational(const Rational& q) {
  if constexpr (is_exact_v<S>) {
    return q;
  } else {
    return q.get_d();
  }
}

/// Parses "p/q", "p" or a decimal like "0.6" into a canonical rational.
Rational parse_rational(std::string_view text);

/// Max-norm residual together with the magnitude of the compared entries.
/// scale = max(1, largest absolute entry seen on either side).
template <Scalar S>
struct Residual {
  S value{0};
  S scale{1};

  void absorb(const S& lhs, const S& rhs) {
    const S diff = abs_of<S>(S(lhs - rhs));
    if (diff > value) value = diff;
    const S al = abs_of<S>(lhs);
    const S ar = abs_of<S>(rhs);
    if (al > scale) scale = al;
    if (ar > scale) scale = ar;
  }

  void merge(const Residual& other) {
    if (other.value > value) value = other.value;
    if (other.scale > scale) scale = other.scale;
  }

  bool is_zero() const { return value == 0; }

  /// value < rel_tol · scale (float) or value == 0 (exact).
  bool within(double rel_tol) const {
    if constexpr (is_exact_v<S>) {
      return value == 0;
    } else {
      return value < rel_tol * scale;
    }
  }
};

}  // namespace mrel
