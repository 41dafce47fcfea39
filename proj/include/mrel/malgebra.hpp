#pragma once

// The pseudo-complex algebra 𝕄 = span{e, i} with ee = e, ei = i, ie = −i, ii = −e,
// plus the seven other sign-variant multiplication tables.

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "mrel/errors.hpp"
#include "mrel/scalar.hpp"

namespace mrel {

/// Element Re(x)·e + Im(x)·i.
template <Scalar S>
struct MNum {
  S re{0};
  S im{0};

  static MNum e() { return {S(1), S(0)}; }
  static MNum i() { return {S(0), S(1)}; }
  static MNum zero() { return {S(0), S(0)}; }

  friend bool operator==(const MNum& a, const MNum& b) { return a.re == b.re && a.im == b.im; }

  friend MNum operator+(const MNum& a, const MNum& b) { return {S(a.re + b.re), S(a.im + b.im)}; }
  friend MNum operator-(const MNum& a, const MNum& b) { return {S(a.re - b.re), S(a.im - b.im)}; }
  friend MNum operator-(const MNum& a) { return {S(-a.re), S(-a.im)}; }
  friend MNum operator*(const S& k, const MNum& a) { return {S(k * a.re), S(k * a.im)}; }

  MNum& operator+=(const MNum& b) {
    re += b.re;
    im += b.im;
    return *this;
  }

  /// Default-algebra product.
  friend MNum operator*(const MNum& x, const MNum& y) {
    return {S(x.re * y.re - x.im * y.im), S(x.re * y.im - x.im * y.re)};
  }

  friend std::ostream& operator<<(std::ostream& os, const MNum& x) {
    return os << ScalarTraits<S>::to_string(x.re) << "e"
              << (x.im < 0 ? "" : "+") << ScalarTraits<S>::to_string(x.im) << "i";
  }
};

template <Scalar S>
MNum<S> mul(const MNum<S>& x, const MNum<S>& y) {
  return x * y;
}

/// x* := x·e, i.e. Re(x)e − Im(x)i.
template <Scalar S>
MNum<S> conj(const MNum<S>& x) {
  return {x.re, S(-x.im)};
}

template <Scalar S>
bool is_invertible(const MNum<S>& x) {
  return x.re != x.im && x.re != S(-x.im);
}

/// x⁻¹ = x / Re(x²), which satisfies x⁻¹x = xx⁻¹ = e.
template <Scalar S>
MNum<S> invert(const MNum<S>& x) {
  if (!is_invertible(x)) throw NotInvertible("element has Re(x) = ±Im(x)");
  const S norm = x.re * x.re - x.im * x.im;
  return {S(x.re / norm), S(x.im / norm)};
}

// --- sign variants --------------------------------------------------------

enum class Basis : std::uint8_t { E, I };

/// One entry of a multiplication chart: ±e or ±i.
struct BasisTerm {
  int sign;
  Basis basis;

  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

std::string to_string(const BasisTerm& t);

struct SignVariant {
  std::array<char, 3> key;            // each '+' or '-'
  std::array<BasisTerm, 4> table;     // ee, ei, ie, ii

  std::string key_string() const { return {key[0], key[1], key[2]}; }
  const BasisTerm& product(Basis a, Basis b) const {
    return table[static_cast<int>(a) * 2 + static_cast<int>(b)];
  }
  friend bool operator==(const SignVariant&, const SignVariant&) = default;
};

/// The eight charted variants, in chart order (+++, +−+, −++, −−+, ++−, +−−, −+−, −−−).
const std::array<SignVariant, 8>& sign_variants();

/// The (+,+,+) variant, i.e. 𝕄 itself.
const SignVariant& default_variant();

/// Bilinear extension of the variant's basis table.
template <Scalar S>
MNum<S> mul(const MNum<S>& x, const MNum<S>& y, const SignVariant& v) {
  const S* xs[2] = {&x.re, &x.im};
  const S* ys[2] = {&y.re, &y.im};
  MNum<S> out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const BasisTerm& t = v.table[a * 2 + b];
      S coeff = (*xs[a]) * (*ys[b]);
      if (t.sign < 0) coeff = -coeff;
      if (t.basis == Basis::E) {
        out.re += coeff;
      } else {
        out.im += coeff;
      }
    }
  }
  return out;
}

/// x·e under the given variant's table.
template <Scalar S>
MNum<S> conj(const MNum<S>& x, const SignVariant& v) {
  return mul(x, MNum<S>::e(), v);
}

struct ClassificationFlag {
  bool holds = false;
  /// Counterexample when false; the unit element for a true unit flag.
  std::string witness;
};

struct AlgebraClassification {
  ClassificationFlag commutative;
  ClassificationFlag associative;
  ClassificationFlag has_two_sided_unit;
  ClassificationFlag has_left_unit;
};

/// Exhaustive basis checks plus `sample_count` seeded random rational triples.
/// Throws std::invalid_argument when sample_count < 1.
AlgebraClassification classify(const SignVariant& v, int sample_count, std::uint64_t seed);

/// True when the table is literally ℂ's (ee = e, ei = ie = i, ii = −e).
bool reproduces_complex(const SignVariant& v);

/// "ee=e ei=i ie=-i ii=-e | noncomm nonassoc left-unit e"
std::string classification_row(const SignVariant& v, const AlgebraClassification& c);

}  // namespace mrel
