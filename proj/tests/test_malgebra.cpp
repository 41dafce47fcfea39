#include <gtest/gtest.h>

#include <map>

#include "mrel/errors.hpp"
#include "mrel/malgebra.hpp"
#include "mrel/rng.hpp"

using namespace mrel;
using Q = MNum<Rational>;

namespace {

Q q(long re, long im) { return {Rational(re), Rational(im)}; }

// Chart columns written out independently: coefficient pairs (e, i) for ee, ei, ie, ii.
using Table = std::array<std::array<int, 2>, 4>;
const std::map<std::string, Table> kChart = {
    {"+++", {{{1, 0}, {0, 1}, {0, -1}, {-1, 0}}}},
    {"+-+", {{{1, 0}, {0, 1}, {0, 1}, {1, 0}}}},
    {"-++", {{{-1, 0}, {0, -1}, {0, -1}, {-1, 0}}}},
    {"--+", {{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}}},
    {"++-", {{{1, 0}, {0, -1}, {0, 1}, {-1, 0}}}},
    {"+--", {{{1, 0}, {0, -1}, {0, -1}, {1, 0}}}},
    {"-+-", {{{-1, 0}, {0, 1}, {0, 1}, {-1, 0}}}},
    {"---", {{{-1, 0}, {0, 1}, {0, -1}, {1, 0}}}},
};

// Oracle product from the structure constants.
Q oracle_mul(const Table& t, const Q& x, const Q& y) {
  const Rational xs[2] = {x.re, x.im};
  const Rational ys[2] = {y.re, y.im};
  Q out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      out.re += xs[a] * ys[b] * t[a * 2 + b][0];
      out.im += xs[a] * ys[b] * t[a * 2 + b][1];
    }
  return out;
}

struct Flags {
  bool comm, assoc, left_unit, two_sided;
};

// Brute force over a small integer grid for units, basis triples for the rest.
Flags oracle_flags(const Table& t) {
  const Q basis[2] = {q(1, 0), q(0, 1)};
  Flags f{true, true, false, false};
  for (const auto& x : basis)
    for (const auto& y : basis) {
      if (oracle_mul(t, x, y) != oracle_mul(t, y, x)) f.comm = false;
      for (const auto& z : basis)
        if (oracle_mul(t, oracle_mul(t, x, y), z) != oracle_mul(t, x, oracle_mul(t, y, z))) f.assoc = false;
    }
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      const Q u = q(a, b);
      bool left = true, right = true;
      for (const auto& x : basis) {
        left = left && oracle_mul(t, u, x) == x;
        right = right && oracle_mul(t, x, u) == x;
      }
      f.left_unit = f.left_unit || left;
      f.two_sided = f.two_sided || (left && right);
    }
  return f;
}

}  // namespace

TEST(MAlgebra, BasisProducts) {
  EXPECT_EQ(Q::e() * Q::i(), Q::i());
  EXPECT_EQ(Q::i() * Q::e(), -Q::i());
  EXPECT_EQ(Q::i() * Q::i(), -Q::e());
  EXPECT_EQ(Q::e() * Q::e(), Q::e());
}

TEST(MAlgebra, ZeroAnnihilates) {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const Q y{rng.rational(), rng.rational()};
    EXPECT_EQ(Q::zero() * y, Q::zero());
    EXPECT_EQ(mul(Q::zero(), y, default_variant()), Q::zero());
  }
}

TEST(MAlgebra, SquareOfTwoEPlusI) {
  // 4ee + 2ei + 2ie + ii, term by term.
  const Q expect = Rational(4) * Q::e() + Rational(2) * Q::i() + Rational(2) * (-Q::i()) + (-Q::e());
  EXPECT_EQ(expect, q(3, 0));
  EXPECT_EQ(q(2, 1) * q(2, 1), expect);
}

TEST(MAlgebra, Conjugation) {
  EXPECT_EQ(conj(Q::e()), Q::e());
  EXPECT_EQ(conj(Q::i()), -Q::i());
  EXPECT_EQ(conj(q(3, 4)), q(3, -4));
  EXPECT_EQ(conj(q(3, 4)), q(3, 4) * Q::e());
}

TEST(MAlgebra, InverseExamples) {
  EXPECT_EQ(invert(Q::e()), Q::e());
  const Q x = q(2, 1);
  const Q inv = invert(x);
  EXPECT_EQ(inv, (Q{Rational(2, 3), Rational(1, 3)}));
  EXPECT_EQ(inv * x, Q::e());
  EXPECT_EQ(x * inv, Q::e());
  EXPECT_THROW(invert(q(1, 1)), NotInvertible);
  EXPECT_THROW(invert(q(2, -2)), NotInvertible);
  EXPECT_THROW(invert(Q::zero()), NotInvertible);
}

TEST(MAlgebra, InverseProperty) {
  Rng rng(11);
  for (int k = 0; k < 1000; ++k) {
    const Q x{rng.rational(), rng.rational()};
    const bool singular = x.re == x.im || x.re == -x.im;
    EXPECT_EQ(is_invertible(x), !singular);
    if (singular) {
      EXPECT_THROW(invert(x), NotInvertible);
      continue;
    }
    const Q inv = invert(x);
    EXPECT_EQ(inv * x, Q::e());
    EXPECT_EQ(x * inv, Q::e());
    EXPECT_EQ(invert(inv), x);
  }
}

TEST(MAlgebra, PropositionOneOnRandomTriples) {
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const Q x{rng.rational(), rng.rational()}, y{rng.rational(), rng.rational()}, z{rng.rational(), rng.rational()};
    const Rational a = rng.rational();
    EXPECT_EQ((a * x).re, a * x.re);
    EXPECT_EQ(Q::e() * x, x);
    EXPECT_EQ(conj(x), (Q{x.re, -x.im}));
    EXPECT_EQ((x * y).re, x.re * y.re - x.im * y.im);
    EXPECT_EQ((x * y).im, x.re * y.im - x.im * y.re);
    EXPECT_EQ(x * (y * z), y * (x * z));
    EXPECT_EQ(conj(x) * (y * z), (x * y) * z);
    EXPECT_EQ((x * y) * z, (z * y) * x);
    EXPECT_EQ(x - conj(x), Rational(2 * x.im) * Q::i());
    EXPECT_EQ(x + conj(x), Rational(2 * x.re) * Q::e());
    EXPECT_EQ(conj(conj(x)), x);
    EXPECT_EQ(x * conj(y), y * conj(x));
    EXPECT_EQ(conj(x) * y, conj(y) * x);
    EXPECT_EQ(x * y, conj(y) * conj(x));
    EXPECT_EQ(x * y, conj(y * x));
    EXPECT_EQ((x * x).im, 0);
    EXPECT_EQ((x * x).re, x.re * x.re - x.im * x.im);
  }
}

TEST(MAlgebra, NonCommutativeAndNonAssociative) {
  EXPECT_NE(Q::e() * Q::i(), Q::i() * Q::e());
  EXPECT_NE((Q::i() * Q::e()) * Q::e(), Q::i() * (Q::e() * Q::e()));
}

TEST(Variants, TablesMatchChart) {
  ASSERT_EQ(sign_variants().size(), 8u);
  const char* order[] = {"+++", "+-+", "-++", "--+", "++-", "+--", "-+-", "---"};
  for (int n = 0; n < 8; ++n) {
    const SignVariant& v = sign_variants()[n];
    EXPECT_EQ(v.key_string(), order[n]);
    const Table& t = kChart.at(v.key_string());
    for (int k = 0; k < 4; ++k) {
      const BasisTerm& b = v.table[k];
      const int re = b.basis == Basis::E ? b.sign : 0;
      const int im = b.basis == Basis::I ? b.sign : 0;
      EXPECT_EQ(re, t[k][0]) << v.key_string() << " entry " << k;
      EXPECT_EQ(im, t[k][1]) << v.key_string() << " entry " << k;
    }
  }
  EXPECT_EQ(default_variant().key_string(), "+++");
}

TEST(Variants, ProductMatchesOracleAndIsBilinear) {
  Rng rng(9);
  for (const SignVariant& v : sign_variants()) {
    const Table& t = kChart.at(v.key_string());
    for (int k = 0; k < 200; ++k) {
      const Q x{rng.rational(), rng.rational()}, y{rng.rational(), rng.rational()}, z{rng.rational(), rng.rational()};
      EXPECT_EQ(mul(x, y, v), oracle_mul(t, x, y));
      EXPECT_EQ(mul(x + y, z, v), mul(x, z, v) + mul(y, z, v));
      EXPECT_EQ(mul(x, y + z, v), mul(x, y, v) + mul(x, z, v));
    }
  }
}

TEST(Variants, ClassificationMatchesBruteForce) {
  for (const SignVariant& v : sign_variants()) {
    const Flags f = oracle_flags(kChart.at(v.key_string()));
    const AlgebraClassification c = classify(v, 200, 1);
    EXPECT_EQ(c.commutative.holds, f.comm) << v.key_string();
    EXPECT_EQ(c.associative.holds, f.assoc) << v.key_string();
    EXPECT_EQ(c.has_left_unit.holds, f.left_unit) << v.key_string();
    EXPECT_EQ(c.has_two_sided_unit.holds, f.two_sided) << v.key_string();
    for (const auto* flag : {&c.commutative, &c.associative, &c.has_two_sided_unit, &c.has_left_unit}) {
      if (!flag->holds) EXPECT_FALSE(flag->witness.empty()) << v.key_string();
    }
  }
}

TEST(Variants, DefaultAndCommutativeUnital) {
  const auto ppp = classify(sign_variants()[0], 1000, 7);
  EXPECT_FALSE(ppp.commutative.holds);
  EXPECT_FALSE(ppp.associative.holds);
  EXPECT_FALSE(ppp.has_two_sided_unit.holds);
  EXPECT_TRUE(ppp.has_left_unit.holds);
  EXPECT_EQ(classification_row(sign_variants()[0], ppp), "ee=e ei=i ie=-i ii=-e | noncomm nonassoc left-unit e");

  const auto pmp = classify(sign_variants()[1], 1000, 7);
  EXPECT_TRUE(pmp.commutative.holds);
  EXPECT_TRUE(pmp.associative.holds);
  EXPECT_TRUE(pmp.has_two_sided_unit.holds);
  EXPECT_EQ(classification_row(sign_variants()[1], pmp), "ee=e ei=i ie=i ii=e | comm assoc unital");
}

TEST(Variants, NoneIsComplex) {
  for (const SignVariant& v : sign_variants()) EXPECT_FALSE(reproduces_complex(v)) << v.key_string();
  const SignVariant complex{{'?', '?', '?'},
                            {BasisTerm{1, Basis::E}, BasisTerm{1, Basis::I}, BasisTerm{1, Basis::I},
                             BasisTerm{-1, Basis::E}}};
  EXPECT_TRUE(reproduces_complex(complex));
}

TEST(Variants, ClassifyIsDeterministicAndValidates) {
  for (const SignVariant& v : sign_variants()) {
    const auto a = classify(v, 50, 3), b = classify(v, 50, 3);
    EXPECT_EQ(classification_row(v, a), classification_row(v, b));
    EXPECT_EQ(a.associative.witness, b.associative.witness);
  }
  EXPECT_THROW(classify(default_variant(), 0, 1), std::invalid_argument);
}

TEST(Variants, ConjugateIsRightMultiplicationByE) {
  Rng rng(2);
  for (const SignVariant& v : sign_variants()) {
    const Q x{rng.rational(), rng.rational()};
    EXPECT_EQ(conj(x, v), mul(x, Q::e(), v));
  }
  const Q x = q(3, 4);
  EXPECT_EQ(conj(x, default_variant()), conj(x));
}
