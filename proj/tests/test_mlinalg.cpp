#include <gtest/gtest.h>

#include "mrel/lorentz.hpp"
#include "mrel/mlinalg.hpp"
#include "mrel/sampling.hpp"

using namespace mrel;
using Q = MNum<Rational>;
using QM = MMat3<Rational>;
using QV = MVec3<Rational>;

namespace {

Q q(const Rational& re, const Rational& im) { return {re, im}; }

// Textbook triple loop with the left factor conjugated by hand.
QM oracle_dot(const QM& A, const QM& B) {
  QM out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational re = 0, im = 0;
      for (int k = 0; k < 3; ++k) {
        const Rational ar = A(i, k).re, ai = -A(i, k).im;
        const Rational br = B(k, j).re, bi = B(k, j).im;
        re += ar * br - ai * bi;
        im += ar * bi - ai * br;
      }
      out(i, j) = {re, im};
    }
  return out;
}

}  // namespace

TEST(MLinalg, DotMvExamples) {
  QV x;
  x[0] = q(1, 1);
  EXPECT_EQ(dot_mv(QM{}, x), QV{});
  EXPECT_EQ(dot_mv(QM::identity(), x), x);

  QM A = QM::identity();
  A(0, 0) = q(Rational(5, 4), Rational(-3, 4));
  QV expect;
  expect[0] = q(Rational(1, 2), Rational(1, 2));
  EXPECT_EQ(dot_mv(A, x), expect);
}

TEST(MLinalg, DotMmExamplesAndOracle) {
  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    const QM A = random_mmat<Rational>(rng), B = random_mmat<Rational>(rng);
    EXPECT_EQ(dot_mm(QM{}, B), QM{});
    EXPECT_EQ(dot_mm(QM::identity(), B), B);
    EXPECT_EQ(dot_mm(A, B), oracle_dot(A, B));
  }
}

TEST(MLinalg, AssociativityAndCompatibility) {
  Rng rng(22);
  for (int k = 0; k < 500; ++k) {
    const QM A = random_mmat<Rational>(rng), B = random_mmat<Rational>(rng), C = random_mmat<Rational>(rng);
    const QV x = random_mvec<Rational>(rng);
    EXPECT_EQ(dot_mm(dot_mm(A, B), C), dot_mm(A, dot_mm(B, C)));
    EXPECT_EQ(dot_mv(dot_mm(A, B), x), dot_mv(A, dot_mv(B, x)));
  }
}

TEST(MLinalg, ScalarDotAssociative) {
  Rng rng(23);
  auto dot = [](const Q& a, const Q& b) { return conj(a) * b; };
  for (int k = 0; k < 500; ++k) {
    const Q a = random_mnum<Rational>(rng), b = random_mnum<Rational>(rng), x = random_mnum<Rational>(rng);
    EXPECT_EQ(dot(dot(a, b), x), dot(a, dot(b, x)));
  }
}

TEST(MLinalg, RealLinearity) {
  Rng rng(24);
  for (int k = 0; k < 200; ++k) {
    const QM A = random_mmat<Rational>(rng);
    const QV x = random_mvec<Rational>(rng), y = random_mvec<Rational>(rng);
    const Rational lam = rng.rational(), mu = rng.rational();
    EXPECT_EQ(dot_mv(A, lam * x + mu * y), lam * dot_mv(A, x) + mu * dot_mv(A, y));
  }
}

TEST(MLinalg, EmbeddingOfBasisProducts) {
  // conj(a)·b must map to the product of the symmetric blocks.
  const Q basis[2] = {Q::e(), Q::i()};
  for (const Q& a : basis)
    for (const Q& b : basis) {
      const Q p = conj(a) * b;
      const Rational A[2][2] = {{a.re, a.im}, {a.im, a.re}};
      const Rational B[2][2] = {{b.re, b.im}, {b.im, b.re}};
      Rational P[2][2];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) P[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
      EXPECT_EQ(P[0][0], p.re);
      EXPECT_EQ(P[0][1], p.im);
      EXPECT_EQ(P[1][0], p.im);
      EXPECT_EQ(P[1][1], p.re);
    }
}

TEST(MLinalg, EmbeddingHomomorphism) {
  Rng rng(25);
  for (int k = 0; k < 500; ++k) {
    const QM A = random_mmat<Rational>(rng), B = random_mmat<Rational>(rng);
    const QV x = random_mvec<Rational>(rng);
    EXPECT_EQ(embed_mat(dot_mm(A, B)), mat6_mul(embed_mat(A), embed_mat(B)));
    EXPECT_EQ(embed_vec(dot_mv(A, x)), mat6_apply(embed_mat(A), embed_vec(x)));
  }
}

TEST(MLinalg, EmbeddingLayout) {
  EXPECT_EQ(embed_mat(QM{}), RMat6<Rational>{});
  QV x;
  x[0] = q(1, 2), x[1] = q(3, 4), x[2] = q(5, 6);
  EXPECT_EQ(embed_vec(x), (RVec6<Rational>{1, 2, 3, 4, 5, 6}));

  QM A;
  A(1, 2) = q(7, 8);
  const auto m = embed_mat(A);
  EXPECT_EQ(m[2][4], 7);
  EXPECT_EQ(m[2][5], 8);
  EXPECT_EQ(m[3][4], 8);
  EXPECT_EQ(m[3][5], 7);
}

TEST(MLinalg, EmbeddedBoostBlocks) {
  for (const Rational& beta : {Rational(3, 5), Rational(5, 13)}) {
    const Rational gamma = beta == Rational(3, 5) ? Rational(5, 4) : Rational(13, 12);
    const auto w = Velocity<Rational>::from_beta_direction(beta, {1, 0, 0});
    const auto m = embed_mat(build_L(w).matrix);
    EXPECT_EQ(m[0][0], gamma);
    EXPECT_EQ(m[1][1], gamma);
    EXPECT_EQ(m[0][1], -beta * gamma);
    EXPECT_EQ(m[1][0], -beta * gamma);
    for (int i = 2; i < 6; ++i) EXPECT_EQ(m[i][i], 1);
  }
  // Oblique direction (3/13, 4/13, 12/13): block (1,2) entries.
  const Vec3<Rational> a{Rational(3, 13), Rational(4, 13), Rational(12, 13)};
  const auto w = Velocity<Rational>::from_beta_direction(Rational(3, 5), a);
  const auto m = embed_mat(build_L(w).matrix);
  const Rational axay = a[0] * a[1];
  EXPECT_EQ(m[0][2], Rational(1, 4) * axay);
  EXPECT_EQ(m[1][3], Rational(1, 4) * axay);
  EXPECT_EQ(m[0][3], Rational(-3, 4) * axay);
  EXPECT_EQ(m[1][2], Rational(-3, 4) * axay);
  EXPECT_EQ(m[0][0], 1 + Rational(1, 4) * a[0] * a[0]);
}
