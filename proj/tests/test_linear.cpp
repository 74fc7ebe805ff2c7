#include <random>

#include <gtest/gtest.h>

#include "tqft/errors.hpp"
#include "tqft/matrix.hpp"

using tqft::Matrix;
using tqft::Rational;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (auto& q : m.entries()) {
    const long num = static_cast<long>(rng() % 7) - 3;
    const long den = static_cast<long>(rng() % 3) + 1;
    q = Rational(num, den);
  }
  return m;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational q(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(q.numerator(), -3);
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(Rational(mpz_class(4), mpz_class(2)).str(), "2");
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), tqft::InputError);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse(" -2/6 "), Rational(mpz_class(-1), mpz_class(3)));
  EXPECT_EQ(Rational::parse("+5/10").str(), "1/2");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
  for (const char* bad : {"", "1/0", "1/-2", "x", "1.5", "1/", "/2", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), tqft::InputError) << bad;
  }
}

TEST(Rational, ExactArithmetic) {
  const Rational third(mpz_class(1), mpz_class(3));
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1) / Rational(3) * Rational(3), Rational(1));
  EXPECT_LT(third, Rational(1));
  EXPECT_THROW(Rational(1) / Rational(0), tqft::InputError);
  Rational acc = 1;
  acc.add_product(third, Rational(6));
  EXPECT_EQ(acc, Rational(3));
}

TEST(Compose, Examples) {
  EXPECT_EQ(tqft::compose(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(2));
  EXPECT_EQ(tqft::compose(Matrix::row({0, 1}), Matrix::column({1, 0})), (Matrix{{0}}));
  // [[1,2],[3,4]]·[[0,1],[1,0]] swaps the columns.
  EXPECT_EQ(tqft::compose(Matrix{{1, 2}, {3, 4}}, Matrix{{0, 1}, {1, 0}}), (Matrix{{2, 1}, {4, 3}}));
}

TEST(Compose, ShapeErrorNamesBothShapes) {
  try {
    tqft::compose(Matrix(2, 3), Matrix(2, 2));
    FAIL();
  } catch (const tqft::ShapeError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("2x3"), std::string::npos);
    EXPECT_NE(what.find("2x2"), std::string::npos);
  }
}

TEST(Kron, Examples) {
  EXPECT_EQ(tqft::kron(Matrix::identity(2), Matrix::identity(3)), Matrix::identity(6));
  const Matrix m{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(tqft::kron(Matrix{{1}}, m), m);
  EXPECT_EQ(tqft::kron(Matrix{{0, 1}, {1, 0}}, Matrix{{2}}), (Matrix{{0, 2}, {2, 0}}));
  EXPECT_EQ(tqft::kron_power(m, 0), Matrix::identity(1));
}

TEST(Kron, IndexFormula) {
  std::mt19937_64 rng(7);
  const Matrix f = random_matrix(rng, 2, 3);
  const Matrix g = random_matrix(rng, 3, 2);
  const Matrix k = tqft::kron(f, g);
  ASSERT_EQ(k.rows(), 6u);
  ASSERT_EQ(k.cols(), 6u);
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 3; ++j1)
      for (std::size_t i2 = 0; i2 < 3; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          EXPECT_EQ(k(i1 * 3 + i2, j1 * 2 + j2), f(i1, j1) * g(i2, j2));
}

TEST(Braiding, Examples) {
  EXPECT_EQ(tqft::braiding(1, 3), Matrix::identity(3));
  // Enumerating e_i⊗e_j ↦ e_j⊗e_i for i,j ∈ {0,1}: flat 0→0, 1→2, 2→1, 3→3.
  Matrix expected(4, 4);
  expected(0, 0) = expected(2, 1) = expected(1, 2) = expected(3, 3) = 1;
  EXPECT_EQ(tqft::braiding(2, 2), expected);
  EXPECT_EQ(tqft::compose(tqft::braiding(3, 2), tqft::braiding(2, 3)), Matrix::identity(6));
  EXPECT_THROW(tqft::braiding(0, 2), tqft::InputError);
  EXPECT_THROW(tqft::braiding(2, 0), tqft::InputError);
}

TEST(Interleaver, Examples) {
  EXPECT_EQ(tqft::interleaver(0, 3, 2), Matrix::identity(1));
  EXPECT_EQ(tqft::interleaver(1, 3, 2), Matrix::identity(6));

  // Enumerate the 16 binary indices (i1 i2 j1 j2) and send them to (i1 j1 i2 j2).
  Matrix expected(16, 16);
  for (unsigned i1 = 0; i1 < 2; ++i1)
    for (unsigned i2 = 0; i2 < 2; ++i2)
      for (unsigned j1 = 0; j1 < 2; ++j1)
        for (unsigned j2 = 0; j2 < 2; ++j2)
          expected((i1 << 3) | (j1 << 2) | (i2 << 1) | j2, (i1 << 3) | (i2 << 2) | (j1 << 1) | j2) = 1;
  EXPECT_EQ(tqft::interleaver(2, 2, 2), expected);
}

TEST(Interleaver, SendsTensorPowersToPowersOfTensor) {
  // J ∘ (x1⊗...⊗xn ⊗ y1⊗...⊗yn) = (x1⊗y1)⊗...⊗(xn⊗yn) on random vectors.
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n <= 3; ++n) {
    Matrix xs = Matrix::identity(1), ys = Matrix::identity(1), pairs = Matrix::identity(1);
    for (std::size_t t = 0; t < n; ++t) {
      const Matrix x = random_matrix(rng, 2, 1);
      const Matrix y = random_matrix(rng, 3, 1);
      xs = tqft::kron(xs, x);
      ys = tqft::kron(ys, y);
      pairs = tqft::kron(pairs, tqft::kron(x, y));
    }
    EXPECT_EQ(tqft::compose(tqft::interleaver(n, 2, 3), tqft::kron(xs, ys)), pairs) << n;
  }
}

TEST(Permutations, BraidingAndInterleaverArePermutations) {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) {
      EXPECT_TRUE(tqft::braiding(a, b).is_permutation());
      for (std::size_t n = 0; n <= 3; ++n) EXPECT_TRUE(tqft::interleaver(n, a, b).is_permutation());
    }
  EXPECT_FALSE((Matrix{{1, 1}, {0, 1}}).is_permutation());
  EXPECT_FALSE((Matrix{{2}}).is_permutation());
}

// Property sweeps over random small shapes.

TEST(LinearProperties, ComposeAssociative) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t a = 1 + rng() % 4, b = 1 + rng() % 4, c = 1 + rng() % 4, d = 1 + rng() % 4;
    const Matrix f = random_matrix(rng, a, b), g = random_matrix(rng, b, c), h = random_matrix(rng, c, d);
    EXPECT_EQ(tqft::compose(tqft::compose(f, g), h), tqft::compose(f, tqft::compose(g, h)));
  }
}

TEST(LinearProperties, KronAssociativeAndInterchange) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix f = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    const Matrix g = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    const Matrix h = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    EXPECT_EQ(tqft::kron(tqft::kron(f, g), h), tqft::kron(f, tqft::kron(g, h)));

    const Matrix f2 = random_matrix(rng, f.cols(), 1 + rng() % 3);
    const Matrix g2 = random_matrix(rng, g.cols(), 1 + rng() % 3);
    EXPECT_EQ(tqft::compose(tqft::kron(f, g), tqft::kron(f2, g2)),
              tqft::kron(tqft::compose(f, f2), tqft::compose(g, g2)));
  }
}

TEST(LinearProperties, BraidingNatural) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t a = 1 + rng() % 3, a2 = 1 + rng() % 3, b = 1 + rng() % 3, b2 = 1 + rng() % 3;
    const Matrix f = random_matrix(rng, a2, a);
    const Matrix g = random_matrix(rng, b2, b);
    EXPECT_EQ(tqft::compose(tqft::braiding(a2, b2), tqft::kron(f, g)),
              tqft::compose(tqft::kron(g, f), tqft::braiding(a, b)));
  }
}

TEST(LinearProperties, ParallelKernelsMatchSerialReference) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t a = 1 + rng() % 9, b = 1 + rng() % 9, c = 1 + rng() % 9;
    const Matrix f = random_matrix(rng, a, b), g = random_matrix(rng, b, c);
    EXPECT_EQ(tqft::compose(f, g), tqft::serial::compose(f, g));
    EXPECT_EQ(tqft::kron(f, g), tqft::serial::kron(f, g));
  }
}

TEST(Inverse, ExactAndSingular) {
  const Matrix m{{2, 1}, {1, 1}};
  const auto inv = tqft::inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(tqft::compose(m, *inv), Matrix::identity(2));
  EXPECT_EQ(tqft::compose(Matrix{{0, 1}, {1, 0}}, *tqft::inverse(Matrix{{0, 1}, {1, 0}})),
            Matrix::identity(2));
  EXPECT_FALSE(tqft::inverse(Matrix{{1, 2}, {2, 4}}));
  EXPECT_THROW(tqft::inverse(Matrix(2, 3)), tqft::ShapeError);
}

TEST(FirstDifference, RowMajorOrder) {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{1, 2}, {0, 0}};
  const auto d = tqft::first_difference(a, b);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->row, 1u);
  EXPECT_EQ(d->col, 0u);
  EXPECT_EQ(d->lhs, Rational(3));
  EXPECT_EQ(d->rhs, Rational(0));
  EXPECT_FALSE(tqft::first_difference(a, a));
  EXPECT_THROW(tqft::first_difference(a, Matrix(1, 2)), tqft::ShapeError);
}

TEST(Matrix, ConstructionChecksEntryCount) {
  EXPECT_THROW(Matrix(2, 2, std::vector<Rational>(3)), tqft::ShapeError);
  EXPECT_THROW((Matrix{{1, 2}, {3}}), tqft::ShapeError);
  EXPECT_THROW(Matrix(2, 2).at(2, 0), tqft::ShapeError);
}
