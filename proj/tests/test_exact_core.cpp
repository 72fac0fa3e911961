#include <gtest/gtest.h>

#include "oracles.hpp"
#include "poncelet/matrix.hpp"
#include "poncelet/modular.hpp"
#include "poncelet/polynomial.hpp"
#include "poncelet/rational.hpp"
#include "poncelet/sampling.hpp"
#include "poncelet/schwarzenberger.hpp"

using namespace poncelet;

namespace {

MultiPoly x(std::size_t i, std::size_t nv = 3) { return MultiPoly::variable(nv, i); }

RationalMatrix unit_rows(std::initializer_list<std::size_t> which, std::size_t cols) {
  RationalMatrix m(which.size(), cols);
  std::size_t r = 0;
  for (std::size_t c : which) m(r++, c) = 1;
  return m;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational q(BigInt(6), BigInt(-4));
  EXPECT_EQ(q.numerator(), -3);
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(q.to_string(), "-3/2");
  const Rational z(BigInt(0), BigInt(-7));
  EXPECT_EQ(z.numerator(), 0);
  EXPECT_EQ(z.denominator(), 1);
  EXPECT_EQ(z.to_string(), "0");
}

TEST(Rational, ArithmeticStaysReduced) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a = rng.rational(50), b = rng.rational(50);
    for (const Rational& r : {a + b, a - b, a * b}) {
      EXPECT_GT(r.denominator(), 0);
      EXPECT_EQ(gcd(r.numerator(), r.denominator()), 1);
    }
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-12/8"), Rational(BigInt(-3), BigInt(2)));
  EXPECT_EQ(Rational::parse("+5"), Rational(5));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
  for (const char* bad : {"", "1/0", "x", "1/-2", "1.5", "/3", "-"}) EXPECT_THROW(Rational::parse(bad), InvalidInput);
}

TEST(Rational, DivisionByZeroIsDegenerate) {
  EXPECT_THROW(Rational(1) / Rational(0), DegeneracyError);
  EXPECT_THROW(Rational(0).inverse(), DegeneracyError);
}

TEST(MultiPoly, ZeroHasNoDegree) {
  const MultiPoly z(3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.degree().has_value());
  EXPECT_EQ(MultiPoly::constant(3, Rational(0)).size(), 0U);
  EXPECT_EQ((x(0) - x(0)).size(), 0U);
  EXPECT_EQ(MultiPoly::constant(3, Rational(4)).degree(), 0U);
}

TEST(MultiPoly, NoZeroCoefficientsStored) {
  MultiPoly p = x(0) * x(1) + x(2);
  p.add_term({1, 1, 0}, Rational(-1));
  EXPECT_EQ(p, x(2));
  const MultiPoly q = (x(0) + x(1)) * (x(0) - x(1));
  for (const auto& [e, c] : q.terms()) {
    EXPECT_FALSE(c.is_zero());
    EXPECT_EQ(e.size(), 3U);
  }
}

TEST(MultiPoly, RejectsMismatchedVariables) {
  EXPECT_THROW(x(0, 2) + x(0, 3), InvalidInput);
  EXPECT_THROW(MultiPoly::variable(2, 2), InvalidInput);
}

TEST(MultiPoly, TextIsCanonical) {
  const MultiPoly p = x(2) * x(2) + x(0) * x(1) + x(1) * x(2) + x(0) * x(0);
  EXPECT_EQ(p.to_string(), "x0^2 + x0*x1 + x1*x2 + x2^2");
  EXPECT_EQ((-p).to_string(), "-x0^2 - x0*x1 - x1*x2 - x2^2");
  EXPECT_EQ(MultiPoly(3).to_string(), "0");
  EXPECT_EQ((x(0) * Rational(BigInt(1), BigInt(2)) - MultiPoly::constant(3, Rational(3))).to_string(), "1/2*x0 - 3");
}

TEST(MultiPoly, Evaluate) {
  const MultiPoly p = x(0) * x(0) + x(0) * x(1) + x(1) * x(2) + x(2) * x(2);
  EXPECT_EQ(p.evaluate({0, 1, 0}), 0);
  EXPECT_EQ(p.evaluate({1, -1, 0}), 0);
  EXPECT_EQ(p.evaluate({0, -1, 1}), 0);
  EXPECT_EQ(p.evaluate({1, 2, 3}), 1 + 2 + 6 + 9);
  EXPECT_THROW(p.evaluate({1, 2}), InvalidInput);
}

TEST(PartialDerivative, Examples) {
  EXPECT_EQ(partial_derivative(x(0) * x(0), 0), x(0) * Rational(2));
  EXPECT_TRUE(partial_derivative(x(0) * x(2), 1).is_zero());
  const MultiPoly conic = x(0) * x(0) + x(0) * x(1) + x(1) * x(2) + x(2) * x(2);
  EXPECT_EQ(partial_derivative(conic, 1), x(0) + x(2));
  EXPECT_THROW(partial_derivative(conic, 3), InvalidInput);
}

TEST(PartialDerivative, MixedPartialsCommute) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly p(4);
    for (int t = 0; t < 8; ++t) {
      Exponents e(4);
      for (auto& v : e) v = static_cast<unsigned>(rng.uniform(0, 3));
      p.add_term(e, rng.rational(9));
    }
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        EXPECT_EQ(partial_derivative(partial_derivative(p, i), j), partial_derivative(partial_derivative(p, j), i));
  }
}

TEST(DivideExact, RoundTrip) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiPoly a = MultiPoly::linear({rng.rational(5), rng.rational(5), rng.rational(5)}) +
                        x(0) * x(1) * rng.nonzero_integer(4);
    const MultiPoly b = MultiPoly::linear({rng.nonzero_integer(5), rng.rational(5), rng.rational(5)});
    EXPECT_EQ(divide_exact(a * b, b), a);
  }
  EXPECT_THROW(divide_exact(x(0) * x(0) + x(1), x(0)), std::logic_error);
}

TEST(SubstituteLinear, MatchesEvaluation) {
  Rng rng(23);
  const MultiPoly p = x(0) * x(0) * x(1) - x(2) * x(2) * Rational(3) + x(1);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix l = random_integer_matrix(rng, 3, 3, 4);
    const RationalVector pt{rng.rational(6), rng.rational(6), rng.rational(6)};
    EXPECT_EQ(substitute_linear(p, l).evaluate(pt), p.evaluate(mat_vec(l, pt)));
  }
}

TEST(MonomialsOfDegree, CountAndOrder) {
  const auto m = monomials_of_degree(4, 3);
  EXPECT_EQ(m.size(), 20U);
  EXPECT_EQ(m.front(), (Exponents{3, 0, 0, 0}));
  EXPECT_EQ(m.back(), (Exponents{0, 0, 0, 3}));
  for (std::size_t i = 1; i < m.size(); ++i) EXPECT_TRUE(GrlexLess{}(m[i], m[i - 1]));
}

TEST(DetPolyMatrix, Trivial) {
  PolyMatrix id(2, 2, 3);
  id.set(0, 0, MultiPoly::constant(3, 1));
  id.set(1, 1, MultiPoly::constant(3, 1));
  EXPECT_EQ(det_poly_matrix(id), MultiPoly::constant(3, 1));
  PolyMatrix diag(2, 2, 3);
  diag.set(0, 0, x(0));
  diag.set(1, 1, x(1));
  EXPECT_EQ(det_poly_matrix(diag), x(0) * x(1));
}

TEST(DetPolyMatrix, ConicExample) {
  const PolyMatrix m = canonical_matrix(2, 1).matrix.with_constant_column({0, 1, -1, 0}).with_constant_column({1, 0, 0, 1});
  const MultiPoly expected = -(x(0) * x(0) + x(0) * x(1) + x(1) * x(2) + x(2) * x(2));
  EXPECT_EQ(det_poly_matrix(m), expected);
  EXPECT_EQ(oracle::laplace_det(m), expected);
}

TEST(DetPolyMatrix, NonSquareIsDimensionError) {
  EXPECT_THROW(det_poly_matrix(canonical_matrix(2, 1).matrix), DimensionError);
}

TEST(DetPolyMatrix, AgreesWithLaplaceUpToFive) {
  Rng rng(31);
  for (std::size_t size = 1; size <= 5; ++size)
    for (int trial = 0; trial < 30; ++trial) {
      const PolyMatrix m = oracle::random_linear_matrix(rng, size, 3);
      EXPECT_EQ(det_poly_matrix(m), oracle::laplace_det(m)) << "size " << size;
    }
}

TEST(DetPolyMatrix, EqualColumnsGiveZero) {
  Rng rng(37);
  for (std::size_t size = 2; size <= 5; ++size)
    for (int trial = 0; trial < 10; ++trial) {
      PolyMatrix m = oracle::random_linear_matrix(rng, size, 3);
      const std::size_t a = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(size) - 1));
      const std::size_t b = (a + 1 + static_cast<std::size_t>(rng.uniform(0, static_cast<long>(size) - 2))) % size;
      for (std::size_t r = 0; r < size; ++r) m.set(r, b, m.at(r, a));
      EXPECT_TRUE(det_poly_matrix(m).is_zero());
    }
}

TEST(RationalRank, Examples) {
  EXPECT_EQ(rank(RationalMatrix(3, 3)), 0U);
  EXPECT_EQ(rank(unit_rows({0, 1, 2}, 6)), 3U);
  // Gram matrix of x1*x2 - x0*x3.
  RationalMatrix gram(4, 4);
  gram(1, 2) = gram(2, 1) = Rational(BigInt(1), BigInt(2));
  gram(0, 3) = gram(3, 0) = Rational(BigInt(-1), BigInt(2));
  EXPECT_EQ(rank(gram), 4U);
}

TEST(RationalRank, AgreesWithModularRank) {
  Rng rng(41);
  const std::uint64_t p = random_prime_62(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
    const std::size_t inner = static_cast<std::size_t>(rng.uniform(1, 6));
    RationalMatrix left(r, inner), right(inner, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < inner; ++j) left(i, j) = rng.rational(30);
    for (std::size_t i = 0; i < inner; ++i)
      for (std::size_t j = 0; j < c; ++j) right(i, j) = rng.rational(30);
    const RationalMatrix m = left * right;
    EXPECT_EQ(rank_mod_prime(m, p).value_or(999), rank(m));
  }
}

TEST(RationalRank, DeterminantMatchesLaplace) {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational(12);
    EXPECT_EQ(determinant(m), oracle::laplace_det(m));
    if (!determinant(m).is_zero()) EXPECT_EQ(inverse(m) * m, RationalMatrix::identity(n));
  }
}

TEST(ModularPrime, SixtyTwoBits) {
  for (std::uint64_t seed : {1ULL, 2ULL, 20110601ULL}) {
    const std::uint64_t p = random_prime_62(seed);
    EXPECT_GE(p, std::uint64_t{1} << 61);
    EXPECT_LT(p, std::uint64_t{1} << 62);
    EXPECT_NE(mpz_probab_prime_p(BigInt(std::to_string(p)).get_mpz_t(), 30), 0);
  }
}

TEST(KernelBasis, Examples) {
  const auto k1 = kernel_basis(RationalMatrix{{1, 1}});
  ASSERT_EQ(k1.size(), 1U);
  EXPECT_TRUE(projectively_equal(k1[0], RationalVector{1, -1}));
  EXPECT_TRUE(kernel_basis(RationalMatrix::identity(3)).empty());
  const auto k3 = kernel_basis(unit_rows({0, 1, 2}, 6));
  ASSERT_EQ(k3.size(), 3U);
  for (const auto& v : k3) {
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(v[i].is_zero());
  }
  EXPECT_EQ(rank(RationalMatrix::from_rows(k3)), 3U);
}

TEST(KernelBasis, IsNullSpace) {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 7));
    RationalMatrix m = random_integer_matrix(rng, r, c, 3);
    if (trial % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(2);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size(), c - rank(m));
    for (const auto& v : ker) EXPECT_EQ(mat_vec(m, v), RationalVector(r));
    if (!ker.empty()) EXPECT_EQ(rank(RationalMatrix::from_rows(ker)), ker.size());
  }
}

TEST(Projective, NormalizeAndCompare) {
  EXPECT_TRUE(projectively_equal(RationalVector{0, 2, -4}, RationalVector{0, -1, 2}));
  EXPECT_FALSE(projectively_equal(RationalVector{0, 2, -4}, RationalVector{0, 1, 2}));
  EXPECT_EQ(normalize_projective(RationalVector{0, -3, 6}), (RationalVector{0, 1, -2}));
  EXPECT_TRUE(projectively_equal(x(0) * Rational(3) + x(1), x(0) * Rational(-6) - x(1) * Rational(2)));
  EXPECT_FALSE(projectively_equal(MultiPoly(3), MultiPoly(3)));
}
