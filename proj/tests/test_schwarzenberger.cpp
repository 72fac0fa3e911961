#include <gtest/gtest.h>

#include "oracles.hpp"
#include "poncelet/incidence.hpp"
#include "poncelet/schwarzenberger.hpp"

using namespace poncelet;

namespace {

MultiPoly x(std::size_t i, std::size_t nv = 3) { return MultiPoly::variable(nv, i); }

BinaryForm bf(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int q : c) v.emplace_back(q);
  return BinaryForm(v);
}

const BinaryForm kF = bf({0, 1, -1, 0});
const BinaryForm kG = bf({1, 0, 0, 1});

MultiPoly conic() { return x(0) * x(0) + x(0) * x(1) + x(1) * x(2) + x(2) * x(2); }

}  // namespace

TEST(CanonicalMatrix, MatrixThreeOne) {
  const auto pres = canonical_matrix(3, 1);
  ASSERT_EQ(pres.matrix.rows(), 5U);
  ASSERT_EQ(pres.matrix.cols(), 2U);
  const MultiPoly zero(4);
  const std::vector<MultiPoly> col0{x(0, 4), x(1, 4), x(2, 4), x(3, 4), zero};
  const std::vector<MultiPoly> col1{zero, x(0, 4), x(1, 4), x(2, 4), x(3, 4)};
  for (std::size_t r = 0; r < 5; ++r) {
    EXPECT_EQ(pres.matrix.at(r, 0), col0[r]);
    EXPECT_EQ(pres.matrix.at(r, 1), col1[r]);
  }
}

TEST(CanonicalMatrix, SmallCases) {
  const auto p10 = canonical_matrix(1, 0).matrix;
  ASSERT_EQ(p10.rows(), 2U);
  EXPECT_EQ(p10.at(0, 0), x(0, 2));
  EXPECT_EQ(p10.at(1, 0), x(1, 2));
  const auto p21 = canonical_matrix(2, 1).matrix;
  const MultiPoly zero(3);
  const std::vector<std::pair<MultiPoly, MultiPoly>> rows{{x(0), zero}, {x(1), x(0)}, {x(2), x(1)}, {zero, x(2)}};
  for (std::size_t r = 0; r < 4; ++r) {
    EXPECT_EQ(p21.at(r, 0), rows[r].first);
    EXPECT_EQ(p21.at(r, 1), rows[r].second);
  }
  EXPECT_THROW(canonical_matrix(0, 1), InvalidInput);
  EXPECT_THROW(canonical_matrix(2, -1), InvalidInput);
}

TEST(CanonicalMatrix, ShiftPatternAndGenericRank) {
  Rng rng(2);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= 4; ++k) {
      const auto m = canonical_matrix(n, k).matrix;
      for (std::size_t j = 1; j < m.cols(); ++j)
        for (std::size_t i = 1; i < m.rows(); ++i) EXPECT_EQ(m.at(i, j), m.at(i - 1, j - 1));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_LE(m.at(i, j).size(), 1U);
      RationalVector pt(static_cast<std::size_t>(n) + 1);
      for (auto& q : pt) q = rng.rational(20);
      if (pt[0].is_zero()) pt[0] = 1;
      EXPECT_EQ(rank(m.evaluate(pt)), static_cast<std::size_t>(k) + 1);
    }
}

TEST(PonceletSystem, Validation) {
  EXPECT_THROW(PonceletSystem(2, 1, {}), ArityError);
  EXPECT_THROW(PonceletSystem(2, 1, {kF, kG, kF + kG}), ArityError);
  EXPECT_THROW(PonceletSystem(2, 1, {kF, bf({1, 0, 0, 0, 1})}), InvalidInput);
  EXPECT_THROW(PonceletSystem(2, 1, {kF, kF}), DegeneracyError);
  EXPECT_THROW(PonceletSystem(2, 1, {kF, Rational(3) * kF}), DegeneracyError);
  EXPECT_THROW(PonceletSystem(2, 1, {kF, BinaryForm::zero(3)}), DegeneracyError);
}

TEST(Hypersurface, ConicExample) {
  const MultiPoly h = poncelet_hypersurface(PonceletSystem(2, 1, {kF, kG}));
  EXPECT_EQ(h, -conic());
  EXPECT_EQ(h, oracle::laplace_det(PonceletSystem(2, 1, {kF, kG}).stacked_matrix()));
}

TEST(Hypersurface, UnitSectionsGiveDoublePlane) {
  const MultiPoly h = poncelet_hypersurface(
      PonceletSystem(3, 1, {BinaryForm::monomial(4, 2), BinaryForm::monomial(4, 3), BinaryForm::monomial(4, 4)}));
  EXPECT_TRUE(projectively_equal(h, x(0, 4) * x(0, 4)));
}

TEST(Hypersurface, ArityErrors) {
  EXPECT_THROW(poncelet_hypersurface(PonceletSystem(2, 1, {kF})), ArityError);
  EXPECT_THROW(poncelet_subvariety(PonceletSystem(2, 1, {kF, kG})), ArityError);
}

TEST(Hypersurface, DegreeLaw) {
  Rng rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    const int k = static_cast<int>(rng.uniform(0, 4));
    const auto sys = oracle::random_system(rng, n, k, static_cast<std::size_t>(n), 9);
    const MultiPoly h = poncelet_hypersurface(sys);
    ASSERT_TRUE(h.degree().has_value());
    EXPECT_EQ(*h.degree(), static_cast<unsigned>(k + 1)) << "n=" << n << " k=" << k;
    EXPECT_TRUE(h.is_homogeneous());
  }
}

TEST(Hypersurface, BasisChangeScalesByDeterminant) {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 4)), k = static_cast<int>(rng.uniform(0, 3));
    const auto sys = oracle::random_system(rng, n, k, static_cast<std::size_t>(n));
    const RationalMatrix g = random_invertible(rng, static_cast<std::size_t>(n), 3);
    std::vector<BinaryForm> moved;
    for (std::size_t i = 0; i < g.rows(); ++i) {
      BinaryForm f = BinaryForm::zero(static_cast<unsigned>(n + k));
      for (std::size_t j = 0; j < g.cols(); ++j) f += g(i, j) * sys.sections()[j];
      moved.push_back(std::move(f));
    }
    const MultiPoly h = poncelet_hypersurface(sys);
    EXPECT_EQ(poncelet_hypersurface(PonceletSystem(n, k, moved)), h * determinant(g));
  }
}

TEST(Hypersurface, SwappingSectionsNegates) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 4)), k = static_cast<int>(rng.uniform(0, 3));
    const auto sys = oracle::random_system(rng, n, k, static_cast<std::size_t>(n));
    auto swapped = sys.sections();
    std::swap(swapped[0], swapped[1]);
    EXPECT_EQ(poncelet_hypersurface(PonceletSystem(n, k, swapped)), -poncelet_hypersurface(sys));
  }
}

TEST(Hypersurface, Equivariance) {
  Rng rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 3)), k = static_cast<int>(rng.uniform(0, 3));
    const auto sys = oracle::random_system(rng, n, k, static_cast<std::size_t>(n));
    const RationalMatrix g = trial % 2 == 0 ? random_sl2(rng, 3) : random_invertible(rng, 2, 3);
    std::vector<BinaryForm> moved;
    for (const auto& f : sys.sections()) moved.push_back(transform_form(g, f));
    const MultiPoly lhs = poncelet_hypersurface(PonceletSystem(n, k, moved));
    const MultiPoly rhs =
        substitute_linear(poncelet_hypersurface(sys), symmetric_power(inverse(g), static_cast<unsigned>(n)));
    EXPECT_TRUE(projectively_equal(lhs, rhs));
  }
}

TEST(Hypersurface, LaplaceExpansionOverMinors) {
  // det [M | f_1..f_n] = Σ_i ± f_n[i] · (minor of [M | f_1..f_{n-1}] omitting row i).
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 4)), k = static_cast<int>(rng.uniform(0, 3));
    const auto sys = oracle::random_system(rng, n, k, static_cast<std::size_t>(n));
    const std::vector<BinaryForm> head(sys.sections().begin(), sys.sections().end() - 1);
    const auto minors = maximal_minors(PonceletSystem(n, k, head).stacked_matrix());
    const std::size_t size = static_cast<std::size_t>(n + k) + 1;
    ASSERT_EQ(minors.size(), size);
    MultiPoly sum(sys.num_vars());
    for (const auto& m : minors) {
      const std::size_t row = m.omitted_rows.front();
      const Rational c = sys.sections().back()[row];
      sum += ((row + size - 1) % 2 == 0) ? m.value * c : m.value * (-c);
    }
    const MultiPoly h = poncelet_hypersurface(sys);
    EXPECT_EQ(sum, h);
    std::vector<MultiPoly> values;
    for (const auto& m : minors) values.push_back(m.value);
    EXPECT_TRUE(in_linear_span(h, values));
  }
}

TEST(Subvariety, ConicSectionMinors) {
  const auto minors = poncelet_subvariety(PonceletSystem(2, 1, {kF}));
  ASSERT_EQ(minors.size(), 4U);
  for (const auto& m : minors) {
    EXPECT_LE(m.degree().value_or(0), 2U);
  }
  const std::vector<RationalVector> vertices{{0, 1, 0}, {1, -1, 0}, {0, -1, 1}};
  EXPECT_TRUE(all_vanish(minors, vertices));
  // The minors cut out only those points: a few other points fail.
  for (const RationalVector& p : {RationalVector{1, 0, 0}, RationalVector{0, 0, 1}, RationalVector{1, 1, 1}})
    EXPECT_FALSE(all_vanish(minors, {p}));
}

TEST(Subvariety, CountsAndDegrees) {
  Rng rng(14);
  const auto two = oracle::random_system(rng, 3, 2, 2);
  const auto minors = poncelet_subvariety(two);
  EXPECT_EQ(minors.size(), 6U);
  for (const auto& m : minors) {
    ASSERT_TRUE(m.degree().has_value());
    EXPECT_EQ(*m.degree(), 3U);
  }
  // r+1 < n−1: shape and count only.
  for (int k = 0; k <= 3; ++k) {
    const auto one = oracle::random_system(rng, 4, k, 1);
    const auto ms = poncelet_subvariety(one);
    EXPECT_EQ(ms.size(), static_cast<std::size_t>(mpz_get_ui(binomial(4 + k + 1, k + 2).get_mpz_t())));
    for (const auto& m : ms) EXPECT_LE(m.degree().value_or(0), static_cast<unsigned>(k + 1));
  }
}

TEST(Subvariety, MinorsOrderedByOmittedRows) {
  const auto minors = maximal_minors(PonceletSystem(2, 1, {kF}).stacked_matrix());
  for (std::size_t i = 0; i < minors.size(); ++i) EXPECT_EQ(minors[i].omitted_rows, std::vector<std::size_t>{i});
}

TEST(Subsets, Lexicographic) {
  const auto s = subsets(4, 2);
  const std::vector<std::vector<std::size_t>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(s, expected);
  EXPECT_EQ(subsets(3, 0).size(), 1U);
  EXPECT_TRUE(subsets(2, 3).empty());
}

TEST(ContainsSubvariety, Examples) {
  const auto f1 = form_from_roots({{0, 1}, {1, 1}, {-1, 1}, {1, 0}});
  const auto f2 = form_from_roots({{2, 1}, {-2, 1}, {1, 2}, {3, 1}});
  const auto f3 = bf({1, 2, 0, -1, 3});
  const MultiPoly h = poncelet_hypersurface(PonceletSystem(3, 1, {f1, f2, f3}));
  const auto report = containment_report(h, PonceletSystem(3, 1, {f1, f2}), f3);
  EXPECT_TRUE(report.contained);
  EXPECT_TRUE(report.matches_extra);
  EXPECT_GE(report.members_tested, 2U);
  for (const auto& roots : {std::vector<ParamPoint>{{0, 1}, {1, 1}, {-1, 1}, {1, 0}},
                            std::vector<ParamPoint>{{2, 1}, {-2, 1}, {1, 2}, {3, 1}}})
    for (const auto& v : polytope_vertices(3, roots).vertices) EXPECT_TRUE(h.evaluate(v).is_zero());

  EXPECT_TRUE(contains_subvariety(-conic(), PonceletSystem(2, 1, {kF}), kG));
  const MultiPoly plain = x(0) * x(2) - x(1) * x(1);
  EXPECT_FALSE(contains_subvariety(plain, PonceletSystem(2, 1, {kF}), kG));
  EXPECT_EQ(plain.evaluate({0, 1, 0}), -1);
}

TEST(InLinearSpan, Basics) {
  EXPECT_TRUE(in_linear_span(x(0) + x(1) * Rational(2), {x(0), x(1)}));
  EXPECT_FALSE(in_linear_span(x(2), {x(0), x(1)}));
  EXPECT_TRUE(in_linear_span(MultiPoly(3), {}));
  EXPECT_FALSE(in_linear_span(x(0), {}));
}
