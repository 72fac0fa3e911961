#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "poncelet/binary_form.hpp"
#include "poncelet/errors.hpp"
#include "poncelet/matrix.hpp"
#include "poncelet/polynomial.hpp"
#include "poncelet/schwarzenberger.hpp"

namespace poncelet {

// ---------------------------------------------------------------------------
// Quadrics
// ---------------------------------------------------------------------------

/// Rank of the symmetric Gram matrix of a homogeneous quadratic form
/// (off-diagonal entries are half the mixed coefficients).
inline std::size_t quadric_rank(const MultiPoly& q) {
  if (q.is_zero()) return 0;
  if (!q.is_homogeneous() || q.degree() != 2U) throw InvalidInput("quadric_rank needs a homogeneous quadratic form");
  const std::size_t nv = q.num_vars();
  RationalMatrix gram(nv, nv);
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < nv; ++i)
      for (unsigned t = 0; t < e[i]; ++t) idx.push_back(i);
    if (idx[0] == idx[1]) {
      gram(idx[0], idx[0]) += c;
    } else {
      gram(idx[0], idx[1]) += c / Rational(2);
      gram(idx[1], idx[0]) += c / Rational(2);
    }
  }
  return rank(gram);
}

struct QuadricMinor {
  std::vector<std::size_t> rows;           // rows of M_{3,1} forming the 2×2 minor
  MultiPoly minor;
  std::size_t rank = 0;
  std::vector<std::size_t> unit_sections;  // complementary rows, used as unit sections of E_{3,4}
  MultiPoly hypersurface;                  // det [M | e_a | e_b | e_c]
  int sign = 0;                            // minor = sign · hypersurface
};

/// The four 2×2 minors of the 5×2 presentation of E_{3,4} on rows {1,3},
/// {1,2}, {1,4}, {0,1}, with quadric ranks 4, 3, 2, 1. Each one is, up to
/// sign, the Poncelet quadric of the three unit sections on the remaining rows.
inline std::vector<QuadricMinor> quadric_demo() {
  const PolyMatrix m = canonical_matrix(3, 1).matrix;
  const std::vector<std::vector<std::size_t>> picks{{1, 3}, {1, 2}, {1, 4}, {0, 1}};
  std::vector<QuadricMinor> out;
  for (const auto& rows : picks) {
    QuadricMinor q;
    q.rows = rows;
    q.minor = det_poly_matrix(m.select_rows(rows));
    q.rank = quadric_rank(q.minor);
    std::vector<BinaryForm> sections;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rows[0] || r == rows[1]) continue;
      q.unit_sections.push_back(r);
      sections.push_back(BinaryForm::monomial(4, static_cast<unsigned>(r)));
    }
    q.hypersurface = poncelet_hypersurface(PonceletSystem(3, 1, sections));
    if (q.minor == q.hypersurface) q.sign = 1;
    else if (q.minor == -q.hypersurface) q.sign = -1;
    else throw std::logic_error("quadric minor is not a unit-section determinant");
    out.push_back(std::move(q));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cubic surfaces from a 3-dimensional subspace A of binary quintics
// ---------------------------------------------------------------------------

/// Flattening S_2 ⊗ S_3 → S_5/A of the multiplication map, with S_5/A
/// modelled by the rows of P (P·Aᵀ = 0).
struct SixPointTensor {
  std::array<std::array<std::array<Rational, 3>, 4>, 3> t;  // t[a][b][c]
  PolyMatrix flattening;                                    // F(y)[a][b] = sum_c t[a][b][c]·y_c
  std::vector<MultiPoly> minors;                            // omit column 0, 1, 2, 3
};

struct CubicModel {
  RationalMatrix a;  // 3×6, rows span A ⊂ S_5
  RationalMatrix p;  // 3×6, canonical kernel basis of A
  PolyMatrix n;      // P · M_{3,2}(x)
  MultiPoly cubic;   // det N
  bool degenerate = false;
};

inline void require_subspace(const RationalMatrix& a) {
  if (a.rows() != 3 || a.cols() != 6) throw DimensionError("A must be a 3x6 matrix of quintic coefficients");
  if (rank(a) != 3) throw DegeneracyError("A must have rank 3");
}

/// Canonical model of S_5/A: the kernel basis of A, one row per free column.
inline RationalMatrix quotient_projection(const RationalMatrix& a) {
  require_subspace(a);
  return RationalMatrix::from_rows(kernel_basis(a));
}

inline SixPointTensor six_point_flattening_from_projection(const RationalMatrix& p) {
  SixPointTensor out;
  out.flattening = PolyMatrix(3, 4, 3);
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      const BinaryForm prod = multiply(BinaryForm::monomial(2, a), BinaryForm::monomial(3, b));
      const RationalVector image = mat_vec(p, prod.coeffs());
      MultiPoly entry(3);
      for (unsigned c = 0; c < 3; ++c) {
        out.t[a][b][c] = image[c];
        entry += MultiPoly::variable(3, c) * image[c];
      }
      out.flattening.set(a, b, std::move(entry));
    }
  for (std::size_t skip = 0; skip < 4; ++skip) {
    PolyMatrix sq(3, 3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0, cc = 0; c < 4; ++c) {
        if (c == skip) continue;
        sq.set(r, cc++, out.flattening.at(r, c));
      }
    out.minors.push_back(det_poly_matrix(sq));
  }
  return out;
}

inline SixPointTensor six_point_flattening(const RationalMatrix& a) {
  return six_point_flattening_from_projection(quotient_projection(a));
}

/// Dimension of the degree-d piece of the ideal generated by `gens`
/// (homogeneous, all of degree gen_degree), via the rank of the multiplication matrix.
inline std::size_t ideal_dimension(const std::vector<MultiPoly>& gens, unsigned gen_degree, unsigned d) {
  if (gens.empty() || d < gen_degree) return 0;
  const std::size_t nv = gens.front().num_vars();
  const auto multipliers = monomials_of_degree(nv, d - gen_degree);
  const auto basis = monomials_of_degree(nv, d);
  std::vector<RationalVector> rows;
  for (const auto& g : gens)
    for (const auto& e : multipliers) rows.push_back(coefficient_vector(g * MultiPoly::monomial(e, Rational(1)), basis));
  return rank(RationalMatrix::from_rows(rows));
}

inline std::size_t hilbert_function_of_minors(const RationalMatrix& a, unsigned d) {
  return ideal_dimension(six_point_flattening(a).minors, 3, d);
}

/// Span dimension of the four six-point cubics.
inline std::size_t minor_span_rank(const SixPointTensor& t) { return ideal_dimension(t.minors, 3, 3); }

inline CubicModel cubic_from_subspace(const RationalMatrix& a) {
  CubicModel model;
  model.a = a;
  model.p = quotient_projection(a);
  model.n = model.p * canonical_matrix(3, 2).matrix;
  model.cubic = det_poly_matrix(model.n);
  model.degenerate =
      model.cubic.is_zero() || minor_span_rank(six_point_flattening_from_projection(model.p)) < 4;
  return model;
}

/// det [P·coeffs(q_a·g)]_{a} for the monomial basis q_a of S_2, i.e. the
/// cubic of the model evaluated at the binary cubic g by direct multiplication.
inline Rational cubic_at_form(const CubicModel& model, const BinaryForm& g) {
  if (g.degree() != 3) throw InvalidInput("cubic_at_form needs a binary cubic");
  RationalMatrix m(3, 3);
  for (unsigned col = 0; col < 3; ++col) {
    const RationalVector image = mat_vec(model.p, multiply(BinaryForm::monomial(2, col), g).coeffs());
    for (unsigned row = 0; row < 3; ++row) m(row, col) = image[row];
  }
  return determinant(m);
}

}  // namespace poncelet
