#pragma once

#include <cstddef>
#include <vector>

#include "poncelet/binary_form.hpp"
#include "poncelet/errors.hpp"
#include "poncelet/matrix.hpp"
#include "poncelet/polynomial.hpp"

namespace poncelet {

// Coordinates: a point x = (x0..xn) of P^n is the binary n-form sum x_i u^{n-i} v^i.
// A section f in S_{n+k} vanishes at x exactly when x divides f.

/// The (n+k+1)×(k+1) matrix of the multiplication map S_k → S_{n+k}, g ↦ x·g,
/// with entry (i, j) = x_{i−j} for 0 ≤ i−j ≤ n and 0 otherwise.
struct SchwarzenbergerPresentation {
  int n = 0;
  int k = 0;
  PolyMatrix matrix;
};

inline SchwarzenbergerPresentation canonical_matrix(int n, int k) {
  if (n < 1) throw InvalidInput("canonical_matrix requires n >= 1");
  if (k < 0) throw InvalidInput("canonical_matrix requires k >= 0");
  const auto nv = static_cast<std::size_t>(n) + 1;
  const auto rows = static_cast<std::size_t>(n + k) + 1;
  const auto cols = static_cast<std::size_t>(k) + 1;
  PolyMatrix m(rows, cols, nv);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = j; i <= j + static_cast<std::size_t>(n); ++i) m.set(i, j, MultiPoly::variable(nv, i - j));
  return {n, k, std::move(m)};
}

/// A linear system of r+1 ≤ n independent sections of E_{n,n+k}, each a binary form of degree n+k.
class PonceletSystem {
 public:
  PonceletSystem(int n, int k, std::vector<BinaryForm> sections)
      : n_(n), k_(k), sections_(std::move(sections)) {
    if (n < 1 || k < 0) throw InvalidInput("Poncelet system requires n >= 1 and k >= 0");
    if (sections_.empty() || sections_.size() > static_cast<std::size_t>(n))
      throw ArityError("Poncelet system needs between 1 and n sections");
    for (const auto& f : sections_)
      if (f.degree() != static_cast<unsigned>(n + k)) throw InvalidInput("section degree must be n+k");
    RationalMatrix coeffs(sections_.size(), static_cast<std::size_t>(n + k) + 1);
    for (std::size_t i = 0; i < sections_.size(); ++i)
      for (std::size_t j = 0; j < coeffs.cols(); ++j) coeffs(i, j) = sections_[i][j];
    if (rank(coeffs) != sections_.size()) throw DegeneracyError("sections are linearly dependent");
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] const std::vector<BinaryForm>& sections() const { return sections_; }
  [[nodiscard]] std::size_t num_vars() const { return static_cast<std::size_t>(n_) + 1; }

  /// [M | f_0 ... f_r]: the linear columns first, then the sections in input order.
  [[nodiscard]] PolyMatrix stacked_matrix() const {
    PolyMatrix m = canonical_matrix(n_, k_).matrix;
    for (const auto& f : sections_) m = m.with_constant_column(f.coeffs());
    return m;
  }

 private:
  int n_;
  int k_;
  std::vector<BinaryForm> sections_;
};

/// Equation of the Poncelet hypersurface of degree k+1: det [M | f_1 .. f_n].
inline MultiPoly poncelet_hypersurface(const PonceletSystem& sys) {
  if (sys.sections().size() != static_cast<std::size_t>(sys.n()))
    throw ArityError("hypersurface needs exactly n sections");
  return det_poly_matrix(sys.stacked_matrix());
}

/// All size-m subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m > n) return out;
  std::vector<std::size_t> s(m);
  for (std::size_t i = 0; i < m; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = m;
    while (i > 0 && s[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < m; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

/// A maximal minor together with the rows it omits.
struct Minor {
  std::vector<std::size_t> omitted_rows;
  MultiPoly value;
};

/// Maximal minors of the (n+k+1)×(k+r+2) matrix [M | sections], enumerated in
/// lexicographic order of the omitted rows.
inline std::vector<Minor> maximal_minors(const PolyMatrix& m) {
  if (m.cols() > m.rows()) throw DimensionError("maximal minors need rows >= cols");
  std::vector<Minor> out;
  for (const auto& omit : subsets(m.rows(), m.rows() - m.cols())) {
    std::vector<std::size_t> keep;
    for (std::size_t r = 0, o = 0; r < m.rows(); ++r) {
      if (o < omit.size() && omit[o] == r) {
        ++o;
        continue;
      }
      keep.push_back(r);
    }
    out.push_back({omit, det_poly_matrix(m.select_rows(keep))});
  }
  return out;
}

/// Equations of the Poncelet variety of r+1 ≤ n−1 sections: the C(n+k+1, k+r+2)
/// maximal minors of [M | sections].
inline std::vector<MultiPoly> poncelet_subvariety(const PonceletSystem& sys) {
  if (sys.sections().size() + 1 > static_cast<std::size_t>(sys.n()))
    throw ArityError("subvariety needs at most n-1 sections");
  std::vector<MultiPoly> out;
  for (auto& minor : maximal_minors(sys.stacked_matrix())) out.push_back(std::move(minor.value));
  return out;
}

/// Whether p is a Q-linear combination of the given polynomials.
inline bool in_linear_span(const MultiPoly& p, const std::vector<MultiPoly>& gens) {
  if (p.is_zero()) return true;
  std::vector<Exponents> basis;
  {
    std::map<Exponents, int, GrlexLess> seen;
    for (const auto& g : gens)
      for (const auto& [e, c] : g.terms()) seen.emplace(e, 0);
    for (const auto& [e, c] : p.terms()) seen.emplace(e, 0);
    for (const auto& [e, c] : seen) basis.push_back(e);
  }
  std::vector<RationalVector> rows;
  for (const auto& g : gens) rows.push_back(coefficient_vector(g, basis));
  const std::size_t base_rank = rows.empty() ? 0 : rank(RationalMatrix::from_rows(rows));
  rows.push_back(coefficient_vector(p, basis));
  return rank(RationalMatrix::from_rows(rows)) == base_rank;
}

}  // namespace poncelet
