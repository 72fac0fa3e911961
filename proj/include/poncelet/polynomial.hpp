#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "poncelet/errors.hpp"
#include "poncelet/matrix.hpp"
#include "poncelet/rational.hpp"

namespace poncelet {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Graded lexicographic order with x0 > x1 > ... > xn.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Terms are kept in graded-lex order; no stored coefficient is zero.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
  }
  static MultiPoly variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw InvalidInput("variable index out of range");
    Exponents e(num_vars, 0);
    e[index] = 1;
    MultiPoly p(num_vars);
    p.add_term(e, Rational(1));
    return p;
  }
  static MultiPoly monomial(const Exponents& e, const Rational& c) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
  }
  /// Linear form sum_i coeffs[i]·x_i.
  static MultiPoly linear(const RationalVector& coeffs) {
    MultiPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(e, coeffs[i]);
    }
    return p;
  }

  [[nodiscard]] std::size_t num_vars() const { return num_vars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Total degree; nullopt for the zero polynomial.
  [[nodiscard]] std::optional<unsigned> degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.rbegin()->first);
  }

  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  [[nodiscard]] Rational constant_term() const { return coefficient(Exponents(num_vars_, 0)); }

  [[nodiscard]] bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
  }

  [[nodiscard]] Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Leading term in graded-lex order. Precondition: nonzero.
  [[nodiscard]] const std::pair<const Exponents, Rational>& leading_term() const {
    return *terms_.rbegin();
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != num_vars_) throw InvalidInput("exponent tuple length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] Rational evaluate(const RationalVector& point) const {
    if (point.size() != num_vars_) throw InvalidInput("evaluation point has wrong length");
    std::vector<std::vector<Rational>> powers(num_vars_);
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < num_vars_ && !t.is_zero(); ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Rational(1));
        while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
        t *= pw[e[i]];
      }
      sum += t;
    }
    return sum;
  }

  /// Double-precision evaluation, for rendering only.
  [[nodiscard]] double evaluate_double(const std::vector<double>& point) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
      double t = c.to_double();
      for (std::size_t i = 0; i < num_vars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      sum += t;
    }
    return sum;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.num_vars_);
    Exponents e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, leading term first, e.g. "x0^2 - 1/2*x1*x2 + 3".
  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = c.abs();
      if (first) {
        if (c.sign() < 0) os << "-";
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit_monomial = total_degree(e) == 0;
      bool wrote = false;
      if (mag != Rational(1) || unit_monomial) {
        os << mag.to_string();
        wrote = true;
      }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << "*";
        os << "x" << i;
        if (e[i] > 1) os << "^" << e[i];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (o.num_vars_ != num_vars_) throw InvalidInput("polynomials over different variable counts");
  }

  std::size_t num_vars_;
  TermMap terms_;
};

/// Formal partial derivative with respect to x_{var_index}.
inline MultiPoly partial_derivative(const MultiPoly& p, std::size_t var_index) {
  if (var_index >= p.num_vars()) throw InvalidInput("derivative variable index out of range");
  MultiPoly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var_index] == 0) continue;
    Exponents d = e;
    --d[var_index];
    out.add_term(d, c * Rational(static_cast<long>(e[var_index])));
  }
  return out;
}

/// Exact quotient a / b. Throws std::logic_error if b does not divide a.
inline MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DegeneracyError("polynomial division by zero");
  if (b.is_constant()) return a * b.constant_term().inverse();
  MultiPoly rem = a;
  MultiPoly quot(a.num_vars());
  const auto& [lb_exp, lb_coef] = b.leading_term();
  const Rational lb_inv = lb_coef.inverse();
  while (!rem.is_zero()) {
    const auto& [lr_exp, lr_coef] = rem.leading_term();
    Exponents q(lr_exp.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (lr_exp[i] < lb_exp[i]) throw std::logic_error("divide_exact: divisor does not divide");
      q[i] = lr_exp[i] - lb_exp[i];
    }
    const MultiPoly t = MultiPoly::monomial(q, lr_coef * lb_inv);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

/// p(L·x): variable y_i of p is replaced by sum_j L(i,j)·x_j.
/// The result lives in L.cols() variables.
inline MultiPoly substitute_linear(const MultiPoly& p, const RationalMatrix& l) {
  if (l.rows() != p.num_vars()) throw DimensionError("substitution matrix row count mismatch");
  const std::size_t m = l.cols();
  std::vector<MultiPoly> forms;
  forms.reserve(l.rows());
  for (std::size_t i = 0; i < l.rows(); ++i) forms.push_back(MultiPoly::linear(l.row(i)));
  std::vector<std::vector<MultiPoly>> powers(l.rows());
  MultiPoly out(m);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MultiPoly::constant(m, Rational(1)));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * forms[i]);
      t *= pw[e[i]];
    }
    out += t;
  }
  return out;
}

/// Exponent tuples of total degree d in num_vars variables, descending graded-lex.
inline std::vector<Exponents> monomials_of_degree(std::size_t num_vars, unsigned d) {
  std::vector<Exponents> out;
  if (num_vars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(num_vars, 0);
  // Recursive fill: largest power of x0 first gives descending lex order.
  auto fill = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == num_vars) {
      e[i] = remaining;
      out.push_back(e);
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, remaining - k);
    }
  };
  fill(fill, 0, d);
  return out;
}

/// Coefficients of p on the given monomial basis; throws if p has a term outside it.
inline RationalVector coefficient_vector(const MultiPoly& p, const std::vector<Exponents>& basis) {
  RationalVector out;
  out.reserve(basis.size());
  std::size_t found = 0;
  for (const auto& e : basis) {
    out.push_back(p.coefficient(e));
    if (!out.back().is_zero()) ++found;
  }
  if (found != p.size()) throw InvalidInput("polynomial has terms outside the monomial basis");
  return out;
}

/// Scales p so its leading coefficient (graded-lex) is 1.
inline MultiPoly normalize_projective(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p * p.leading_term().second.inverse();
}

/// p = c·q for some nonzero c; both must be nonzero.
inline bool projectively_equal(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return false;
  return normalize_projective(p) == normalize_projective(q);
}

/// Matrix with polynomial entries over a shared variable count.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars)
      : rows_(rows), cols_(cols), num_vars_(num_vars), entries_(rows * cols, MultiPoly(num_vars)) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t num_vars() const { return num_vars_; }
  [[nodiscard]] const std::vector<MultiPoly>& entries() const { return entries_; }

  [[nodiscard]] const MultiPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, MultiPoly p) {
    if (p.num_vars() != num_vars_) throw InvalidInput("matrix entry has wrong variable count");
    entries_[r * cols_ + c] = std::move(p);
  }

  [[nodiscard]] bool column_is_constant(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r)
      if (!at(r, c).is_constant()) return false;
    return true;
  }

  /// Appends a column of constants.
  [[nodiscard]] PolyMatrix with_constant_column(const RationalVector& column) const {
    if (column.size() != rows_) throw DimensionError("appended column has wrong length");
    PolyMatrix out(rows_, cols_ + 1, num_vars_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
      out.set(r, cols_, MultiPoly::constant(num_vars_, column[r]));
    }
    return out;
  }

  [[nodiscard]] PolyMatrix select_rows(const std::vector<std::size_t>& keep) const {
    PolyMatrix out(keep.size(), cols_, num_vars_);
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) out.set(i, c, at(keep[i], c));
    return out;
  }

  [[nodiscard]] RationalMatrix evaluate(const RationalVector& point) const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = at(r, c).evaluate(point);
    return out;
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t num_vars_ = 0;
  std::vector<MultiPoly> entries_;
};

/// Left multiplication by a constant matrix: (C·M)(i,j) = sum_r C(i,r)·M(r,j).
inline PolyMatrix operator*(const RationalMatrix& c, const PolyMatrix& m) {
  if (c.cols() != m.rows()) throw DimensionError("constant-by-polynomial matrix shape mismatch");
  PolyMatrix out(c.rows(), m.cols(), m.num_vars());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      MultiPoly s(m.num_vars());
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (!c(i, r).is_zero()) s += m.at(r, j) * c(i, r);
      out.set(i, j, std::move(s));
    }
  return out;
}

namespace detail {

using PolyGrid = std::vector<std::vector<MultiPoly>>;

// Fraction-free Bareiss elimination over Q[x]; every division is exact.
inline MultiPoly bareiss_determinant(PolyGrid a, std::size_t num_vars) {
  const std::size_t n = a.size();
  if (n == 0) return MultiPoly::constant(num_vars, Rational(1));
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(num_vars, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (pivot == n || a[i][k].size() < a[pivot][k].size()) pivot = i;
    }
    if (pivot == n) return MultiPoly(num_vars);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = divide_exact(v, prev);
      }
      a[i][k] = MultiPoly(num_vars);
    }
    prev = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace detail

/// Exact determinant of a square polynomial matrix.
///
/// When at least half the columns are constant, the determinant is expanded
/// along each constant column in turn (row operations leave a single nonzero
/// entry in that column, then its cofactor is taken); the remaining block of
/// non-constant columns goes through fraction-free Bareiss elimination.
/// Otherwise Bareiss runs on the whole matrix.
inline MultiPoly det_poly_matrix(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t nv = m.num_vars();
  std::vector<std::size_t> constant_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (m.column_is_constant(c)) constant_cols.push_back(c);

  detail::PolyGrid grid(n, std::vector<MultiPoly>(n, MultiPoly(nv)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) grid[r][c] = m.at(r, c);

  if (2 * constant_cols.size() < n) return detail::bareiss_determinant(std::move(grid), nv);

  std::vector<std::size_t> rows(n), cols(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
  Rational scale(1);
  for (std::size_t c : constant_cols) {
    const auto col_pos =
        static_cast<std::size_t>(std::find(cols.begin(), cols.end(), c) - cols.begin());
    std::size_t row_pos = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!grid[rows[i]][c].is_zero()) {
        row_pos = i;
        break;
      }
    if (row_pos == rows.size()) return MultiPoly(nv);
    const std::size_t p = rows[row_pos];
    const Rational pivot = grid[p][c].constant_term();
    const Rational pivot_inv = pivot.inverse();
    for (std::size_t r : rows) {
      if (r == p || grid[r][c].is_zero()) continue;
      const Rational f = grid[r][c].constant_term() * pivot_inv;
      for (std::size_t cc : cols)
        if (!grid[p][cc].is_zero()) grid[r][cc] -= grid[p][cc] * f;
    }
    scale *= ((row_pos + col_pos) % 2 == 0) ? pivot : -pivot;
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(row_pos));
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(col_pos));
  }
  detail::PolyGrid block(rows.size(), std::vector<MultiPoly>(cols.size(), MultiPoly(nv)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) block[i][j] = std::move(grid[rows[i]][cols[j]]);
  return detail::bareiss_determinant(std::move(block), nv) * scale;
}

}  // namespace poncelet
