#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "poncelet/errors.hpp"
#include "poncelet/matrix.hpp"
#include "poncelet/rational.hpp"

namespace poncelet {

/// A point (a:b) of the projective line, not both coordinates zero.
class ParamPoint {
 public:
  ParamPoint(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero() && b_.is_zero()) throw InvalidInput("parameter point (0:0)");
  }

  [[nodiscard]] const Rational& a() const { return a_; }
  [[nodiscard]] const Rational& b() const { return b_; }

  /// Representative (p, q) with coprime integers and the first nonzero one positive.
  [[nodiscard]] std::pair<BigInt, BigInt> primitive() const {
    BigInt l;
    const BigInt da = a_.denominator(), db = b_.denominator();
    mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    BigInt p = a_.numerator() * (l / da);
    BigInt q = b_.numerator() * (l / db);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    p /= g;
    q /= g;
    if (p < 0 || (p == 0 && q < 0)) {
      p = -p;
      q = -q;
    }
    return {p, q};
  }

  /// max(|p|, |q|) of the primitive integer representative.
  [[nodiscard]] BigInt height() const {
    auto [p, q] = primitive();
    p = ::abs(p);
    q = ::abs(q);
    return p > q ? p : q;
  }

  friend bool operator==(const ParamPoint& s, const ParamPoint& t) {
    return s.a_ * t.b_ == s.b_ * t.a_;
  }

 private:
  Rational a_;
  Rational b_;
};

/// Binary form of degree d, stored as the coefficients of u^{d-i} v^i, i = 0..d.
class BinaryForm {
 public:
  explicit BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidInput("binary form needs at least one coefficient");
  }
  static BinaryForm zero(unsigned degree) { return BinaryForm(std::vector<Rational>(degree + 1)); }
  /// u^{d-i} v^i.
  static BinaryForm monomial(unsigned degree, unsigned i) {
    if (i > degree) throw InvalidInput("monomial index exceeds degree");
    std::vector<Rational> c(degree + 1);
    c[i] = 1;
    return BinaryForm(std::move(c));
  }

  [[nodiscard]] unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  [[nodiscard]] bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
  }

  /// f(a, b).
  [[nodiscard]] Rational evaluate(const ParamPoint& t) const {
    // Homogeneous Horner: sum c_i a^{d-i} b^i.
    Rational acc(0);
    Rational bpow(1);
    const unsigned d = degree();
    std::vector<Rational> apow(d + 1, Rational(1));
    for (unsigned i = 1; i <= d; ++i) apow[i] = apow[i - 1] * t.a();
    for (unsigned i = 0; i <= d; ++i) {
      acc += coeffs_[i] * apow[d - i] * bpow;
      bpow *= t.b();
    }
    return acc;
  }

  BinaryForm& operator+=(const BinaryForm& o) {
    same_degree(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  BinaryForm& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend BinaryForm operator+(BinaryForm f, const BinaryForm& g) { return f += g; }
  friend BinaryForm operator*(const Rational& s, BinaryForm f) { return f *= s; }
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  void same_degree(const BinaryForm& o) const {
    if (o.degree() != degree()) throw InvalidInput("binary forms of different degree");
  }
  std::vector<Rational> coeffs_;
};

inline bool projectively_equal(const BinaryForm& f, const BinaryForm& g) {
  return projectively_equal(f.coeffs(), g.coeffs());
}

/// Product in S_{d+e}: convolution of coefficient sequences.
inline BinaryForm multiply(const BinaryForm& f, const BinaryForm& g) {
  std::vector<Rational> c(f.degree() + g.degree() + 1);
  for (std::size_t i = 0; i <= f.degree(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j <= g.degree(); ++j) c[i + j] += f[i] * g[j];
  }
  return BinaryForm(std::move(c));
}

/// b·u − a·v, the linear form vanishing at (a:b).
inline BinaryForm linear_factor(const ParamPoint& t) { return BinaryForm({t.b(), -t.a()}); }

/// Product of the linear factors of the given roots (unnormalized).
inline BinaryForm form_from_roots(const std::vector<ParamPoint>& roots) {
  if (roots.empty()) throw InvalidInput("form_from_roots needs at least one root");
  BinaryForm f = linear_factor(roots.front());
  for (std::size_t i = 1; i < roots.size(); ++i) f = multiply(f, linear_factor(roots[i]));
  return f;
}

/// (a·u + b·v)^d as a binary form.
inline BinaryForm power_of_linear(const ParamPoint& t, unsigned d) {
  std::vector<Rational> c(d + 1);
  for (unsigned i = 0; i <= d; ++i)
    c[i] = Rational(binomial(d, i)) * pow(t.a(), d - i) * pow(t.b(), i);
  return BinaryForm(std::move(c));
}

/// Point of the rational normal curve C_n: coefficients of (a·u + b·v)^n.
inline RationalVector veronese(const ParamPoint& t, unsigned n) {
  if (n < 1) throw InvalidInput("veronese degree must be at least 1");
  return power_of_linear(t, n).coeffs();
}

/// Matrix R with coeffs(transform_form(g, f)) = R · coeffs(f) on S_d.
/// Column i holds the coefficients of (g00·u + g01·v)^{d-i} (g10·u + g11·v)^i.
inline RationalMatrix symmetric_power(const RationalMatrix& g, unsigned d) {
  if (g.rows() != 2 || g.cols() != 2) throw DimensionError("SL(2) action needs a 2x2 matrix");
  const BinaryForm lu({g(0, 0), g(0, 1)});
  const BinaryForm lv({g(1, 0), g(1, 1)});
  std::vector<BinaryForm> pu{BinaryForm({Rational(1)})}, pv{BinaryForm({Rational(1)})};
  for (unsigned i = 1; i <= d; ++i) {
    pu.push_back(multiply(pu.back(), lu));
    pv.push_back(multiply(pv.back(), lv));
  }
  RationalMatrix r(d + 1, d + 1);
  for (unsigned i = 0; i <= d; ++i) {
    const BinaryForm column = multiply(pu[d - i], pv[i]);
    for (unsigned j = 0; j <= d; ++j) r(j, i) = column[j];
  }
  return r;
}

/// Substitution (u, v) ← g·(u, v), i.e. u ↦ g00·u + g01·v and v ↦ g10·u + g11·v.
/// With this convention transform_form(g1·g2, f) = transform_form(g2, transform_form(g1, f)).
inline BinaryForm transform_form(const RationalMatrix& g, const BinaryForm& f) {
  if (g.rows() != 2 || g.cols() != 2) throw DimensionError("SL(2) action needs a 2x2 matrix");
  if ((g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).is_zero()) throw InvalidInput("singular transformation");
  return BinaryForm(mat_vec(symmetric_power(g, f.degree()), f.coeffs()));
}

namespace detail {

inline std::vector<BigInt> small_divisors(const BigInt& value, unsigned long bound) {
  std::vector<BigInt> out;
  const BigInt v = ::abs(value);
  for (unsigned long d = 1; d <= bound; ++d) {
    if (v != 0 && BigInt(d) > v) break;
    if (mpz_divisible_ui_p(v.get_mpz_t(), d)) out.emplace_back(static_cast<long>(d));
  }
  return out;
}

// Divides f by the linear factor of t, which must be a root.
inline BinaryForm deflate(const BinaryForm& f, const ParamPoint& t) {
  // f = (b u − a v)·g; solve for g coefficient by coefficient.
  const unsigned d = f.degree();
  std::vector<Rational> g(d);
  if (!t.b().is_zero()) {
    const Rational binv = t.b().inverse();
    Rational carry(0);
    for (unsigned i = 0; i < d; ++i) {
      g[i] = (f[i] + carry) * binv;
      carry = t.a() * g[i];
    }
  } else {
    // factor is −a·v: shift down.
    const Rational minus_ainv = -t.a().inverse();
    for (unsigned i = 0; i < d; ++i) g[i] = f[i + 1] * minus_ainv;
  }
  return BinaryForm(std::move(g));
}

}  // namespace detail

/// Complete factorization of f into linear factors with rational roots of
/// height at most `height_bound`, with multiplicity. Returns nullopt when f
/// is zero, not fully split over Q, or needs a root of larger height.
/// Candidates p/q satisfy q | leading and p | trailing coefficient after clearing denominators.
inline std::optional<std::vector<ParamPoint>> rational_roots(const BinaryForm& f,
                                                             unsigned long height_bound = 1000) {
  if (f.is_zero()) return std::nullopt;
  std::vector<ParamPoint> roots;
  BinaryForm g = f;
  while (g.degree() > 0 && g[0].is_zero()) {
    roots.emplace_back(Rational(1), Rational(0));
    g = detail::deflate(g, roots.back());
  }
  while (g.degree() > 0) {
    BigInt l = 1;
    for (const auto& c : g.coeffs()) {
      const BigInt den = c.denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    const BigInt lead = (g[0] * Rational(l)).numerator();
    std::size_t last = g.degree();
    while (g[last].is_zero()) --last;
    if (last != g.degree()) {
      roots.emplace_back(Rational(0), Rational(1));
      g = detail::deflate(g, roots.back());
      continue;
    }
    const BigInt trail = (g[last] * Rational(l)).numerator();
    bool found = false;
    for (const auto& q : detail::small_divisors(lead, height_bound)) {
      for (const auto& p : detail::small_divisors(trail, height_bound)) {
        for (int s : {1, -1}) {
          const ParamPoint t(Rational(p * s, q), Rational(1));
          if (g.evaluate(t).is_zero()) {
            roots.push_back(t);
            g = detail::deflate(g, t);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  return roots;
}

}  // namespace poncelet
