#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poncelet/errors.hpp"
#include "poncelet/matrix.hpp"
#include "poncelet/modular.hpp"
#include "poncelet/polynomial.hpp"
#include "poncelet/sampling.hpp"
#include "poncelet/schwarzenberger.hpp"

namespace poncelet {

/// A family of Poncelet hypersurfaces of degree k+1 in P^n, moved by PGL(n+1).
struct ProbeCase {
  std::string name;
  int n = 0;
  int k = 0;

  static ProbeCase plane_curve(int k) { return {"plane-curve", 2, k}; }
  static ProbeCase quadric() { return {"quadric", 3, 1}; }
  static ProbeCase cubic() { return {"cubic", 3, 2}; }

  /// Number of coefficients of a degree-(k+1) form in n+1 variables.
  [[nodiscard]] std::size_t ambient_dim() const {
    return mpz_get_ui(binomial(static_cast<unsigned>(n + k + 1), static_cast<unsigned>(n)).get_mpz_t());
  }
};

/// Parameters of the family: n sections in S_{n+k} and an (n+1)×(n+1) matrix.
struct ProbeParameters {
  std::vector<BinaryForm> sections;
  RationalMatrix ambient;
};

/// The equation H(A·x), H = det [M | sections]. Linear independence is not
/// enforced here, so a dependent sample yields the zero polynomial.
inline MultiPoly probe_equation(const ProbeCase& c, const ProbeParameters& params) {
  PolyMatrix m = canonical_matrix(c.n, c.k).matrix;
  for (const auto& f : params.sections) m = m.with_constant_column(f.coeffs());
  return substitute_linear(det_poly_matrix(m), params.ambient);
}

/// Jacobian of params ↦ coefficients of H(A·x), one column per parameter
/// (section coefficients first, in section order, then A row-major).
/// Built from exact symbolic derivatives: H is linear in each section
/// column, and ∂/∂A_ij of H(A·x) is (∂H/∂y_i)(A·x)·x_j.
inline RationalMatrix probe_jacobian(const ProbeCase& c, const ProbeParameters& params) {
  const std::size_t nv = static_cast<std::size_t>(c.n) + 1;
  const auto basis = monomials_of_degree(nv, static_cast<unsigned>(c.k + 1));
  const PolyMatrix base = canonical_matrix(c.n, c.k).matrix;
  std::vector<RationalVector> columns;

  const std::size_t section_len = static_cast<std::size_t>(c.n + c.k) + 1;
  for (std::size_t l = 0; l < params.sections.size(); ++l)
    for (std::size_t m = 0; m < section_len; ++m) {
      PolyMatrix mat = base;
      for (std::size_t s = 0; s < params.sections.size(); ++s) {
        RationalVector col = params.sections[s].coeffs();
        if (s == l) {
          col.assign(section_len, Rational(0));
          col[m] = 1;
        }
        mat = mat.with_constant_column(col);
      }
      columns.push_back(coefficient_vector(substitute_linear(det_poly_matrix(mat), params.ambient), basis));
    }

  PolyMatrix full = base;
  for (const auto& f : params.sections) full = full.with_constant_column(f.coeffs());
  const MultiPoly h = det_poly_matrix(full);
  for (std::size_t i = 0; i < nv; ++i) {
    const MultiPoly dh = substitute_linear(partial_derivative(h, i), params.ambient);
    for (std::size_t j = 0; j < nv; ++j)
      columns.push_back(coefficient_vector(dh * MultiPoly::variable(nv, j), basis));
  }
  return RationalMatrix::from_rows(columns).transpose();
}

inline ProbeParameters random_probe_parameters(const ProbeCase& c, Rng& rng, long height = 100) {
  ProbeParameters p;
  for (int i = 0; i < c.n; ++i) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(c.n + c.k) + 1);
    for (auto& q : coeffs) q = rng.rational(height);
    p.sections.emplace_back(std::move(coeffs));
  }
  const std::size_t nv = static_cast<std::size_t>(c.n) + 1;
  p.ambient = RationalMatrix(nv, nv);
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) p.ambient(i, j) = rng.rational(height);
  return p;
}

struct ProbeReport {
  std::string name;
  int n = 0;
  int k = 0;
  std::size_t rank = 0;         // majority over samples
  std::size_t ambient_dim = 0;
  std::size_t image_dim = 0;    // projective dimension of the family: rank − 1
  bool dominant = false;
  bool stable = false;          // all samples agree
  std::vector<std::size_t> sample_ranks;
  std::uint64_t prime = 0;
  std::vector<std::size_t> modular_ranks;
  bool modular_agrees = false;
};

/// Exact Jacobian rank of the family at `samples` seeded random rational
/// points; a sample whose equation vanishes identically is redrawn, up to 10 times.
inline ProbeReport dim_probe(const ProbeCase& c, std::size_t samples, std::uint64_t seed = kDefaultSeed) {
  if (samples < 1) throw InvalidInput("dim_probe needs at least one sample");
  if (c.n < 1 || c.k < 0) throw InvalidInput("invalid probe case");
  ProbeReport report;
  report.name = c.name;
  report.n = c.n;
  report.k = c.k;
  report.ambient_dim = c.ambient_dim();
  report.prime = random_prime_62(seed);
  report.modular_agrees = true;
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng(seed + 7919 * (s + 1));
    std::optional<ProbeParameters> params;
    for (int attempt = 0; attempt < 10 && !params; ++attempt) {
      ProbeParameters candidate = random_probe_parameters(c, rng);
      if (!probe_equation(c, candidate).is_zero()) params = std::move(candidate);
    }
    if (!params) throw DegeneracyError("dim_probe: repeated degenerate samples");
    const RationalMatrix jac = probe_jacobian(c, *params);
    report.sample_ranks.push_back(rank(jac));
    const auto mod = rank_mod_prime(jac, report.prime);
    report.modular_ranks.push_back(mod.value_or(0));
    if (!mod || *mod != report.sample_ranks.back()) report.modular_agrees = false;
  }
  std::map<std::size_t, std::size_t> votes;
  for (auto r : report.sample_ranks) ++votes[r];
  std::size_t best = 0;
  for (const auto& [r, count] : votes)
    if (count > best) {
      best = count;
      report.rank = r;
    }
  report.stable = votes.size() == 1;
  report.image_dim = report.rank == 0 ? 0 : report.rank - 1;
  report.dominant = report.rank == report.ambient_dim;
  return report;
}

}  // namespace poncelet
