#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "poncelet/binary_form.hpp"
#include "poncelet/errors.hpp"
#include "poncelet/matrix.hpp"
#include "poncelet/polynomial.hpp"
#include "poncelet/schwarzenberger.hpp"

namespace poncelet {

/// Hyperplane of P^n with coefficients h_i = a^{n−i} b^i. Its pairing
/// sum x_i h_i is x(a, b), so it contains exactly the forms divisible by
/// linear_factor((a:b)) and meets C_n only at the point (a:b), with multiplicity n.
struct ContactHyperplane {
  int n = 0;
  RationalVector coeffs;

  [[nodiscard]] Rational pair(const RationalVector& x) const {
    if (x.size() != coeffs.size()) throw InvalidInput("pairing with a point of the wrong dimension");
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * coeffs[i];
    return s;
  }
};

inline ContactHyperplane contact_hyperplane(int n, const ParamPoint& t) {
  if (n < 1) throw InvalidInput("contact hyperplane requires n >= 1");
  const auto d = static_cast<unsigned>(n);
  RationalVector h(d + 1);
  for (unsigned i = 0; i <= d; ++i) h[i] = pow(t.a(), d - i) * pow(t.b(), i);
  return {n, std::move(h)};
}

struct VertexSet {
  int n = 0;
  int k = 0;
  std::vector<ParamPoint> roots;
  std::vector<std::vector<std::size_t>> subsets;  // lexicographic n-subsets of root indices
  std::vector<RationalVector> vertices;           // coefficient vectors, unnormalized
};

inline void require_distinct(const std::vector<ParamPoint>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) throw DegeneracyError("repeated root in polytope configuration");
}

/// The point where the n contact hyperplanes at the given roots meet, by solving the linear system.
inline RationalVector vertex_by_intersection(int n, const std::vector<ParamPoint>& roots) {
  RationalMatrix system(roots.size(), static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const auto h = contact_hyperplane(n, roots[r]);
    for (std::size_t c = 0; c < h.coeffs.size(); ++c) system(r, c) = h.coeffs[c];
  }
  const auto kernel = kernel_basis(system);
  if (kernel.size() != 1) throw DegeneracyError("contact hyperplanes do not meet in a single point");
  return kernel.front();
}

/// The C(n+k, n) vertices of the polytope whose faces are the contact
/// hyperplanes at the n+k given roots. Each vertex is the product of n of
/// the linear factors; the hyperplane intersection is computed as a cross-check.
inline VertexSet polytope_vertices(int n, const std::vector<ParamPoint>& roots) {
  if (n < 1) throw InvalidInput("polytope_vertices requires n >= 1");
  if (roots.size() < static_cast<std::size_t>(n)) throw InvalidInput("need at least n roots");
  require_distinct(roots);
  VertexSet out;
  out.n = n;
  out.k = static_cast<int>(roots.size()) - n;
  out.roots = roots;
  out.subsets = subsets(roots.size(), static_cast<std::size_t>(n));
  for (const auto& s : out.subsets) {
    std::vector<ParamPoint> chosen;
    for (auto i : s) chosen.push_back(roots[i]);
    RationalVector v = form_from_roots(chosen).coeffs();
    if (!projectively_equal(v, vertex_by_intersection(n, chosen)))
      throw std::logic_error("vertex computations disagree");
    out.vertices.push_back(std::move(v));
  }
  return out;
}

struct DarbouxReport {
  bool pass = false;
  std::vector<RationalVector> vertices;
  std::vector<Rational> values;
};

/// Evaluates h at every vertex of the polytope of `member_roots`; passes iff all values are 0.
inline DarbouxReport darboux_check(const MultiPoly& h, int n, int k,
                                   const std::vector<ParamPoint>& member_roots) {
  if (h.num_vars() != static_cast<std::size_t>(n) + 1)
    throw InvalidInput("equation must be in n+1 variables");
  if (k < 0 || member_roots.size() != static_cast<std::size_t>(n + k))
    throw InvalidInput("member must have n+k roots");
  const VertexSet vs = polytope_vertices(n, member_roots);
  DarbouxReport report;
  report.pass = true;
  for (const auto& v : vs.vertices) {
    report.values.push_back(h.evaluate(v));
    if (!report.values.back().is_zero()) report.pass = false;
    report.vertices.push_back(normalize_projective(v));
  }
  return report;
}

/// Zeros of the section with the given n+k roots: the polytope vertices.
inline std::vector<RationalVector> section_vanishing_points(int n, int k,
                                                            const std::vector<ParamPoint>& roots) {
  if (k < 0 || roots.size() != static_cast<std::size_t>(n + k))
    throw InvalidInput("section must have n+k roots");
  return polytope_vertices(n, roots).vertices;
}

/// True iff every polynomial vanishes at every point.
inline bool all_vanish(const std::vector<MultiPoly>& polys, const std::vector<RationalVector>& points) {
  for (const auto& p : polys)
    for (const auto& x : points)
      if (!p.evaluate(x).is_zero()) return false;
  return true;
}

/// Primitive integer tuples of length m ordered by height, then lexicographically,
/// first nonzero entry positive. Used to sample members of a linear system.
inline std::vector<std::vector<long>> low_height_tuples(std::size_t m, std::size_t count) {
  std::vector<std::vector<long>> out;
  if (m == 0) return out;
  for (long h = 1; out.size() < count; ++h) {
    std::vector<long> t(m, -h);
    while (true) {
      long top = 0, g = 0;
      std::size_t lead = m;
      for (std::size_t i = 0; i < m; ++i) {
        top = std::max(top, std::labs(t[i]));
        g = std::gcd(g, std::labs(t[i]));
        if (lead == m && t[i] != 0) lead = i;
      }
      if (top == h && g == 1 && t[lead] > 0) out.push_back(t);
      if (out.size() == count) break;
      std::size_t i = m;
      while (i > 0 && t[i - 1] == h) t[--i] = -h;
      if (i == 0) break;
      ++t[i - 1];
    }
    if (m == 1) break;
  }
  return out;
}

struct ContainmentReport {
  bool contained = false;
  std::size_t members_tested = 0;
  std::size_t points_tested = 0;
  /// h is projectively equal to det [M | sections | extra].
  bool matches_extra = false;
};

/// Checks that h vanishes on the codimension-2 Poncelet variety of n−1
/// sections, by exact evaluation at the vertices of the members of their
/// span that split over Q with distinct roots. Members are the combinations
/// with coefficients from low_height_tuples (first `tries` of them).
inline ContainmentReport containment_report(const MultiPoly& h, const PonceletSystem& sys,
                                            const BinaryForm& extra, std::size_t tries = 64) {
  const int n = sys.n();
  if (sys.sections().size() + 1 != static_cast<std::size_t>(n))
    throw ArityError("containment test needs n-1 sections");
  if (h.num_vars() != sys.num_vars()) throw InvalidInput("equation must be in n+1 variables");

  ContainmentReport report;
  report.contained = true;
  for (const auto& c : low_height_tuples(sys.sections().size(), tries)) {
    BinaryForm member = BinaryForm::zero(static_cast<unsigned>(n + sys.k()));
    for (std::size_t i = 0; i < c.size(); ++i) member += Rational(c[i]) * sys.sections()[i];
    const auto roots = rational_roots(member);
    if (!roots) continue;
    bool distinct = true;
    for (std::size_t i = 0; i < roots->size() && distinct; ++i)
      for (std::size_t j = i + 1; j < roots->size(); ++j)
        if ((*roots)[i] == (*roots)[j]) distinct = false;
    if (!distinct) continue;
    ++report.members_tested;
    for (const auto& v : polytope_vertices(n, *roots).vertices) {
      ++report.points_tested;
      if (!h.evaluate(v).is_zero()) report.contained = false;
    }
  }
  if (report.points_tested == 0) report.contained = false;

  auto full = sys.sections();
  full.push_back(extra);
  try {
    report.matches_extra = projectively_equal(h, poncelet_hypersurface(PonceletSystem(n, sys.k(), full)));
  } catch (const DegeneracyError&) {
    report.matches_extra = false;
  }
  return report;
}

inline bool contains_subvariety(const MultiPoly& h, const PonceletSystem& sys, const BinaryForm& extra) {
  return containment_report(h, sys, extra).contained;
}

}  // namespace poncelet
