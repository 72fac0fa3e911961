#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "poncelet/binary_form.hpp"
#include "poncelet/errors.hpp"
#include "poncelet/matrix.hpp"

namespace poncelet {

inline constexpr std::uint64_t kDefaultSeed = 20110601;

/// Seeded generator with a platform-independent mapping to integers
/// (std::uniform_int_distribution is implementation-defined, so it is not used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }
  std::uint64_t next() { return gen_(); }

  /// p/q with |p| ≤ height and 1 ≤ q ≤ height.
  Rational rational(long height) { return Rational(BigInt(uniform(-height, height)), BigInt(uniform(1, height))); }
  Rational nonzero_integer(long height) {
    long v = 0;
    while (v == 0) v = uniform(-height, height);
    return Rational(v);
  }
  ParamPoint point(long height) {
    while (true) {
      const long a = uniform(-height, height);
      const long b = uniform(-height, height);
      if (a != 0 || b != 0) return ParamPoint(Rational(a), Rational(b));
    }
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[gen_() % i]);
  }

 private:
  std::mt19937_64 gen_;
};

inline BinaryForm random_integer_form(Rng& rng, unsigned degree, long height) {
  while (true) {
    std::vector<Rational> c(degree + 1);
    for (auto& x : c) x = Rational(rng.uniform(-height, height));
    BinaryForm f(std::move(c));
    if (!f.is_zero()) return f;
  }
}

inline RationalMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, long height) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(-height, height));
  return m;
}

inline RationalMatrix random_invertible(Rng& rng, std::size_t size, long height) {
  while (true) {
    RationalMatrix m = random_integer_matrix(rng, size, size, height);
    if (rank(m) == size) return m;
  }
}

/// Integer matrix of determinant 1, a product of elementary shears.
inline RationalMatrix random_sl2(Rng& rng, long height) {
  RationalMatrix g = RationalMatrix::identity(2);
  for (int step = 0; step < 3; ++step) {
    RationalMatrix e = RationalMatrix::identity(2);
    if (step % 2 == 0) e(0, 1) = Rational(rng.uniform(-height, height));
    else e(1, 0) = Rational(rng.uniform(-height, height));
    g = g * e;
  }
  return g;
}

/// (a:b) ↦ (g00·a + g01·b : g10·a + g11·b).
inline ParamPoint moebius(const RationalMatrix& g, const ParamPoint& t) {
  return ParamPoint(g(0, 0) * t.a() + g(0, 1) * t.b(), g(1, 0) * t.a() + g(1, 1) * t.b());
}

/// Generator of a cyclic subgroup of PGL(2, Q) of the given order (2, 3, 4 or 6).
/// None of its non-identity powers has a rational fixed point, so every
/// rational orbit has exactly `order` points.
inline RationalMatrix cyclic_moebius_generator(unsigned order) {
  switch (order) {
    case 2: return RationalMatrix{{0, -1}, {1, 0}};   // t ↦ −1/t
    case 3: return RationalMatrix{{0, 1}, {-1, 1}};   // t ↦ 1/(1−t)
    case 4: return RationalMatrix{{1, 1}, {-1, 1}};   // t ↦ (t+1)/(1−t)
    case 6: return RationalMatrix{{1, -1}, {1, 2}};
    default: throw InvalidInput("no rational cyclic Moebius group of this order");
  }
}

/// A pencil of binary forms with many members that split over Q.
struct RootedPencil {
  unsigned degree = 0;
  BinaryForm first = BinaryForm::zero(0);
  BinaryForm second = BinaryForm::zero(0);
  std::vector<std::vector<ParamPoint>> members;  // roots of members, each spanned by first/second
};

/// Builds a pencil from the orbits of a cyclic group G ⊂ PGL(2, Q) of order m:
/// the binary forms vanishing on one G-orbit are the fibres of the quotient
/// map P^1 → P^1/G, so they span a pencil and each one splits over Q. For
/// degree d > m, the d − m extra roots are shared base points. Orbits are
/// moved by a random integer Moebius map and kept only when all roots have
/// height ≤ max_height. The basis (first, second) is a random recombination
/// of two members.
inline RootedPencil make_rooted_pencil(Rng& rng, unsigned degree, std::size_t member_count,
                                       long max_height = 20) {
  if (degree < 2) throw InvalidInput("rooted pencils need degree >= 2");
  unsigned order = 2;
  for (unsigned m : {6U, 4U, 3U, 2U})
    if (m <= degree) {
      order = m;
      break;
    }
  const unsigned base_count = degree - order;
  const RationalMatrix gen = cyclic_moebius_generator(order);

  // All primitive points of height ≤ max_height.
  std::vector<ParamPoint> grid;
  for (long a = -max_height; a <= max_height; ++a)
    for (long b = 0; b <= max_height; ++b) {
      if (b == 0 && a <= 0) continue;
      if (std::gcd(std::labs(a), b) != 1) continue;
      grid.emplace_back(Rational(a), Rational(b));
    }

  for (int attempt = 0; attempt < 200; ++attempt) {
    RationalMatrix gamma = attempt < 150 ? random_invertible(rng, 2, 1) : RationalMatrix::identity(2);
    std::vector<ParamPoint> base;
    while (base.size() < base_count) {
      ParamPoint t = rng.point(max_height);
      if (std::find(base.begin(), base.end(), t) == base.end()) base.push_back(t);
    }
    std::vector<std::vector<ParamPoint>> orbits;
    std::set<std::pair<BigInt, BigInt>> used;
    for (const auto& b : base) used.insert(b.primitive());
    for (const auto& s : grid) {
      if (used.count(moebius(gamma, s).primitive())) continue;
      std::vector<ParamPoint> orbit;
      ParamPoint t = s;
      bool ok = true;
      for (unsigned i = 0; i < order; ++i) {
        const ParamPoint image = moebius(gamma, t);
        if (image.height() > max_height || used.count(image.primitive())) ok = false;
        orbit.push_back(image);
        t = moebius(gen, t);
      }
      for (const auto& p : orbit) used.insert(p.primitive());
      if (ok) orbits.push_back(std::move(orbit));
    }
    if (orbits.size() < std::max<std::size_t>(member_count, 2)) continue;
    rng.shuffle(orbits);
    orbits.resize(std::max<std::size_t>(member_count, 2));

    RootedPencil pencil;
    pencil.degree = degree;
    for (auto& orbit : orbits) {
      std::vector<ParamPoint> roots = base;
      roots.insert(roots.end(), orbit.begin(), orbit.end());
      pencil.members.push_back(std::move(roots));
    }
    const BinaryForm f0 = form_from_roots(pencil.members[0]);
    const BinaryForm f1 = form_from_roots(pencil.members[1]);
    const RationalMatrix c = random_invertible(rng, 2, 5);
    pencil.first = c(0, 0) * f0 + c(0, 1) * f1;
    pencil.second = c(1, 0) * f0 + c(1, 1) * f1;
    return pencil;
  }
  throw DegeneracyError("could not find enough rational orbits for a rooted pencil");
}

}  // namespace poncelet
