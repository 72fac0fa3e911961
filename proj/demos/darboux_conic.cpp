// Builds the conic of two cubic sections and checks it through the
// vertices of triangles circumscribed about the envelope conic.

#include <iostream>

#include "poncelet/incidence.hpp"
#include "poncelet/sampling.hpp"
#include "poncelet/schwarzenberger.hpp"

using namespace poncelet;

int main() {
  const BinaryForm f({0, 1, -1, 0});
  const BinaryForm g({1, 0, 0, 1});
  const PonceletSystem sys(2, 1, {f, g});
  const MultiPoly h = poncelet_hypersurface(sys);
  std::cout << "h = " << h.to_string() << "\n";

  const std::vector<ParamPoint> roots{{0, 1}, {1, 1}, {1, 0}};
  const DarbouxReport report = darboux_check(h, 2, 1, roots);
  std::cout << "member f: " << (report.pass ? "pass" : "fail") << "\n";
  for (const auto& v : report.vertices) {
    std::cout << "  vertex (";
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i].to_string();
    std::cout << ")\n";
  }

  // A random system with many rational-rooted members.
  Rng rng;
  const RootedPencil pencil = make_rooted_pencil(rng, 3, 5);
  const MultiPoly h2 = poncelet_hypersurface(PonceletSystem(2, 1, {pencil.first, pencil.second}));
  std::cout << "random pencil: h = " << normalize_projective(h2).to_string() << "\n";
  for (const auto& member : pencil.members) {
    std::cout << "  member";
    for (const auto& t : member) {
      const auto [a, b] = t.primitive();
      std::cout << " (" << a.get_str() << ":" << b.get_str() << ")";
    }
    std::cout << ": " << (darboux_check(h2, 2, 1, member).pass ? "pass" : "fail") << "\n";
  }
  return report.pass ? 0 : 1;
}
