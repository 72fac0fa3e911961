#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "poncelet/binary_form.hpp"
#include "poncelet/errors.hpp"
#include "poncelet/incidence.hpp"
#include "poncelet/polynomial.hpp"

// Rendering of plane Poncelet scenes (n = 2). Floating point is used for
// drawing only; nothing here feeds back into an exact decision.

namespace poncelet::plot {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct Segment {
  Point2 from;
  Point2 to;
};

struct PlotConfig {
  std::size_t chart = 0;                      // affine chart x_chart = 1
  std::array<Rational, 4> window{-5, 5, -5, 5};  // xmin, xmax, ymin, ymax
  unsigned resolution = 200;                  // grid cells per side
};

struct Scene {
  PlotConfig config;
  std::vector<Segment> curve;       // zero set of the Poncelet curve
  std::vector<Segment> envelope;    // zero set of x1^2 − 4·x0·x2
  std::vector<Segment> tangents;    // one clipped line per member root
  std::vector<Point2> vertices;     // visible polytope vertices
  std::size_t hidden_vertices = 0;  // at infinity in the chart or outside the window
  std::size_t hidden_tangents = 0;
};

/// The two coordinates that stay free in the chart, in increasing order.
inline std::array<std::size_t, 2> free_coordinates(std::size_t chart) {
  if (chart > 2) throw InvalidInput("chart must be 0, 1 or 2");
  std::array<std::size_t, 2> out{};
  for (std::size_t i = 0, j = 0; i < 3; ++i)
    if (i != chart) out[j++] = i;
  return out;
}

/// Sign-change contouring (marching squares) of p on the chart grid.
inline std::vector<Segment> contour(const MultiPoly& p, const PlotConfig& cfg) {
  const auto coords = free_coordinates(cfg.chart);
  const double xmin = cfg.window[0].to_double(), xmax = cfg.window[1].to_double();
  const double ymin = cfg.window[2].to_double(), ymax = cfg.window[3].to_double();
  const unsigned res = cfg.resolution;
  const double dx = (xmax - xmin) / res, dy = (ymax - ymin) / res;
  std::vector<double> grid((res + 1) * (res + 1));
  std::vector<double> point(3, 0.0);
  point[cfg.chart] = 1.0;
  for (unsigned j = 0; j <= res; ++j)
    for (unsigned i = 0; i <= res; ++i) {
      point[coords[0]] = xmin + i * dx;
      point[coords[1]] = ymin + j * dy;
      grid[j * (res + 1) + i] = p.evaluate_double(point);
    }
  std::vector<Segment> out;
  for (unsigned j = 0; j < res; ++j)
    for (unsigned i = 0; i < res; ++i) {
      const std::array<Point2, 4> corner{Point2{xmin + i * dx, ymin + j * dy}, Point2{xmin + (i + 1) * dx, ymin + j * dy},
                                         Point2{xmin + (i + 1) * dx, ymin + (j + 1) * dy},
                                         Point2{xmin + i * dx, ymin + (j + 1) * dy}};
      const std::array<double, 4> v{grid[j * (res + 1) + i], grid[j * (res + 1) + i + 1],
                                    grid[(j + 1) * (res + 1) + i + 1], grid[(j + 1) * (res + 1) + i]};
      std::vector<Point2> hits;
      for (int e = 0; e < 4; ++e) {
        const int f = (e + 1) % 4;
        if ((v[e] > 0) == (v[f] > 0)) continue;
        const double t = (v[e] == v[f]) ? 0.5 : v[e] / (v[e] - v[f]);
        hits.push_back({corner[e].x + t * (corner[f].x - corner[e].x), corner[e].y + t * (corner[f].y - corner[e].y)});
      }
      for (std::size_t h = 0; h + 1 < hits.size(); h += 2) out.push_back({hits[h], hits[h + 1]});
    }
  return out;
}

// Clips the line c + a·X + b·Y = 0 to the window; false if it misses it.
inline bool clip_line(double c, double a, double b, const PlotConfig& cfg, Segment& seg) {
  const double xmin = cfg.window[0].to_double(), xmax = cfg.window[1].to_double();
  const double ymin = cfg.window[2].to_double(), ymax = cfg.window[3].to_double();
  std::vector<Point2> pts;
  const auto add = [&](double x, double y) {
    const double eps = 1e-12 * (1.0 + std::fabs(x) + std::fabs(y));
    if (x < xmin - eps || x > xmax + eps || y < ymin - eps || y > ymax + eps) return;
    for (const auto& q : pts)
      if (std::fabs(q.x - x) < 1e-9 && std::fabs(q.y - y) < 1e-9) return;
    pts.push_back({x, y});
  };
  if (b != 0.0) {
    add(xmin, -(c + a * xmin) / b);
    add(xmax, -(c + a * xmax) / b);
  }
  if (a != 0.0) {
    add(-(c + b * ymin) / a, ymin);
    add(-(c + b * ymax) / a, ymax);
  }
  if (pts.size() < 2) return false;
  seg = {pts[0], pts[1]};
  return true;
}

/// Scene of a plane Poncelet curve h, its envelope conic, and for every
/// member its tangent lines and polytope vertices.
inline Scene build_scene(const MultiPoly& h, const std::vector<std::vector<ParamPoint>>& members,
                         const PlotConfig& cfg) {
  if (h.num_vars() != 3) throw InvalidInput("plots are only defined for n = 2");
  if (cfg.resolution < 2) throw InvalidInput("plot resolution must be at least 2");
  if (!(cfg.window[0] < cfg.window[1]) || !(cfg.window[2] < cfg.window[3])) throw InvalidInput("empty plot window");
  const auto coords = free_coordinates(cfg.chart);
  Scene scene;
  scene.config = cfg;
  scene.curve = contour(h, cfg);
  const MultiPoly x0 = MultiPoly::variable(3, 0), x1 = MultiPoly::variable(3, 1), x2 = MultiPoly::variable(3, 2);
  scene.envelope = contour(x1 * x1 - x0 * x2 * Rational(4), cfg);
  const int k = members.empty() ? 0 : static_cast<int>(members.front().size()) - 2;
  if (!members.empty() && (k < 0 || h.is_zero() || *h.degree() != static_cast<unsigned>(k + 1)))
    throw InvalidInput("members need degree(curve) + 1 roots");
  for (const auto& roots : members) {
    if (roots.size() != members.front().size()) throw InvalidInput("members must have the same number of roots");
    for (const auto& t : roots) {
      const auto hp = contact_hyperplane(2, t);
      Segment seg;
      if (clip_line(hp.coeffs[cfg.chart].to_double(), hp.coeffs[coords[0]].to_double(),
                    hp.coeffs[coords[1]].to_double(), cfg, seg))
        scene.tangents.push_back(seg);
      else
        ++scene.hidden_tangents;
    }
    for (const auto& v : section_vanishing_points(2, k, roots)) {
      if (v[cfg.chart].is_zero()) {
        ++scene.hidden_vertices;
        continue;
      }
      const Rational px = v[coords[0]] / v[cfg.chart], py = v[coords[1]] / v[cfg.chart];
      if (px < cfg.window[0] || px > cfg.window[1] || py < cfg.window[2] || py > cfg.window[3]) {
        ++scene.hidden_vertices;
        continue;
      }
      scene.vertices.push_back({px.to_double(), py.to_double()});
    }
  }
  return scene;
}

/// SVG 1.1 document, 800×800 viewport, fixed three-decimal formatting.
inline std::string render_svg(const Scene& scene) {
  const auto& cfg = scene.config;
  const double xmin = cfg.window[0].to_double(), xmax = cfg.window[1].to_double();
  const double ymin = cfg.window[2].to_double(), ymax = cfg.window[3].to_double();
  constexpr double kSize = 800.0;
  const auto px = [&](const Point2& p) {
    return Point2{(p.x - xmin) / (xmax - xmin) * kSize, kSize - (p.y - ymin) / (ymax - ymin) * kSize};
  };
  std::string out;
  char buf[160];
  const auto emit = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    out += buf;
  };
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
  const auto path = [&](const char* id, const char* color, double width, const std::vector<Segment>& segs) {
    emit("<g id=\"%s\" fill=\"none\" stroke=\"%s\" stroke-width=\"%.1f\">\n", id, color, width);
    if (!segs.empty()) {
      out += "<path d=\"";
      for (const auto& s : segs) {
        const Point2 a = px(s.from), b = px(s.to);
        emit("M%.3f %.3fL%.3f %.3f", a.x, a.y, b.x, b.y);
      }
      out += "\"/>\n";
    }
    out += "</g>\n";
  };
  path("envelope", "#888888", 1.5, scene.envelope);
  out += "<g id=\"tangents\" stroke=\"#3366cc\" stroke-width=\"1\">\n";
  for (const auto& s : scene.tangents) {
    const Point2 a = px(s.from), b = px(s.to);
    emit("<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"/>\n", a.x, a.y, b.x, b.y);
  }
  out += "</g>\n";
  path("curve", "#cc3333", 2.0, scene.curve);
  out += "<g id=\"vertices\" fill=\"black\">\n";
  for (const auto& v : scene.vertices) {
    const Point2 p = px(v);
    emit("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\"/>\n", p.x, p.y);
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace poncelet::plot
