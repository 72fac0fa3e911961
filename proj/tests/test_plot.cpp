#include <cmath>
#include <regex>

#include <gtest/gtest.h>

#include "poncelet/plot.hpp"
#include "poncelet/schwarzenberger.hpp"

using namespace poncelet;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

MultiPoly conic_equation() {
  return poncelet_hypersurface(PonceletSystem(2, 1, {BinaryForm({0, 1, -1, 0}), BinaryForm({1, 0, 0, 1})}));
}

MultiPoly quartic_equation() {
  return poncelet_hypersurface(
      PonceletSystem(2, 3, {BinaryForm({1, 0, -5, 0, 4, 0}), BinaryForm({0, 1, 0, 0, 0, 1})}));
}

const std::vector<ParamPoint> kConicMember{{0, 1}, {1, 1}, {1, 0}};
const std::vector<ParamPoint> kQuarticMember{{-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}};

// Every vertex is within one grid cell of some curve segment endpoint.
void expect_vertices_on_curve(const plot::Scene& scene) {
  const double cell = (scene.config.window[1] - scene.config.window[0]).to_double() / scene.config.resolution;
  for (const auto& v : scene.vertices) {
    double best = 1e300;
    for (const auto& s : scene.curve)
      for (const auto& p : {s.from, s.to}) best = std::min(best, std::hypot(p.x - v.x, p.y - v.y));
    EXPECT_LE(best, cell) << "vertex (" << v.x << ", " << v.y << ")";
  }
}

}  // namespace

TEST(Plot, ConicSceneInChartOne) {
  plot::PlotConfig cfg;
  cfg.chart = 1;
  const auto scene = plot::build_scene(conic_equation(), {kConicMember}, cfg);
  EXPECT_EQ(scene.tangents.size(), 3U);
  EXPECT_EQ(scene.vertices.size(), 3U);
  EXPECT_EQ(scene.hidden_vertices, 0U);
  EXPECT_FALSE(scene.curve.empty());
  EXPECT_FALSE(scene.envelope.empty());
  expect_vertices_on_curve(scene);
  const std::string svg = plot::render_svg(scene);
  EXPECT_EQ(count(svg, "<line "), 3U);
  EXPECT_EQ(count(svg, "<circle "), 3U);
}

TEST(Plot, DefaultChartHidesVerticesAtInfinity) {
  const auto scene = plot::build_scene(conic_equation(), {kConicMember}, plot::PlotConfig{});
  EXPECT_EQ(scene.vertices.size(), 1U);
  EXPECT_EQ(scene.hidden_vertices, 2U);
  EXPECT_EQ(scene.tangents.size(), 2U);
  EXPECT_EQ(scene.hidden_tangents, 1U);
}

TEST(Plot, QuarticScene) {
  const auto scene = plot::build_scene(quartic_equation(), {kQuarticMember}, plot::PlotConfig{});
  EXPECT_EQ(scene.tangents.size(), 5U);
  EXPECT_EQ(scene.vertices.size(), 10U);
  expect_vertices_on_curve(scene);
  const std::string svg = plot::render_svg(scene);
  EXPECT_EQ(count(svg, "<line "), 5U);
  EXPECT_EQ(count(svg, "<circle "), 10U);
}

TEST(Plot, EmptyMemberList) {
  const auto scene = plot::build_scene(conic_equation(), {}, plot::PlotConfig{});
  const std::string svg = plot::render_svg(scene);
  EXPECT_EQ(count(svg, "<line "), 0U);
  EXPECT_EQ(count(svg, "<circle "), 0U);
  EXPECT_NE(svg.find("id=\"curve\""), std::string::npos);
  EXPECT_NE(svg.find("id=\"envelope\""), std::string::npos);
}

TEST(Plot, SvgHeaderAndDeterminism) {
  const auto scene = plot::build_scene(quartic_equation(), {kQuarticMember}, plot::PlotConfig{});
  const std::string a = plot::render_svg(scene);
  EXPECT_EQ(a, plot::render_svg(plot::build_scene(quartic_equation(), {kQuarticMember}, plot::PlotConfig{})));
  EXPECT_NE(a.find("width=\"800\" height=\"800\""), std::string::npos);
  EXPECT_NE(a.find("version=\"1.1\""), std::string::npos);
  EXPECT_TRUE(std::regex_search(a, std::regex("cx=\"\\d+\\.\\d{3}\"")));
}

TEST(Plot, EnvelopeIsTheDiscriminantConic) {
  // Points of the contour satisfy x1^2 − 4 x0 x2 ≈ 0 in the chart x0 = 1.
  const auto scene = plot::build_scene(conic_equation(), {}, plot::PlotConfig{});
  for (const auto& s : scene.envelope) EXPECT_NEAR(s.from.x * s.from.x - 4 * s.from.y, 0.0, 0.5);
}

TEST(Plot, Errors) {
  const MultiPoly space = MultiPoly::variable(4, 0);
  EXPECT_THROW(plot::build_scene(space, {}, plot::PlotConfig{}), InvalidInput);
  plot::PlotConfig bad;
  bad.chart = 3;
  EXPECT_THROW(plot::build_scene(conic_equation(), {}, bad), InvalidInput);
  plot::PlotConfig empty;
  empty.window = {1, 1, -1, 1};
  EXPECT_THROW(plot::build_scene(conic_equation(), {}, empty), InvalidInput);
  EXPECT_THROW(plot::build_scene(conic_equation(), {kQuarticMember}, plot::PlotConfig{}), InvalidInput);
}
