#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "poncelet/cli.hpp"

namespace pcli = poncelet::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions of Poncelet varieties from Schwarzenberger bundles"};
  app.require_subcommand(1);
  pcli::JobConfig cfg;
  int n_value = 0;
  int k_value = 0;

  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write the result to FILE instead of stdout");
  };
  const auto add_nk = [&](CLI::App* sub, bool required) {
    auto* n = sub->add_option("--n", n_value, "Projective dimension n");
    auto* k = sub->add_option("--k", k_value, "Degree offset k");
    if (required) {
      n->required();
      k->required();
    }
  };

  auto* canon = app.add_subcommand("canonical-matrix", "Canonical presentation matrix of E_{n,n+k}");
  add_nk(canon, true);
  add_out(canon);

  auto* hyper = app.add_subcommand("hypersurface", "Determinant of n sections");
  hyper->add_option("--sections", cfg.sections, "System JSON (file or inline)")->required();
  add_out(hyper);

  auto* subv = app.add_subcommand("subvariety", "Maximal minors of at most n-1 sections");
  subv->add_option("--sections", cfg.sections, "System JSON (file or inline)")->required();
  add_out(subv);

  auto* darboux = app.add_subcommand("verify-darboux", "Evaluate an equation at polytope vertices");
  darboux->add_option("--sections", cfg.sections, "System JSON (file or inline)");
  darboux->add_option("--equation", cfg.equation, "Equation term list JSON (file or inline)");
  add_nk(darboux, false);
  darboux->add_option("--member-roots", cfg.member_roots, "Roots a:b,... of members, ';' between members")
      ->required();
  add_out(darboux);

  auto* quadric = app.add_subcommand("quadric-demo", "The four minors of the (3,1) presentation");
  add_out(quadric);

  auto* cubic = app.add_subcommand("cubic-from-A", "Cubic surface from a 3-dimensional subspace of S_5");
  cubic->add_option("--A", cfg.a_matrix, "3x6 coefficient matrix JSON (file or inline)")->required();
  add_out(cubic);

  auto* probe = app.add_subcommand("dim-probe", "Exact Jacobian rank of a Poncelet family");
  probe->add_option("--case", cfg.probe_case, "plane-curve, quadric or cubic")
      ->check(CLI::IsMember({"plane-curve", "quadric", "cubic"}));
  probe->add_option("--k", k_value, "k for the plane-curve case (default 3)");
  probe->add_option("--samples", cfg.samples, "Number of random samples");
  probe->add_option("--seed", cfg.seed, "Random seed");
  add_out(probe);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the six-point minors");
  hilbert->add_option("--A", cfg.a_matrix, "3x6 coefficient matrix JSON (file or inline)")->required();
  hilbert->add_option("--degrees", cfg.degrees, "Degree range lo-hi or list d1,d2,...");
  add_out(hilbert);

  auto* plot = app.add_subcommand("plot", "SVG of a plane Poncelet scene");
  plot->add_option("--sections", cfg.sections, "System JSON with n = 2 (file or inline)")->required();
  plot->add_option("--member-roots", cfg.member_roots, "Roots a:b,... of members, ';' between members");
  plot->add_option("--chart", cfg.chart, "Affine chart x_i = 1")->check(CLI::Range(0, 2));
  plot->add_option("--window", cfg.window, "xmin,xmax,ymin,ymax");
  plot->add_option("--resolution", cfg.resolution, "Grid cells per side");
  add_out(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pcli::kInvalidInput;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    if (auto* opt = sub->get_option_no_throw("--n"); opt && opt->count() > 0) cfg.n = n_value;
    if (auto* opt = sub->get_option_no_throw("--k"); opt && opt->count() > 0) cfg.k = k_value;
  }

  const pcli::CommandResult result = pcli::run_command(cfg);
  if (!result.message.empty()) std::cerr << result.message << '\n';
  if (result.code != pcli::kSuccess && result.output.empty()) return result.code;
  try {
    if (cfg.out.empty()) std::cout << result.output;
    else pcli::write_atomically(cfg.out, result.output);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return pcli::kInvalidInput;
  }
  return result.code;
}
