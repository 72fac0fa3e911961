#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "poncelet/errors.hpp"
#include "poncelet/incidence.hpp"
#include "poncelet/io.hpp"
#include "poncelet/plot.hpp"
#include "poncelet/probe.hpp"
#include "poncelet/sampling.hpp"
#include "poncelet/schwarzenberger.hpp"
#include "poncelet/surfaces.hpp"

namespace poncelet::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInvalidInput = 2, kDegenerate = 3 };

struct JobConfig {
  std::string command;
  std::optional<int> n;
  std::optional<int> k;
  std::string sections;      // path or inline JSON of a system
  std::string equation;      // path or inline JSON term list
  std::string member_roots;  // "a:b,a:b;a:b,..."
  std::string a_matrix;      // path or inline JSON 3×6 matrix
  std::string probe_case = "cubic";
  std::size_t samples = 5;
  std::uint64_t seed = kDefaultSeed;
  std::string degrees = "2-6";
  std::string out;
  std::size_t chart = 0;
  std::string window = "-5,5,-5,5";
  unsigned resolution = 200;
};

struct CommandResult {
  int code = kSuccess;
  std::string output;   // JSON or SVG document
  std::string message;  // diagnostics for stderr
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
inline io::Json load_json_argument(const std::string& arg, const char* what) {
  if (arg.empty()) throw InvalidInput(std::string("missing ") + what);
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
    return io::parse(arg);
  return io::parse(read_text_file(arg));
}

inline ParamPoint parse_param_point(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("root must be written a:b, got '" + text + "'");
  return ParamPoint(Rational::parse(text.substr(0, colon)), Rational::parse(text.substr(colon + 1)));
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

/// Members separated by ';', roots by ','. An empty string is no member.
inline std::vector<std::vector<ParamPoint>> parse_members(const std::string& text) {
  std::vector<std::vector<ParamPoint>> out;
  if (text.find_first_not_of(" ") == std::string::npos) return out;
  for (const auto& member : split(text, ';')) {
    if (member.empty()) throw InvalidInput("empty member in root list");
    std::vector<ParamPoint> roots;
    for (const auto& r : split(member, ',')) roots.push_back(parse_param_point(r));
    out.push_back(std::move(roots));
  }
  return out;
}

inline std::array<Rational, 4> parse_window(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw InvalidInput("window must be xmin,xmax,ymin,ymax");
  return {Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]),
          Rational::parse(parts[3])};
}

inline std::vector<unsigned> parse_degrees(const std::string& text) {
  std::vector<unsigned> out;
  const auto dash = text.find('-');
  const auto to_unsigned = [](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("degrees must be nonnegative integers");
    return static_cast<unsigned>(std::stoul(s));
  };
  if (dash != std::string::npos) {
    const unsigned lo = to_unsigned(text.substr(0, dash)), hi = to_unsigned(text.substr(dash + 1));
    if (lo > hi) throw InvalidInput("empty degree range");
    for (unsigned d = lo; d <= hi; ++d) out.push_back(d);
  } else {
    for (const auto& part : split(text, ',')) out.push_back(to_unsigned(part));
  }
  return out;
}

inline RationalMatrix parse_subspace(const io::Json& j) {
  if (j.is_object() && j.contains("A")) return io::matrix_from_json(j["A"]);
  return io::matrix_from_json(j);
}

inline std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

inline std::optional<PonceletSystem> optional_system(const JobConfig& cfg) {
  if (cfg.sections.empty()) return std::nullopt;
  return io::system_from_json(load_json_argument(cfg.sections, "--sections"));
}

inline CommandResult cmd_canonical_matrix(const JobConfig& cfg) {
  if (!cfg.n || !cfg.k) throw InvalidInput("canonical-matrix needs --n and --k");
  const auto pres = canonical_matrix(*cfg.n, *cfg.k);
  io::Json j;
  j["n"] = pres.n;
  j["k"] = pres.k;
  j["matrix"] = io::to_json(pres.matrix);
  return {kSuccess, dump(j), {}};
}

inline io::Json equation_json(const MultiPoly& h) {
  io::Json j;
  j["num_vars"] = h.num_vars();
  if (const auto d = h.degree()) j["degree"] = *d;
  else j["degree"] = nullptr;
  j["text"] = h.to_string();
  j["terms"] = io::to_json(h);
  return j;
}

inline CommandResult cmd_hypersurface(const JobConfig& cfg) {
  const auto sys = optional_system(cfg);
  if (!sys) throw InvalidInput("hypersurface needs --sections");
  io::Json j = io::to_json(*sys);
  j["equation"] = equation_json(poncelet_hypersurface(*sys));
  return {kSuccess, dump(j), {}};
}

inline CommandResult cmd_subvariety(const JobConfig& cfg) {
  const auto sys = optional_system(cfg);
  if (!sys) throw InvalidInput("subvariety needs --sections");
  if (sys->sections().size() + 1 > static_cast<std::size_t>(sys->n()))
    throw ArityError("subvariety needs at most n-1 sections");
  io::Json j = io::to_json(*sys);
  io::Json minors = io::Json::array();
  for (const auto& m : maximal_minors(sys->stacked_matrix())) {
    io::Json entry;
    entry["omitted_rows"] = m.omitted_rows;
    entry["equation"] = equation_json(m.value);
    minors.push_back(std::move(entry));
  }
  j["minors"] = std::move(minors);
  return {kSuccess, dump(j), {}};
}

/// The equation under test and its (n, k): from a system, or given directly.
inline std::tuple<MultiPoly, int, int> equation_under_test(const JobConfig& cfg) {
  if (const auto sys = optional_system(cfg)) {
    if (!cfg.equation.empty()) throw InvalidInput("give either --sections or --equation, not both");
    return {poncelet_hypersurface(*sys), sys->n(), sys->k()};
  }
  if (cfg.equation.empty()) throw InvalidInput("verify-darboux needs --sections or --equation");
  if (!cfg.n || !cfg.k) throw InvalidInput("--equation needs --n and --k");
  if (*cfg.n < 1 || *cfg.k < 0) throw InvalidInput("invalid n or k");
  io::Json j = load_json_argument(cfg.equation, "--equation");
  if (j.is_object() && j.contains("terms")) j = j["terms"];
  return {io::multipoly_from_json(j, static_cast<std::size_t>(*cfg.n) + 1), *cfg.n, *cfg.k};
}

inline CommandResult cmd_verify_darboux(const JobConfig& cfg) {
  const auto [h, n, k] = equation_under_test(cfg);
  const auto members = parse_members(cfg.member_roots);
  if (members.empty()) throw InvalidInput("verify-darboux needs --member-roots");
  DarbouxReport all;
  all.pass = true;
  for (const auto& roots : members) {
    const auto r = darboux_check(h, n, k, roots);
    all.pass = all.pass && r.pass;
    all.vertices.insert(all.vertices.end(), r.vertices.begin(), r.vertices.end());
    all.values.insert(all.values.end(), r.values.begin(), r.values.end());
  }
  io::Json j = io::to_json(all);
  j["members"] = members.size();
  return {all.pass ? kSuccess : kVerificationFailed, dump(j), all.pass ? "" : "darboux check failed"};
}

inline CommandResult cmd_quadric_demo(const JobConfig&) {
  io::Json j;
  io::Json minors = io::Json::array();
  std::vector<std::size_t> ranks;
  for (const auto& q : quadric_demo()) {
    ranks.push_back(q.rank);
    minors.push_back(io::to_json(q));
  }
  j["ranks"] = ranks;
  j["minors"] = std::move(minors);
  return {kSuccess, dump(j), {}};
}

inline CommandResult cmd_cubic_from_a(const JobConfig& cfg) {
  const CubicModel model = cubic_from_subspace(parse_subspace(load_json_argument(cfg.a_matrix, "--A")));
  io::Json j = io::to_json(model);
  j["text"] = model.cubic.to_string();
  const SixPointTensor t = six_point_flattening_from_projection(model.p);
  io::Json flat = io::to_json(t.flattening);
  j["flattening"] = std::move(flat);
  io::Json minors = io::Json::array();
  for (const auto& m : t.minors) minors.push_back(m.to_string());
  j["six_point_minors"] = std::move(minors);
  return {kSuccess, dump(j), {}};
}

inline ProbeCase probe_case_from(const JobConfig& cfg) {
  if (cfg.probe_case == "plane-curve") return ProbeCase::plane_curve(cfg.k.value_or(3));
  if (cfg.k) throw InvalidInput("--k applies to the plane-curve case only");
  if (cfg.probe_case == "quadric") return ProbeCase::quadric();
  if (cfg.probe_case == "cubic") return ProbeCase::cubic();
  throw InvalidInput("unknown probe case '" + cfg.probe_case + "'");
}

inline CommandResult cmd_dim_probe(const JobConfig& cfg) {
  const ProbeCase c = probe_case_from(cfg);
  if (c.k < 0) throw InvalidInput("k must be nonnegative");
  const auto report = dim_probe(c, cfg.samples, cfg.seed);
  io::Json j = io::to_json(report);
  j["seed"] = cfg.seed;
  const bool ok = report.stable && report.modular_agrees;
  return {ok ? kSuccess : kVerificationFailed, dump(j), ok ? "" : "probe ranks unstable or modular mismatch"};
}

inline CommandResult cmd_hilbert(const JobConfig& cfg) {
  const RationalMatrix a = parse_subspace(load_json_argument(cfg.a_matrix, "--A"));
  const auto minors = six_point_flattening(a).minors;
  io::Json j;
  j["A"] = io::to_json(a);
  std::vector<unsigned> degrees = parse_degrees(cfg.degrees);
  std::vector<std::size_t> values;
  for (unsigned d : degrees) values.push_back(ideal_dimension(minors, 3, d));
  j["degrees"] = degrees;
  j["values"] = values;
  return {kSuccess, dump(j), {}};
}

inline CommandResult cmd_plot(const JobConfig& cfg) {
  const auto sys = optional_system(cfg);
  if (!sys) throw InvalidInput("plot needs --sections");
  if (sys->n() != 2) throw InvalidInput("plot is only defined for n = 2");
  plot::PlotConfig pc;
  pc.chart = cfg.chart;
  pc.window = parse_window(cfg.window);
  pc.resolution = cfg.resolution;
  const auto scene = plot::build_scene(poncelet_hypersurface(*sys), parse_members(cfg.member_roots), pc);
  std::string note;
  if (scene.hidden_vertices > 0 || scene.hidden_tangents > 0)
    note = "not drawn in the chart window: " + std::to_string(scene.hidden_vertices) + " vertex(es), " +
           std::to_string(scene.hidden_tangents) + " tangent line(s)";
  return {kSuccess, plot::render_svg(scene), note};
}

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"canonical-matrix", "hypersurface", "subvariety", "verify-darboux",
                                              "quadric-demo",     "cubic-from-A", "dim-probe",  "hilbert",
                                              "plot"};
  return names;
}

/// Runs one command, mapping library errors onto the exit-code contract.
inline CommandResult run_command(const JobConfig& cfg) {
  try {
    if (cfg.command == "canonical-matrix") return cmd_canonical_matrix(cfg);
    if (cfg.command == "hypersurface") return cmd_hypersurface(cfg);
    if (cfg.command == "subvariety") return cmd_subvariety(cfg);
    if (cfg.command == "verify-darboux") return cmd_verify_darboux(cfg);
    if (cfg.command == "quadric-demo") return cmd_quadric_demo(cfg);
    if (cfg.command == "cubic-from-A") return cmd_cubic_from_a(cfg);
    if (cfg.command == "dim-probe") return cmd_dim_probe(cfg);
    if (cfg.command == "hilbert") return cmd_hilbert(cfg);
    if (cfg.command == "plot") return cmd_plot(cfg);
    return {kInvalidInput, {}, "unknown command '" + cfg.command + "'"};
  } catch (const DegeneracyError& e) {
    return {kDegenerate, {}, e.what()};
  } catch (const InvalidInput& e) {
    return {kInvalidInput, {}, e.what()};
  } catch (const nlohmann::json::exception& e) {
    return {kInvalidInput, {}, std::string("malformed JSON input: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    return {kInvalidInput, {}, e.what()};
  }
}

/// Writes through a temporary file in the target directory, then renames.
inline void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw InvalidInput("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw InvalidInput("cannot rename onto " + path + ": " + ec.message());
  }
}

}  // namespace poncelet::cli
