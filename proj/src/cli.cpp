#include "lvl/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lvl/constants.hpp"
#include "lvl/generators.hpp"
#include "lvl/io.hpp"
#include "lvl/level_set.hpp"
#include "lvl/verify.hpp"

namespace lvl {

namespace {

struct Options {
  bool serial = false;
  // gen
  std::string kind;
  int n = 0;
  double side = 1.0;
  double radius = 1.0;
  int teeth = 6;
  int n_max = 4;
  double p = 0.26;
  int depth = 3;
  std::string rule = "all_bump";
  unsigned long long seed = 1;
  double neck = 0.5;
  // shared
  std::string input;
  std::string output;
  double eps = 0.0;
  std::vector<double> eps_list;
  std::string method = "exact";
  double h = 0.0;
  std::optional<double> r0;
  std::optional<double> bound;
  int samples = 0;
  bool limit = false;
  std::string suite;
};

Exec exec_of(const Options& o) { return o.serial ? Exec::serial : Exec::parallel; }

Sampler sampler_of(const Options& o) {
  Sampler s;
  if (o.samples > 0) {
    s.base_points = o.samples;
    s.max_points = std::max(3 * o.samples, 64);
  }
  s.exec = exec_of(o);
  return s;
}

JordanCurve generate(const Options& o) {
  const std::string& k = o.kind;
  if (k == "square") return regular_ngon(4, o.side);
  if (k == "hexagon") return regular_ngon(6, o.side);
  if (k == "ngon") return regular_ngon(o.n > 0 ? o.n : 4, o.side);
  if (k == "circle") return circle_curve(o.radius);
  if (k == "staircase") return staircase_sharpljc(o.teeth);
  if (k == "sharplqc") return sharplqc_curve(o.n > 0 ? o.n : 24, o.n_max);
  if (k == "snowflake") {
    return rohde_snowflake({o.n > 0 ? o.n : 6, o.p, o.depth, parse_choice_rule(o.rule), o.seed});
  }
  if (k == "dumbbell") return dumbbell(o.neck);
  throw std::invalid_argument("unknown curve kind: " + k);
}

template <class F>
void with_output(const std::string& path, std::ostream& fallback, F&& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  write(f);
}

int run_levelset(const Options& o, std::ostream& out) {
  const JordanCurve c = read_curve(o.input);
  if (o.method == "grid") {
    const double h = o.h > 0 ? o.h : std::abs(o.eps) / 16;
    const auto lines = level_set_grid(c, o.eps, h);
    with_output(o.output, out, [&](std::ostream& s) { write_polylines(s, o.eps, lines); });
  } else {
    const auto lv = level_set_exact(c, o.eps, exec_of(o));
    with_output(o.output, out, [&](std::ostream& s) { write_level_set(s, lv); });
  }
  return 0;
}

int run_verify(const Options& o, std::ostream& out) {
  const JordanCurve c = read_curve(o.input);
  const std::vector<double> schedule = o.eps_list.empty() ? default_schedule(c) : o.eps_list;
  VerifyOptions vo;
  vo.sampler = sampler_of(o);
  vo.bound = o.bound;
  vo.r0 = o.r0;
  vo.exec = exec_of(o);
  VerificationReport rep;
  if (o.suite == "ljc") {
    rep = verify_ljc(c, schedule, vo);
  } else if (o.suite == "lqc") {
    rep = verify_lqc(c, schedule, vo);
  } else if (o.suite == "lca") {
    rep = verify_lca(c, schedule, vo);
  } else if (o.suite == "bounds") {
    rep = verify_bounds(c, o.r0.value_or(c.diameter()), vo);
  } else {
    rep = verify_local_lemmas(c, schedule, vo);
  }
  rep.curve_id = o.input;
  write_report(out, rep);
  return rep.pass ? 0 : 1;
}

int run_render(const Options& o) {
  const JordanCurve c = read_curve(o.input);
  std::vector<RenderLayer> layers;
  for (double e : o.eps_list) layers.push_back({e, level_set_exact(c, e, exec_of(o))});
  std::ofstream f(o.output);
  if (!f) throw std::runtime_error("cannot write " + o.output);
  render_svg(f, c, layers);
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Level sets of the signed distance to planar Jordan curves", "lvl"};
  app.require_subcommand(1);
  app.add_flag("--serial", o.serial, "Use the serial reference kernels");

  auto* gen = app.add_subcommand("gen", "Generate a curve file");
  gen->add_option("kind", o.kind, "square | hexagon | ngon | circle | staircase | sharplqc | snowflake | dumbbell")
      ->required()
      ->check(CLI::IsMember({"square", "hexagon", "ngon", "circle", "staircase", "sharplqc", "snowflake", "dumbbell"}));
  gen->add_option("--n", o.n, "Polygon sides (ngon, sharplqc, snowflake)");
  gen->add_option("--side", o.side, "Side length (square, hexagon, ngon)");
  gen->add_option("--r", o.radius, "Circle radius");
  gen->add_option("--teeth", o.teeth, "Staircase teeth");
  gen->add_option("--nmax", o.n_max, "Number of sharplqc bumps");
  gen->add_option("--p", o.p, "Snowflake tent parameter");
  gen->add_option("--depth", o.depth, "Snowflake depth");
  gen->add_option("--rule", o.rule, "Snowflake choice rule")
      ->check(CLI::IsMember({"all_flat", "all_bump", "alternating", "seeded"}));
  gen->add_option("--seed", o.seed, "Seed for the seeded rule");
  gen->add_option("--neck", o.neck, "Dumbbell neck width");
  gen->add_option("-o,--output", o.output, "Output curve file")->required();

  auto* lvl = app.add_subcommand("levelset", "Extract a level set");
  lvl->set_help_flag("--help", "Print this help message and exit");
  lvl->add_option("-i,--input", o.input, "Curve file")->required();
  lvl->add_option("-e,--eps", o.eps, "Signed level")->required();
  lvl->add_option("--method", o.method, "exact | grid")->check(CLI::IsMember({"exact", "grid"}));
  lvl->add_option("--h", o.h, "Grid spacing (grid method)");
  lvl->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* cls = app.add_subcommand("classify", "Classify a level set");
  cls->add_option("-i,--input", o.input, "Curve file")->required();
  cls->add_option("-e,--eps", o.eps, "Signed level")->required();

  auto* zeta = app.add_subcommand("zeta", "Estimate the chordal parameter");
  zeta->add_option("-i,--input", o.input, "Curve file")->required();
  zeta->add_option("--r0", o.r0, "Scale cap (default: diameter)");
  zeta->add_option("--samples", o.samples, "Base net size");
  zeta->add_flag("--limit", o.limit, "Report the small-scale limit sequence");

  auto* two = app.add_subcommand("twopoint", "Estimate the two-point constant");
  two->add_option("-i,--input", o.input, "Curve file")->required();
  two->add_option("--samples", o.samples, "Base net size");

  auto* ca = app.add_subcommand("chordarc", "Estimate the chord-arc constant");
  ca->add_option("-i,--input", o.input, "Curve file")->required();
  ca->add_option("--samples", o.samples, "Base net size");

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", o.suite, "ljc | lqc | lca | bounds | lemmas")
      ->required()
      ->check(CLI::IsMember({"ljc", "lqc", "lca", "bounds", "lemmas"}));
  ver->add_option("-i,--input", o.input, "Curve file")->required();
  ver->add_option("--eps-list", o.eps_list, "Comma-separated levels (default: diam * 2^-3..2^-10, both signs)")
      ->delimiter(',');
  ver->add_option("--r0", o.r0, "Scale for the chordal estimate");
  ver->add_option("--bound", o.bound, "Uniformity bound");
  ver->add_option("--samples", o.samples, "Base net size");

  auto* ren = app.add_subcommand("render", "Render curve and level sets as SVG");
  ren->add_option("-i,--input", o.input, "Curve file")->required();
  ren->add_option("-e,--eps", o.eps_list, "Level to draw (repeatable)");
  ren->add_option("-o,--output", o.output, "SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (gen->parsed()) {
      write_curve(generate(o), o.output);
      return 0;
    }
    if (lvl->parsed()) return run_levelset(o, out);
    if (cls->parsed()) {
      const auto lv = level_set_exact(read_curve(o.input), o.eps, exec_of(o));
      out << classify_line(lv) << '\n';
      return 0;
    }
    if (zeta->parsed()) {
      const JordanCurve c = read_curve(o.input);
      const auto r = o.limit ? zeta_limit(c, default_zeta_scales(c), sampler_of(o))
                             : zeta_sup(c, o.r0.value_or(c.diameter()), sampler_of(o));
      out << report_line(c, r) << '\n';
      return 0;
    }
    if (two->parsed() || ca->parsed()) {
      const JordanCurve c = read_curve(o.input);
      const auto r = two->parsed() ? two_point_constant(c, sampler_of(o)) : chord_arc_constant(c, sampler_of(o));
      out << report_line(c, r) << '\n';
      return 0;
    }
    if (ver->parsed()) return run_verify(o, out);
    if (ren->parsed()) return run_render(o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace lvl
