#include "embsum/cli_commands.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "embsum/curve_io.hpp"
#include "embsum/curve_resolver.hpp"
#include "embsum/errors.hpp"
#include "embsum/fiber_family.hpp"
#include "embsum/homology_bounds.hpp"
#include "embsum/local_model.hpp"
#include "embsum/sampling.hpp"

namespace embsum::cli {

namespace {

using nlohmann::json;

json class_json(const torus::H1Class& k) { return {k[0], k[1]}; }

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json not_applicable(const std::string& why) { return {{"applicable", false}, {"reason", why}}; }

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct SampledPoint {
  FiberPoint4 p;
  double residual;
};

// Points of x y = 0: alternately on the x-disk and on the y-disk.
FiberPoint4 axis_point(std::size_t i, const std::vector<double>& u) {
  const Complex w = sampling::disk_point(u[0], u[1]);
  return i % 2 == 0 ? FiberPoint4{w, 0.0} : FiberPoint4{0.0, w};
}

SampledPoint sample_model(const SampleArgs& a, const verify::RunConfig& cfg, std::size_t i, const std::vector<double>& u) {
  const Complex param{a.param_re, a.param_im};
  const double r = u[0], phi = 2.0 * std::numbers::pi * u[1];
  if (a.model == "V") {
    const auto p = local_model::param_V(r, phi);
    const auto v = local_model::v_case2(p);
    return {p, std::hypot(v[0], v[1])};
  }
  if (a.model == "tildeV") {
    const auto dir = sampling::sphere_point({u[0], u[1], u[2]});
    const double t = a.boundary ? 1.0 : std::pow(u[3], 0.25);
    const auto p = local_model::tilde_v_homeo(dir, t);
    const double excess = std::abs(p.x) + std::abs(p.y) - 1.0;
    return {p, a.boundary ? std::abs(excess) : std::max(0.0, excess)};
  }
  if (a.model == "W2") {
    const fiber_family::RampFn ramp(cfg.eps1, cfg.eps2);
    const fiber_family::GluingParam g{param};
    const auto p = g.t() == 0.0 ? axis_point(i, u) : fiber_family::level_point(ramp(g.t()), g.theta(), r, phi);
    return {p, fiber_family::w2_residual(g, p, ramp)};
  }
  const auto p = std::abs(param) == 0.0 ? axis_point(i, u)
                                        : fiber_family::level_point(std::abs(param), param / std::abs(param), r, phi);
  return {p, fiber_family::w0_residual(param, p)};
}

void add_run_flags(CLI::App& app, std::optional<std::string>& config_path,
                   std::optional<std::uint64_t>& seed, std::optional<double>& tol, std::optional<double>& chamfer) {
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--seed", seed, "sampling seed");
  app.add_option("--tol", tol, "tight residual tolerance");
  app.add_option("--chamfer", chamfer, "chamfer radius for curve resolution");
}

}  // namespace

int cmd_verify(const std::string& suite, const verify::RunConfig& cfg, std::ostream& out,
               const std::optional<std::string>& report_path) {
  if (!verify::is_suite(suite)) throw InputError("unknown suite '" + suite + "'");
  const auto results = verify::run_suites(suite, cfg);
  bool pass = true;
  json suites = json::array();
  for (const auto& r : results) {
    pass = pass && r.pass();
    suites.push_back(r.to_json());
  }
  const json report{{"schema", 1}, {"suite", suite}, {"pass", pass}, {"config", cfg.to_json()}, {"suites", suites}};
  if (report_path) io::write_text(*report_path, report.dump(2) + "\n");
  emit(out, report);
  return pass ? kPass : kFail;
}

int cmd_resolve(const ResolveArgs& args, const verify::RunConfig& cfg, std::ostream& out) {
  const auto file = io::load_curve_file(args.input);
  if (file.curves.size() != 2) {
    throw InputError("resolve needs exactly two curves, got " + std::to_string(file.curves.size()));
  }
  const auto& c1 = file.curves[0];
  const auto& c2 = file.curves[1];
  const auto xs = resolver::find_intersections(c1, c2);
  const auto d = resolver::resolve(c1, c2, cfg.chamfer);
  io::write_text(args.output, io::to_json(d).dump(2) + "\n");

  std::vector<torus::Vec2> marks;
  json signs = json::array();
  for (const auto& x : xs) {
    marks.push_back(x.point);
    signs.push_back(x.sign);
  }
  if (args.svg) {
    io::write_text(*args.svg, io::render_svg({{file.curves, "input"}, {d.curves, "resolved"}}, marks));
  }
  json classes = json::array();
  for (const auto& c : d.curves) classes.push_back(class_json(c.displacement()));
  emit(out, {{"schema", 1},
             {"class1", class_json(resolver::homology_class(c1))},
             {"class2", class_json(resolver::homology_class(c2))},
             {"class_resolved", class_json(resolver::total_class(d.curves))},
             {"crossings", xs.size()},
             {"crossing_signs", signs},
             {"orientation_compatible", resolver::orientation_compat(c1, c2).compatible},
             {"input_components", 2},
             {"resolved_components", resolver::count_components(d)},
             {"component_classes", classes},
             {"chamfer", d.chamfer},
             {"output", args.output}});
  return kPass;
}

int cmd_bound(const BoundArgs& args, std::ostream& out) {
  if (args.graph) {
    const auto inst = bounds::graph_instance_from_json(io::load_json(*args.graph));
    const auto g = bounds::build_G(inst.input);
    const auto gp = bounds::build_G_prime(g, inst.choices);
    emit(out, {{"schema", 1},
               {"graph", *args.graph},
               {"crossings", inst.input.crossings.size()},
               {"G_vertices", g.side1_vertices + g.side2_vertices},
               {"G_edges", g.side1_edges.size() + g.side2_edges.size()},
               {"G_prime_vertices", gp.vertex_count},
               {"G_prime_edges", gp.edges.size()},
               {"G_prime_components", gp.components}});
    return kPass;
  }
  if (args.class1.empty() || args.class1.size() != args.class2.size()) {
    throw InputError("bound needs two class vectors of the same positive length");
  }
  const bounds::ClassRep r1{args.class1, args.sigma1, args.orientable};
  const bounds::ClassRep r2{args.class2, args.sigma2, args.orientable};
  r1.validate();
  r2.validate();
  const auto sum = r1 + r2;
  const long long C = bounds::meeks_C(sum);

  json lb1;
  if (const auto v = bounds::lb1_bound(r1, r2)) {
    lb1 = {{"applicable", true}, {"bound", *v}};
  } else {
    lb1 = not_applicable("needs C([Y1] + [Y2]) >= 3, got " + std::to_string(C));
  }
  json lb2;
  const auto combo = bounds::scaled(args.a, r1) + bounds::scaled(args.b, r2);
  const long long C2 = bounds::meeks_C(combo);
  if (const auto v = bounds::lb2_bound(args.a, args.b, r1, r2)) {
    lb2 = {{"applicable", true},
           {"numerator", v->num},
           {"denominator", v->den},
           {"value", v->value()},
           {"ceiling", v->ceiling}};
  } else {
    lb2 = not_applicable("needs C(a[Y1] + b[Y2]) > |a| + |b|, got " + std::to_string(C2) + " <= " +
                         std::to_string(std::llabs(args.a) + std::llabs(args.b)));
  }
  lb2["a"] = args.a;
  lb2["b"] = args.b;
  lb2["C"] = C2;
  emit(out, {{"schema", 1},
             {"class1", args.class1},
             {"class2", args.class2},
             {"orientable", args.orientable},
             {"sum", sum.free},
             {"sum_sigma", sum.sigma},
             {"div", bounds::div(sum.free)},
             {"C", C},
             {"lb1", lb1},
             {"lb2", lb2}});
  return kPass;
}

int cmd_sample(const SampleArgs& args, const verify::RunConfig& cfg, std::ostream& out) {
  static const std::vector<std::string> models{"V", "tildeV", "W2", "W0"};
  if (std::find(models.begin(), models.end(), args.model) == models.end()) {
    throw InputError("unknown model '" + args.model + "' (V, tildeV, W2, W0)");
  }
  if (args.n == 0) throw InputError("--n must be at least 1");
  if (std::hypot(args.param_re, args.param_im) > 1.0) throw InputError("--param must lie in the closed unit disk");
  const bool as_json = ends_with(args.out, ".json");
  if (!as_json && !ends_with(args.out, ".csv")) throw InputError("--out must end in .csv or .json");

  sampling::LowDiscrepancy ld(4, cfg.seed);
  std::vector<SampledPoint> pts;
  pts.reserve(args.n);
  double max_res = 0.0;
  for (std::size_t i = 0; i < args.n; ++i) {
    pts.push_back(sample_model(args, cfg, i, ld.next()));
    max_res = std::max(max_res, pts.back().residual);
  }

  const json params{{"param", {args.param_re, args.param_im}}, {"boundary", args.boundary}, {"eps1", cfg.eps1},
                    {"eps2", cfg.eps2}, {"seed", cfg.seed}};
  if (as_json) {
    json rows = json::array();
    for (const auto& s : pts) rows.push_back({s.p.x.real(), s.p.x.imag(), s.p.y.real(), s.p.y.imag(), s.residual});
    io::write_text(args.out, json{{"schema", 1},
                                  {"model", args.model},
                                  {"params", params},
                                  {"columns", {"x1", "x2", "y1", "y2", "residual"}},
                                  {"rows", rows}}
                                 .dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "x1,x2,y1,y2,residual\n";
    for (const auto& p : pts) {
      s << csv_number(p.p.x.real()) << ',' << csv_number(p.p.x.imag()) << ',' << csv_number(p.p.y.real()) << ','
        << csv_number(p.p.y.imag()) << ',' << csv_number(p.residual) << '\n';
    }
    io::write_text(args.out, s.str());
  }
  emit(out, {{"schema", 1}, {"model", args.model}, {"n", args.n}, {"params", params}, {"max_residual", max_res},
             {"output", args.out}});
  return kPass;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local models, curve resolution and component bounds for sums of embedded submanifolds", "embsum"};
  app.require_subcommand(1);
  app.fallthrough();

  verify::RunConfig cfg;
  std::optional<std::string> config_path, svg;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol, chamfer;
  add_run_flags(app, config_path, seed, tol, chamfer);
  app.add_option("--svg", svg, "SVG output for resolve");

  std::string suite;
  std::optional<std::string> report;
  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites; exit 0 iff all pass");
  verify_cmd->add_option("suite", suite, "local-model | fiber-family | homeo | curves | bounds | all")->required();
  verify_cmd->add_option("--report", report, "also write the report to this path");

  ResolveArgs rargs;
  auto* resolve_cmd = app.add_subcommand("resolve", "resolve the crossings of two curves on the torus");
  resolve_cmd->add_option("input", rargs.input, "curve file with exactly two curves")->required();
  resolve_cmd->add_option("output", rargs.output, "resolved curve file")->required();

  BoundArgs bargs;
  bool non_orientable = false;
  std::optional<std::string> graph;
  auto* bound_cmd = app.add_subcommand("bound", "div, C and the lower bounds on the crossing count");
  bound_cmd->add_option("--class1", bargs.class1, "class of Y1 in the free quotient")->delimiter(',');
  bound_cmd->add_option("--class2", bargs.class2, "class of Y2 in the free quotient")->delimiter(',');
  bound_cmd->add_option("--a", bargs.a, "coefficient of Y1 in the second bound");
  bound_cmd->add_option("--b", bargs.b, "coefficient of Y2 in the second bound");
  bound_cmd->add_flag("--non-orientable", non_orientable, "ambient manifold is non-orientable");
  bound_cmd->add_flag("--sigma1", bargs.sigma1, "Y1 carries the torsion summand");
  bound_cmd->add_flag("--sigma2", bargs.sigma2, "Y2 carries the torsion summand");
  bound_cmd->add_option("--graph", graph, "abstract graph instance (JSON)");

  SampleArgs sargs;
  std::vector<double> param;
  auto* sample_cmd = app.add_subcommand("sample", "export model points with membership residuals");
  sample_cmd->add_option("model", sargs.model, "V | tildeV | W2 | W0")->required();
  sample_cmd->add_option("--n", sargs.n, "number of points");
  sample_cmd->add_option("--out", sargs.out, "output path (.csv or .json)")->required();
  sample_cmd->add_option("--param", param, "g for W2, z for W0, as re,im")->delimiter(',')->expected(2);
  sample_cmd->add_flag("--boundary", sargs.boundary, "tildeV: boundary |x| + |y| = 1 only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (config_path) cfg = verify::RunConfig::from_json(io::load_json(*config_path));
    if (seed) cfg.seed = *seed;
    if (tol) cfg.tol = *tol;
    if (chamfer) cfg.chamfer = *chamfer;
    cfg.validate();

    if (verify_cmd->parsed()) return cmd_verify(suite, cfg, out, report);
    if (resolve_cmd->parsed()) {
      rargs.svg = svg;
      return cmd_resolve(rargs, cfg, out);
    }
    if (bound_cmd->parsed()) {
      bargs.orientable = !non_orientable;
      bargs.graph = graph;
      if (graph && (!bargs.class1.empty() || !bargs.class2.empty())) {
        throw InputError("bound takes either --graph or --class1/--class2");
      }
      return cmd_bound(bargs, out);
    }
    if (param.size() == 2) {
      sargs.param_re = param[0];
      sargs.param_im = param[1];
    }
    return cmd_sample(sargs, cfg, out);
  } catch (const NonTransversalError& e) {
    err << e.what() << '\n';
    return kGeometry;
  } catch (const GeometryError& e) {
    err << "geometric rejection: " << e.what() << '\n';
    return kGeometry;
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  }
}

}  // namespace embsum::cli
