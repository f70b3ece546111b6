#include "harmap_cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "harmap/criteria.hpp"
#include "harmap/errors.hpp"
#include "harmap/geometry.hpp"
#include "harmap/operators.hpp"
#include "harmap/serialize.hpp"

namespace harmap::cli {

using nlohmann::json;

namespace {

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw InvalidParameter("format must be csv or json, got '" + s + "'");
}

void csv_row(std::ostream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << '\n';
}

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string fd(double v) { return format_double(v); }

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

HarmonicMap load_map(const RunConfig& cfg) { return map_from_json(cfg.map); }

Complex parse_point(const std::string& s) {
  std::istringstream is(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw InvalidParameter("cannot parse point '" + s + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im))
      throw InvalidParameter("point must be 're' or 're,im', got '" + s + "'");
  }
  return {re, im};
}

}  // namespace

void RunConfig::validate() const {
  grid.validate();
  if (!(ode_tol > 0.0) || !(report_tol > 0.0) ||
      !(tolerances.min_abs_hprime > 0.0) ||
      !(tolerances.min_one_minus_omega2 > 0.0))
    throw InvalidParameter("tolerances must be > 0");
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json map_descriptor(const std::string& value,
                    const std::optional<std::string>& params_json) {
  json desc;
  if (!value.empty() && value.front() == '{') {
    desc = json::parse(value);
  } else if (std::ifstream in(value); in) {
    desc = json::parse(in);
  } else {
    desc = {{"catalog", value}};
  }
  if (params_json) desc["params"] = json::parse(*params_json);
  return desc;
}

RunConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidParameter("config must be a JSON object");
  RunConfig cfg;
  std::optional<std::string> params;
  for (const auto& [key, v] : doc.items()) {
    if (key == "map") {
      cfg.map = v.is_string() ? json{{"catalog", v.get<std::string>()}} : v;
    } else if (key == "params") {
      params = v.dump();
    } else if (key == "grid_M") {
      cfg.grid.M = v.get<int>();
    } else if (key == "grid_N") {
      cfg.grid.N = v.get<int>();
    } else if (key == "grid_K") {
      cfg.grid.K = v.get<int>();
    } else if (key == "grid_R") {
      cfg.grid.R = v.get<int>();
    } else if (key == "tol") {
      cfg.grid.refine_tol = v.get<double>();
    } else if (key == "ode_tol") {
      cfg.ode_tol = v.get<double>();
    } else if (key == "report_tol") {
      cfg.report_tol = v.get<double>();
    } else if (key == "seed") {
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "out") {
      cfg.out = v.get<std::string>();
    } else if (key == "format") {
      cfg.format = parse_format(v.get<std::string>());
    } else if (key == "threads") {
      cfg.grid.threads = v.get<int>();
    } else if (key == "min_abs_hprime") {
      cfg.tolerances.min_abs_hprime = v.get<double>();
    } else if (key == "min_one_minus_omega2") {
      cfg.tolerances.min_one_minus_omega2 = v.get<double>();
    } else {
      throw InvalidParameter("unknown config key '" + key + "'");
    }
  }
  if (params) cfg.map["params"] = json::parse(*params);
  return cfg;
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  const auto& entries = catalog_entries();
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back(to_json(e));
    write_json(out, arr);
    return kOk;
  }
  for (const auto& e : entries) {
    out << e.name << ':';
    if (e.lower_order) out << " mu=" << fd(*e.lower_order);
    if (e.upper_order)
      out << (e.lower_order ? "," : "") << " upper=" << fd(*e.upper_order);
    if (!e.lower_order && !e.upper_order) out << " orders depend on parameters";
    out << "\n  " << e.summary << '\n';
    if (!e.params.empty()) out << "  params: " << e.params << '\n';
    out << "  source: " << e.provenance << '\n';
  }
  return kOk;
}

int cmd_eval(const RunConfig& cfg, const std::vector<Complex>& points,
             std::ostream& out) {
  const HarmonicMap f = load_map(cfg);
  json rows = json::array();
  if (cfg.format == Format::csv)
    out << "re_z,im_z,re_P,im_P,re_A,im_A,abs_A,re_S,im_S,jacobian,re_w,im_w,"
           "error\n";
  for (const Complex z : points) {
    try {
      const OperatorSample s = evaluate(f, z, true, cfg.tolerances);
      const double J = jacobian(f, z);
      const Complex w = dilatation(f, z, cfg.tolerances);
      if (cfg.format == Format::csv) {
        csv_row(out, {fd(z.real()), fd(z.imag()), fd(s.P.real()), fd(s.P.imag()),
                      fd(s.A.real()), fd(s.A.imag()), fd(std::abs(s.A)),
                      fd(s.S->real()), fd(s.S->imag()), fd(J), fd(w.real()),
                      fd(w.imag()), ""});
      } else {
        json j = to_json(s);
        j["jacobian"] = number_json(J);
        j["w"] = complex_json(w);
        rows.push_back(j);
      }
    } catch (const Error& e) {
      if (cfg.format == Format::csv) {
        csv_row(out, {fd(z.real()), fd(z.imag()), "", "", "", "", "", "", "", "",
                      "", "", csv_text(e.what())});
      } else {
        rows.push_back({{"z", complex_json(z)}, {"error", e.what()}});
      }
    }
  }
  if (cfg.format == Format::json) write_json(out, rows);
  return kOk;
}

int cmd_order(const RunConfig& cfg, OrderKind kind, std::ostream& out) {
  const HarmonicMap f = load_map(cfg);
  const OrderEstimate est = estimate_order(f, kind, cfg.grid);
  if (cfg.format == Format::json) {
    json j = to_json(est);
    j["map"] = f.label;
    write_json(out, j);
    return kOk;
  }
  out << "kind,value,re_witness,im_witness,theta,ray_limit,ray_slope,"
         "ray_max_residual\n";
  for (const auto& r : est.boundary_rays)
    csv_row(out, {to_string(kind), fd(est.value), fd(est.witness.real()),
                  fd(est.witness.imag()), fd(r.theta), fd(r.limit), fd(r.slope),
                  fd(r.max_residual)});
  return kOk;
}

int cmd_trajectory(const RunConfig& cfg, Complex z0, double t_end,
                   std::optional<double> mu, std::ostream& out) {
  const HarmonicMap f = load_map(cfg);
  const Trajectory traj = integrate_trajectory(f, z0, t_end, cfg.ode_tol);
  const double drift = check_level_consistency(f, traj);
  bool ok = drift <= 100.0 * cfg.ode_tol;
  std::optional<GrowthBoundReport> growth;
  if (mu) {
    growth = verify_growth_bound(f, traj, *mu);
    ok = ok && growth->pass;
  }
  if (cfg.format == Format::json) {
    json j = to_json(traj);
    j["max_drift"] = drift;
    j["drift_budget"] = 100.0 * cfg.ode_tol;
    if (growth)
      j["growth_bound"] = {{"mu", growth->mu},
                           {"pass", growth->pass},
                           {"min_margin", number_json(growth->min_margin)},
                           {"worst_pair", {growth->worst_i, growth->worst_j}},
                           {"pairs_checked", growth->pairs_checked}};
    write_json(out, j);
  } else {
    out << kTrajectoryCsvHeader << '\n';
    for (const auto& s : traj.states) {
      const double level = level_value(f, s.z);
      csv_row(out, {fd(s.t), fd(s.z.real()), fd(s.z.imag()), fd(level),
                    fd(std::abs(level - s.t) / s.t)});
    }
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_distortion(const RunConfig& cfg, const DistortionArgs& args,
                   std::ostream& out) {
  const HarmonicMap f = load_map(cfg);
  const std::optional<double> alpha =
      args.alpha ? args.alpha : f.info.distortion_alpha;
  if (!alpha)
    throw InvalidParameter("map has no known distortion alpha; pass --alpha");
  if (args.n_pairs < 1) throw InvalidParameter("need at least one pair");
  if (!(args.r_max > 0.0 && args.r_max < 1.0))
    throw InvalidParameter("r-max must lie in (0, 1)");

  std::vector<std::pair<Complex, Complex>> pairs;
  pairs.reserve(args.n_pairs);
  if (args.ray_theta) {
    for (int k = 1; k <= args.n_pairs; ++k)
      pairs.emplace_back(0.0, std::polar(args.r_max * k / args.n_pairs,
                                         *args.ray_theta));
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto draw = [&] {
      const double r = args.r_max * std::sqrt(unif(rng));
      return std::polar(r, 2.0 * std::numbers::pi * unif(rng));
    };
    for (int k = 0; k < args.n_pairs; ++k) {
      const Complex z0 = draw();
      pairs.emplace_back(z0, draw());
    }
  }
  const DistortionReport rep = verify_distortion(f, *alpha, pairs, cfg.report_tol);
  if (cfg.format == Format::json) {
    json j = to_json(rep);
    j["map"] = f.label;
    write_json(out, j);
  } else {
    out << kDistortionCsvHeader << '\n';
    for (const auto& r : rep.rows)
      csv_row(out, {fd(r.z0.real()), fd(r.z0.imag()), fd(r.z1.real()),
                    fd(r.z1.imag()), fd(r.ratio), fd(r.lo), fd(r.hi),
                    r.pass ? "1" : "0"});
  }
  return rep.pass ? kOk : kCheckFailed;
}

int cmd_criteria(const RunConfig& cfg, const CriteriaArgs& args,
                 std::ostream& out) {
  const HarmonicMap f = load_map(cfg);
  const std::vector<Complex> z = default_z_grid();
  const std::vector<Complex> lam = unit_circle(args.lambda_samples);
  auto need_lambda = [&] {
    if (!args.lambda) throw InvalidParameter(args.criterion + " needs --lambda");
    return *args.lambda;
  };
  CriterionReport rep;
  if (args.criterion == "shc") {
    rep = shc_check(f, z, lam);
  } else if (args.criterion == "shc_order_bound") {
    rep = shc_order_bound_check(f, z, lam);
  } else if (args.criterion == "concave_family") {
    const std::optional<double> alpha =
        args.alpha ? args.alpha : f.info.concave_alpha;
    if (!alpha)
      throw InvalidParameter("map has no concavity opening; pass --alpha");
    rep = concave_family_check(f, *alpha, z, lam);
  } else if (args.criterion == "stable_concave") {
    rep = stable_concave_mu_bound(f, cfg.grid);
  } else if (args.criterion == "nh") {
    rep = nh_lambda_check(f, need_lambda(), cfg.grid);
  } else if (args.criterion == "mu_sqrt") {
    rep = mu_sqrt_bound_check(f, need_lambda(), cfg.grid);
  } else {
    throw InvalidParameter("unknown criterion '" + args.criterion + "'");
  }
  if (cfg.format == Format::json) {
    json j = to_json(rep);
    j["map"] = f.label;
    write_json(out, j);
  } else {
    std::string values;
    for (const auto& [k, v] : rep.values)
      values += (values.empty() ? "" : ";") + k + "=" + fd(v);
    const Complex wl = rep.witness_lambda.value_or(Complex(NAN, NAN));
    out << "name,applicable,pass,margin,tolerance,re_witness_z,im_witness_z,"
           "re_witness_lambda,im_witness_lambda,points_checked,values,note\n";
    csv_row(out, {rep.name, rep.applicable ? "1" : "0", rep.pass ? "1" : "0",
                  fd(rep.worst_margin), fd(rep.tolerance),
                  fd(rep.witness_z.real()), fd(rep.witness_z.imag()),
                  rep.witness_lambda ? fd(wl.real()) : "",
                  rep.witness_lambda ? fd(wl.imag()) : "",
                  std::to_string(rep.points_checked), csv_text(values),
                  csv_text(rep.note)});
  }
  return rep.applicable && !rep.pass ? kCheckFailed : kOk;
}

int cmd_grid_export(const RunConfig& cfg, std::ostream& out) {
  const HarmonicMap f = load_map(cfg);
  const std::vector<GridSample> samples = sample_grid(f, cfg.grid);
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto& s : samples)
      arr.push_back({{"r", s.r},
                     {"theta", s.theta},
                     {"z", complex_json(s.z)},
                     {"A", complex_json(s.A)},
                     {"abs_A", number_json(std::abs(s.A))},
                     {"jacobian", number_json(s.jacobian)}});
    write_json(out, arr);
    return kOk;
  }
  out << kGridCsvHeader << '\n';
  for (const auto& s : samples)
    csv_row(out, {fd(s.r), fd(s.theta), fd(s.z.real()), fd(s.z.imag()),
                  fd(std::abs(s.A)), fd(s.A.real()), fd(s.A.imag()),
                  fd(s.jacobian)});
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"harmap: operators, orders and distortion checks for planar "
               "harmonic maps on the unit disk"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string map_arg, params_arg, config_path, out_path, format_arg;
  int grid_M = 0, grid_N = 0, grid_K = 0, grid_R = 0, threads = 0;
  double tol = 0.0, ode_tol = 0.0;
  std::uint64_t seed = 0;
  auto* o_map = app.add_option("--map", map_arg,
                               "catalog name, inline JSON descriptor or descriptor file");
  auto* o_params = app.add_option("--params", params_arg,
                                  "catalog parameters as a JSON object");
  app.add_option("--config", config_path, "flat JSON config; flags override it");
  auto* o_M = app.add_option("--grid-M", grid_M, "uniform radial count");
  auto* o_N = app.add_option("--grid-N", grid_N, "angular count");
  auto* o_K = app.add_option("--grid-K", grid_K, "dyadic depth");
  auto* o_R = app.add_option("--grid-R", grid_R, "refinement iterations");
  auto* o_tol = app.add_option("--tol", tol, "refinement tolerance");
  auto* o_ode = app.add_option("--ode-tol", ode_tol, "trajectory tolerance");
  auto* o_seed = app.add_option("--seed", seed, "seed for sampled pairs");
  auto* o_threads = app.add_option("--threads", threads, "worker threads");
  auto* o_out = app.add_option("--out", out_path, "output file (default stdout)");
  auto* o_format = app.add_option("--format", format_arg, "csv or json");

  auto* catalog_cmd = app.add_subcommand("catalog", "list catalog maps");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate P_f, A_f, S_f at points");
  std::vector<std::string> eval_points;
  eval_cmd->add_option("--z", eval_points, "point as 're' or 're,im'")->required();

  auto* order_cmd = app.add_subcommand("order", "estimate the lower or upper order");
  std::string kind_arg = "lower";
  order_cmd->add_option("--kind", kind_arg, "lower or upper")
      ->check(CLI::IsMember({"lower", "upper"}));

  auto* traj_cmd = app.add_subcommand("trajectory", "integrate a trajectory");
  std::string z0_arg;
  double t_end = 0.0;
  std::optional<double> mu;
  traj_cmd->add_option("--z0", z0_arg, "start point 're,im'")->required();
  traj_cmd->add_option("--t-end", t_end, "final level")->required();
  traj_cmd->add_option("--mu", mu, "check the growth bound with this mu");

  auto* dist_cmd = app.add_subcommand("distortion", "check the distortion bounds");
  DistortionArgs dargs;
  dist_cmd->add_option("--alpha", dargs.alpha, "bound on sup |A_f|");
  dist_cmd->add_option("--pairs", dargs.n_pairs, "number of pairs");
  dist_cmd->add_option("--r-max", dargs.r_max, "sampling radius");
  dist_cmd->add_option("--ray-theta", dargs.ray_theta,
                       "use pairs (0, r e^{i theta}) on one ray");

  auto* crit_cmd = app.add_subcommand("criteria", "sampled criterion checks");
  CriteriaArgs cargs;
  crit_cmd->add_option("criterion", cargs.criterion,
                       "shc | shc_order_bound | concave_family | stable_concave | nh | mu_sqrt")
      ->required();
  crit_cmd->add_option("--alpha", cargs.alpha, "concavity opening");
  crit_cmd->add_option("--lambda", cargs.lambda, "NH_lambda parameter");
  crit_cmd->add_option("--lambda-samples", cargs.lambda_samples,
                       "roots of unity for the slices h + lambda g");

  auto* grid_cmd = app.add_subcommand("grid-export", "export |A_f| on the grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw InvalidParameter("cannot open config '" + config_path + "'");
      cfg = config_from_json(json::parse(in));
    }
    if (o_map->count()) {
      cfg.map = map_descriptor(map_arg, o_params->count()
                                            ? std::optional<std::string>(params_arg)
                                            : std::nullopt);
    } else if (o_params->count()) {
      cfg.map["params"] = json::parse(params_arg);
    }
    if (o_M->count()) cfg.grid.M = grid_M;
    if (o_N->count()) cfg.grid.N = grid_N;
    if (o_K->count()) cfg.grid.K = grid_K;
    if (o_R->count()) cfg.grid.R = grid_R;
    if (o_tol->count()) cfg.grid.refine_tol = tol;
    if (o_ode->count()) cfg.ode_tol = ode_tol;
    if (o_seed->count()) cfg.seed = seed;
    if (o_threads->count()) cfg.grid.threads = threads;
    if (o_out->count()) cfg.out = out_path;
    if (o_format->count()) cfg.format = parse_format(format_arg);
    cfg.validate();

    std::ostringstream buf;
    int code = kOk;
    if (*catalog_cmd) {
      code = cmd_catalog(cfg, buf);
    } else if (*eval_cmd) {
      std::vector<Complex> pts;
      for (const auto& p : eval_points) pts.push_back(parse_point(p));
      code = cmd_eval(cfg, pts, buf);
    } else if (*order_cmd) {
      code = cmd_order(cfg, kind_arg == "upper" ? OrderKind::upper : OrderKind::lower,
                       buf);
    } else if (*traj_cmd) {
      code = cmd_trajectory(cfg, parse_point(z0_arg), t_end, mu, buf);
    } else if (*dist_cmd) {
      code = cmd_distortion(cfg, dargs, buf);
    } else if (*crit_cmd) {
      code = cmd_criteria(cfg, cargs, buf);
    } else if (*grid_cmd) {
      code = cmd_grid_export(cfg, buf);
    }

    if (cfg.out.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw InvalidParameter("cannot write '" + cfg.out + "'");
      file << buf.str();
    }
    return code;
  } catch (const SingularityError& e) {
    std::cerr << "harmap: singularity: " << e.what() << '\n';
    return kSingular;
  } catch (const OrientationError& e) {
    std::cerr << "harmap: singularity: " << e.what() << '\n';
    return kSingular;
  } catch (const json::exception& e) {
    std::cerr << "harmap: bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "harmap: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace harmap::cli
