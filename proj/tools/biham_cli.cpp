// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Links only the C interface of libbiham.
//
// Exit codes: 0 success, 1 reproduction outside tolerance, 2 usage error,
// 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

#include "biham/biham.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

constexpr const char* kOutputDirEnv = "BIHAM_OUTPUT_DIR";

struct CliError : std::runtime_error {
  CliError(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
  int code;
};

using Text = std::unique_ptr<biham_text, decltype(&biham_text_free)>;
using Trajectory = std::unique_ptr<biham_trajectory, decltype(&biham_trajectory_free)>;
using Web = std::unique_ptr<biham_web, decltype(&biham_web_free)>;

void check(biham_status s) {
  switch (s) {
    case BIHAM_OK: return;
    case BIHAM_ERR_INVALID_ARGUMENT:
    case BIHAM_ERR_WRONG_FAMILY:
    case BIHAM_ERR_NO_SOLUTIONS: throw CliError(kExitUsage, biham_last_error());
    default: throw CliError(kExitNumerical, biham_last_error());
  }
}

CliError usage(const std::string& msg) { return CliError(kExitUsage, msg); }

const auto kFinite = CLI::Validator(
    [](std::string& in) -> std::string {
      try {
        std::size_t used = 0;
        const double v = std::stod(in, &used);
        if (used != in.size() || !std::isfinite(v)) return "value must be a finite number: " + in;
      } catch (const std::exception&) {
        return "value must be a finite number: " + in;
      }
      return {};
    },
    "FINITE");

std::filesystem::path resolve_output(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

// Empty path means standard output; files are written to a temporary
// sibling and renamed into place.
void write_output(const std::string& out, const std::string& data) {
  if (out.empty()) {
    std::cout << data;
    std::cout.flush();
    return;
  }
  const auto target = resolve_output(out);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw CliError(kExitUsage, "cannot open output file " + tmp.string());
    f << data;
    if (!f.flush()) throw CliError(kExitUsage, "failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw CliError(kExitUsage, "cannot move output into place: " + ec.message());
  }
}

biham_format parse_format(const std::string& f) { return f == "json" ? BIHAM_FORMAT_JSON : BIHAM_FORMAT_CSV; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

std::string fmt(const biham_state& s) { return "(" + fmt(s.x) + ", " + fmt(s.y) + ", " + fmt(s.z) + ")"; }

double max_abs_diff(const biham_state& a, const biham_state& b) {
  return std::fmax(std::fabs(a.x - b.x), std::fmax(std::fabs(a.y - b.y), std::fabs(a.z - b.z)));
}

// Collects pass/fail lines for `reproduce`.
class Report {
 public:
  void add(bool ok, const std::string& what, const std::string& detail) {
    all_ok_ = all_ok_ && ok;
    std::cout << (ok ? "PASS  " : "FAIL  ") << what << ": " << detail << "\n";
  }
  bool ok() const { return all_ok_; }

 private:
  bool all_ok_ = true;
};

// ---- simulate ---------------------------------------------------------

struct SimulateArgs {
  double x0 = 0, y0 = 0, z0 = 0, dt = 0;
  long long steps = 0;
  double tol = 1e-12;
  int max_iters = 50;
  std::string solver = "newton";
  std::string out;
  std::string format = "csv";
};

int run_simulate(const SimulateArgs& a) {
  if (a.dt == 0.0) throw usage("--dt must be nonzero");
  if (a.steps < 1) throw usage("--steps must be at least 1");
  biham_integrator_config cfg;
  biham_integrator_config_default(&cfg);
  cfg.dt = a.dt;
  cfg.newton_tol = a.tol;
  cfg.max_inner_iters = a.max_iters;
  cfg.max_steps = static_cast<size_t>(a.steps);
  cfg.use_picard = a.solver == "picard";

  biham_trajectory* raw = nullptr;
  const biham_status st = biham_integrate({a.x0, a.y0, a.z0}, &cfg, &raw);
  if (st == BIHAM_ERR_NON_CONVERGENCE) {
    throw CliError(kExitNumerical, "non-convergence at step " + std::to_string(biham_last_error_step()) + ": " +
                                       biham_last_error());
  }
  check(st);
  Trajectory traj(raw, &biham_trajectory_free);

  biham_text* text = nullptr;
  check(biham_trajectory_serialize(traj.get(), parse_format(a.format), &text));
  Text holder(text, &biham_text_free);
  write_output(a.out, biham_text_data(text));
  return kExitOk;
}

// ---- classify ---------------------------------------------------------

struct ClassifyArgs {
  std::optional<double> h, c, m;
  std::optional<std::string> family;
  double tol = 1e-9;
};

std::optional<biham_family> parse_family(const std::string& name) {
  static const std::array<const char*, 5> names = {"E1", "E2", "E3", "E4", "E5"};
  for (std::size_t i = 0; i < names.size(); ++i)
    if (name == names[i]) return static_cast<biham_family>(i);
  return std::nullopt;
}

nlohmann::json verdict_json(const biham_verdict& v, const std::string& family) {
  nlohmann::json spectrum = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) spectrum.push_back({{"re", v.spectrum_re[i]}, {"im", v.spectrum_im[i]}});
  nlohmann::json j = {{"family", family},
                      {"M", v.m},
                      {"verdict", biham_verdict_name(v.verdict)},
                      {"certificate", biham_certificate_name(v.certificate)},
                      {"spectrum", spectrum},
                      {"eigenvalue", v.spectrum_re[2]}};
  if (v.certificate == BIHAM_CERT_ARNOLD_DEFINITE || v.multiplier != 0.0) {
    j["multiplier"] = v.multiplier;
    j["restricted_hessian_eigenvalues"] = {v.restricted_eigenvalues[0], v.restricted_eigenvalues[1]};
  }
  return j;
}

int run_classify(const ClassifyArgs& a) {
  const bool region = a.h || a.c;
  const bool equilibrium = a.family || a.m;
  if (region == equilibrium) throw usage("give either --h and --c, or --family and --M");
  if (region) {
    if (!a.h || !a.c) throw usage("--h and --c must be given together");
    const biham_label l = biham_classify(*a.h, *a.c, a.tol);
    std::cout << nlohmann::json({{"label", biham_label_name(l)}}).dump() << "\n";
    return kExitOk;
  }
  if (!a.family || !a.m) throw usage("--family and --M must be given together");
  const auto f = parse_family(*a.family);
  if (!f) throw usage("unknown family " + *a.family);
  biham_verdict v;
  check(biham_classify_equilibrium(*f, *a.m, &v));
  std::cout << verdict_json(v, *a.family).dump() << "\n";
  return kExitOk;
}

// ---- scan-image -------------------------------------------------------

struct ScanArgs {
  double h_min = -2.0, h_max = 2.0, c_min = 0.0, c_max = 3.0, tol = 1e-9;
  int resolution = 100;
  std::string out;
};

int run_scan(const ScanArgs& a) {
  if (a.resolution < 1) throw usage("--resolution must be at least 1");
  if (a.h_min > a.h_max || a.c_min > a.c_max) throw usage("scan range has min > max");
  const biham_scan_range r{a.h_min, a.h_max, a.c_min, a.c_max, a.resolution, a.tol};
  biham_text* text = nullptr;
  check(biham_scan_image(&r, &text));
  Text holder(text, &biham_text_free);
  write_output(a.out, biham_text_data(text));
  return kExitOk;
}

// ---- fiber ------------------------------------------------------------

int run_fiber(double h, double c, double tol, const std::string& out) {
  biham_text* text = nullptr;
  check(biham_describe_fiber(h, c, tol, &text));
  Text holder(text, &biham_text_free);
  write_output(out, biham_text_data(text));
  return kExitOk;
}

// ---- reproduce --------------------------------------------------------

constexpr double kEndpointTol = 5e-3;
constexpr double kPeriodRelTol = 0.01;

void reproduce_heteroclinic(Report& rep, const std::string& out, double tol) {
  const biham_state start{1.25338, 0.42312, 0.5};
  const biham_state fwd_expected{1.00305, -0.996944, 0.00128394};
  const biham_state bwd_expected{1.00438, 0.995591, -0.00465251};

  for (const double dt : {0.015, -0.015}) {
    biham_integrator_config cfg;
    biham_integrator_config_default(&cfg);
    cfg.dt = dt;
    cfg.max_steps = 160;
    biham_trajectory* raw = nullptr;
    check(biham_integrate(start, &cfg, &raw));
    Trajectory traj(raw, &biham_trajectory_free);
    biham_sample last;
    check(biham_trajectory_sample(traj.get(), biham_trajectory_size(traj.get()) - 1, &last));
    const auto& expected = dt > 0 ? fwd_expected : bwd_expected;
    const double err = max_abs_diff(last.state, expected);
    rep.add(err <= tol, std::string("endpoint after 160 steps, dt=") + fmt(dt),
            "measured " + fmt(last.state) + " expected " + fmt(expected) + " max|err| " + fmt(err) + " tol " +
                fmt(tol));
  }

  biham_web* raw = nullptr;
  check(biham_web_generate(0.5, 0.015, 160, 0.5, 1e-12, &raw));
  Web web(raw, &biham_web_free);
  const size_t n = biham_web_run_count(web.get());
  rep.add(n == 8, "run count", "measured " + std::to_string(n) + " expected 8");
  for (size_t i = 0; i < n; ++i) {
    biham_run_summary r;
    check(biham_web_run(web.get(), i, &r));
    const double worst = std::fmax(r.forward_distance, r.backward_distance);
    rep.add(worst <= tol && r.max_c_deviation <= 1e-9,
            "run " + std::to_string(i) + " " + fmt(r.backward_target) + " -> " + fmt(r.forward_target),
            "endpoint distance " + fmt(worst) + " tol " + fmt(tol) + ", max|C-1| " +
                fmt(r.max_c_deviation));
  }
  for (size_t i = 0; i < biham_web_cycle_count(web.get()); ++i) {
    rep.add(biham_web_cycle_closed(web.get(), i) != 0, "cycle " + std::to_string(i), "closed loop E4/E5");
  }
  if (!out.empty()) {
    biham_text* text = nullptr;
    check(biham_web_serialize(web.get(), &text));
    Text holder(text, &biham_text_free);
    write_output(out, biham_text_data(text));
  }
}

void reproduce_period(Report& rep, double tol) {
  double predicted = 0.0;
  check(biham_predicted_period(BIHAM_E1, 1.0, &predicted));
  biham_return r;
  check(biham_first_return({1.0, 1e-3, 1e-3}, {0.0, 1.0, 0.0}, 1e-3, 10.0 * predicted, 1e-12, &r));
  const double rel = r.found ? std::fabs(r.period - predicted) / predicted : INFINITY;
  rep.add(r.found && rel <= tol, "period near E1(1,0,0)",
          "measured " + fmt(r.period) + " expected " + fmt(predicted) + " rel err " + fmt(rel) + " tol " + fmt(tol));
}

void reproduce_stability(Report& rep) {
  static const std::array<const char*, 5> names = {"E1", "E2", "E3", "E4", "E5"};
  for (double m : {1.0, -2.0, 0.5}) {
    for (int f = 0; f < 5; ++f) {
      biham_verdict v;
      check(biham_classify_equilibrium(static_cast<biham_family>(f), m, &v));
      const biham_verdict_kind expected = f < 3 ? BIHAM_NONLINEARLY_STABLE : BIHAM_UNSTABLE;
      rep.add(v.verdict == expected, std::string(names[static_cast<std::size_t>(f)]) + " M=" + fmt(m),
              std::string(biham_verdict_name(v.verdict)) + " (" + biham_certificate_name(v.certificate) +
                  ") expected " + biham_verdict_name(expected));
    }
  }
  biham_verdict v;
  check(biham_classify_equilibrium(BIHAM_E1, 0.0, &v));
  rep.add(v.verdict == BIHAM_NONLINEARLY_STABLE, "origin", std::string(biham_verdict_name(v.verdict)) + " (" +
                                                               biham_certificate_name(v.certificate) + ")");
}

int run_reproduce(const std::string& experiment, const std::string& out, std::optional<double> tol) {
  Report rep;
  if (experiment == "heteroclinic") {
    reproduce_heteroclinic(rep, out, tol.value_or(kEndpointTol));
  } else if (experiment == "period") {
    reproduce_period(rep, tol.value_or(kPeriodRelTol));
  } else {
    reproduce_stability(rep);
  }
  std::cout << (rep.ok() ? "all reproductions within tolerance" : "reproduction outside tolerance") << "\n";
  return rep.ok() ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-Casimir analysis and mid-point integration of a bi-Hamiltonian 3D system"};
  // "--h" is an option name here, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a file of key = value lines");
  app.failure_message(CLI::FailureMessage::help);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Integrate with the implicit mid-point rule");
  simulate->add_option("--x0", sim.x0)->required()->check(kFinite);
  simulate->add_option("--y0", sim.y0)->required()->check(kFinite);
  simulate->add_option("--z0", sim.z0)->required()->check(kFinite);
  simulate->add_option("--dt", sim.dt, "Time step (negative integrates backward)")->required()->check(kFinite);
  simulate->add_option("--steps", sim.steps)->required();
  simulate->add_option("--tol", sim.tol, "Inner solver residual tolerance")->check(CLI::PositiveNumber);
  simulate->add_option("--max-iters", sim.max_iters)->check(CLI::PositiveNumber);
  simulate->add_option("--solver", sim.solver)->check(CLI::IsMember({"newton", "picard"}));
  simulate->add_option("--out", sim.out, "Output file (default: stdout)");
  simulate->add_option("--format", sim.format)->check(CLI::IsMember({"csv", "json"}));

  ClassifyArgs cls;
  auto* classify = app.add_subcommand("classify", "Classify an (h,c) point or an equilibrium");
  classify->add_option("--h", cls.h)->check(kFinite);
  classify->add_option("--c", cls.c)->check(kFinite);
  classify->add_option("--family", cls.family)->check(CLI::IsMember({"E1", "E2", "E3", "E4", "E5"}));
  classify->add_option("--M", cls.m)->check(kFinite);
  classify->add_option("--tol", cls.tol)->check(CLI::NonNegativeNumber);

  ScanArgs scan;
  auto* scan_image = app.add_subcommand("scan-image", "Label a grid over the (h,c) plane");
  scan_image->add_option("--h-min", scan.h_min)->check(kFinite);
  scan_image->add_option("--h-max", scan.h_max)->check(kFinite);
  scan_image->add_option("--c-min", scan.c_min)->check(kFinite);
  scan_image->add_option("--c-max", scan.c_max)->check(kFinite);
  scan_image->add_option("--resolution", scan.resolution);
  scan_image->add_option("--tol", scan.tol)->check(CLI::NonNegativeNumber);
  scan_image->add_option("--out", scan.out);

  double fh = 0, fc = 0, ftol = 1e-9;
  std::string fout;
  auto* fiber = app.add_subcommand("fiber", "Describe the fiber over (h,c)");
  fiber->add_option("--h", fh)->required()->check(kFinite);
  fiber->add_option("--c", fc)->required()->check(kFinite);
  fiber->add_option("--tol", ftol)->check(CLI::NonNegativeNumber);
  fiber->add_option("--out", fout);

  std::string experiment;
  std::string rout;
  auto* reproduce = app.add_subcommand("reproduce", "Re-run a reference experiment and report pass/fail");
  reproduce->add_option("--experiment", experiment)
      ->required()
      ->check(CLI::IsMember({"heteroclinic", "period", "stability"}));
  reproduce->add_option("--out", rout, "Write the heteroclinic web as JSON");
  std::optional<double> rtol;
  reproduce->add_option("--tol", rtol, "Endpoint distance (heteroclinic) or relative period error (period)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) return run_simulate(sim);
    if (*classify) return run_classify(cls);
    if (*scan_image) return run_scan(scan);
    if (*fiber) return run_fiber(fh, fc, ftol, fout);
    if (*reproduce) return run_reproduce(experiment, rout, rtol);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code == kExitUsage) std::cerr << "Run with --help for usage.\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
