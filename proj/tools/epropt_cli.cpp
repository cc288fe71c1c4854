// Command-line driver for the dual-NOPA scattering-optimization library.
//
// Subcommands: spectra, grad-check, hessian, optimize, xlm, tables.
// Every subcommand writes CSV or JSON rows to stdout or --out.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "epropt/analysis.hpp"
#include "epropt/manopt.hpp"

using json = nlohmann::ordered_json;
using namespace epropt;

namespace {

struct Output {
  json meta = json::object();
  std::vector<json> rows;
};

std::string csv_scalar(const json& v) {
  char buf[40];
  if (v.is_number_float()) {
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_output(const Output& out, const std::string& format,
                  const std::string& path) {
  std::ostringstream body;
  if (format == "json") {
    json doc;
    doc["meta"] = out.meta;
    doc["rows"] = out.rows;
    body << doc.dump(2) << "\n";
  } else {
    if (!out.rows.empty()) {
      bool first = true;
      for (auto it = out.rows.front().begin(); it != out.rows.front().end(); ++it) {
        if (!first) body << ",";
        body << it.key();
        first = false;
      }
      body << "\n";
      for (const json& row : out.rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
          if (!first) body << ",";
          body << csv_scalar(it.value());
          first = false;
        }
        body << "\n";
      }
    }
  }
  if (path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << body.str();
  }
}

Matrix2cd pick_scatter(const std::optional<std::uint64_t>& seed) {
  return seed ? random_unitary(*seed) : s_cfb();
}

json complex_entry(const std::complex<double>& z) {
  return json::array({z.real(), z.imag()});
}

int run_spectra(std::optional<double> x, double d, double ls,
                std::optional<std::uint64_t> seed, const std::string& format,
                const std::string& out_path, bool quiet) {
  std::vector<double> xs;
  if (x) {
    xs.push_back(*x);
  } else {
    for (int i = 0; i <= 40; ++i) xs.push_back(0.40 * i / 40.0);
  }
  const Matrix2cd s = pick_scatter(seed);
  Output out;
  out.meta = {{"subcommand", "spectra"},
              {"d", d},
              {"loss_scale", ls},
              {"scatter", seed ? "random" : "cfb"}};
  if (seed) out.meta["seed"] = *seed;
  for (const SweepRow& r : sweep_x(s, d, ls, xs)) {
    out.rows.push_back({{"x", r.param},
                        {"V", r.V},
                        {"V_plus", r.V_plus},
                        {"V_minus", r.V_minus},
                        {"min_hessian_eig", r.min_hessian_eig},
                        {"is_critical", r.is_critical},
                        {"is_local_min", r.is_local_min}});
  }
  write_output(out, format, out_path);
  if (!quiet)
    std::cerr << "spectra: " << out.rows.size() << " rows\n";
  return 0;
}

int run_grad_check(double x, double d, double ls, std::uint64_t seed,
                   double tol, const std::string& format,
                   const std::string& out_path, bool quiet) {
  const SystemParams params(x, d, ls);
  const Matrix2cd s = random_unitary(seed);
  const GradientInfo g = directional_derivative(s, params);
  const double step = 1e-6;
  Output out;
  double max_rel = 0.0;
  for (std::uint64_t k = 0; k < 20; ++k) {
    const Matrix2cd dir = random_tangent(s, seed * 131 + k);
    const double vp = squeezing(project_to_unitary(s + step * dir), params).V;
    const double vm = squeezing(project_to_unitary(s - step * dir), params).V;
    const double fd = (vp - vm) / (2.0 * step);
    const double predicted = (dir.adjoint() * g.D).trace().real();
    const double rel = std::abs(predicted - fd) / std::max(1e-300, std::abs(fd));
    max_rel = std::max(max_rel, rel);
    out.rows.push_back({{"direction", k},
                        {"finite_difference", fd},
                        {"predicted", predicted},
                        {"rel_error", rel}});
  }
  out.meta = {{"subcommand", "grad-check"}, {"x", x},
              {"d", d},                     {"loss_scale", ls},
              {"seed", seed},               {"step", step},
              {"max_rel_error", max_rel},   {"tol", tol},
              {"pass", max_rel < tol}};
  write_output(out, format, out_path);
  if (!quiet)
    std::cerr << "grad-check: max relative error " << max_rel << "\n";
  return 0;
}

int run_hessian(double x, double d, double ls,
                std::optional<std::uint64_t> seed, const std::string& format,
                const std::string& out_path, bool quiet) {
  const SystemParams params(x, d, ls);
  const Matrix2cd s = pick_scatter(seed);
  const HessianInfo info = hessian(s, params);
  Output out;
  out.meta = {{"subcommand", "hessian"},
              {"x", x},
              {"d", d},
              {"loss_scale", ls},
              {"scatter", seed ? "random" : "cfb"},
              {"min_eigenvalue", info.eigenvalues.minCoeff()},
              {"hermiticity_defect",
               (info.Hess - info.Hess.adjoint()).norm() / info.Hess.norm()}};
  for (int i = 0; i < 8; ++i)
    out.rows.push_back({{"index", i}, {"eigenvalue", info.eigenvalues[i]}});
  write_output(out, format, out_path);
  if (!quiet)
    std::cerr << "hessian: min eigenvalue " << info.eigenvalues.minCoeff() << "\n";
  return 0;
}

int run_optimize(double x, double d, double ls,
                 std::optional<std::uint64_t> seed, double tol,
                 const std::string& format, const std::string& out_path,
                 bool quiet) {
  const SystemParams params(x, d, ls);
  const Matrix2cd s0 =
      seed ? project_to_unitary(s_cfb() + 0.05 * random_tangent(s_cfb(), *seed))
           : s_cfb();
  DescentOptions opts;
  opts.tol_grad = tol;
  const DescentResult r = steepest_descent(s0, params, opts);
  const GradientInfo g = directional_derivative(r.s_final, params);
  Output out;
  out.meta = {{"subcommand", "optimize"},
              {"x", x},
              {"d", d},
              {"loss_scale", ls},
              {"tol_grad", tol},
              {"converged", r.converged},
              {"iterations", r.iterations},
              {"V_final", r.V_final},
              {"grad_norm_final", g.grad_norm},
              {"s_final",
               {complex_entry(r.s_final(0, 0)), complex_entry(r.s_final(0, 1)),
                complex_entry(r.s_final(1, 0)), complex_entry(r.s_final(1, 1))}}};
  if (seed) out.meta["seed"] = *seed;
  for (size_t i = 0; i < r.trace.size(); ++i)
    out.rows.push_back({{"iteration", i}, {"V", r.trace[i]}});
  write_output(out, format, out_path);
  if (!quiet)
    std::cerr << "optimize: " << (r.converged ? "converged" : "not converged")
              << " after " << r.iterations << " iterations, V = " << r.V_final
              << "\n";
  return 0;
}

int run_xlm(double d, double ls, double tol, const std::string& format,
            const std::string& out_path, bool quiet) {
  const double x_lm = find_x_lm(d, ls, tol);
  Output out;
  out.meta = {{"subcommand", "xlm"}, {"tol", tol}};
  out.rows.push_back({{"d", d}, {"loss_scale", ls}, {"x_lm", x_lm}});
  write_output(out, format, out_path);
  if (!quiet) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x_lm);
    std::cerr << "xlm: " << buf << "\n";
  }
  return 0;
}

int run_tables(const std::string& format, const std::string& out_path,
               bool quiet) {
  const TableReport report = reproduce_tables();
  Output out;
  out.meta = {{"subcommand", "tables"},
              {"max_abs_error", report.max_abs_error},
              {"mismatches", report.mismatches},
              {"tolerance", 1e-4}};
  for (const TableRow& r : report.rows) {
    out.rows.push_back({{"table", r.table},
                        {"d", r.d},
                        {"loss_scale", r.loss_scale},
                        {"x_lm", r.x_lm},
                        {"reference", r.x_lm_reference},
                        {"abs_error", r.abs_error}});
  }
  write_output(out, format, out_path);
  if (!quiet)
    std::cerr << "tables: max |error| " << report.max_abs_error << ", "
              << report.mismatches << " mismatches\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EPR squeezing of the dual-NOPA coherent-feedback network: "
               "evaluation and scattering-matrix optimization"};
  app.require_subcommand(1);

  std::optional<double> x_opt;
  double d = 0.0, ls = 0.0, tol = -1.0;
  std::optional<std::uint64_t> seed;
  std::string out_path, format = "csv";
  bool quiet = false;

  auto add_common = [&](CLI::App* cmd, bool with_x) {
    if (with_x) cmd->add_option("--x", x_opt, "pump ratio in [0, sqrt(2)-1)");
    cmd->add_option("--d", d, "transmission distance [km]");
    cmd->add_option("--loss-scale", ls, "amplification-loss multiplier");
    cmd->add_option("--seed", seed, "RNG seed selecting a scattering matrix");
    cmd->add_option("--tol", tol, "tolerance (meaning depends on subcommand)");
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--quiet", quiet, "suppress the stderr summary");
  };

  CLI::App* spectra = app.add_subcommand(
      "spectra", "squeezing and certification data vs pump ratio");
  add_common(spectra, true);
  CLI::App* grad = app.add_subcommand(
      "grad-check", "finite-difference validation of the derivative");
  add_common(grad, true);
  CLI::App* hess =
      app.add_subcommand("hessian", "Hessian eigenvalues at one point");
  add_common(hess, true);
  CLI::App* optimize = app.add_subcommand(
      "optimize", "projected steepest descent over scattering matrices");
  add_common(optimize, true);
  optimize->get_option("--format")->default_str("json");
  CLI::App* xlm = app.add_subcommand(
      "xlm", "smallest certified pump ratio for given losses");
  add_common(xlm, false);
  CLI::App* tables = app.add_subcommand(
      "tables", "reproduce the published loss-threshold tables");
  add_common(tables, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (optimize->parsed() && format == "csv" &&
      !optimize->get_option("--format")->count())
    format = "json";

  try {
    if (spectra->parsed())
      return run_spectra(x_opt, d, ls, seed, format, out_path, quiet);
    if (grad->parsed())
      return run_grad_check(x_opt.value_or(0.3), d, ls, seed.value_or(1),
                            tol > 0 ? tol : 1e-6, format, out_path, quiet);
    if (hess->parsed())
      return run_hessian(x_opt.value_or(0.3), d, ls, seed, format, out_path,
                         quiet);
    if (optimize->parsed())
      return run_optimize(x_opt.value_or(0.3), d, ls, seed,
                          tol > 0 ? tol : 1e-10, format, out_path, quiet);
    if (xlm->parsed())
      return run_xlm(d, ls, tol > 0 ? tol : 1e-7, format, out_path, quiet);
    if (tables->parsed()) return run_tables(format, out_path, quiet);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
