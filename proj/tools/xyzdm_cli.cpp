// Command-line front end: parameter sweeps, baked figure recipes, the
// release check suite, and the spectral-vs-ODE oracle comparison.
// Exit codes: 0 success, 1 validation error, 2 numerical-invariant violation.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "xyzdm/checks.hpp"
#include "xyzdm/dynamics.hpp"
#include "xyzdm/errors.hpp"
#include "xyzdm/recipes.hpp"
#include "xyzdm/sweep.hpp"

namespace {

using namespace xyzdm;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot write " + path);
  return out;
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void write_meta_file(const std::string& path, const SweepConfig& cfg,
                     const RunMetadata& meta) {
  std::ofstream out = open_output(path);
  write_metadata(out, cfg, meta);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

int run_sweep_command(const std::string& config_path,
                      const std::string& out_path,
                      const std::string& meta_path, int threads) {
  const SweepConfig cfg = parse_config(read_file(config_path));
  const int n = resolve_threads(threads);
  RunMetadata meta;
  meta.rows = grid_size(cfg);
  meta.threads = n;
  const auto start = std::chrono::steady_clock::now();
  if (out_path.empty()) {
    run_sweep(cfg, std::cout, n);
  } else {
    std::ofstream out = open_output(out_path);
    run_sweep(cfg, out, n);
  }
  meta.wall_clock_seconds = seconds_since(start);
  std::string meta_target = meta_path;
  if (meta_target.empty() && !out_path.empty()) meta_target = out_path + ".meta";
  if (!meta_target.empty()) write_meta_file(meta_target, cfg, meta);
  return 0;
}

int run_figure_command(const std::string& name, const std::string& out_path,
                       const std::string& meta_path, int threads) {
  const FigureRecipe& recipe = figure_recipe(name);
  const int n = resolve_threads(threads);
  RunMetadata meta;
  meta.recipe = recipe.name;
  meta.assumptions = recipe.assumptions;
  meta.rows = grid_size(recipe.config);
  meta.threads = n;
  const std::string target = out_path.empty() ? name + ".csv" : out_path;
  const auto start = std::chrono::steady_clock::now();
  {
    std::ofstream out = open_output(target);
    run_sweep(recipe.config, out, n);
  }
  meta.wall_clock_seconds = seconds_since(start);
  const std::string meta_target =
      meta_path.empty() ? target + ".meta" : meta_path;
  write_meta_file(meta_target, recipe.config, meta);
  std::cerr << recipe.name << ": " << meta.rows << " rows -> " << target
            << " (" << meta.wall_clock_seconds << "s)\n";
  return 0;
}

int run_check_command(int threads) {
  const std::vector<CheckResult> results =
      run_acceptance_checks(resolve_threads(threads));
  int passed = 0;
  for (const CheckResult& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.index << " " << r.name
              << ": " << r.detail << "\n";
    if (r.passed) ++passed;
  }
  std::cout << passed << " of " << results.size() << " checks passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 2;
}

int run_oracle_command(const std::string& config_path,
                       const std::string& out_path, double dt, double tol,
                       int threads) {
  if (!(dt > 0.0)) throw validation_error("oracle: dt must be positive");
  if (!(tol > 0.0)) throw validation_error("oracle: tol must be positive");
  const SweepConfig cfg = parse_config(read_file(config_path));
  const std::uint64_t n = grid_size(cfg);
  const int nthreads = resolve_threads(threads);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file = open_output(out_path);
    os = &file;
  }
  *os << "variant,J,gamma,Jz,D,Gamma,family,alpha,t,max_entry_diff\n";

  constexpr std::uint64_t kBlock = 4096;
  std::vector<std::string> slots;
  std::vector<double> worst(static_cast<std::size_t>(nthreads), 0.0);
  for (std::uint64_t base = 0; base < n; base += kBlock) {
    const std::uint64_t m = std::min(kBlock, n - base);
    slots.assign(m, std::string());
    const auto work = [&](int w, std::uint64_t lo, std::uint64_t hi) {
      bool have_spec = false;
      ModelParams spec_key;
      Spectrum spec;
      Mat4 h;
      std::optional<DensityMatrix> rho0;
      bool have_rho = false;
      InitialStateSpec rho_key;
      char buf[40];
      for (std::uint64_t r = lo; r < hi; ++r) {
        const SweepPoint p = sweep_point(cfg, base + r);
        if (!have_spec || !(spec_key == p.model)) {
          spec = analytic_spectrum(p.model);
          h = build_hamiltonian(p.model);
          spec_key = p.model;
          have_spec = true;
        }
        if (!have_rho || !(rho_key == p.initial)) {
          rho0 = initial_state(p.initial);
          rho_key = p.initial;
          have_rho = true;
        }
        const EvolutionParams ev{p.Gamma, p.t};
        const DensityMatrix a = evolve(spec, *rho0, ev);
        const DensityMatrix b = p.t == 0.0
                                    ? *rho0
                                    : evolve_ode_oracle(h, *rho0, ev,
                                                        std::min(dt, p.t));
        const double diff = a.matrix().max_abs_diff(b.matrix());
        worst[static_cast<std::size_t>(w)] =
            std::max(worst[static_cast<std::size_t>(w)], diff);
        std::string& row = slots[r];
        const auto num = [&](double v) {
          std::snprintf(buf, sizeof buf, "%.17g", v);
          row += buf;
          row += ',';
        };
        row += p.model.variant == DmAxis::Z ? "Dz" : "Dx";
        row += ',';
        num(p.model.J);
        num(p.model.gamma);
        num(p.model.Jz);
        num(p.model.D);
        num(p.Gamma);
        row += p.initial.family == StateFamily::Antiparallel ? "antiparallel"
                                                             : "parallel";
        row += ',';
        num(p.initial.alpha);
        num(p.t);
        std::snprintf(buf, sizeof buf, "%.17g", diff);
        row += buf;
        row += '\n';
      }
    };
    if (nthreads == 1 || m < 2) {
      work(0, 0, m);
    } else {
      const auto tn = static_cast<std::uint64_t>(nthreads);
      const std::uint64_t chunk = (m + tn - 1) / tn;
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(tn);
      for (std::uint64_t w = 0; w < tn; ++w) {
        const std::uint64_t lo = std::min(w * chunk, m);
        const std::uint64_t hi = std::min(lo + chunk, m);
        if (lo >= hi) break;
        pool.emplace_back([&work, &errors, w, lo, hi] {
          try {
            work(static_cast<int>(w), lo, hi);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (const auto& s : slots) *os << s;
  }
  const double peak = *std::max_element(worst.begin(), worst.end());
  std::cerr << "oracle: max entry deviation " << peak << " over " << n
            << " points (tolerance " << tol << ")\n";
  return peak <= tol ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit XYZ chain with DM coupling under intrinsic decoherence"};
  app.set_version_flag("--version", std::string(kArtifactVersion));
  app.require_subcommand(1);

  std::string config_path, out_path, meta_path, figure_name;
  int threads = 0;
  double dt = 1e-3, tol = 1e-6;
  bool list_figures = false;

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "run a config-file sweep and emit CSV");
  sweep_cmd->add_option("--config", config_path, "JSON sweep config")
      ->required()
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--out", out_path, "CSV path (default: stdout)");
  sweep_cmd->add_option("--meta", meta_path,
                        "metadata path (default: <out>.meta when --out is set)");
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  CLI::App* figure_cmd =
      app.add_subcommand("figure", "run a named figure recipe");
  figure_cmd->add_option("name", figure_name, "recipe name, e.g. fig2a");
  figure_cmd->add_flag("--list", list_figures, "list recipe names and exit");
  figure_cmd->add_option("--out", out_path, "CSV path (default: <name>.csv)");
  figure_cmd->add_option("--meta", meta_path,
                         "metadata path (default: <out>.meta)");
  figure_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  CLI::App* check_cmd =
      app.add_subcommand("check", "run the release check suite");
  check_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "compare the spectral propagator against the RK4 integrator");
  oracle_cmd->add_option("--config", config_path, "JSON sweep config")
      ->required()
      ->check(CLI::ExistingFile);
  oracle_cmd->add_option("--dt", dt, "RK4 step (default 1e-3)");
  oracle_cmd->add_option("--tol", tol, "max entry deviation (default 1e-6)");
  oracle_cmd->add_option("--out", out_path, "CSV path (default: stdout)");
  oracle_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sweep_cmd->parsed())
      return run_sweep_command(config_path, out_path, meta_path, threads);
    if (figure_cmd->parsed()) {
      if (list_figures) {
        for (const auto& name : figure_recipe_names()) std::cout << name << "\n";
        return 0;
      }
      if (figure_name.empty())
        throw validation_error("figure: give a recipe name or --list");
      return run_figure_command(figure_name, out_path, meta_path, threads);
    }
    if (check_cmd->parsed()) return run_check_command(threads);
    if (oracle_cmd->parsed())
      return run_oracle_command(config_path, out_path, dt, tol, threads);
  } catch (const numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
