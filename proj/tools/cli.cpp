#include "qdnc/cli.hpp"

#include "qdnc/discord.hpp"
#include "qdnc/measures.hpp"
#include "qdnc/statefile.hpp"
#include "qdnc/states.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qdnc::cli {

namespace {

// Shortest decimal that parses back to the same double.
std::string format_double(double v) {
  std::array<char, 32> buf;
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), result.ptr);
}

DensityMatrix pure2_state(double lambda1) {
  if (!(lambda1 >= 0 && lambda1 <= 1)) {
    throw std::invalid_argument("pure2: lambda1 must lie in [0,1]");
  }
  const double lambda2 = std::sqrt(std::max(0.0, 1.0 - lambda1 * lambda1));
  Vector psi = Vector::Zero(4);
  psi(0) = lambda1;
  psi(3) = lambda2;
  return validate(psi * psi.adjoint(), 2, 2);
}

struct ComputeOptions {
  std::string state_path;
  bool as_json = false;
  std::uint64_t seed = 0;
};

int run_compute(const ComputeOptions& opt, std::ostream& out) {
  const DensityMatrix rho = read_state_file(opt.state_path);
  const MeasureResult dn = d_n(rho);
  const MeasureResult dnp = d_n_prime(rho);
  const MeasureResult sym_tr = d_n_symmetric(rho, NormKind::TraceNorm);
  const MeasureResult sym_hs = d_n_symmetric(rho, NormKind::HilbertSchmidt);
  std::optional<DiscordResult> discord;
  if (rho.dim_b() == 2) discord = discord_numeric(rho);

  if (opt.as_json) {
    nlohmann::json doc;
    doc["dim_a"] = rho.dim_a();
    doc["dim_b"] = rho.dim_b();
    doc["d_n"] = dn.value;
    doc["d_n_prime"] = dnp.value;
    doc["d_n_symmetric_trace"] = sym_tr.value;
    doc["d_n_symmetric_hs"] = sym_hs.value;
    if (discord) {
      doc["discord"] = discord->value;
      doc["discord_axis"] = {{"theta", discord->argmin_axis.theta},
                             {"phi", discord->argmin_axis.phi}};
      doc["discord_iterations"] = discord->iterations;
      doc["discord_converged"] = discord->converged;
    } else {
      doc["discord"] = nullptr;
    }
    doc["methods"] = {{"d_n", "direct"},
                      {"d_n_prime", "direct"},
                      {"d_n_symmetric", "direct"},
                      {"discord", "numeric_minimization"}};
    doc["rng"] = "mt19937_64/box-muller";
    doc["seed"] = opt.seed;
    doc["version"] = tool_version;
    out << doc.dump(2) << '\n';
    return 0;
  }

  out << "dim_a: " << rho.dim_a() << '\n';
  out << "dim_b: " << rho.dim_b() << '\n';
  out << "d_n: " << format_double(dn.value) << '\n';
  out << "d_n_prime: " << format_double(dnp.value) << '\n';
  out << "d_n_symmetric_trace: " << format_double(sym_tr.value) << '\n';
  out << "d_n_symmetric_hs: " << format_double(sym_hs.value) << '\n';
  if (discord) {
    out << "discord: " << format_double(discord->value) << '\n';
    out << "discord_axis_theta: " << format_double(discord->argmin_axis.theta) << '\n';
    out << "discord_axis_phi: " << format_double(discord->argmin_axis.phi) << '\n';
    out << "discord_iterations: " << discord->iterations << '\n';
    out << "discord_converged: " << (discord->converged ? "true" : "false") << '\n';
  } else {
    out << "discord: skipped (dim_b != 2)" << '\n';
  }
  out << "method: direct block pair sums; discord via lattice scan + simplex refinement\n";
  out << "rng: mt19937_64/box-muller\n";
  out << "seed: " << opt.seed << '\n';
  out << "version: " << tool_version << '\n';
  return 0;
}

struct SweepOptions {
  std::string family;
  int d = 2;
  int steps = 100;
  std::string out_path;
  bool with_discord = false;
  std::uint64_t seed = 0;
};

int run_sweep(const SweepOptions& opt) {
  const bool is_werner = opt.family == "werner";
  const bool is_isotropic = opt.family == "isotropic";
  const bool is_rho = opt.family == "rho1" || opt.family == "rho2" ||
                      opt.family == "rho3" || opt.family == "rho4";
  const bool is_pure2 = opt.family == "pure2";
  if (!is_werner && !is_isotropic && !is_rho && !is_pure2) {
    throw std::invalid_argument("sweep: unknown family " + opt.family);
  }
  if ((is_werner || is_isotropic) && (opt.d < 2 || opt.d > 4)) {
    throw std::invalid_argument("sweep: " + opt.family + " supports d in {2,3,4}");
  }
  if ((is_rho || is_pure2) && opt.d != 2) {
    throw std::invalid_argument("sweep: " + opt.family + " supports d=2 only");
  }
  if (opt.steps < 1) throw std::invalid_argument("sweep: steps must be at least 1");
  if (opt.with_discord && opt.d != 2) {
    throw std::invalid_argument("sweep: the discord column requires d=2");
  }

  const std::string param_name = is_werner ? "alpha" : is_isotropic ? "beta"
                                 : is_rho                           ? "p"
                                                                    : "lambda1";
  std::ostringstream csv;
  csv << "family,d,param_name,param_value,d_n,d_n_prime,closed_paper,discord\n";
  for (int k = 0; k <= opt.steps; ++k) {
    const double param = static_cast<double>(k) / opt.steps;
    DensityMatrix state = [&] {
      if (is_werner) return werner(opt.d, param);
      if (is_isotropic) return isotropic(opt.d, param);
      if (opt.family == "rho1") return rho1(param);
      if (opt.family == "rho2") return rho2(param);
      if (opt.family == "rho3") return rho3(param);
      if (opt.family == "rho4") return rho4(param);
      return pure2_state(param);
    }();

    const double closed_paper = [&] {
      if (is_werner) return werner_closed_paper(opt.d, param, NormKind::TraceNorm);
      if (is_isotropic) return isotropic_closed_paper(opt.d, param, NormKind::TraceNorm);
      if (is_rho) return bell_diagonal_closed(bell_coefficients_of(state), NormKind::TraceNorm);
      const double l2 = std::sqrt(std::max(0.0, 1.0 - param * param));
      return d_n_pure_closed_printed(SchmidtVector({param, l2}), NormKind::TraceNorm);
    }();

    csv << opt.family << ',' << opt.d << ',' << param_name << ',' << format_double(param)
        << ',' << format_double(d_n(state).value) << ','
        << format_double(d_n_prime(state).value) << ',' << format_double(closed_paper) << ',';
    if (opt.d == 2) csv << format_double(discord_numeric(state).value);
    csv << '\n';
  }

  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("sweep: cannot open " + opt.out_path + " for writing");
  file << csv.str();
  file.flush();
  if (!file) throw std::invalid_argument("sweep: write to " + opt.out_path + " failed");
  return 0;
}

struct SurfaceOptions {
  std::string measure;
  double value = 0;
  double tol = 0;
  int grid = 0;
  std::string out_path;
};

int run_surface(const SurfaceOptions& opt) {
  NormKind norm;
  if (opt.measure == "dn") {
    norm = NormKind::TraceNorm;
  } else if (opt.measure == "dnp") {
    norm = NormKind::HilbertSchmidt;
  } else {
    throw std::invalid_argument("surface: measure must be dn or dnp");
  }
  if (!(opt.value >= 0)) throw std::invalid_argument("surface: value must be nonnegative");
  if (!(opt.tol >= 0)) throw std::invalid_argument("surface: tol must be nonnegative");
  if (opt.grid < 2) throw std::invalid_argument("surface: grid must be at least 2");

  std::ostringstream csv;
  csv << "c1,c2,c3,measure_value\n";
  const auto coordinate = [&](int k) { return -1.0 + 2.0 * k / (opt.grid - 1); };
  for (int i = 0; i < opt.grid; ++i) {
    for (int j = 0; j < opt.grid; ++j) {
      for (int k = 0; k < opt.grid; ++k) {
        const BellCoefficients c{coordinate(i), coordinate(j), coordinate(k)};
        if (!c.in_tetrahedron()) continue;
        const double measured = bell_diagonal_closed(c, norm);
        if (std::abs(measured - opt.value) > opt.tol) continue;
        csv << format_double(c.c1) << ',' << format_double(c.c2) << ',' << format_double(c.c3)
            << ',' << format_double(measured) << '\n';
      }
    }
  }

  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("surface: cannot open " + opt.out_path + " for writing");
  file << csv.str();
  file.flush();
  if (!file) throw std::invalid_argument("surface: write to " + opt.out_path + " failed");
  return 0;
}

struct MakeStateOptions {
  std::string family;
  int d = 2;
  std::optional<double> alpha, beta, c1, c2, c3, p, lambda1;
  std::string out_path;
};

double require_param(const std::optional<double>& value, const std::string& family,
                     const char* flag) {
  if (!value) throw std::invalid_argument("make-state: " + family + " requires " + flag);
  return *value;
}

int run_make_state(const MakeStateOptions& opt) {
  const DensityMatrix state = [&] {
    if (opt.family == "werner") {
      return werner(opt.d, require_param(opt.alpha, opt.family, "--alpha"));
    }
    if (opt.family == "isotropic") {
      return isotropic(opt.d, require_param(opt.beta, opt.family, "--beta"));
    }
    if (opt.family == "bell") {
      return bell_diagonal({require_param(opt.c1, opt.family, "--c1"),
                            require_param(opt.c2, opt.family, "--c2"),
                            require_param(opt.c3, opt.family, "--c3")});
    }
    if (opt.family == "maxent") return max_entangled(opt.d);
    if (opt.family == "rho1") return rho1(require_param(opt.p, opt.family, "--p"));
    if (opt.family == "rho2") return rho2(require_param(opt.p, opt.family, "--p"));
    if (opt.family == "rho3") return rho3(require_param(opt.p, opt.family, "--p"));
    if (opt.family == "rho4") return rho4(require_param(opt.p, opt.family, "--p"));
    if (opt.family == "pure2") {
      return pure2_state(require_param(opt.lambda1, opt.family, "--lambda1"));
    }
    throw std::invalid_argument("make-state: unknown family " + opt.family);
  }();
  write_state_file(opt.out_path, state);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"non-commutativity measures of quantum discord"};
  app.require_subcommand(1);

  ComputeOptions compute_opt;
  CLI::App* compute = app.add_subcommand(
      "compute", "evaluate all measures (and, for a qubit B side, the discord) of a state file");
  compute->add_option("--state", compute_opt.state_path, "path to a state file")->required();
  compute->add_flag("--json", compute_opt.as_json, "emit a JSON report");
  compute->add_option("--seed", compute_opt.seed, "seed recorded in the report");

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate the measures of a one-parameter family into CSV; "
               "d=2 sweeps include the numeric discord column");
  sweep->add_option("--family", sweep_opt.family,
                    "werner | isotropic | rho1 | rho2 | rho3 | rho4 | pure2")
      ->required();
  sweep->add_option("--d", sweep_opt.d, "subsystem dimension (werner/isotropic: 2..4)");
  sweep->add_option("--steps", sweep_opt.steps, "grid is k/steps, k = 0..steps");
  sweep->add_option("--out", sweep_opt.out_path, "output CSV path")->required();
  sweep->add_flag("--with-discord", sweep_opt.with_discord,
                  "require the discord column (d=2 only; on by default there)");
  sweep->add_option("--seed", sweep_opt.seed, "seed recorded for reproducibility");

  SurfaceOptions surface_opt;
  CLI::App* surface = app.add_subcommand(
      "surface", "sample a level surface of a measure over the Bell tetrahedron");
  surface->add_option("--measure", surface_opt.measure, "dn | dnp")->required();
  surface->add_option("--value", surface_opt.value, "target measure value")->required();
  surface->add_option("--tol", surface_opt.tol, "acceptance half-width")->required();
  surface->add_option("--grid", surface_opt.grid, "lattice points per axis")->required();
  surface->add_option("--out", surface_opt.out_path, "output CSV path")->required();

  MakeStateOptions make_opt;
  CLI::App* make_state = app.add_subcommand("make-state", "write a named family state to a file");
  make_state->add_option("--family", make_opt.family,
                         "werner | isotropic | bell | maxent | rho1..rho4 | pure2")
      ->required();
  make_state->add_option("--d", make_opt.d, "subsystem dimension");
  make_state->add_option("--alpha", make_opt.alpha, "werner parameter");
  make_state->add_option("--beta", make_opt.beta, "isotropic parameter");
  make_state->add_option("--c1", make_opt.c1, "bell coefficient");
  make_state->add_option("--c2", make_opt.c2, "bell coefficient");
  make_state->add_option("--c3", make_opt.c3, "bell coefficient");
  make_state->add_option("--p", make_opt.p, "mixture parameter");
  make_state->add_option("--lambda1", make_opt.lambda1, "leading Schmidt coefficient");
  make_state->add_option("--out", make_opt.out_path, "output state file path")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qdnc");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*compute) return run_compute(compute_opt, out);
    if (*sweep) return run_sweep(sweep_opt);
    if (*surface) return run_surface(surface_opt);
    return run_make_state(make_opt);
  } catch (const state_error& e) {
    err << "invalid state: " << e.what() << '\n';
    return 1;
  } catch (const statefile_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const numeric_error& e) {
    err << "numeric failure: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qdnc::cli
