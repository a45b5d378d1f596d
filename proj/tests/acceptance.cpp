// Acceptance gate: one pass/fail line per criterion, exit 0 only if all hold.
//
// Criterion 1 compares against the published maximally-entangled anchor
// values. Three of the six published numbers are inconsistent with the direct
// block computation (and with the published ordering property); the criterion
// reports the discrepancy instead of hiding it. See README.md.

#include "qdnc/blocks.hpp"
#include "qdnc/cli.hpp"
#include "qdnc/discord.hpp"
#include "qdnc/measures.hpp"
#include "qdnc/statefile.hpp"
#include "qdnc/states.hpp"

#include "test_helpers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace qdnc;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
}

void info(const std::string& line) { std::printf("       %s\n", line.c_str()); }

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

SchmidtVector random_schmidt(int d, Rng& rng) {
  std::vector<double> lambda(d);
  double sum_sq = 0;
  for (double& l : lambda) {
    l = std::abs(rng.gaussian()) + 1e-3;
    sum_sq += l * l;
  }
  for (double& l : lambda) l /= std::sqrt(sum_sq);
  return SchmidtVector(lambda);
}

BellCoefficients random_tetrahedron_point(Rng& rng) {
  std::array<double, 4> w;
  double sum = 0;
  for (double& x : w) {
    x = rng.uniform();
    sum += x;
  }
  for (double& x : w) x /= sum;
  return {w[0] + w[1] - w[2] - w[3], -w[0] + w[1] + w[2] - w[3], w[0] - w[1] + w[2] - w[3]};
}

Matrix random_single_density(int d, Rng& rng) {
  const Matrix g = gaussian_matrix(d, d, rng);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

DensityMatrix random_quantum_classical(Rng& rng) {
  const double q = 0.1 + 0.8 * rng.uniform();
  return quantum_classical(
      {{q, random_single_density(2, rng)}, {1.0 - q, random_single_density(2, rng)}}, 2);
}

// Criterion 1 --------------------------------------------------------------

void criterion_1() {
  const double sqrt2 = std::sqrt(2.0);
  struct Anchor {
    int d;
    NormKind norm;
    double published;
  };
  const Anchor anchors[] = {
      {2, NormKind::TraceNorm, 1.5},
      {3, NormKind::TraceNorm, 8.0 / 3.0},
      {4, NormKind::TraceNorm, 4.0},
      {2, NormKind::HilbertSchmidt, 1.0 + sqrt2 / 4.0},
      {3, NormKind::HilbertSchmidt, 2.0 + sqrt2},
      {4, NormKind::HilbertSchmidt, 13.0 / 4.0 + 3.0 * sqrt2 / 8.0},
  };
  int bad = 0;
  std::vector<std::string> lines;
  for (const Anchor& a : anchors) {
    const DensityMatrix rho = max_entangled(a.d);
    const double computed =
        a.norm == NormKind::TraceNorm ? d_n(rho).value : d_n_prime(rho).value;
    const double diff = std::abs(computed - a.published);
    const bool ok = diff < 1e-9;
    if (!ok) ++bad;
    lines.push_back(std::string(a.norm == NormKind::TraceNorm ? "trace norm" : "hs norm   ") +
                    " d=" + std::to_string(a.d) + ": computed " + num(computed) +
                    ", published " + num(a.published) + ", |diff| " + num(diff) +
                    (ok ? "" : "  <- disagrees"));
  }
  criterion(1, "maximally entangled anchor values within 1e-9", bad == 0,
            bad == 0 ? "" : std::to_string(bad) + " of 6 published values disagree with the direct computation");
  for (const std::string& l : lines) info(l);
}

// Criterion 2 --------------------------------------------------------------

void criterion_2() {
  Rng rng(2001);
  double worst = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const BellCoefficients c = random_tetrahedron_point(rng);
    const DensityMatrix rho = bell_diagonal(c);
    worst = std::max(worst, std::abs(bell_diagonal_closed(c, NormKind::TraceNorm) -
                                     d_n(rho).value));
    worst = std::max(worst, std::abs(bell_diagonal_closed(c, NormKind::HilbertSchmidt) -
                                     d_n_prime(rho).value));
  }
  criterion(2, "bell-diagonal closed forms equal the direct values within 1e-10",
            worst < 1e-10, "max |closed - direct| = " + num(worst) + " over 1000 points");
}

// Criterion 3 --------------------------------------------------------------

void criterion_3() {
  Rng rng(3001);
  double worst = 0;
  for (int d : {2, 3, 4, 5}) {
    for (int rep = 0; rep < 200; ++rep) {
      const SchmidtVector lambda = random_schmidt(d, rng);
      const DensityMatrix rho = pure_from_schmidt(lambda, d);
      worst = std::max(
          worst, std::abs(d_n_pure_closed(lambda, NormKind::TraceNorm) - d_n(rho).value));
      worst = std::max(worst, std::abs(d_n_pure_closed(lambda, NormKind::HilbertSchmidt) -
                                       d_n_prime(rho).value));
    }
  }
  const double printed_product =
      d_n_pure_closed_printed(SchmidtVector({1.0}), NormKind::HilbertSchmidt);
  const bool typo_asserted = std::abs(printed_product - std::sqrt(2.0)) < 1e-12;
  criterion(3, "pure closed form equals the direct computation; printed variant biased",
            worst < 1e-10 && typo_asserted,
            "max |closed - direct| = " + num(worst) +
                " over 800 schmidt vectors; printed hs form on a product state = " +
                num(printed_product) + " (documented bias sqrt(2))");
}

// Criterion 4 --------------------------------------------------------------

void criterion_4() {
  Rng rng(4001);
  double worst_dn = 0, worst_discord = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const DensityMatrix qc = random_quantum_classical(rng);
    worst_dn = std::max(worst_dn, d_n(qc).value);
    worst_discord = std::max(worst_discord, discord_numeric(qc).value);
  }
  double min_generic = std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < 100; ++rep) {
    min_generic = std::min(min_generic, d_n(random_density(2, 2, rng)).value);
  }
  criterion(4, "nullity: quantum-classical states vanish, generic states do not",
            worst_dn < 1e-10 && worst_discord < 1e-6 && min_generic > 1e-4,
            "max d_n = " + num(worst_dn) + ", max discord = " + num(worst_discord) +
                " over 100 qc states; min generic d_n = " + num(min_generic));
}

// Criterion 5 --------------------------------------------------------------

void criterion_5() {
  double min_slack = std::numeric_limits<double>::infinity();
  const std::pair<int, int> dims[] = {{2, 2}, {2, 3}, {3, 3}};
  std::uint64_t seed = 5001;
  for (const auto& [da, db] : dims) {
    Rng rng(seed++);
    for (int rep = 0; rep < 3400; ++rep) {
      const DensityMatrix rho = random_density(da, db, rng);
      min_slack = std::min(min_slack, d_n(rho).value - d_n_prime(rho).value);
    }
  }
  criterion(5, "ordering d_n >= d_n_prime over 10200 random states", min_slack >= -1e-10,
            "min (d_n - d_n_prime) = " + num(min_slack));
}

// Criterion 6 --------------------------------------------------------------

void criterion_6() {
  Rng rng(6001);
  double worst_b = 0, worst_a = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const int db = rep < 100 ? 2 : 3;
    const DensityMatrix rho = random_density(2, db, rng);
    const double base = d_n(rho).value;

    const Matrix ub = kron(Matrix::Identity(2, 2), random_unitary(db, rng));
    const DensityMatrix rot_b = DensityMatrix(ub * rho.matrix() * ub.adjoint(), 2, db);
    worst_b = std::max(worst_b, std::abs(base - d_n(rot_b).value));

    const Matrix ua = kron(random_unitary(2, rng), Matrix::Identity(db, db));
    const DensityMatrix rot_a = DensityMatrix(ua * rho.matrix() * ua.adjoint(), 2, db);
    worst_a = std::max(worst_a, std::abs(base - d_n(rot_a).value));
  }
  criterion(6, "b-side unitary invariance of d_n within 1e-9", worst_b < 1e-9,
            "max |change| = " + num(worst_b) + " over 200 pairs");
  info("a-side probe (no threshold): max |change| = " + num(worst_a) +
       " -- d_n is not a-side invariant");
}

// Criterion 7 --------------------------------------------------------------

void criterion_7() {
  bool ok = true;
  std::string detail;
  const auto check_family = [&](const std::string& name, int d, double zero,
                                auto make_state) {
    const double at_zero = d_n(make_state(zero)).value;
    if (at_zero >= 1e-9) {
      ok = false;
      detail += name + "(d=" + std::to_string(d) + ") at its zero: " + num(at_zero) + "; ";
    }
    for (int k = 0; k < 100; ++k) {
      const double param = k / 99.0;
      if (std::abs(param - zero) < 1e-12) continue;  // the zero itself may sit on the grid
      const double value = d_n(make_state(param)).value;
      if (value <= 1e-6) {
        ok = false;
        detail += name + "(d=" + std::to_string(d) + ") too small at param " + num(param) +
                  ": " + num(value) + "; ";
      }
    }
  };
  const double werner_zeros[] = {0.25, 1.0 / 3.0, 0.375};
  for (int d : {2, 3, 4}) {
    check_family("werner", d, werner_zeros[d - 2],
                 [d](double alpha) { return werner(d, alpha); });
    check_family("isotropic", d, 1.0 / (d * d),
                 [d](double beta) { return isotropic(d, beta); });
  }
  criterion(7, "direct zeros at alpha = 1/4, 1/3, 3/8 and beta = 1/d^2 only", ok,
            ok ? "grid of 100 points per family and d" : detail);
}

// Criterion 8 --------------------------------------------------------------

void criterion_8() {
  bool ok = true;
  std::string detail = "ratios:";
  for (double alpha : {0.0, 0.1, 0.5, 1.0}) {
    const double ratio = werner_closed_paper(2, alpha, NormKind::TraceNorm) /
                         d_n(werner(2, alpha)).value;
    detail += " " + num(ratio);
    if (std::abs(ratio - 4.0) > 1e-6) ok = false;
  }
  const double printed = isotropic_closed_paper(2, 1.0, NormKind::TraceNorm);
  const double direct = d_n(isotropic(2, 1.0)).value;
  if (std::abs(printed - 6.0) > 1e-9 || std::abs(direct - 1.5) > 1e-9) ok = false;
  criterion(8, "published family formulas are scaled: factor 4 at d=2", ok,
            detail + "; isotropic(2,1): printed " + num(printed) + " vs direct " + num(direct));
}

// Criterion 9 --------------------------------------------------------------

void criterion_9() {
  double worst = 0;
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    const double curves[] = {
        0.5 * p * (1.0 - p),
        0.5 * p * std::abs(1.0 - 2.0 * p) +
            0.5 * p * (std::abs(1.0 - p) + std::abs(1.0 - 3.0 * p)),
        0.5 * (1.0 - 2.0 * p) * (1.0 - 2.0 * p) + std::abs(1.0 - 2.0 * p),
        1.5 * std::abs(1.0 - 2.0 * p),
    };
    const DensityMatrix states[] = {rho1(p), rho2(p), rho3(p), rho4(p)};
    for (int f = 0; f < 4; ++f) {
      worst = std::max(worst, std::abs(d_n(states[f]).value - curves[f]));
    }
  }
  criterion(9, "comparison family curves match their closed trace-norm forms", worst < 1e-9,
            "max deviation " + num(worst) + " over 101 grid points x 4 families");
}

// Criterion 10 -------------------------------------------------------------

// Dense-grid brute force over one million measurement axes. For a
// bell-diagonal state both outcomes are equiprobable and the conditional
// qubit spectrum depends on the axis n only through
// r(n)^2 = sum_i c_i^2 n_i^2, so the axis grid reduces to maximizing r^2.
double grid_discord_bell_diagonal(const BellCoefficients& c) {
  const auto lambda = c.bell_eigenvalues();
  double entropy = 0;
  for (double l : lambda) {
    if (l > 1e-15) entropy -= l * std::log2(l);
  }
  const double c1sq = c.c1 * c.c1, c2sq = c.c2 * c.c2, c3sq = c.c3 * c.c3;

  static std::vector<double> cos_sq, sin_sq;
  if (cos_sq.empty()) {
    cos_sq.resize(1000);
    sin_sq.resize(1000);
    for (int j = 0; j < 1000; ++j) {
      const double phi = std::numbers::pi * j / 1000.0;  // [0, pi): antipodes coincide
      cos_sq[j] = std::cos(phi) * std::cos(phi);
      sin_sq[j] = std::sin(phi) * std::sin(phi);
    }
  }

  double best_r_sq = 0;
  for (int i = 0; i < 1000; ++i) {
    const double theta = std::numbers::pi * (i + 0.5) / 1000.0;
    const double st = std::sin(theta);
    const double planar = st * st;
    const double axial = (1.0 - planar) * c3sq;
    for (int j = 0; j < 1000; ++j) {
      const double r_sq = planar * (c1sq * cos_sq[j] + c2sq * sin_sq[j]) + axial;
      if (r_sq > best_r_sq) best_r_sq = r_sq;
    }
  }
  const double r = std::sqrt(best_r_sq);
  return 1.0 - entropy + qdnc_test::binary_entropy((1.0 + r) / 2.0);
}

void criterion_10() {
  Rng rng(10001);
  double worst = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const BellCoefficients c = random_tetrahedron_point(rng);
    const double numeric = discord_numeric(bell_diagonal(c)).value;
    const double brute = grid_discord_bell_diagonal(c);
    worst = std::max(worst, std::abs(numeric - brute));
  }
  const double maxent_discord = discord_numeric(max_entangled(2)).value;
  double worst_qc = 0;
  Rng qrng(10002);
  for (int rep = 0; rep < 20; ++rep) {
    worst_qc = std::max(worst_qc, discord_numeric(random_quantum_classical(qrng)).value);
  }
  criterion(10, "numeric discord matches a million-axis grid brute force",
            worst < 1e-5 && std::abs(maxent_discord - 1.0) < 1e-7 && worst_qc < 1e-6,
            "max |numeric - grid| = " + num(worst) + "; maxent discord = " +
                num(maxent_discord) + "; max qc discord = " + num(worst_qc));
}

// Criterion 11 -------------------------------------------------------------

void criterion_11() {
  namespace fs = std::filesystem;
  const fs::path path = qdnc_test::tmp_path("acceptance_sweep.csv");
  const std::vector<std::string> args = {"sweep", "--family", "werner", "--d",  "2",
                                         "--steps", "50",     "--out",  path.string()};
  std::ostringstream out, err;
  std::string first, second;
  bool ok = cli::run(args, out, err) == 0;
  if (ok) first = qdnc_test::read_file(path);
  ok = ok && cli::run(args, out, err) == 0;
  if (ok) second = qdnc_test::read_file(path);
  ok = ok && !first.empty() && first == second;
  criterion(11, "sweep is byte-deterministic across runs", ok,
            ok ? std::to_string(first.size()) + " bytes identical" : "outputs differ");
  fs::remove(path);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (failures == 0) {
    std::printf("all 11 criteria hold\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
