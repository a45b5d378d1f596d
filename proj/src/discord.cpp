#include "qdnc/discord.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace qdnc {

Eigen::Vector2cd MeasurementAxis::spinor() const {
  Eigen::Vector2cd n;
  n << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
  return n;
}

Matrix MeasurementAxis::projector_plus() const {
  const Eigen::Vector2cd n = spinor();
  return n * n.adjoint();
}

Eigen::Vector3d MeasurementAxis::bloch() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double von_neumann_entropy(const Matrix& rho) {
  double entropy = 0;
  for (double lambda : hermitian_eigenvalues(rho)) {
    if (lambda > 0) entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.matrix());
}

double mutual_information(const DensityMatrix& rho) {
  const Matrix marginal_a = partial_trace(rho.matrix(), rho.dim_a(), rho.dim_b(), Subsystem::a);
  const Matrix marginal_b = partial_trace(rho.matrix(), rho.dim_a(), rho.dim_b(), Subsystem::b);
  return von_neumann_entropy(marginal_a) + von_neumann_entropy(marginal_b) -
         von_neumann_entropy(rho.matrix());
}

namespace {

constexpr double outcome_floor = 1e-14;

// Contribution p_k S(M/p_k) of one unnormalized conditional operator M
// with p_k = Tr M, written as -sum lambda log2 lambda + p log2 p so the
// normalization never has to be applied to M itself.
double outcome_entropy(const Matrix& m) {
  const double p = std::real(m.trace());
  if (p < outcome_floor) return 0;
  double sum = 0;
  for (double lambda : hermitian_eigenvalues(m)) {
    if (lambda > 0) sum -= lambda * std::log2(lambda);
  }
  return sum + p * std::log2(p);
}

// S(rho | axis) evaluated against pre-extracted 2x2 tiles: the conditional
// A operator after the + outcome is M+(i,i') = <n| tile(i,i') |n>.
double conditional_entropy_tiles(const std::vector<Matrix>& tiles, const Matrix& marginal_a,
                                 int dim_a, double theta, double phi) {
  const Complex n0(std::cos(theta / 2), 0);
  const Complex n1 = std::polar(std::sin(theta / 2), phi);
  const Complex w00 = std::norm(n0);
  const Complex w01 = std::conj(n0) * n1;
  const Complex w10 = std::conj(n1) * n0;
  const Complex w11 = std::norm(n1);

  Matrix m_plus(dim_a, dim_a);
  for (int i = 0; i < dim_a; ++i) {
    for (int ip = 0; ip < dim_a; ++ip) {
      const Matrix& t = tiles[static_cast<std::size_t>(i) * dim_a + ip];
      m_plus(i, ip) = w00 * t(0, 0) + w01 * t(0, 1) + w10 * t(1, 0) + w11 * t(1, 1);
    }
  }
  const Matrix m_minus = marginal_a - m_plus;
  return outcome_entropy(m_plus) + outcome_entropy(m_minus);
}

std::vector<Matrix> qubit_tiles(const DensityMatrix& rho) {
  const int da = rho.dim_a();
  std::vector<Matrix> tiles;
  tiles.reserve(static_cast<std::size_t>(da) * da);
  for (int i = 0; i < da; ++i) {
    for (int ip = 0; ip < da; ++ip) {
      tiles.push_back(rho.matrix().block(2 * i, 2 * ip, 2, 2));
    }
  }
  return tiles;
}

MeasurementAxis canonical_axis(double theta, double phi) {
  const double z = std::cos(theta);
  const double r = std::sin(theta);
  const double x = r * std::cos(phi);
  const double y = r * std::sin(phi);
  MeasurementAxis axis;
  axis.theta = std::acos(std::clamp(z, -1.0, 1.0));
  axis.phi = std::atan2(y, x);
  if (axis.phi < 0) axis.phi += 2 * std::numbers::pi;
  if (std::abs(r) < 1e-15) axis.phi = 0;
  return axis;
}

struct SimplexPoint {
  double theta, phi, value;
};

}  // namespace

double conditional_entropy_after(const DensityMatrix& rho, const MeasurementAxis& axis) {
  if (rho.dim_b() != 2) {
    throw std::invalid_argument("conditional_entropy_after: B subsystem must be a qubit");
  }
  const Matrix marginal_a = partial_trace(rho.matrix(), rho.dim_a(), 2, Subsystem::a);
  return conditional_entropy_tiles(qubit_tiles(rho), marginal_a, rho.dim_a(), axis.theta,
                                   axis.phi);
}

DiscordResult discord_numeric(const DensityMatrix& rho) {
  if (rho.dim_b() != 2) {
    throw std::invalid_argument("discord_numeric: B subsystem must be a qubit");
  }
  const int da = rho.dim_a();
  const std::vector<Matrix> tiles = qubit_tiles(rho);
  const Matrix marginal_a = partial_trace(rho.matrix(), da, 2, Subsystem::a);
  const Matrix marginal_b = partial_trace(rho.matrix(), da, 2, Subsystem::b);
  const double entropy_b = von_neumann_entropy(marginal_b);
  const double entropy_total = von_neumann_entropy(rho.matrix());

  const auto objective = [&](double theta, double phi) {
    return conditional_entropy_tiles(tiles, marginal_a, da, theta, phi);
  };

  // stage 1: Fibonacci lattice over the half-sphere z in (0,1); antipodal
  // axes give the same measurement, so half covers everything
  constexpr int lattice_points = 2000;
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<SimplexPoint> lattice(lattice_points);
  for (int i = 0; i < lattice_points; ++i) {
    const double z = (i + 0.5) / lattice_points;
    const double theta = std::acos(z);
    const double phi = std::fmod(i * golden_angle, 2 * std::numbers::pi);
    lattice[static_cast<std::size_t>(i)] = {theta, phi, objective(theta, phi)};
  }
  std::partial_sort(lattice.begin(), lattice.begin() + 5, lattice.end(),
                    [](const SimplexPoint& a, const SimplexPoint& b) { return a.value < b.value; });

  // stage 2: Nelder-Mead in (theta, phi) from the best five lattice points
  constexpr double diameter_tol = 1e-7;
  constexpr int max_iterations = 400;
  constexpr double step = 0.05;
  double best_value = lattice.front().value;
  SimplexPoint best_point = lattice.front();
  int total_iterations = 0;
  bool best_converged = true;

  for (int start = 0; start < 5; ++start) {
    std::array<SimplexPoint, 3> simplex;
    simplex[0] = lattice[static_cast<std::size_t>(start)];
    simplex[1] = {simplex[0].theta + step, simplex[0].phi, 0};
    simplex[2] = {simplex[0].theta, simplex[0].phi + step, 0};
    simplex[1].value = objective(simplex[1].theta, simplex[1].phi);
    simplex[2].value = objective(simplex[2].theta, simplex[2].phi);

    bool converged = false;
    int iteration = 0;
    for (; iteration < max_iterations; ++iteration) {
      std::sort(simplex.begin(), simplex.end(),
                [](const SimplexPoint& a, const SimplexPoint& b) { return a.value < b.value; });
      const double diameter =
          std::max({std::hypot(simplex[0].theta - simplex[1].theta, simplex[0].phi - simplex[1].phi),
                    std::hypot(simplex[0].theta - simplex[2].theta, simplex[0].phi - simplex[2].phi),
                    std::hypot(simplex[1].theta - simplex[2].theta, simplex[1].phi - simplex[2].phi)});
      if (diameter < diameter_tol) {
        converged = true;
        break;
      }

      const double ct = (simplex[0].theta + simplex[1].theta) / 2;
      const double cp = (simplex[0].phi + simplex[1].phi) / 2;
      const auto eval_at = [&](double scale) {
        SimplexPoint p{ct + scale * (ct - simplex[2].theta), cp + scale * (cp - simplex[2].phi), 0};
        p.value = objective(p.theta, p.phi);
        return p;
      };

      const SimplexPoint reflected = eval_at(1.0);
      if (reflected.value < simplex[0].value) {
        const SimplexPoint expanded = eval_at(2.0);
        simplex[2] = expanded.value < reflected.value ? expanded : reflected;
      } else if (reflected.value < simplex[1].value) {
        simplex[2] = reflected;
      } else {
        const SimplexPoint contracted =
            reflected.value < simplex[2].value ? eval_at(0.5) : eval_at(-0.5);
        if (contracted.value < std::min(reflected.value, simplex[2].value)) {
          simplex[2] = contracted;
        } else {
          for (int v = 1; v < 3; ++v) {
            simplex[static_cast<std::size_t>(v)].theta =
                (simplex[static_cast<std::size_t>(v)].theta + simplex[0].theta) / 2;
            simplex[static_cast<std::size_t>(v)].phi =
                (simplex[static_cast<std::size_t>(v)].phi + simplex[0].phi) / 2;
            simplex[static_cast<std::size_t>(v)].value = objective(
                simplex[static_cast<std::size_t>(v)].theta, simplex[static_cast<std::size_t>(v)].phi);
          }
        }
      }
    }
    total_iterations += iteration;

    std::sort(simplex.begin(), simplex.end(),
              [](const SimplexPoint& a, const SimplexPoint& b) { return a.value < b.value; });
    if (simplex[0].value < best_value) {
      best_value = simplex[0].value;
      best_point = simplex[0];
      best_converged = converged;
    }
  }

  double value = entropy_b - entropy_total + best_value;
  if (value < 0) {
    if (value < -1e-9) {
      throw numeric_error("discord_numeric: value " + std::to_string(value) +
                          " below the -1e-9 guard");
    }
    value = 0;
  }

  DiscordResult result;
  result.value = value;
  result.argmin_axis = canonical_axis(best_point.theta, best_point.phi);
  result.iterations = total_iterations;
  result.converged = best_converged;
  return result;
}

}  // namespace qdnc
