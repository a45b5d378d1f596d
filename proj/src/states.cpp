#include "qdnc/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace qdnc {

const char* to_string(StateDefect defect) {
  switch (defect) {
    case StateDefect::not_hermitian: return "NotHermitian";
    case StateDefect::trace_not_one: return "TraceNotOne";
    case StateDefect::not_psd: return "NotPSD";
  }
  return "?";
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << qdnc::to_string(violations[i].defect) << " (magnitude " << violations[i].magnitude
       << ")";
  }
  return os.str();
}

ValidationReport check_state(const Matrix& m, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1) {
    throw std::invalid_argument("check_state: dimensions must be positive");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument("check_state: matrix is not (dim_a*dim_b) square");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("check_state: non-finite entries");
  }

  ValidationReport report;
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > hermiticity_tol) {
    report.violations.push_back({StateDefect::not_hermitian, herm});
  }
  const double trace_dev = std::abs(m.trace() - Complex(1, 0));
  if (trace_dev > trace_tol) {
    report.violations.push_back({StateDefect::trace_not_one, trace_dev});
  }
  // the spectrum is only defined for the Hermitian part; checking it keeps
  // the PSD diagnostic meaningful even when hermiticity already failed
  const Matrix herm_part = (m + m.adjoint()) / 2.0;
  const RealVector ev = hermitian_eigenvalues(herm_part);
  if (ev(0) < -psd_tol) {
    report.violations.push_back({StateDefect::not_psd, -ev(0)});
  }
  return report;
}

DensityMatrix::DensityMatrix(Matrix m, int dim_a, int dim_b)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(m)) {
  ValidationReport report = check_state(matrix_, dim_a, dim_b);
  if (!report.ok()) {
    std::string message = "invalid density matrix: " + report.to_string();
    throw state_error(std::move(message), std::move(report));
  }
}

DensityMatrix validate(Matrix m, int dim_a, int dim_b) {
  return DensityMatrix(std::move(m), dim_a, dim_b);
}

SchmidtVector::SchmidtVector(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw std::invalid_argument("SchmidtVector: no coefficients");
  }
  double sum_sq = 0;
  for (double l : coefficients_) {
    if (!(l >= 0)) {
      throw std::invalid_argument("SchmidtVector: coefficients must be nonnegative");
    }
    sum_sq += l * l;
  }
  if (std::abs(sum_sq - 1.0) > schmidt_norm_tol) {
    throw std::invalid_argument("SchmidtVector: squared coefficients sum to " +
                                std::to_string(sum_sq) + ", not 1");
  }
  std::sort(coefficients_.begin(), coefficients_.end(), std::greater<double>());
}

std::array<double, 4> BellCoefficients::bell_eigenvalues() const {
  return {
      0.25 * (1 + c1 - c2 + c3),  // (0,0)
      0.25 * (1 + c1 + c2 - c3),  // (0,1)
      0.25 * (1 - c1 + c2 + c3),  // (1,0)
      0.25 * (1 - c1 - c2 - c3),  // (1,1)
  };
}

bool BellCoefficients::in_tetrahedron() const {
  const auto ev = bell_eigenvalues();
  return std::all_of(ev.begin(), ev.end(), [](double v) { return v >= -tetrahedron_tol; });
}

void BellCoefficients::require_in_tetrahedron() const {
  const auto ev = bell_eigenvalues();
  for (int idx = 0; idx < 4; ++idx) {
    if (ev[static_cast<std::size_t>(idx)] < -tetrahedron_tol) {
      std::ostringstream os;
      os << "BellCoefficients outside the tetrahedron: lambda[" << (idx >> 1) << "]["
         << (idx & 1) << "] = " << ev[static_cast<std::size_t>(idx)];
      throw std::invalid_argument(os.str());
    }
  }
}

Matrix pauli_x() {
  Matrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

Matrix pauli_y() {
  Matrix s(2, 2);
  s << 0, Complex(0, -1), Complex(0, 1), 0;
  return s;
}

Matrix pauli_z() {
  Matrix s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

DensityMatrix pure_from_schmidt(const SchmidtVector& lambda, int d) {
  if (d < 1 || lambda.size() > d) {
    throw std::invalid_argument("pure_from_schmidt: need size(lambda) <= d");
  }
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int k = 0; k < lambda.size(); ++k) {
    psi(static_cast<Eigen::Index>(k) * d + k) = lambda[k];
  }
  return DensityMatrix(psi * psi.adjoint(), d, d);
}

DensityMatrix max_entangled(int d) {
  if (d < 2) throw std::invalid_argument("max_entangled: d must be at least 2");
  return pure_from_schmidt(SchmidtVector(std::vector<double>(d, 1.0 / std::sqrt(double(d)))), d);
}

DensityMatrix werner(int d, double alpha) {
  if (d < 2) throw std::invalid_argument("werner: d must be at least 2");
  if (!(alpha >= 0 && alpha <= 1)) {
    throw std::invalid_argument("werner: alpha must lie in [0,1]");
  }
  // rho = 2(1-alpha)/(d(d+1)) P_sym + 2 alpha/(d(d-1)) P_antisym, written
  // as a*I + b*F with F the swap operator
  const double sym = (1.0 - alpha) / (d * (d + 1.0));
  const double antisym = alpha / (d * (d - 1.0));
  const double a = sym + antisym;
  const double b = sym - antisym;
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  Matrix rho = a * Matrix::Identity(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      rho(static_cast<Eigen::Index>(i) * d + j, static_cast<Eigen::Index>(j) * d + i) += b;
    }
  }
  return DensityMatrix(std::move(rho), d, d);
}

DensityMatrix isotropic(int d, double beta) {
  if (d < 2) throw std::invalid_argument("isotropic: d must be at least 2");
  if (!(beta >= 0 && beta <= 1)) {
    throw std::invalid_argument("isotropic: beta must lie in [0,1]");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  Matrix plus = Matrix::Zero(n, n);  // P+ = (1/d) sum_ij |i,i><j,j|
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      plus(static_cast<Eigen::Index>(i) * d + i, static_cast<Eigen::Index>(j) * d + j) = 1.0 / d;
    }
  }
  Matrix rho = ((1.0 - beta) * Matrix::Identity(n, n) + (d * double(d) * beta - 1.0) * plus) /
               (d * double(d) - 1.0);
  return DensityMatrix(std::move(rho), d, d);
}

namespace {

// |beta_ab> = (|0,b> + (-1)^a |1, 1 xor b>)/sqrt(2)
Vector bell_vector(int a, int b) {
  Vector v = Vector::Zero(4);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  v(b) = inv_sqrt2;
  v(2 + (1 - b)) = (a ? -inv_sqrt2 : inv_sqrt2);
  return v;
}

}  // namespace

DensityMatrix bell_diagonal(const BellCoefficients& c) {
  c.require_in_tetrahedron();
  Matrix rho = 0.25 * (Matrix::Identity(4, 4) + c.c1 * kron(pauli_x(), pauli_x()) +
                       c.c2 * kron(pauli_y(), pauli_y()) + c.c3 * kron(pauli_z(), pauli_z()));
  return DensityMatrix(std::move(rho), 2, 2);
}

DensityMatrix bell_mixture(const std::array<double, 4>& weights) {
  double sum = 0;
  for (double w : weights) {
    if (!(w >= 0)) throw std::invalid_argument("bell_mixture: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > weight_sum_tol) {
    throw std::invalid_argument("bell_mixture: weights sum to " + std::to_string(sum) +
                                ", not 1");
  }
  Matrix rho = Matrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Vector v = bell_vector(a, b);
      rho += weights[static_cast<std::size_t>(a) * 2 + b] * (v * v.adjoint());
    }
  }
  return DensityMatrix(std::move(rho), 2, 2);
}

static void require_unit_interval(double p, const char* who) {
  if (!(p >= 0 && p <= 1)) {
    throw std::invalid_argument(std::string(who) + ": p must lie in [0,1]");
  }
}

DensityMatrix rho1(double p) {
  require_unit_interval(p, "rho1");
  return bell_mixture({p / 2, 0.5, (1 - p) / 2, 0});
}

DensityMatrix rho2(double p) {
  require_unit_interval(p, "rho2");
  return bell_mixture({(1 - p) / 2, (1 - p) / 2, 0, p});
}

DensityMatrix rho3(double p) {
  require_unit_interval(p, "rho3");
  return bell_mixture({0, 1 - p, 0, p});
}

DensityMatrix rho4(double p) {
  require_unit_interval(p, "rho4");
  return bell_mixture({0, 1 - p, p, 0});
}

BellCoefficients bell_coefficients_of(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) {
    throw std::invalid_argument("bell_coefficients_of: state is not two-qubit");
  }
  const auto corr = [&rho](const Matrix& s) {
    return std::real((rho.matrix() * kron(s, s)).trace());
  };
  return {corr(pauli_x()), corr(pauli_y()), corr(pauli_z())};
}

DensityMatrix quantum_classical(const std::vector<std::pair<double, Matrix>>& components,
                                int dim_b) {
  if (components.empty()) {
    throw std::invalid_argument("quantum_classical: no components");
  }
  if (static_cast<int>(components.size()) > dim_b) {
    throw std::invalid_argument("quantum_classical: more components than dim_b");
  }
  const Eigen::Index dim_a = components.front().second.rows();
  double sum = 0;
  for (const auto& [weight, rho_a] : components) {
    if (!(weight >= 0)) throw std::invalid_argument("quantum_classical: negative weight");
    sum += weight;
    ValidationReport report = check_state(rho_a, 1, static_cast<int>(dim_a));
    if (!report.ok()) {
      throw std::invalid_argument("quantum_classical: component is not a density matrix: " +
                                  report.to_string());
    }
  }
  if (std::abs(sum - 1.0) > weight_sum_tol) {
    throw std::invalid_argument("quantum_classical: weights sum to " + std::to_string(sum) +
                                ", not 1");
  }
  const Eigen::Index n = dim_a * dim_b;
  Matrix rho = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < components.size(); ++j) {
    Matrix marker = Matrix::Zero(dim_b, dim_b);
    marker(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = 1;
    rho += components[j].first * kron(components[j].second, marker);
  }
  return DensityMatrix(std::move(rho), static_cast<int>(dim_a), dim_b);
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Matrix gaussian_matrix(int rows, int cols, Rng& rng) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

Matrix random_unitary(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("random_unitary: d must be positive");
  const Matrix g = gaussian_matrix(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= (mag > 0 ? rjj / mag : Complex(1, 0));
  }
  return q;
}

DensityMatrix random_density(int dim_a, int dim_b, Rng& rng) {
  if (dim_a < 2 || dim_b < 2) {
    throw std::invalid_argument("random_density: dimensions must be at least 2");
  }
  const int n = dim_a * dim_b;
  const Matrix g = gaussian_matrix(n, n, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(std::move(rho), dim_a, dim_b);
}

DensityMatrix random_density(int dim_a, int dim_b, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim_a, dim_b, rng);
}

}  // namespace qdnc
