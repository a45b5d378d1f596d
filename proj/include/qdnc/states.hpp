#pragma once

#include "qdnc/numerics.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

// Construction and validation of the bipartite states the measures operate
// on: pure states from Schmidt coefficients, Werner, isotropic,
// Bell-diagonal, Bell-projector mixtures, quantum-classical states and
// seeded random states.

namespace qdnc {

inline constexpr double trace_tol = 1e-10;
inline constexpr double psd_tol = 1e-10;
inline constexpr double tetrahedron_tol = 1e-12;
inline constexpr double weight_sum_tol = 1e-12;
inline constexpr double schmidt_norm_tol = 1e-12;

enum class StateDefect { not_hermitian, trace_not_one, not_psd };

const char* to_string(StateDefect defect);

struct Violation {
  StateDefect defect;
  double magnitude;  // size of the violation (deviation, |trace-1|, |min eigenvalue|)
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

class state_error : public std::runtime_error {
 public:
  state_error(std::string what, ValidationReport report)
      : std::runtime_error(std::move(what)), report(std::move(report)) {}
  ValidationReport report;
};

// Checks hermiticity (entrywise 1e-10), unit trace (1e-10) and positive
// semidefiniteness (eigenvalues >= -1e-10) and reports every violated
// property with its magnitude. Dimension mismatches throw
// std::invalid_argument.
ValidationReport check_state(const Matrix& m, int dim_a, int dim_b);

class DensityMatrix {
 public:
  // Checked construction; throws state_error carrying the full report.
  DensityMatrix(Matrix m, int dim_a, int dim_b);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

 private:
  int dim_a_;
  int dim_b_;
  Matrix matrix_;
};

// Free-function spelling of the checked constructor.
DensityMatrix validate(Matrix m, int dim_a, int dim_b);

// Nonnegative Schmidt coefficients, stored descending, with sum of squares
// equal to one within 1e-12.
class SchmidtVector {
 public:
  explicit SchmidtVector(std::vector<double> coefficients);
  const std::vector<double>& coefficients() const { return coefficients_; }
  int size() const { return static_cast<int>(coefficients_.size()); }
  double operator[](int k) const { return coefficients_[static_cast<std::size_t>(k)]; }

 private:
  std::vector<double> coefficients_;
};

// Correlation coefficients (c1,c2,c3) of a two-qubit state diagonal in the
// Bell basis. The state is physical iff the four bell_eigenvalues are
// nonnegative (the Bell tetrahedron), checked with tolerance 1e-12.
struct BellCoefficients {
  double c1 = 0;
  double c2 = 0;
  double c3 = 0;

  // Eigenvalues lambda_ab in the order (a,b) = (0,0),(0,1),(1,0),(1,1).
  std::array<double, 4> bell_eigenvalues() const;
  bool in_tetrahedron() const;
  // Throws std::invalid_argument naming the offending eigenvalue.
  void require_in_tetrahedron() const;
};

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

// |psi><psi| on a d x d system for |psi> = sum_k lambda_k |k,k>.
DensityMatrix pure_from_schmidt(const SchmidtVector& lambda, int d);

// (1/sqrt(d)) sum_i |i,i>, as a density matrix.
DensityMatrix max_entangled(int d);

// Mixture of the projectors onto the symmetric and antisymmetric subspaces,
// weight alpha in [0,1] on the antisymmetric part.
DensityMatrix werner(int d, double alpha);

// ((1-beta) I + (d^2 beta - 1) P+) / (d^2 - 1) with P+ the maximally
// entangled projector; beta in [0,1].
DensityMatrix isotropic(int d, double beta);

// (1/4)(I + sum_j c_j sigma_j x sigma_j); requires c in the tetrahedron.
DensityMatrix bell_diagonal(const BellCoefficients& c);

// sum_ab w_ab |beta_ab><beta_ab| with
// |beta_ab> = (|0,b> + (-1)^a |1, 1 xor b>)/sqrt(2), weights in the order
// (0,0),(0,1),(1,0),(1,1), nonnegative, summing to 1 within 1e-12.
DensityMatrix bell_mixture(const std::array<double, 4>& weights);

// The four one-parameter Bell-projector mixtures used by the comparison
// curves; p in [0,1].
DensityMatrix rho1(double p);  // (1/2) b01 + (p/2) b00 + ((1-p)/2) b10
DensityMatrix rho2(double p);  // p b11 + ((1-p)/2)(b01 + b00)
DensityMatrix rho3(double p);  // p b11 + (1-p) b01
DensityMatrix rho4(double p);  // p b10 + (1-p) b01

// c_j = Tr(rho (sigma_j x sigma_j)) of a two-qubit state.
BellCoefficients bell_coefficients_of(const DensityMatrix& rho);

// sum_j q_j rho_a_j x |j_b><j_b|: classical on the B side, hence zero
// discord with respect to B measurements. Components are (weight, dA x dA
// density matrix) pairs; at most dim_b of them.
DensityMatrix quantum_classical(
    const std::vector<std::pair<double, Matrix>>& components, int dim_b);

// Deterministic random stream: mt19937_64 with an explicit Box-Muller
// transform for normals (the standard library leaves the normal sampling
// algorithm unspecified, which would break seed reproducibility across
// implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0,1) with 53 random bits.
  double uniform();
  // Standard normal.
  double gaussian();
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0;
  bool has_spare_ = false;
};

// Matrix with independent standard-normal real and imaginary parts, filled
// row-major, real part before imaginary part within each entry.
Matrix gaussian_matrix(int rows, int cols, Rng& rng);

// Haar-distributed unitary: QR of a Gaussian matrix with the phases of the
// R diagonal absorbed into Q (the convention that makes the factorization
// unique).
Matrix random_unitary(int d, Rng& rng);

// G G^dagger / Tr(G G^dagger) for a Gaussian G; identical seed, identical
// state bit for bit.
DensityMatrix random_density(int dim_a, int dim_b, Rng& rng);
DensityMatrix random_density(int dim_a, int dim_b, std::uint64_t seed);

}  // namespace qdnc
