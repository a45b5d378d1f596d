#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

// Dense complex-matrix kernel: commutators, Kronecker products, partial
// traces, Hermitian eigenvalues, singular values and the two Schatten norms
// used throughout the library. The universal carrier is Eigen::MatrixXcd;
// Eigen expressions convert implicitly at call sites.

namespace qdnc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Raised when an iterative routine fails to converge or an intermediate
// value is numerically impossible (e.g. a clearly negative eigenvalue of
// a positive semidefinite product).
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest matrix dimension the eigensolver accepts.
inline constexpr int max_eigen_dim = 256;
// Entrywise tolerance for treating a matrix as Hermitian.
inline constexpr double hermiticity_tol = 1e-10;
// Eigenvalues of x^dagger x in [-singular_clamp, 0) are clamped to zero.
inline constexpr double singular_clamp = 1e-12;

// Conjugate transpose.
Matrix adjoint(const Matrix& m);

// x*y - y*x; throws std::invalid_argument unless both are square with
// equal dimension.
Matrix commutator(const Matrix& x, const Matrix& y);

// Kronecker product, entry ((i*rb+k),(j*cb+l)) = a(i,j)*b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

enum class Subsystem { a, b };

// Reduced matrix of a (dim_a*dim_b)-dimensional bipartite operator under
// the ordering |i_a, j_b> -> row i*dim_b + j. keep selects the surviving
// subsystem.
Matrix partial_trace(const Matrix& rho, int dim_a, int dim_b, Subsystem keep);

// Ascending real eigenvalues of a Hermitian matrix, computed with a cyclic
// complex Jacobi iteration (dimension <= max_eigen_dim). Throws
// std::invalid_argument if the input is not Hermitian within
// hermiticity_tol, numeric_error if the iteration fails to converge.
RealVector hermitian_eigenvalues(const Matrix& h);

// Descending singular values via the spectrum of x^dagger x.
RealVector singular_values(const Matrix& x);

// Schatten-1 norm: sum of singular values.
double trace_norm(const Matrix& x);

// Schatten-2 (Frobenius) norm.
double hs_norm(const Matrix& x);

}  // namespace qdnc
