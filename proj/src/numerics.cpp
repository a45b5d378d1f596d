#include "qdnc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qdnc {

Matrix adjoint(const Matrix& m) { return m.adjoint(); }

Matrix commutator(const Matrix& x, const Matrix& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw std::invalid_argument("commutator: operands must be square with equal dimension");
  }
  return x * y - y * x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& rho, int dim_a, int dim_b, Subsystem keep) {
  if (dim_a < 1 || dim_b < 1) {
    throw std::invalid_argument("partial_trace: dimensions must be positive");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (rho.rows() != n || rho.cols() != n) {
    throw std::invalid_argument("partial_trace: matrix is not (dim_a*dim_b) square");
  }
  if (keep == Subsystem::a) {
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i) {
      for (int j = 0; j < dim_a; ++j) {
        for (int k = 0; k < dim_b; ++k) {
          out(i, j) += rho(static_cast<Eigen::Index>(i) * dim_b + k,
                           static_cast<Eigen::Index>(j) * dim_b + k);
        }
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (int k = 0; k < dim_b; ++k) {
    for (int l = 0; l < dim_b; ++l) {
      for (int i = 0; i < dim_a; ++i) {
        out(k, l) += rho(static_cast<Eigen::Index>(i) * dim_b + k,
                         static_cast<Eigen::Index>(i) * dim_b + l);
      }
    }
  }
  return out;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0;
  for (Eigen::Index p = 0; p < a.rows(); ++p) {
    for (Eigen::Index q = 0; q < a.cols(); ++q) {
      if (p != q) sum += std::norm(a(p, q));
    }
  }
  return std::sqrt(sum);
}

// One two-sided rotation zeroing a(p,q). The pivot is reduced to the real
// symmetric case by pulling out the phase of a(p,q); the rotation angle is
// the standard smaller-root choice, which keeps the iteration stable.
void jacobi_rotate(Matrix& a, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  const double alpha = std::real(a(p, p));
  const double beta = std::real(a(q, q));
  const double phi = std::arg(apq);
  const double tau = (beta - alpha) / (2.0 * g);
  const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex eip = std::polar(1.0, phi);

  const Vector xp = a.col(p);
  const Vector xq = a.col(q);
  a.col(p) = eip * c * xp - s * xq;
  a.col(q) = eip * s * xp + c * xq;
  const Eigen::RowVectorXcd rp = a.row(p);
  const Eigen::RowVectorXcd rq = a.row(q);
  a.row(p) = std::conj(eip) * c * rp - s * rq;
  a.row(q) = std::conj(eip) * s * rp + c * rq;

  a(p, q) = Complex(0, 0);
  a(q, p) = Complex(0, 0);
  a(p, p) = std::real(a(p, p));
  a(q, q) = std::real(a(q, q));
}

}  // namespace

RealVector hermitian_eigenvalues(const Matrix& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  }
  const Eigen::Index n = h.rows();
  if (n < 1) throw std::invalid_argument("hermitian_eigenvalues: empty matrix");
  if (n > max_eigen_dim) {
    throw std::invalid_argument("hermitian_eigenvalues: dimension " + std::to_string(n) +
                                " above the supported " + std::to_string(max_eigen_dim));
  }
  if (!h.allFinite()) {
    throw std::invalid_argument("hermitian_eigenvalues: non-finite entries");
  }
  const double deviation = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (deviation > hermiticity_tol) {
    throw std::invalid_argument("hermitian_eigenvalues: not Hermitian, max entrywise |h - h^dagger| = " +
                                std::to_string(deviation));
  }

  Matrix a = (h + h.adjoint()) / 2.0;  // exact-Hermitian working copy
  const double scale = a.norm();
  RealVector values(n);
  if (scale == 0.0) {
    values.setZero();
    return values;
  }

  const double tol = 1e-13 * scale;
  // entries too small to matter get annihilated instead of rotated; their
  // total weight stays far below tol
  const double negligible = tol / (10.0 * static_cast<double>(n));
  constexpr int max_sweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) < tol) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= negligible) {
          a(p, q) = Complex(0, 0);
          a(q, p) = Complex(0, 0);
          continue;
        }
        jacobi_rotate(a, p, q);
      }
    }
  }
  if (!converged) {
    throw numeric_error("hermitian_eigenvalues: Jacobi iteration did not converge in " +
                        std::to_string(max_sweeps) + " sweeps");
  }

  for (Eigen::Index i = 0; i < n; ++i) values(i) = std::real(a(i, i));
  std::sort(values.begin(), values.end());
  return values;
}

RealVector singular_values(const Matrix& x) {
  RealVector ev = hermitian_eigenvalues(x.adjoint() * x);  // ascending
  const Eigen::Index n = ev.size();
  RealVector sv(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double v = ev(n - 1 - i);
    if (v < 0) {
      if (v < -singular_clamp) {
        throw numeric_error("singular_values: eigenvalue of x^dagger x below -1e-12: " +
                            std::to_string(v));
      }
      v = 0;
    }
    sv(i) = std::sqrt(v);
  }
  return sv;
}

double trace_norm(const Matrix& x) { return singular_values(x).sum(); }

double hs_norm(const Matrix& x) { return x.norm(); }

}  // namespace qdnc
