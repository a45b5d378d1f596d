#include "qdnc/measures.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qdnc {

double schatten_norm(const Matrix& x, NormKind norm) {
  return norm == NormKind::TraceNorm ? trace_norm(x) : hs_norm(x);
}

std::vector<BlockPair> pair_set(int dim_a) {
  if (dim_a < 1) throw std::invalid_argument("pair_set: dim_a must be positive");
  std::vector<BlockPair> pairs;
  // componentwise-ordered distinct pairs
  for (int i = 0; i < dim_a; ++i) {
    for (int j = 0; j < dim_a; ++j) {
      for (int k = i; k < dim_a; ++k) {
        for (int l = j; l < dim_a; ++l) {
          if (i == k && j == l) continue;
          pairs.push_back({i, j, k, l});
        }
      }
    }
  }
  // strictly crossed pairs
  for (int i = 0; i < dim_a; ++i) {
    for (int j = 0; j < dim_a; ++j) {
      for (int k = i + 1; k < dim_a; ++k) {
        for (int l = 0; l < j; ++l) {
          pairs.push_back({i, j, k, l});
        }
      }
    }
  }
  return pairs;
}

double total_non_commutativity(const std::vector<Matrix>& gamma, NormKind norm) {
  if (gamma.empty()) return 0;
  const Eigen::Index n = gamma.front().rows();
  for (const Matrix& g : gamma) {
    if (g.rows() != n || g.cols() != n) {
      throw std::invalid_argument("total_non_commutativity: members must be square with equal dimension");
    }
  }
  double sum = 0;
  for (std::size_t r = 0; r + 1 < gamma.size(); ++r) {
    for (std::size_t s = r + 1; s < gamma.size(); ++s) {
      sum += schatten_norm(commutator(gamma[r], gamma[s]), norm);
    }
  }
  return sum;
}

double pair_sum(const BlockGrid& grid, NormKind norm) {
  double sum = 0;
  for (const BlockPair& p : pair_set(grid.outer)) {
    sum += schatten_norm(commutator(grid.at(p.i, p.j), grid.at(p.k, p.l)), norm);
  }
  return sum;
}

namespace {

MeasureResult make_result(double value, MeasureKind kind, NormKind norm, Method method,
                          int pair_count) {
  MeasureResult result{value, kind, norm, method, {}};
  result.metadata.emplace_back("pairs", std::to_string(pair_count));
  return result;
}

}  // namespace

MeasureResult d_n(const DensityMatrix& rho) {
  const BlockGrid grid = b_blocks(rho);
  const auto pairs = pair_set(grid.outer);
  return make_result(pair_sum(grid, NormKind::TraceNorm), MeasureKind::dn, NormKind::TraceNorm,
                     Method::direct, static_cast<int>(pairs.size()));
}

MeasureResult d_n_prime(const DensityMatrix& rho) {
  const BlockGrid grid = b_blocks(rho);
  const auto pairs = pair_set(grid.outer);
  return make_result(pair_sum(grid, NormKind::HilbertSchmidt), MeasureKind::dn_prime,
                     NormKind::HilbertSchmidt, Method::direct, static_cast<int>(pairs.size()));
}

MeasureResult d_n_symmetric(const DensityMatrix& rho, NormKind norm) {
  const double value = pair_sum(b_blocks(rho), norm) + pair_sum(a_blocks(rho), norm);
  const int pairs = static_cast<int>(pair_set(rho.dim_a()).size() + pair_set(rho.dim_b()).size());
  return make_result(value, MeasureKind::dn_symmetric, norm, Method::direct, pairs);
}

double d_n_pure_closed(const SchmidtVector& lambda, NormKind norm) {
  const auto& l = lambda.coefficients();
  const int n = lambda.size();
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double p = l[static_cast<std::size_t>(i)] * l[static_cast<std::size_t>(j)];
      sum += norm == NormKind::TraceNorm ? 2.0 * p * (1.0 + p)
                                         : p * (2.0 + std::numbers::sqrt2 * p);
    }
  }
  return sum;
}

double d_n_pure_closed_printed(const SchmidtVector& lambda, NormKind norm) {
  const auto& l = lambda.coefficients();
  const int n = lambda.size();
  // window over which the inner sum runs, for the outer index pair (i,j),
  // i <= j; outer pairs with i > j contribute nothing
  double total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double inner = 0;
      if (i == j) {
        for (int k = i; k < n; ++k) {
          for (int m = k + 1; m < n; ++m) {
            inner += l[static_cast<std::size_t>(k)] * l[static_cast<std::size_t>(m)];
          }
        }
      } else {
        for (int k = i + 1; k <= j; ++k) {
          for (int m = j; m < n; ++m) {
            inner += l[static_cast<std::size_t>(k)] * l[static_cast<std::size_t>(m)];
          }
        }
        if (norm == NormKind::TraceNorm) {
          inner += l[static_cast<std::size_t>(i)] * l[static_cast<std::size_t>(j)];
        }
      }
      total += 2.0 * l[static_cast<std::size_t>(i)] * l[static_cast<std::size_t>(j)] * inner;
    }
  }
  if (norm == NormKind::HilbertSchmidt) total += std::numbers::sqrt2;
  return total;
}

double werner_closed_paper(int d, double alpha, NormKind norm) {
  const double sqrt2 = std::numbers::sqrt2;
  if (norm == NormKind::TraceNorm) {
    switch (d) {
      case 2: return (2.0 / 3.0) * (1 - 4 * alpha) * (1 - 4 * alpha);
      case 3: return (23.0 / 36.0) * (1 - 3 * alpha) * (1 - 3 * alpha);
      case 4: return (13.0 / 300.0) * (3 - 8 * alpha) * (3 - 8 * alpha);
    }
  } else {
    switch (d) {
      case 2: return ((4 + sqrt2) / 9.0) * (1 - 4 * alpha) * (1 - 4 * alpha);
      case 3: return ((19 + 2 * sqrt2) / 36.0) * (1 - 3 * alpha) * (1 - 3 * alpha);
      case 4: return ((35 + 2 * sqrt2) / 900.0) * (3 - 8 * alpha) * (3 - 8 * alpha);
    }
  }
  throw std::invalid_argument("werner_closed_paper: only d in {2,3,4} is tabulated");
}

double isotropic_closed_paper(int d, double beta, NormKind norm) {
  const double sqrt2 = std::numbers::sqrt2;
  if (norm == NormKind::TraceNorm) {
    switch (d) {
      case 2: return (2.0 / 3.0) * (1 - 4 * beta) * (1 - 4 * beta);
      case 3: {
        const double u = std::abs(1 - 9 * beta);
        return (3.0 / 16.0) * u * (u + std::abs(1 - 8 * beta));
      }
      case 4: {
        const double u = std::abs(1 - 16 * beta);
        return u * ((4.0 / 25.0) * u + (1.0 / 9.0) * std::abs(1 - 15 * beta));
      }
    }
  } else {
    switch (d) {
      case 2: return ((4 + sqrt2) / 9.0) * (1 - 4 * beta) * (1 - 4 * beta);
      case 3: {
        const double u = std::abs(1 - 9 * beta);
        return u * (((6 + 3 * sqrt2) / 64.0) * u + (3.0 / 16.0) * std::abs(1 - 8 * beta));
      }
      case 4: {
        const double u = std::abs(1 - 16 * beta);
        return u * (((8 + 2 * sqrt2) / 75.0) * u + (1.0 / 9.0) * std::abs(1 - 15 * beta));
      }
    }
  }
  throw std::invalid_argument("isotropic_closed_paper: only d in {2,3,4} is tabulated");
}

double bell_diagonal_closed(const BellCoefficients& c, NormKind norm) {
  c.require_in_tetrahedron();
  const double cross = std::abs(c.c1 * c.c2);
  if (norm == NormKind::TraceNorm) {
    return 0.5 * cross +
           0.5 * std::abs(c.c3) * (std::abs(c.c1 - c.c2) + std::abs(c.c1 + c.c2));
  }
  return cross / (2.0 * std::numbers::sqrt2) +
         (std::abs(c.c3) / std::numbers::sqrt2) * std::hypot(c.c1, c.c2);
}

}  // namespace qdnc
