#include "qdnc/blocks.hpp"

namespace qdnc {

BlockGrid b_blocks(const DensityMatrix& rho) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  BlockGrid grid{Subsystem::b, da, db, {}};
  grid.blocks.reserve(static_cast<std::size_t>(da) * da);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      grid.blocks.push_back(rho.matrix().block(static_cast<Eigen::Index>(i) * db,
                                               static_cast<Eigen::Index>(j) * db, db, db));
    }
  }
  return grid;
}

BlockGrid a_blocks(const DensityMatrix& rho) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  BlockGrid grid{Subsystem::a, db, da, {}};
  grid.blocks.reserve(static_cast<std::size_t>(db) * db);
  for (int k = 0; k < db; ++k) {
    for (int l = 0; l < db; ++l) {
      Matrix block(da, da);
      for (int i = 0; i < da; ++i) {
        for (int ip = 0; ip < da; ++ip) {
          block(i, ip) = rho.matrix()(static_cast<Eigen::Index>(i) * db + k,
                                      static_cast<Eigen::Index>(ip) * db + l);
        }
      }
      grid.blocks.push_back(std::move(block));
    }
  }
  return grid;
}

DensityMatrix reassemble(const BlockGrid& grid) {
  const int outer = grid.outer;
  const int inner = grid.inner;
  if (outer < 1 || inner < 1 ||
      grid.blocks.size() != static_cast<std::size_t>(outer) * outer) {
    throw std::invalid_argument("reassemble: grid shape is inconsistent");
  }
  for (const Matrix& block : grid.blocks) {
    if (block.rows() != inner || block.cols() != inner) {
      throw std::invalid_argument("reassemble: block dimensions are inconsistent");
    }
  }
  const Eigen::Index n = static_cast<Eigen::Index>(outer) * inner;
  Matrix rho(n, n);
  if (grid.side == Subsystem::b) {
    for (int i = 0; i < outer; ++i) {
      for (int j = 0; j < outer; ++j) {
        rho.block(static_cast<Eigen::Index>(i) * inner, static_cast<Eigen::Index>(j) * inner,
                  inner, inner) = grid.at(i, j);
      }
    }
    return DensityMatrix(std::move(rho), outer, inner);
  }
  for (int k = 0; k < outer; ++k) {
    for (int l = 0; l < outer; ++l) {
      const Matrix& block = grid.at(k, l);
      for (int i = 0; i < inner; ++i) {
        for (int ip = 0; ip < inner; ++ip) {
          rho(static_cast<Eigen::Index>(i) * outer + k,
              static_cast<Eigen::Index>(ip) * outer + l) = block(i, ip);
        }
      }
    }
  }
  return DensityMatrix(std::move(rho), inner, outer);
}

}  // namespace qdnc
