#pragma once

#include "qdnc/numerics.hpp"
#include "qdnc/states.hpp"

#include <vector>

// Block-operator decompositions of a bipartite state: under the basis
// ordering |i_a, k_b> -> i*dB + k every state splits as
//   rho = sum_ij E_ij x B_ij = sum_kl A_kl x F_kl
// with E_ij = |i_a><j_a|, F_kl = |k_b><l_b|. The B_ij are the dB x dB tiles
// of the matrix; the A_kl are the dA x dA strided slices.

namespace qdnc {

struct BlockGrid {
  Subsystem side;  // subsystem the blocks act on: b -> B_ij grid, a -> A_kl grid
  int outer = 0;   // grid is outer x outer
  int inner = 0;   // each block is inner x inner
  std::vector<Matrix> blocks;  // row-major

  const Matrix& at(int i, int j) const {
    return blocks[static_cast<std::size_t>(i) * outer + j];
  }
  Matrix& at(int i, int j) {
    return blocks[static_cast<std::size_t>(i) * outer + j];
  }
};

// B_ij = Tr_a((|j_a><i_a| x 1) rho): dA x dA grid of dB x dB operators,
// extracted as contiguous tiles (identical to the trace contraction under
// the fixed basis ordering).
BlockGrid b_blocks(const DensityMatrix& rho);

// A_kl = Tr_b((1 x |l_b><k_b|) rho): dB x dB grid of dA x dA operators.
BlockGrid a_blocks(const DensityMatrix& rho);

// Inverse of the extraction; round-trips the originating state exactly.
// Throws std::invalid_argument on inconsistent block dimensions.
DensityMatrix reassemble(const BlockGrid& grid);

}  // namespace qdnc
