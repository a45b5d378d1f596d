#include <doctest.h>

#include "qdnc/blocks.hpp"
#include "qdnc/states.hpp"
#include "test_helpers.hpp"

using namespace qdnc;
using qdnc_test::max_abs_diff;

TEST_SUITE("blocks") {
  TEST_CASE("b blocks are the contiguous tiles of the density matrix") {
    const DensityMatrix rho = random_density(2, 3, std::uint64_t{17});
    const BlockGrid grid = b_blocks(rho);
    CHECK(grid.side == Subsystem::b);
    CHECK(grid.outer == 2);
    CHECK(grid.inner == 3);
    REQUIRE(grid.blocks.size() == 4);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const Matrix expected = rho.matrix().block(i * 3, j * 3, 3, 3);
        CHECK(max_abs_diff(grid.at(i, j), expected) == 0.0);
      }
    }
  }

  TEST_CASE("a blocks are the strided slices of the density matrix") {
    const DensityMatrix rho = random_density(3, 2, std::uint64_t{23});
    const BlockGrid grid = a_blocks(rho);
    CHECK(grid.side == Subsystem::a);
    CHECK(grid.outer == 2);
    CHECK(grid.inner == 3);
    REQUIRE(grid.blocks.size() == 4);
    for (int k = 0; k < 2; ++k) {
      for (int l = 0; l < 2; ++l) {
        Matrix expected(3, 3);
        for (int i = 0; i < 3; ++i)
          for (int ip = 0; ip < 3; ++ip) expected(i, ip) = rho.matrix()(i * 2 + k, ip * 2 + l);
        CHECK(max_abs_diff(grid.at(k, l), expected) == 0.0);
      }
    }
  }

  TEST_CASE("diagonal blocks sum to the reduced state of the other side") {
    const DensityMatrix rho = random_density(3, 3, std::uint64_t{31});
    const BlockGrid b = b_blocks(rho);
    Matrix sum_b = Matrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i) sum_b += b.at(i, i);
    CHECK(max_abs_diff(sum_b, partial_trace(rho.matrix(), 3, 3, Subsystem::b)) < 1e-14);

    const BlockGrid a = a_blocks(rho);
    Matrix sum_a = Matrix::Zero(3, 3);
    for (int k = 0; k < 3; ++k) sum_a += a.at(k, k);
    CHECK(max_abs_diff(sum_a, partial_trace(rho.matrix(), 3, 3, Subsystem::a)) < 1e-14);
  }

  TEST_CASE("block grids are hermitian as a whole") {
    const DensityMatrix rho = random_density(2, 2, std::uint64_t{5});
    const BlockGrid b = b_blocks(rho);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(max_abs_diff(b.at(i, j).adjoint(), b.at(j, i)) == 0.0);
  }

  TEST_CASE("reassemble inverts both extractions") {
    for (auto [da, db] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
      const DensityMatrix rho =
          random_density(da, db, static_cast<std::uint64_t>(100 * da + db));
      const DensityMatrix from_b = reassemble(b_blocks(rho));
      CHECK(from_b.dim_a() == da);
      CHECK(from_b.dim_b() == db);
      CHECK(max_abs_diff(from_b.matrix(), rho.matrix()) == 0.0);
      const DensityMatrix from_a = reassemble(a_blocks(rho));
      CHECK(from_a.dim_a() == da);
      CHECK(from_a.dim_b() == db);
      CHECK(max_abs_diff(from_a.matrix(), rho.matrix()) == 0.0);
    }
  }

  TEST_CASE("reassemble rejects inconsistent grids") {
    const DensityMatrix rho = random_density(2, 2, std::uint64_t{9});
    BlockGrid grid = b_blocks(rho);
    grid.blocks.pop_back();
    CHECK_THROWS_AS(reassemble(grid), std::invalid_argument);

    BlockGrid wrong_shape = b_blocks(rho);
    wrong_shape.blocks[1] = Matrix::Zero(3, 3);
    CHECK_THROWS_AS(reassemble(wrong_shape), std::invalid_argument);
  }

  TEST_CASE("known two qubit example") {
    // |00><00| has a single nonzero B block: B_00 = |0><0|
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    const BlockGrid grid = b_blocks(validate(m, 2, 2));
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK(max_abs_diff(grid.at(0, 0), expected) == 0.0);
    CHECK(grid.at(0, 1).isZero(0.0));
    CHECK(grid.at(1, 0).isZero(0.0));
    CHECK(grid.at(1, 1).isZero(0.0));
  }
}
