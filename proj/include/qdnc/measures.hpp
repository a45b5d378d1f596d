#pragma once

#include "qdnc/blocks.hpp"
#include "qdnc/numerics.hpp"
#include "qdnc/states.hpp"

#include <string>
#include <utility>
#include <vector>

// The non-commutativity measures: d_n (trace norm), d_n_prime
// (Hilbert-Schmidt norm) and the symmetric two-sided variant, all defined
// as sums of commutator norms over a fixed pair set of block indices,
// plus closed-form evaluators for the pure, Werner, isotropic and
// Bell-diagonal families.

namespace qdnc {

enum class NormKind { TraceNorm, HilbertSchmidt };

double schatten_norm(const Matrix& x, NormKind norm);

// One summand of the measure: the commutator of blocks (i,j) and (k,l).
struct BlockPair {
  int i, j, k, l;
};

// The index pairs {(i,j)<=(k,l) componentwise, distinct} followed by
// {i<k, l<j}, each in lexicographic order. Together these enumerate every
// unordered pair of distinct block indices exactly once; the fixed order
// makes the floating-point sum reproducible.
std::vector<BlockPair> pair_set(int dim_a);

// sum_{r<s} ||[gamma_r, gamma_s]|| over unordered pairs of the family.
double total_non_commutativity(const std::vector<Matrix>& gamma, NormKind norm);

// The pair-set commutator sum over a block grid.
double pair_sum(const BlockGrid& grid, NormKind norm);

enum class MeasureKind { dn, dn_prime, dn_symmetric };
enum class Method { direct, closed_form, numeric_minimization };

struct MeasureResult {
  double value = 0;
  MeasureKind measure = MeasureKind::dn;
  NormKind norm = NormKind::TraceNorm;
  Method method = Method::direct;
  std::vector<std::pair<std::string, std::string>> metadata;
};

// Trace-norm measure over the B-side blocks.
MeasureResult d_n(const DensityMatrix& rho);

// Hilbert-Schmidt variant; d_n(rho) >= d_n_prime(rho) termwise.
MeasureResult d_n_prime(const DensityMatrix& rho);

// Two-sided measure: the pair-set sum over the B-side blocks plus the same
// sum over the A-side blocks, both under the given norm. Vanishes exactly
// on classical-classical states.
MeasureResult d_n_symmetric(const DensityMatrix& rho, NormKind norm);

// Closed forms for |psi> = sum_k lambda_k |k,k>:
//   TraceNorm:      2 sum_{i<j} li lj (1 + li lj)
//   HilbertSchmidt:   sum_{i<j} li lj (2 + sqrt(2) li lj)
// Both agree with the direct block computation for every Schmidt rank.
double d_n_pure_closed(const SchmidtVector& lambda, NormKind norm);

// The published closed forms for the same family, transcribed verbatim:
// a nested sum over index windows plus, for the Hilbert-Schmidt case, a
// bare additive sqrt(2). The trace-norm variant agrees with the direct
// computation only for Schmidt rank <= 3; the additive constant makes the
// Hilbert-Schmidt variant wrong everywhere (sqrt(2) instead of 0 on
// product states). Retained so the discrepancies can be asserted rather
// than hidden.
double d_n_pure_closed_printed(const SchmidtVector& lambda, NormKind norm);

// Published Werner closed forms for d in {2,3,4}, verbatim. These are
// scaled relative to the direct computation (factor 4 at d=2, 23/6 and
// 13/5 at d=3,4 for the trace norm); their zeros at alpha=(d-1)/(2d) are
// shared with the direct values. Kept for curve-shape comparison.
double werner_closed_paper(int d, double alpha, NormKind norm);

// Published isotropic closed forms for d in {2,3,4}, verbatim; scaled by 4
// at d=2, not proportional to the direct value at d=3,4. Zeros at
// beta=1/d^2 are shared.
double isotropic_closed_paper(int d, double beta, NormKind norm);

// Closed forms for Bell-diagonal states; exact (they match the direct
// computation to round-off):
//   TraceNorm:      |c1 c2|/2 + (|c3|/2)(|c1-c2| + |c1+c2|)
//   HilbertSchmidt: |c1 c2|/(2 sqrt(2)) + (|c3|/sqrt(2)) sqrt(c1^2+c2^2)
double bell_diagonal_closed(const BellCoefficients& c, NormKind norm);

}  // namespace qdnc
