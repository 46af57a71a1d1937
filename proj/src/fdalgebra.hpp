#pragma once

#include <utility>
#include <vector>

#include "json.hpp"

#include "exact_matrix.hpp"
#include "rng.hpp"

namespace qci {

// coordinates of an algebra element: sparse (basis index, coefficient) pairs,
// sorted by index, no zero coefficients
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

SparseVec sparsify(const Matrix& column);
Matrix densify(const Field& f, std::uint32_t dim, const SparseVec& v);

// Associative unital algebra of finite dimension, given by structure
// constants.  mult[i * dim + j] holds the product e_i e_j.  Construction
// verifies the unit laws on every basis element and associativity on all
// triples up to dimension 64 (seeded random triples above that).
struct FdAlgebra {
  Field field;
  std::uint32_t dim = 0;
  std::vector<SparseVec> mult;
  Matrix unit;  // dim x 1

  static FdAlgebra create(const Field& f, std::uint32_t dim,
                          std::vector<SparseVec> mult, Matrix unit,
                          std::uint64_t check_seed = 0);

  // products and multiplication operators on coordinate vectors
  Matrix multiply(const Matrix& u, const Matrix& v) const;
  Matrix left_mult(const Matrix& u) const;   // dim x dim
  Matrix right_mult(const Matrix& u) const;  // dim x dim
  bool is_commutative() const;
};

// Radical via the characteristic-zero trace-form criterion: x is radical
// exactly when trace(L_{xy}) vanishes for every y.  Refuses positive
// characteristic rather than use an invalid algorithm.
Matrix algebra_radical_basis(const FdAlgebra& a);

struct AlgebraQuotient {
  FdAlgebra algebra;
  Matrix proj;  // dimQ x dimA
  Matrix lift;  // dimA x dimQ, classes of chosen standard basis vectors
};
AlgebraQuotient semisimple_quotient(const FdAlgebra& a);

// Complete set of orthogonal primitive idempotents summing to 1.  Optional
// seeds (orthogonal idempotents) pre-split the search; blocks are then
// refined by lifting idempotents from the semisimple quotient of eAe, found
// through minimal polynomials with roots in the field.  Splitting that
// would need irrational spectra raises CannotDecide.  The result is ordered
// deterministically (first nonzero coordinate, then coordinate text).
std::vector<Matrix> complete_primitive_idempotents(
    const FdAlgebra& a, std::vector<Matrix> seeds = {});

// True when A/rad(A) is commutative and splits into one-dimensional blocks
// over the ground field.
bool simples_one_dimensional(const FdAlgebra& a);

struct ProjDimension {
  bool exact = true;
  std::uint32_t value = 0;  // the dimension, or the step cap when not exact
};

struct GldimReport {
  std::vector<ProjDimension> simple_pds;  // one per primitive idempotent
  ProjDimension gldim;                    // maximum of the above
  std::uint32_t max_steps = 0;
  nlohmann::json to_json() const;
};

// Global dimension as the maximum projective dimension of the simple
// modules, each resolved by explicit minimal projective covers.  Any
// resolution still running after max_steps syzygies reports AtLeast.
GldimReport global_dimension(const FdAlgebra& a, std::uint32_t max_steps,
                             const std::vector<Matrix>& seeds = {});

}  // namespace qci
