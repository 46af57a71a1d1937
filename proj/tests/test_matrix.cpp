#include "doctest.h"

#include "exact_matrix.hpp"
#include "rng.hpp"
#include "scalar.hpp"

using namespace qci;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                     Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = sample_scalar(f, rng);
  return m;
}

}  // namespace

TEST_CASE("row reduction and rank") {
  const Field f = Field::prime(5);
  Matrix m(f, 3, 3);
  // row 2 equals 2*row 1 modulo 5; row 3 is independent
  int vals[3][3] = {{1, 2, 3}, {2, 4, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = f.from_int(vals[i][j]);
  CHECK(rank(m) == 2);

  const Rref r = rref(m);
  CHECK(r.rank() == 2);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});

  CHECK(rank(Matrix::identity(f, 4)) == 4);
  CHECK(rank(Matrix(f, 3, 2)) == 0);
}

TEST_CASE("solving exact linear systems") {
  const Field f = Field::cyclotomic(3);
  Rng rng(11);
  const Matrix a = random_matrix(f, 4, 4, rng);
  const Matrix x = random_matrix(f, 4, 2, rng);
  const Matrix b = a * x;
  const auto sol = solve(a, b);
  REQUIRE(sol.has_value());
  CHECK(a * *sol == b);

  // inconsistent system: rank-deficient a with generic right side
  Matrix low(f, 3, 3);
  low.at(0, 0) = f.one();
  Matrix rhs(f, 3, 1);
  rhs.at(1, 0) = f.one();
  CHECK_FALSE(solve(low, rhs).has_value());
}

TEST_CASE("kernels") {
  const Field f = Field::prime(7);
  Matrix m(f, 2, 3);
  m.at(0, 0) = f.one();
  m.at(0, 1) = f.from_int(2);
  m.at(1, 2) = f.one();
  const Matrix k = kernel_basis(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());

  CHECK(kernel_basis(Matrix::identity(f, 3)).cols() == 0);
}

TEST_CASE("rank nullity on random matrices") {
  const Field f = Field::prime(5);
  for (std::uint64_t t = 0; t < 12; ++t) {
    Rng rng = trial_rng(123, t);
    const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    const Matrix m = random_matrix(f, rows, cols, rng);
    CHECK(rank(m) + kernel_basis(m).cols() == cols);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("span testing") {
  const Field f = Field::prime(5);
  Matrix basis(f, 3, 2);
  basis.at(0, 0) = f.one();
  basis.at(1, 1) = f.one();
  SpanTester span(basis);
  CHECK(span.span_rank() == 2);

  Matrix inside(f, 3, 1);
  inside.at(0, 0) = f.from_int(3);
  inside.at(1, 0) = f.from_int(4);
  CHECK(span.contains(inside));

  Matrix outside(f, 3, 1);
  outside.at(2, 0) = f.one();
  CHECK_FALSE(span.contains(outside));
  CHECK(in_column_space(basis, inside));
  CHECK_FALSE(in_column_space(basis, outside));
}

TEST_CASE("matrix block operations") {
  const Field f = Field::prime(5);
  Rng rng(3);
  const Matrix a = random_matrix(f, 2, 3, rng);
  const Matrix b = random_matrix(f, 2, 2, rng);
  const Matrix h = hstack(a, b);
  CHECK(h.rows() == 2);
  CHECK(h.cols() == 5);
  CHECK(h.col(3) == b.col(0));

  const Matrix v = vstack(a, random_matrix(f, 1, 3, rng));
  CHECK(v.rows() == 3);

  const Matrix flat = a.flatten();
  CHECK(flat.rows() == 6);
  CHECK(Matrix::unflatten(flat, 2, 3) == a);

  CHECK(a.scaled(f.from_int(2)) + a.scaled(f.from_int(3)) == a.scaled(f.from_int(5)));
  CHECK((a - a).is_zero());
}
