#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace qci {

// Dense matrix over an exact field.  Desk-scale: correctness and determinism
// over raw speed; all pivoting is first-nonzero (top-down, left-to-right) so
// every derived basis is reproducible.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool valid() const { return rows_ + cols_ > 0 || data_.size() == 0; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  Matrix col(std::size_t c) const;
  void set_col(std::size_t c, const Matrix& v);
  Matrix cols_slice(const std::vector<std::size_t>& idx) const;

  // column vector of all entries, row-major order
  Matrix flatten() const;
  static Matrix unflatten(const Matrix& v, std::size_t rows, std::size_t cols);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix mat;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

// Reduced row echelon form via exact field elimination.
Rref rref(Matrix m);

// Rank.  Over cyclotomic fields a fraction-free (Bareiss-style) elimination
// keeps intermediate coefficients under control; over F_p plain elimination.
std::size_t rank(const Matrix& m);

// Solve A X = B (B may have several columns); free variables set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Columns form a deterministic kernel basis (one per free column of rref).
Matrix kernel_basis(const Matrix& a);

bool in_column_space(const Matrix& a, const Matrix& v);

// Repeated membership tests against one fixed column span: records the row
// transform E with E*A in echelon form once, then each test is a single
// matrix-vector product.
class SpanTester {
 public:
  explicit SpanTester(const Matrix& a);
  bool contains(const Matrix& v) const;  // every column of v
  std::size_t span_rank() const { return rank_; }

 private:
  Matrix transform_;
  std::vector<std::size_t> zero_rows_;
  std::size_t rank_ = 0;
};

}  // namespace qci
