#include "exact_matrix.hpp"

#include <sstream>

namespace qci {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
  data_.assign(rows * cols, f.zero());
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, ErrorCode::DimensionMismatch,
          "matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch,
          "matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch,
          "matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x = x * s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == o.data_[i])) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::col(std::size_t c) const {
  Matrix v(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) v.at(i, 0) = at(i, c);
  return v;
}

void Matrix::set_col(std::size_t c, const Matrix& v) {
  require(v.rows_ == rows_ && v.cols_ == 1, ErrorCode::DimensionMismatch,
          "set_col shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, c) = v.at(i, 0);
}

Matrix Matrix::cols_slice(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

Matrix Matrix::flatten() const {
  Matrix v(field_, rows_ * cols_, 1);
  for (std::size_t i = 0; i < data_.size(); ++i) v.at(i, 0) = data_[i];
  return v;
}

Matrix Matrix::unflatten(const Matrix& v, std::size_t rows, std::size_t cols) {
  require(v.cols() == 1 && v.rows() == rows * cols,
          ErrorCode::DimensionMismatch, "unflatten shape mismatch");
  Matrix m(v.field(), rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i)
    m.at(i / cols, i % cols) = v.at(i, 0);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "\n" : "") << "[";
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << at(i, j).to_string();
    os << "]";
  }
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorCode::DimensionMismatch,
          "hstack row mismatch");
  Matrix r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), ErrorCode::DimensionMismatch,
          "vstack column mismatch");
  Matrix r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

Rref rref(Matrix m) {
  Rref out;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  out.mat = std::move(m);
  out.pivot_cols = std::move(pivots);
  return out;
}

namespace {

// Two-step fraction-free elimination; divisions by the previous pivot are
// exact, which keeps cyclotomic numerators/denominators from snowballing.
std::size_t rank_bareiss(Matrix m) {
  const Field& f = m.field();
  Scalar prev = f.one();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(row, j));
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        m.at(i, j) =
            (m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j)) / prev;
      m.at(i, col) = f.zero();
    }
    prev = m.at(row, col);
    ++row;
  }
  return row;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_prime_field()) return rref(m).rank();
  return rank_bareiss(m);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorCode::DimensionMismatch,
          "solve shape mismatch");
  Rref r = rref(hstack(a, b));
  for (std::size_t p : r.pivot_cols)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(r.pivot_cols[k], j) = r.mat.at(k, a.cols() + j);
  return x;
}

Matrix kernel_basis(const Matrix& a) {
  Rref r = rref(a);
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (pi < r.pivot_cols.size() && r.pivot_cols[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix k(a.field(), a.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k.at(fc, j) = a.field().one();
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      k.at(r.pivot_cols[i], j) = -r.mat.at(i, fc);
  }
  return k;
}

bool in_column_space(const Matrix& a, const Matrix& v) {
  return solve(a, v).has_value();
}

SpanTester::SpanTester(const Matrix& a) {
  // eliminate on [A | I] to record the row transform
  Matrix aug = hstack(a, Matrix::identity(a.field(), a.rows()));
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < aug.rows() && aug.at(sel, col).is_zero()) ++sel;
    if (sel == aug.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < aug.cols(); ++j)
        std::swap(aug.at(sel, j), aug.at(row, j));
    Scalar inv = aug.at(row, col).inverse();
    for (std::size_t j = 0; j < aug.cols(); ++j)
      aug.at(row, j) = aug.at(row, j) * inv;
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == row || aug.at(i, col).is_zero()) continue;
      Scalar f = aug.at(i, col);
      for (std::size_t j = 0; j < aug.cols(); ++j)
        aug.at(i, j) -= f * aug.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  rank_ = row;
  transform_ = Matrix(a.field(), a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j)
      transform_.at(i, j) = aug.at(i, a.cols() + j);
  for (std::size_t i = rank_; i < a.rows(); ++i) zero_rows_.push_back(i);
}

bool SpanTester::contains(const Matrix& v) const {
  require(v.rows() == transform_.cols(), ErrorCode::DimensionMismatch,
          "span test shape mismatch");
  if (zero_rows_.empty()) return true;
  Matrix w = transform_ * v;
  for (std::size_t i : zero_rows_)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (!w.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace qci
