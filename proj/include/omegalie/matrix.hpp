#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "omegalie/fields.hpp"

namespace omegalie {

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const FieldPtr& f)
      : rows_(rows), cols_(cols), field_(f), data_(rows * cols, FieldElement::zero(f)) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require(data_.size() == rows * cols && !data_.empty(), ErrorKind::ShapeMismatch,
            "entry count does not match shape");
    field_ = data_.front().field();
    for (const auto& e : data_)
      require(same_field(e.field(), field_), ErrorKind::DescriptorMismatch, "mixed fields in matrix");
  }

  static Matrix identity(std::size_t n, const FieldPtr& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(f);
    return m;
  }

  static Matrix from_ints(const FieldPtr& f, const std::vector<std::vector<long long>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size(), f);
    for (std::size_t i = 0; i < m.rows_; ++i) {
      require(rows[i].size() == m.cols_, ErrorKind::ShapeMismatch, "ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = FieldElement::from_int(f, rows[i][j]);
    }
    return m;
  }

  /// Diagonal matrix with the given entries.
  static Matrix diagonal(const std::vector<FieldElement>& d) {
    require(!d.empty(), ErrorKind::ShapeMismatch, "empty diagonal");
    Matrix m(d.size(), d.size(), d.front().field());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const FieldPtr& field() const noexcept { return field_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const FieldElement& at(std::size_t i, std::size_t j) const {
    require(i < rows_ && j < cols_, ErrorKind::IndexOutOfRange,
            "(" + std::to_string(i) + "," + std::to_string(j) + ") outside " + shape());
    return (*this)(i, j);
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<FieldElement> column(std::size_t j) const {
    std::vector<FieldElement> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::ShapeMismatch, a.shape() + " * " + b.shape());
    Matrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const FieldElement& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::ShapeMismatch, a.shape() + " + " + b.shape());
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::ShapeMismatch, a.shape() + " - " + b.shape());
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  friend Matrix operator*(const FieldElement& s, const Matrix& a) {
    Matrix c = a;
    for (auto& e : c.data_) e = s * e;
    return c;
  }

  /// Matrix-vector product.
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const {
    require(v.size() == cols_, ErrorKind::ShapeMismatch, "vector length vs " + shape());
    std::vector<FieldElement> out(rows_, FieldElement::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Same matrix read over an extension of its field.
  Matrix embedded(const FieldPtr& target) const {
    Matrix m(rows_, cols_, target);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = embed(data_[i], target);
    return m;
  }

  /// Nested rows of canonical element strings.
  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
    return out;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

  static Matrix from_strings(const std::vector<std::vector<std::string>>& rows, const FieldPtr& f) {
    require(!rows.empty(), ErrorKind::ShapeMismatch, "empty matrix");
    Matrix m(rows.size(), rows.front().size(), f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == m.cols_, ErrorKind::ShapeMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = parse_element(rows[i][j], f);
    }
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  FieldPtr field_;
  std::vector<FieldElement> data_;
};

/// Reduced row echelon form with the list of pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

inline Echelon row_reduce(Matrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    FieldElement inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      FieldElement factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

inline FieldElement det(Matrix m) {
  require(m.square(), ErrorKind::ShapeMismatch, "determinant of " + m.shape());
  const std::size_t n = m.rows();
  FieldElement d = FieldElement::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return FieldElement::zero(m.field());
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    FieldElement inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      FieldElement factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return d;
}

inline Matrix inverse(const Matrix& m) {
  require(m.square(), ErrorKind::ShapeMismatch, "inverse of " + m.shape());
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElement::one(m.field());
  }
  Echelon e = row_reduce(std::move(aug));
  require(e.rank() >= n && e.pivots[n - 1] == n - 1, ErrorKind::SingularMatrix, "matrix is singular");
  Matrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// A particular solution of A x = b and the rank of A; the solution is
/// unique exactly when rank == A.cols().
struct SolveResult {
  std::vector<FieldElement> x;
  std::size_t rank = 0;
  bool unique(const Matrix& a) const noexcept { return rank == a.cols(); }
};

inline SolveResult solve(const Matrix& a, const std::vector<FieldElement>& b) {
  require(b.size() == a.rows(), ErrorKind::ShapeMismatch, "right-hand side length vs " + a.shape());
  Matrix aug(a.rows(), a.cols() + 1, a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = row_reduce(std::move(aug));
  SolveResult res;
  res.x.assign(a.cols(), FieldElement::zero(a.field()));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    require(e.pivots[r] != a.cols(), ErrorKind::InconsistentSystem, "linear system has no solution");
    res.x[e.pivots[r]] = e.reduced(r, a.cols());
    ++res.rank;
  }
  return res;
}

}  // namespace omegalie
