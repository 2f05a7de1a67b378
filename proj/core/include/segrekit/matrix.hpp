#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "segrekit/error.hpp"

namespace segre {

/// Dense row-major matrix over an exact scalar ring S (Rational or PolyT).
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw DomainError("matrix entry count mismatch");
  }

  /// Builds entry (i, j) from f(i, j).
  template <class F>
  static Matrix generate(std::size_t rows, std::size_t cols, F&& f) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = f(i, j);
    return m;
  }

  static Matrix identity(std::size_t n) {
    return generate(n, n, [](std::size_t i, std::size_t j) { return S(i == j ? 1 : 0); });
  }

  static Matrix diagonal(const std::vector<S>& diag) {
    return generate(diag.size(), diag.size(),
                    [&](std::size_t i, std::size_t j) { return i == j ? diag[i] : S(); });
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<S>& entries() const { return entries_; }

  std::vector<S> row(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  std::vector<S> column(std::size_t j) const {
    std::vector<S> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  /// Rows [first, first + count) as a new matrix.
  Matrix row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw DomainError("row block out of range");
    return generate(count, cols_, [&](std::size_t i, std::size_t j) { return (*this)(first + i, j); });
  }

  template <class F>
  auto map(F&& f) const {
    using T = std::invoke_result_t<F, const S&>;
    std::vector<T> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(f(e));
    return Matrix<T>(rows_, cols_, std::move(out));
  }

  Matrix scaled(const S& c) const {
    return map([&](const S& e) { return e * c; });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend std::vector<S> operator*(const Matrix& a, const std::vector<S>& v) {
    if (a.cols_ != v.size()) throw DomainError("matrix-vector dimension mismatch");
    std::vector<S> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch");
    Matrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> entries_;
};

/// (row, col) of the first entry where a and b differ; nullopt if equal.
/// Throws on shape mismatch.
template <class S>
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix<S>& a,
                                                                    const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace segre
