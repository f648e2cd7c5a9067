#pragma once

#include "laxcenter/integer.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace laxcenter {

/// Dense row-major matrix of arbitrary-precision integers. The shape is
/// fixed at construction; entries are mutable.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> diag);
  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static IntMatrix from_int_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vec row_vec(std::size_t r) const;
  Vec col_vec(std::size_t c) const;

  IntMatrix transpose() const;
  bool is_zero() const;

  /// Rows of `top` followed by rows of `bottom`; column counts must agree.
  static IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom);
  /// Columns of `left` followed by columns of `right`.
  static IntMatrix concat(const IntMatrix& left, const IntMatrix& right);

  IntMatrix select_rows(std::span<const std::size_t> which) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

/// Row vector times matrix.
Vec mul(std::span<const Integer> x, const IntMatrix& m);

/// Kronecker product.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/// Diagonal matrix with a row m*e_i for every coordinate whose modulus m is
/// nonzero (free coordinates contribute no row).
IntMatrix modulus_rows(std::span<const Integer> moduli);

}  // namespace laxcenter
