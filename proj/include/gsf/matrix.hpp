#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "gsf/base_field.hpp"

namespace gsf {

/// Dense row-major matrix over a base field. Entries are packed GF(q) scalars;
/// the field itself is passed to every operation that needs arithmetic.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<Scalar>& data() const { return data_; }
  std::vector<Scalar>& data() { return data_; }

  bool is_zero() const;
  bool is_symmetric() const;
  Mat transpose() const;
  std::vector<Vec> to_rows() const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat mat_mul(const BaseField& F, const Mat& a, const Mat& b);
Mat mat_add(const BaseField& F, const Mat& a, const Mat& b);
Mat mat_sub(const BaseField& F, const Mat& a, const Mat& b);
Mat mat_scale(const BaseField& F, Scalar c, const Mat& a);
Vec mat_vec(const BaseField& F, const Mat& a, std::span<const Scalar> v);

}  // namespace gsf
