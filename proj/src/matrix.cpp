#include "gsf/matrix.hpp"

namespace gsf {

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  Mat m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool Mat::is_zero() const {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<Vec> Mat::to_rows() const {
  std::vector<Vec> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

Mat mat_mul(const BaseField& F, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(x, b(k, j)));
    }
  }
  return out;
}

Mat mat_add(const BaseField& F, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_add: shape mismatch");
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = F.add(a.data()[i], b.data()[i]);
  return out;
}

Mat mat_sub(const BaseField& F, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_sub: shape mismatch");
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = F.sub(a.data()[i], b.data()[i]);
  return out;
}

Mat mat_scale(const BaseField& F, Scalar c, const Mat& a) {
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = F.mul(c, a.data()[i]);
  return out;
}

Vec mat_vec(const BaseField& F, const Mat& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  Vec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = F.add(acc, F.mul(a(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

}  // namespace gsf
