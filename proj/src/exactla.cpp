#include "gsf/exactla.hpp"

#include <stdexcept>
#include <string>

namespace gsf {

namespace {

void require_ambient(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("ambient dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

std::vector<Vec> rref(const BaseField& F, std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Scalar inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const Scalar f = rows[o][c];
      for (std::size_t k = c; k < cols; ++k) rows[o][k] = F.sub(rows[o][k], F.mul(f, rows[r][k]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t rank_in_place(const BaseField& F, std::span<Scalar> a, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t k = c; k < cols; ++k) std::swap(a[r * cols + k], a[piv * cols + k]);
    }
    const Scalar inv = F.inv(a[r * cols + c]);
    for (std::size_t o = r + 1; o < rows; ++o) {
      const Scalar x = a[o * cols + c];
      if (x == 0) continue;
      const Scalar f = F.mul(x, inv);
      for (std::size_t k = c; k < cols; ++k) a[o * cols + k] = F.sub(a[o * cols + k], F.mul(f, a[r * cols + k]));
    }
    ++r;
  }
  return r;
}

std::size_t rank(const BaseField& F, const Mat& m) {
  std::vector<Scalar> buf = m.data();
  return rank_in_place(F, buf, m.rows(), m.cols());
}

Subspace Subspace::span(const BaseField& F, std::size_t ambient_dim, std::vector<Vec> vectors) {
  for (const auto& v : vectors) require_ambient(ambient_dim, v.size());
  Subspace s(ambient_dim);
  s.basis_ = rref(F, std::move(vectors));
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec e(ambient_dim, 0);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
  }
  return s;
}

Subspace kernel(const BaseField& F, const Mat& m) {
  const std::size_t cols = m.cols();
  const std::vector<Vec> red = rref(F, m.to_rows());
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : red) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < red.size(); ++r) v[pivot_of_row[r]] = F.neg(red[r][f]);
    basis.push_back(std::move(v));
  }
  return Subspace::span(F, cols, std::move(basis));
}

Subspace sum(const BaseField& F, const Subspace& a, const Subspace& b) {
  require_ambient(a.ambient_dim(), b.ambient_dim());
  std::vector<Vec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(F, a.ambient_dim(), std::move(rows));
}

Subspace intersect(const BaseField& F, const Subspace& a, const Subspace& b) {
  require_ambient(a.ambient_dim(), b.ambient_dim());
  const std::size_t n = a.ambient_dim();
  // Rows (v | v) for v in A and (w | 0) for w in B; after reduction the rows
  // whose left half vanishes span A ∩ B in their right half.
  std::vector<Vec> rows;
  for (const auto& v : a.basis()) {
    Vec r(2 * n);
    std::copy(v.begin(), v.end(), r.begin());
    std::copy(v.begin(), v.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
    rows.push_back(std::move(r));
  }
  for (const auto& w : b.basis()) {
    Vec r(2 * n, 0);
    std::copy(w.begin(), w.end(), r.begin());
    rows.push_back(std::move(r));
  }
  std::vector<Vec> inter;
  for (const auto& r : rref(F, std::move(rows))) {
    bool left_zero = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (r[k] != 0) {
        left_zero = false;
        break;
      }
    }
    if (left_zero) inter.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
  }
  return Subspace::span(F, n, std::move(inter));
}

bool contains(const BaseField& F, const Subspace& a, std::span<const Scalar> v) {
  require_ambient(a.ambient_dim(), v.size());
  std::vector<Vec> rows = a.basis();
  rows.emplace_back(v.begin(), v.end());
  return rref(F, std::move(rows)).size() == a.dim();
}

Subspace sum_all(const BaseField& F, std::span<const Subspace> parts) {
  if (parts.empty()) return Subspace(0);
  std::vector<Vec> rows;
  for (const auto& p : parts) {
    require_ambient(parts.front().ambient_dim(), p.ambient_dim());
    rows.insert(rows.end(), p.basis().begin(), p.basis().end());
  }
  return Subspace::span(F, parts.front().ambient_dim(), std::move(rows));
}

bool is_direct_sum(const BaseField& F, std::span<const Subspace> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  return sum_all(F, parts).dim() == total;
}

Subspace eigenspace_of_power(const FieldTower& tower, std::uint32_t t, int sign) {
  const std::uint32_t n = tower.degree();
  if (t < 1 || t > n) throw std::invalid_argument("eigenspace_of_power: t must lie in [1, n]");
  if (sign != 1 && sign != -1) throw std::invalid_argument("eigenspace_of_power: sign must be +1 or -1");
  const BaseField& F = tower.base();
  Mat m = tower.frobenius_matrix(t);
  for (std::uint32_t d = 0; d < n; ++d) m(d, d) = sign == 1 ? F.sub(m(d, d), 1) : F.add(m(d, d), 1);
  return kernel(F, m);
}

FieldElement as_element(const Vec& v) { return FieldElement{v}; }

std::size_t sym_dim(std::size_t n) { return n * (n + 1) / 2; }

Vec flatten_sym(const Mat& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("flatten_sym: matrix is not symmetric");
  Vec v;
  v.reserve(sym_dim(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r; c < m.cols(); ++c) v.push_back(m(r, c));
  }
  return v;
}

Mat unflatten_sym(std::span<const Scalar> v, std::size_t n) {
  if (v.size() != sym_dim(n)) throw std::invalid_argument("unflatten_sym: wrong coordinate count");
  Mat m(n, n);
  std::size_t k = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      m(r, c) = v[k];
      m(c, r) = v[k];
      ++k;
    }
  }
  return m;
}

}  // namespace gsf
