#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gsf/base_field.hpp"
#include "gsf/ffield.hpp"
#include "gsf/matrix.hpp"

namespace gsf {

/// Reduces the rows to reduced row-echelon form (leading entries 1, pivot
/// columns cleared), dropping zero rows. The result is unique per row space.
std::vector<Vec> rref(const BaseField& F, std::vector<Vec> rows);

std::size_t rank(const BaseField& F, const Mat& m);

/// Rank of a rows x cols row-major buffer; destroys the buffer.
std::size_t rank_in_place(const BaseField& F, std::span<Scalar> data, std::size_t rows, std::size_t cols);

/// A K-subspace of K^ambient held as its canonical reduced echelon basis, so
/// two subspaces are equal exactly when their representations are.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(const BaseField& F, std::size_t ambient_dim, std::vector<Vec> vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
};

/// Null space {v : m v = 0}.
Subspace kernel(const BaseField& F, const Mat& m);

Subspace sum(const BaseField& F, const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace intersect(const BaseField& F, const Subspace& a, const Subspace& b);
bool contains(const BaseField& F, const Subspace& a, std::span<const Scalar> v);
/// True iff the dimensions of the parts add up to the dimension of their sum.
bool is_direct_sum(const BaseField& F, std::span<const Subspace> parts);
Subspace sum_all(const BaseField& F, std::span<const Subspace> parts);

/// {b in L : sigma^t(b) = sign * b}, as a subspace of K^n. Requires 1 <= t <= n, sign = +1 or -1.
Subspace eigenspace_of_power(const FieldTower& tower, std::uint32_t t, int sign);

FieldElement as_element(const Vec& v);

// Sym_K(L) coordinates: the upper triangle (r <= c) of a symmetric n x n
// matrix, row-major, giving n(n+1)/2 coordinates.
std::size_t sym_dim(std::size_t n);
Vec flatten_sym(const Mat& m);
Mat unflatten_sym(std::span<const Scalar> v, std::size_t n);

}  // namespace gsf
