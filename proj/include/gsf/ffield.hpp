#pragma once

#include <cstdint>
#include <vector>

#include "gsf/base_field.hpp"
#include "gsf/matrix.hpp"

namespace gsf {

/// Element of L = GF(q^n): coordinates over K = GF(q) in the power basis
/// 1, x, ..., x^(n-1), little-endian.
struct FieldElement {
  Vec coeffs;

  bool is_zero() const {
    for (auto c : coeffs) {
      if (c != 0) return false;
    }
    return true;
  }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// The extension L = GF(q^n) of K = GF(q), q = p^s, modelled as
/// K[x]/(ext_poly) with ext_poly the canonical irreducible of degree n. The
/// Galois group is generated by sigma: b -> b^q; its powers are precomputed as
/// K-linear matrices acting on coordinate columns.
///
/// Immutable after construction.
class FieldTower {
 public:
  FieldTower(PrimePower base, std::uint32_t n);

  const BaseField& base() const { return base_; }
  std::uint32_t p() const { return base_.p(); }
  std::uint32_t s() const { return base_.s(); }
  std::uint32_t q() const { return base_.q(); }
  std::uint32_t degree() const { return n_; }
  const Vec& base_poly() const { return base_.modulus(); }
  const Vec& ext_poly() const { return ext_poly_; }

  FieldElement zero() const { return FieldElement{Vec(n_, 0)}; }
  FieldElement one() const;
  FieldElement basis(std::uint32_t j) const;
  FieldElement from_scalar(Scalar c) const;
  /// Validates length and digit range.
  FieldElement element(Vec coeffs) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement scale(Scalar c, const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

  /// Matrix of sigma^i, i taken mod n. Column k holds the coordinates of sigma^i(x^k).
  const Mat& frobenius_matrix(std::uint32_t i) const { return frob_[i % n_]; }
  /// sigma^i(a) = a^(q^i), computed through the precomputed matrix.
  FieldElement frobenius(std::uint32_t i, const FieldElement& a) const;
  /// sigma^(-i)(a).
  FieldElement frobenius_inverse(std::uint32_t i, const FieldElement& a) const {
    return frobenius((n_ - i % n_) % n_, a);
  }

  /// Order of sigma^i in the Galois group: n / gcd(n, i).
  std::uint32_t order_of_power(std::uint32_t i) const;

  /// Relative trace to L_t, the fixed field of sigma^t: sum over j < n/t of sigma^(tj)(a).
  /// Requires t | n.
  FieldElement trace_rel(std::uint32_t t, const FieldElement& a) const;
  /// Relative norm to L_t: product over j < n/t of sigma^(tj)(a). Requires t | n.
  FieldElement norm_rel(std::uint32_t t, const FieldElement& a) const;
  /// Absolute trace tr^L_K as a scalar.
  Scalar trace(const FieldElement& a) const;

  /// tr(e_j) for the power basis.
  const Vec& trace_vector() const { return trace_vec_; }
  /// Gram matrix of (x, y) -> tr(xy) in the power basis.
  const Mat& trace_form() const { return trace_form_; }

 private:
  BaseField base_;
  std::uint32_t n_;
  Vec ext_poly_;
  std::vector<Vec> reduction_;  // reduction_[k] = x^(n+k) mod ext_poly
  std::vector<Mat> frob_;
  Vec trace_vec_;
  Mat trace_form_;
};

std::uint32_t gcd_u32(std::uint32_t a, std::uint32_t b);

}  // namespace gsf
