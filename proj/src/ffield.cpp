#include "gsf/ffield.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace gsf {

std::uint32_t gcd_u32(std::uint32_t a, std::uint32_t b) { return std::gcd(a, b); }

FieldTower::FieldTower(PrimePower base, std::uint32_t n) : base_(base), n_(n) {
  if (n < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (n > 256) throw std::invalid_argument("extension degree above 256 is out of range");
  ext_poly_ = find_irreducible(base_, n_);

  const BaseField& F = base_;
  reduction_.resize(n_ > 1 ? n_ - 1 : 0);
  if (n_ > 1) {
    // x^n = -(c_0 + ... + c_{n-1} x^{n-1})
    Vec cur(n_);
    for (std::uint32_t j = 0; j < n_; ++j) cur[j] = F.neg(ext_poly_[j]);
    reduction_[0] = cur;
    for (std::uint32_t k = 1; k + 1 < n_; ++k) {
      // multiply by x and reduce
      Vec next(n_, 0);
      const Scalar top = cur[n_ - 1];
      for (std::uint32_t j = n_ - 1; j > 0; --j) next[j] = cur[j - 1];
      for (std::uint32_t j = 0; j < n_; ++j) next[j] = F.add(next[j], F.mul(top, reduction_[0][j]));
      reduction_[k] = next;
      cur = std::move(next);
    }
  }

  frob_.resize(n_);
  frob_[0] = Mat::identity(n_);
  if (n_ > 1) {
    const FieldElement xq = pow(basis(1), F.q());
    Mat m(n_, n_);
    FieldElement col = one();
    for (std::uint32_t k = 0; k < n_; ++k) {
      for (std::uint32_t r = 0; r < n_; ++r) m(r, k) = col.coeffs[r];
      col = mul(col, xq);
    }
    frob_[1] = m;
    for (std::uint32_t i = 2; i < n_; ++i) frob_[i] = mat_mul(F, frob_[i - 1], m);
  }

  trace_vec_.assign(n_, 0);
  for (std::uint32_t j = 0; j < n_; ++j) {
    Scalar t = 0;
    for (std::uint32_t i = 0; i < n_; ++i) t = F.add(t, frob_[i](0, j));
    trace_vec_[j] = t;
  }
  trace_form_ = Mat(n_, n_);
  for (std::uint32_t l = 0; l < n_; ++l) {
    for (std::uint32_t m = l; m < n_; ++m) {
      const Scalar t = trace(mul(basis(l), basis(m)));
      trace_form_(l, m) = t;
      trace_form_(m, l) = t;
    }
  }
}

FieldElement FieldTower::one() const { return from_scalar(1); }

FieldElement FieldTower::basis(std::uint32_t j) const {
  if (j >= n_) throw std::out_of_range("basis index out of range");
  FieldElement e = zero();
  e.coeffs[j] = 1;
  return e;
}

FieldElement FieldTower::from_scalar(Scalar c) const {
  FieldElement e = zero();
  e.coeffs[0] = c;
  return e;
}

FieldElement FieldTower::element(Vec coeffs) const {
  if (coeffs.size() != n_) {
    throw std::invalid_argument("element has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                std::to_string(n_));
  }
  for (auto c : coeffs) {
    if (c >= base_.q()) throw std::invalid_argument("coefficient out of range for GF(" + std::to_string(q()) + ")");
  }
  return FieldElement{std::move(coeffs)};
}

FieldElement FieldTower::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = zero();
  for (std::uint32_t j = 0; j < n_; ++j) r.coeffs[j] = base_.add(a.coeffs[j], b.coeffs[j]);
  return r;
}

FieldElement FieldTower::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = zero();
  for (std::uint32_t j = 0; j < n_; ++j) r.coeffs[j] = base_.sub(a.coeffs[j], b.coeffs[j]);
  return r;
}

FieldElement FieldTower::neg(const FieldElement& a) const {
  FieldElement r = zero();
  for (std::uint32_t j = 0; j < n_; ++j) r.coeffs[j] = base_.neg(a.coeffs[j]);
  return r;
}

FieldElement FieldTower::scale(Scalar c, const FieldElement& a) const {
  FieldElement r = zero();
  for (std::uint32_t j = 0; j < n_; ++j) r.coeffs[j] = base_.mul(c, a.coeffs[j]);
  return r;
}

FieldElement FieldTower::mul(const FieldElement& a, const FieldElement& b) const {
  const BaseField& F = base_;
  Vec prod(2 * n_ - 1, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    const Scalar x = a.coeffs[i];
    if (x == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] = F.add(prod[i + j], F.mul(x, b.coeffs[j]));
  }
  FieldElement r{Vec(prod.begin(), prod.begin() + n_)};
  for (std::uint32_t k = 0; k + 1 < n_; ++k) {
    const Scalar c = prod[n_ + k];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) r.coeffs[j] = F.add(r.coeffs[j], F.mul(c, reduction_[k][j]));
  }
  return r;
}

FieldElement FieldTower::pow(FieldElement a, std::uint64_t e) const {
  FieldElement r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

FieldElement FieldTower::inv(const FieldElement& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero in GF(q^n)");
  // a^{-1} = N(a)^{-1} * prod_{j>=1} sigma^j(a)
  FieldElement conj = one();
  for (std::uint32_t j = 1; j < n_; ++j) conj = mul(conj, frobenius(j, a));
  const FieldElement norm = mul(conj, a);
  return scale(base_.inv(norm.coeffs[0]), conj);
}

FieldElement FieldTower::frobenius(std::uint32_t i, const FieldElement& a) const {
  return FieldElement{mat_vec(base_, frobenius_matrix(i), a.coeffs)};
}

std::uint32_t FieldTower::order_of_power(std::uint32_t i) const { return n_ / std::gcd(n_, i % n_); }

FieldElement FieldTower::trace_rel(std::uint32_t t, const FieldElement& a) const {
  if (t == 0 || n_ % t != 0) {
    throw std::invalid_argument("relative trace: t = " + std::to_string(t) + " does not divide n = " +
                                std::to_string(n_));
  }
  FieldElement r = zero();
  for (std::uint32_t j = 0; j < n_ / t; ++j) r = add(r, frobenius(t * j, a));
  return r;
}

FieldElement FieldTower::norm_rel(std::uint32_t t, const FieldElement& a) const {
  if (t == 0 || n_ % t != 0) {
    throw std::invalid_argument("relative norm: t = " + std::to_string(t) + " does not divide n = " +
                                std::to_string(n_));
  }
  FieldElement r = one();
  for (std::uint32_t j = 0; j < n_ / t; ++j) r = mul(r, frobenius(t * j, a));
  return r;
}

Scalar FieldTower::trace(const FieldElement& a) const {
  Scalar t = 0;
  for (std::uint32_t j = 0; j < n_; ++j) t = base_.add(t, base_.mul(trace_vec_[j], a.coeffs[j]));
  return t;
}

}  // namespace gsf
