#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gsf {

/// An element of GF(q), q = p^s: base-p digits packed little-endian into one
/// integer, i.e. the digit vector (d_0, ..., d_{s-1}) is stored as sum d_i p^i.
using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

struct PrimePower {
  std::uint32_t p = 3;
  std::uint32_t s = 1;

  std::uint64_t q() const;
};

bool is_prime(std::uint64_t v);

/// Throws std::invalid_argument unless p is an odd prime and s >= 1.
void validate(const PrimePower& pp);

/// The finite field GF(q). For s == 1 arithmetic is plain modular arithmetic;
/// for s > 1 elements are residues modulo the canonical irreducible of degree
/// s over GF(p), multiplied through discrete log tables.
class BaseField {
 public:
  explicit BaseField(PrimePower pp);

  static BaseField prime(std::uint32_t p) { return BaseField(PrimePower{p, 1}); }

  std::uint32_t p() const { return p_; }
  std::uint32_t s() const { return s_; }
  std::uint32_t q() const { return q_; }
  PrimePower prime_power() const { return {p_, s_}; }

  /// Defining polynomial of GF(q) over GF(p), monic, s + 1 digits. For s == 1
  /// this is the polynomial x.
  const Vec& modulus() const { return modulus_; }

  Scalar add(Scalar a, Scalar b) const {
    if (s_ == 1) {
      const Scalar r = a + b;
      return r >= p_ ? r - p_ : r;
    }
    return add_digits(a, b);
  }
  Scalar neg(Scalar a) const {
    if (s_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_digits(a);
  }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const {
    if (s_ == 1) return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Scalar from_int(std::int64_t v) const;

  std::vector<std::uint32_t> digits(Scalar a) const;
  Scalar from_digits(std::span<const std::uint32_t> digits) const;

  bool is_square(Scalar a) const;

 private:
  Scalar add_digits(Scalar a, Scalar b) const;
  Scalar neg_digits(Scalar a) const;
  Scalar mul_slow(Scalar a, Scalar b) const;

  std::uint32_t p_;
  std::uint32_t s_;
  std::uint32_t q_;
  Vec modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<Scalar> exp_;
};

// Dense polynomials over a BaseField, little-endian coefficient vectors with
// no trailing zeros (the zero polynomial is the empty vector).
namespace poly {

void trim(Vec& f);
std::size_t degree(const Vec& f);  // degree of a nonzero polynomial
Vec sub(const BaseField& F, const Vec& a, const Vec& b);
Vec mul(const BaseField& F, const Vec& a, const Vec& b);
Vec mod(const BaseField& F, Vec a, const Vec& m);
Vec mulmod(const BaseField& F, const Vec& a, const Vec& b, const Vec& m);
Vec powmod(const BaseField& F, Vec a, std::uint64_t e, const Vec& m);
Vec gcd(const BaseField& F, Vec a, Vec b);

/// Rabin's test: f of degree d is irreducible iff x^(Q^d) = x mod f and
/// gcd(x^(Q^(d/r)) - x, f) = 1 for every prime r dividing d.
bool is_irreducible(const BaseField& F, const Vec& f);

}  // namespace poly

/// Smallest monic irreducible of the given degree over F, scanning the
/// non-leading coefficients (c_0, ..., c_{d-1}) as the base-q integer
/// sum c_i q^i in increasing order.
Vec find_irreducible(const BaseField& F, std::uint32_t degree);

}  // namespace gsf
