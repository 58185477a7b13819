#include "gsf/base_field.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace gsf {

std::uint64_t PrimePower::q() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) q *= p;
  return q;
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

void validate(const PrimePower& pp) {
  if (!is_prime(pp.p)) throw std::invalid_argument("p = " + std::to_string(pp.p) + " is not prime");
  if (pp.p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (pp.s < 1) throw std::invalid_argument("s must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < pp.s; ++i) {
    q *= pp.p;
    if (q > (1u << 20)) throw std::invalid_argument("base field order q = p^s exceeds 2^20");
  }
}

BaseField::BaseField(PrimePower pp) : p_(pp.p), s_(pp.s) {
  validate(pp);
  q_ = static_cast<std::uint32_t>(pp.q());
  if (s_ == 1) {
    modulus_ = {0, 1};
    return;
  }
  modulus_ = find_irreducible(BaseField::prime(p_), s_);

  // Discrete logarithm tables with respect to the first primitive element.
  const std::uint32_t order = q_ - 1;
  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t m = order;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) prime_factors.push_back(m);
  }
  auto slow_pow = [&](Scalar a, std::uint64_t e) {
    Scalar r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Scalar g = 0;
  for (Scalar c = 2; c < q_ && g == 0; ++c) {
    bool primitive = true;
    for (auto r : prime_factors) {
      if (slow_pow(c, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) g = c;
  }
  exp_.resize(order);
  log_.assign(q_, 0);
  Scalar x = 1;
  for (std::uint32_t e = 0; e < order; ++e) {
    exp_[e] = x;
    log_[x] = e;
    x = mul_slow(x, g);
  }
}

Scalar BaseField::add_digits(Scalar a, Scalar b) const {
  Scalar r = 0;
  Scalar place = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    const Scalar d = (a % p_ + b % p_) % p_;
    r += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Scalar BaseField::neg_digits(Scalar a) const {
  Scalar r = 0;
  Scalar place = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    const Scalar d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a /= p_;
  }
  return r;
}

Scalar BaseField::mul_slow(Scalar a, Scalar b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * s_ - 1, 0);
  for (std::uint32_t i = 0; i < s_; ++i) {
    for (std::uint32_t j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  // Reduce modulo the monic modulus.
  for (std::size_t k = prod.size(); k-- > s_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < s_; ++j) {
      prod[k - s_ + j] = (prod[k - s_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
    prod[k] = 0;
  }
  std::vector<std::uint32_t> out(s_);
  for (std::uint32_t i = 0; i < s_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(out);
}

Scalar BaseField::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(q)");
  if (s_ == 1) return pow(a, p_ - 2);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Scalar BaseField::pow(Scalar a, std::uint64_t e) const {
  Scalar r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Scalar BaseField::from_int(std::int64_t v) const {
  const std::int64_t m = v % static_cast<std::int64_t>(p_);
  return static_cast<Scalar>(m < 0 ? m + p_ : m);
}

std::vector<std::uint32_t> BaseField::digits(Scalar a) const {
  std::vector<std::uint32_t> d(s_);
  for (std::uint32_t i = 0; i < s_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Scalar BaseField::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != s_) throw std::invalid_argument("expected " + std::to_string(s_) + " base-p digits");
  Scalar r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw std::invalid_argument("digit out of range for p = " + std::to_string(p_));
    r = r * p_ + digits[i];
  }
  return r;
}

bool BaseField::is_square(Scalar a) const {
  if (a == 0) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

namespace poly {

void trim(Vec& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::size_t degree(const Vec& f) {
  if (f.empty()) throw std::domain_error("degree of the zero polynomial");
  return f.size() - 1;
}

Vec sub(const BaseField& F, const Vec& a, const Vec& b) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Vec mul(const BaseField& F, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Vec mod(const BaseField& F, Vec a, const Vec& m) {
  trim(a);
  const std::size_t dm = degree(m);
  const Scalar lead_inv = F.inv(m.back());
  while (!a.empty() && a.size() - 1 >= dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const Scalar c = F.mul(a.back(), lead_inv);
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, m[j]));
    trim(a);
  }
  return a;
}

Vec mulmod(const BaseField& F, const Vec& a, const Vec& b, const Vec& m) { return mod(F, mul(F, a, b), m); }

Vec powmod(const BaseField& F, Vec a, std::uint64_t e, const Vec& m) {
  Vec r = mod(F, Vec{1}, m);
  a = mod(F, std::move(a), m);
  while (e) {
    if (e & 1) r = mulmod(F, r, a, m);
    e >>= 1;
    if (e) a = mulmod(F, a, a, m);
  }
  return r;
}

Vec gcd(const BaseField& F, Vec a, Vec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Scalar lead_inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, lead_inv);
  }
  return a;
}

bool is_irreducible(const BaseField& F, const Vec& f) {
  const std::size_t d = degree(f);
  if (d == 0) return false;
  if (d == 1) return true;
  const Vec x{0, 1};
  // frob[j] = x^(Q^j) mod f
  std::vector<Vec> frob(d + 1);
  frob[0] = mod(F, x, f);
  for (std::size_t j = 1; j <= d; ++j) frob[j] = powmod(F, frob[j - 1], F.q(), f);
  if (sub(F, frob[d], frob[0]).size() != 0) return false;
  std::size_t m = d;
  for (std::size_t r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    while (m % r == 0) m /= r;
    const Vec g = gcd(F, sub(F, frob[d / r], frob[0]), f);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace poly

Vec find_irreducible(const BaseField& F, std::uint32_t degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  Vec f(degree + 1, 0);
  f[degree] = 1;
  if (degree == 1) return f;  // x
  const Scalar q = F.q();
  while (true) {
    // c_0 = 0 means x divides f.
    if (f[0] != 0 && poly::is_irreducible(F, f)) return f;
    std::size_t k = 0;
    while (k < degree && ++f[k] == q) f[k++] = 0;
    if (k == degree) throw std::logic_error("no irreducible polynomial found");
  }
}

}  // namespace gsf
