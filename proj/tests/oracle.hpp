#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the defining polynomial of the extension: arithmetic is
// schoolbook polynomial arithmetic over GF(p), Frobenius is repeated
// powering, traces are sums of conjugates and ranks come from a separate
// elimination.

#include <cstdint>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1;
  std::int64_t base = mod(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
  }
  return r;
}

// Remainder of f modulo the monic g, coefficients mod p.
inline Poly poly_rem(Poly f, const Poly& g, std::int64_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = f.size(); k-- > dg;) {
    const std::int64_t c = mod(f[k], p);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) f[k - dg + j] = mod(f[k - dg + j] - c * g[j], p);
  }
  f.resize(dg, 0);
  for (auto& c : f) c = mod(c, p);
  return f;
}

inline bool poly_is_zero(const Poly& f, std::int64_t p) {
  for (auto c : f) {
    if (mod(c, p) != 0) return false;
  }
  return true;
}

// Monic polynomial from the base-p digits of idx for the non-leading coefficients.
inline Poly monic_from_index(std::uint64_t idx, std::size_t degree, std::int64_t p) {
  Poly f(degree + 1, 0);
  for (std::size_t j = 0; j < degree; ++j) {
    f[j] = static_cast<std::int64_t>(idx % p);
    idx /= p;
  }
  f[degree] = 1;
  return f;
}

// Irreducible iff no monic factor of degree 1..deg/2 divides it.
inline bool irreducible_by_trial_division(const Poly& f, std::int64_t p) {
  const std::size_t d = f.size() - 1;
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < k; ++j) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_is_zero(poly_rem(f, monic_from_index(idx, k, p), p), p)) return false;
    }
  }
  return true;
}

// GF(p^n) = GF(p)[x]/(modulus) with schoolbook arithmetic.
struct Field {
  std::int64_t p;
  Poly modulus;  // monic, degree n

  std::size_t n() const { return modulus.size() - 1; }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return poly_rem(c, modulus, p);
  }
  Poly add(const Poly& a, const Poly& b) const {
    Poly c(n());
    for (std::size_t j = 0; j < n(); ++j) c[j] = mod(a[j] + b[j], p);
    return c;
  }
  Poly scale(std::int64_t s, const Poly& a) const {
    Poly c(n());
    for (std::size_t j = 0; j < n(); ++j) c[j] = mod(s * a[j], p);
    return c;
  }
  Poly pow(Poly a, std::uint64_t e) const {
    Poly r(n(), 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  // sigma^i(a) = a^(p^i), applied one power at a time.
  Poly frob(const Poly& a, std::uint32_t i) const {
    Poly r = a;
    for (std::uint32_t k = 0; k < i; ++k) r = pow(r, p);
    return r;
  }
  // Absolute trace: sum of all conjugates, which lies in GF(p).
  std::int64_t trace(const Poly& a) const {
    Poly t(n(), 0);
    Poly c = a;
    for (std::size_t k = 0; k < n(); ++k) {
      t = add(t, c);
      c = pow(c, p);
    }
    return t[0];
  }
  Poly basis(std::size_t j) const {
    Poly e(n(), 0);
    e[j] = 1;
    return e;
  }
  // Element whose coefficients are the base-p digits of idx.
  Poly element(std::uint64_t idx) const {
    Poly e = monic_from_index(idx, n(), p);
    e.pop_back();
    return e;
  }
  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (std::size_t j = 0; j < n(); ++j) s *= p;
    return s;
  }
  // phi_{b, sigma^i}(x, y) = tr(b (x sigma^i(y) + sigma^i(x) y)).
  std::int64_t form(const Poly& b, std::uint32_t i, const Poly& x, const Poly& y) const {
    return trace(mul(b, add(mul(x, frob(y, i)), mul(frob(x, i), y))));
  }
  std::vector<std::vector<std::int64_t>> gram(const Poly& b, std::uint32_t i) const {
    std::vector<std::vector<std::int64_t>> g(n(), std::vector<std::int64_t>(n()));
    for (std::size_t r = 0; r < n(); ++r) {
      for (std::size_t c = 0; c < n(); ++c) g[r][c] = form(b, i, basis(r), basis(c));
    }
    return g;
  }
};

inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && mod(m[piv][c], p) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t iv = inv_mod(m[rank][c], p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank) continue;
      const std::int64_t f = mod(m[r][c], p) * iv % p;
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = mod(m[r][k] - f * m[rank][k], p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
