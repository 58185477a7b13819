#include "gsf/extremal.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "gsf/exactla.hpp"
#include "gsf/io.hpp"

namespace gsf {

namespace {

std::size_t ambient_dim(SearchTarget target, std::size_t n) { return target == SearchTarget::kTau ? n * n : sym_dim(n); }

Mat coords_to_matrix(SearchTarget target, std::span<const Scalar> v, std::size_t n) {
  if (target == SearchTarget::kMu) return unflatten_sym(v, n);
  Mat m(n, n);
  std::copy(v.begin(), v.end(), m.data().begin());
  return m;
}

// Canonical echelon basis of the span of the matrices (row-major flattening).
std::vector<Mat> canonical_basis(const BaseField& F, const std::vector<Mat>& mats) {
  if (mats.empty()) return {};
  std::vector<Vec> rows;
  for (const auto& m : mats) rows.push_back(m.data());
  std::vector<Mat> out;
  const std::size_t r = mats.front().rows();
  const std::size_t c = mats.front().cols();
  for (auto& v : rref(F, std::move(rows))) {
    Mat m(r, c);
    m.data() = std::move(v);
    out.push_back(std::move(m));
  }
  return out;
}

bool full_rank(const BaseField& F, std::vector<Scalar>& buf, std::size_t n) { return rank_in_place(F, buf, n, n) == n; }

// Every nonzero combination is invertible. Only combinations whose first
// nonzero coefficient is 1 are tried: the rest are scalar multiples.
bool invertible_closed(const BaseField& F, const std::vector<Mat>& basis, std::size_t n) {
  const std::size_t d = basis.size();
  const std::uint32_t q = F.q();
  std::vector<Scalar> buf(n * n);
  Vec coeffs(d, 0);
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    coeffs[lead] = 1;
    while (true) {
      std::fill(buf.begin(), buf.end(), 0);
      for (std::size_t j = lead; j < d; ++j) {
        if (coeffs[j] == 0) continue;
        const auto& data = basis[j].data();
        for (std::size_t k = 0; k < buf.size(); ++k) buf[k] = F.add(buf[k], F.mul(coeffs[j], data[k]));
      }
      if (!full_rank(F, buf, n)) return false;
      std::size_t j = lead + 1;
      while (j < d && ++coeffs[j] == q) coeffs[j++] = 0;
      if (j == d) break;
    }
  }
  return true;
}

// span(basis + {cand}) is invertible-closed given that span(basis) is.
bool extends(const BaseField& F, const std::vector<Mat>& basis, const Mat& cand, std::size_t n) {
  const std::size_t d = basis.size();
  const std::uint32_t q = F.q();
  std::vector<Scalar> buf(n * n);
  Vec coeffs(d, 0);
  while (true) {
    buf = cand.data();
    for (std::size_t j = 0; j < d; ++j) {
      if (coeffs[j] == 0) continue;
      const auto& data = basis[j].data();
      for (std::size_t k = 0; k < buf.size(); ++k) buf[k] = F.add(buf[k], F.mul(coeffs[j], data[k]));
    }
    if (!full_rank(F, buf, n)) return false;
    std::size_t j = 0;
    while (j < d && ++coeffs[j] == q) coeffs[j++] = 0;
    if (j == d) return true;
  }
}

}  // namespace

RhoDecomposition RhoDecomposition::of(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("rho: n must be positive");
  RhoDecomposition r;
  r.n = n;
  std::uint32_t v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  r.odd_part = n;
  r.c = v % 4;
  r.d = v / 4;
  return r;
}

std::uint64_t rho(std::uint64_t n) {
  const auto r = RhoDecomposition::of(n);
  return (std::uint64_t{1} << r.c) + 8 * std::uint64_t{r.d};
}

Interval real_mu_interval(std::uint64_t n) {
  const auto r = RhoDecomposition::of(n);
  if (n % 2 == 1) return {1, 1};
  const std::uint64_t e = 8 * std::uint64_t{r.d};
  switch (r.c) {
    case 0:
      return {e, e};
    case 1:
      return {1 + e, 2 + e};
    case 2:
      return {2 + e, 4 + e};
    default:
      return {4 + e, 8 + e};
  }
}

PrimePower prime_power_of(std::uint64_t q) {
  if (q < 3) throw std::invalid_argument("q = " + std::to_string(q) + " is not an odd prime power");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t s = 0;
  std::uint64_t m = q;
  while (m % p == 0) {
    m /= p;
    ++s;
  }
  if (m != 1 || p == 2) throw std::invalid_argument("q = " + std::to_string(q) + " is not an odd prime power");
  return {static_cast<std::uint32_t>(p), s};
}

std::string to_string(SearchTarget t) { return t == SearchTarget::kTau ? "tau" : "mu"; }

SearchTarget parse_target(const std::string& s) {
  if (s == "tau") return SearchTarget::kTau;
  if (s == "mu") return SearchTarget::kMu;
  throw std::invalid_argument("unknown search target '" + s + "' (expected tau or mu)");
}

InvertibilityCheck check_invertible_span(const BaseField& F, const std::vector<Mat>& basis,
                                         const ProfileOptions& opts) {
  InvertibilityCheck out;
  if (basis.empty()) {
    out.all_invertible = true;
    out.exhaustive = true;
    return out;
  }
  const std::uint32_t n = static_cast<std::uint32_t>(basis.front().rows());
  const RankProfile profile = rank_profile_of_span(F, basis, opts);
  out.exhaustive = profile.exhaustive;
  out.checked = profile.count;
  out.seed = profile.seed;
  out.all_invertible = profile.histogram.size() == 1 && profile.histogram.begin()->first == n;
  return out;
}

nlohmann::json SearchResult::to_json() const {
  nlohmann::json j;
  j["target"] = gsf::to_string(target);
  j["n"] = n;
  j["p"] = field.p;
  j["s"] = field.s;
  j["q"] = field.q();
  j["best_dim"] = best_dim;
  const BaseField F(field);
  nlohmann::json w = nlohmann::json::array();
  for (const auto& m : witness_basis) w.push_back(matrix_json(F, m));
  j["witness_basis"] = w;
  j["mode"] = mode;
  if (mode == "greedy") {
    j["seed"] = seed;
    j["restarts"] = restarts;
  }
  j["verified"] = verified;
  nlohmann::json v = {{"all_invertible", verification.all_invertible},
                      {"mode", verification.exhaustive ? "exhaustive" : "sampled"},
                      {"checked", verification.checked}};
  if (!verification.exhaustive) v["seed"] = verification.seed;
  j["verification"] = v;
  if (!log.empty()) j["search_log"] = log;
  return j;
}

Mat regular_representation(const FieldTower& tower, const FieldElement& a) {
  const std::uint32_t n = tower.degree();
  Mat m(n, n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const FieldElement col = tower.mul(a, tower.basis(k));
    for (std::uint32_t r = 0; r < n; ++r) m(r, k) = col.coeffs[r];
  }
  return m;
}

MatrixSubspace block_construction(const BaseField& F, const MatrixSubspace& u, const ProfileOptions& opts) {
  if (!u.verified) throw std::invalid_argument("block_construction: input subspace is not verified invertible");
  const std::size_t m = u.n;
  MatrixSubspace out;
  out.n = 2 * m;
  for (const auto& a : u.basis) {
    Mat b(2 * m, 2 * m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        b(r, m + c) = a(r, c);
        b(m + c, r) = a(r, c);
      }
    }
    out.basis.push_back(std::move(b));
  }
  const InvertibilityCheck chk = check_invertible_span(F, out.basis, opts);
  out.verified = chk.exhaustive && chk.all_invertible;
  return out;
}

namespace {

SearchResult finish_construction(const BaseField& F, SearchTarget target, std::uint32_t n,
                                 const std::vector<Mat>& mats, const ProfileOptions& opts) {
  SearchResult r;
  r.target = target;
  r.n = n;
  r.field = F.prime_power();
  r.mode = "construction";
  r.witness_basis = canonical_basis(F, mats);
  r.best_dim = static_cast<std::uint32_t>(r.witness_basis.size());
  r.verification = check_invertible_span(F, r.witness_basis, opts);
  r.verified = r.verification.exhaustive && r.verification.all_invertible;
  return r;
}

}  // namespace

SearchResult construct_regular_rep_subspace(const FieldTower& tower, const ProfileOptions& opts) {
  std::vector<Mat> mats;
  for (std::uint32_t j = 0; j < tower.degree(); ++j) mats.push_back(regular_representation(tower, tower.basis(j)));
  return finish_construction(tower.base(), SearchTarget::kTau, tower.degree(), mats, opts);
}

SearchResult construct_symmetric_witness(const FieldTower& tower, const ProfileOptions& opts) {
  std::vector<Mat> mats;
  for (std::uint32_t j = 0; j < tower.degree(); ++j) mats.push_back(gram(tower, tower.basis(j), 0).gram);
  return finish_construction(tower.base(), SearchTarget::kMu, tower.degree(), mats, opts);
}

std::uint64_t gaussian_binomial(std::uint64_t N, std::uint64_t d, std::uint64_t q) {
  if (d > N) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) { return (b != 0 && a > kMax / b) ? kMax : a * b; };
  // table[k] = [m choose k]_q for the current m; [m, k] = [m-1, k-1] + q^k [m-1, k].
  std::vector<std::uint64_t> table(d + 1, 0);
  table[0] = 1;
  for (std::uint64_t m = 1; m <= N; ++m) {
    for (std::uint64_t k = std::min(m, d); k >= 1; --k) {
      std::uint64_t qk = 1;
      for (std::uint64_t e = 0; e < k; ++e) qk = sat_mul(qk, q);
      table[k] = sat_add(table[k - 1], sat_mul(qk, table[k]));
    }
  }
  return table[d];
}

SearchResult exhaustive_search(SearchTarget target, std::uint32_t n, PrimePower field, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("exhaustive_search: n must be positive");
  const BaseField F(field);
  const std::uint32_t q = F.q();
  const std::size_t N = ambient_dim(target, n);

  SearchResult result;
  result.target = target;
  result.n = n;
  result.field = field;
  result.mode = "exhaustive";

  for (std::size_t d = 1; d <= N; ++d) {
    const std::uint64_t count = gaussian_binomial(N, d, q);
    if (count > budget) throw BudgetExceeded(count, budget);

    std::vector<Mat> found;
    std::vector<std::size_t> pivots(d);
    for (std::size_t r = 0; r < d; ++r) pivots[r] = r;
    while (found.empty()) {
      // Free entries of the echelon form: row r, column c > pivots[r], c not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = pivots[r] + 1; c < N; ++c) {
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
        }
      }
      Vec vals(free.size(), 0);
      while (true) {
        std::vector<Vec> rows(d, Vec(N, 0));
        for (std::size_t r = 0; r < d; ++r) rows[r][pivots[r]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = vals[f];
        std::vector<Mat> mats;
        bool singular_member = false;
        for (const auto& row : rows) {
          mats.push_back(coords_to_matrix(target, row, n));
          if (rank(F, mats.back()) < n) {
            singular_member = true;
            break;
          }
        }
        if (!singular_member && invertible_closed(F, mats, n)) {
          found = std::move(mats);
          break;
        }
        std::size_t f = 0;
        while (f < vals.size() && ++vals[f] == q) vals[f++] = 0;
        if (f == vals.size()) break;
      }
      if (!found.empty()) break;
      // next pivot combination in lexicographic order
      std::size_t r = d;
      while (r > 0 && pivots[r - 1] == N - d + (r - 1)) --r;
      if (r == 0) break;
      ++pivots[r - 1];
      for (std::size_t k = r; k < d; ++k) pivots[k] = pivots[k - 1] + 1;
    }
    result.log.push_back({{"dim", d}, {"candidates", count}, {"found", !found.empty()}});
    if (found.empty()) break;
    result.best_dim = static_cast<std::uint32_t>(d);
    result.witness_basis = canonical_basis(F, found);
  }
  result.verification = {true, true, nonzero_count(q, result.best_dim), 0};
  result.verified = true;
  return result;
}

SearchResult greedy_search(SearchTarget target, std::uint32_t n, PrimePower field, const GreedyOptions& opts) {
  if (n < 1) throw std::invalid_argument("greedy_search: n must be positive");
  const BaseField F(field);
  const std::uint32_t q = F.q();
  const std::size_t N = ambient_dim(target, n);

  SearchResult best;
  best.target = target;
  best.n = n;
  best.field = field;
  best.mode = "greedy";
  best.seed = opts.seed;
  best.restarts = opts.restarts;
  bool have = false;

  for (std::uint32_t pass = 0; pass <= opts.restarts; ++pass) {
    std::mt19937_64 rng(opts.seed + 0x9E3779B97F4A7C15ULL * pass);
    auto draw = [&] {
      Vec v(N, 0);
      for (auto& x : v) {
        // Rejection keeps the draw uniform and platform independent.
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % q;
        std::uint64_t r = 0;
        do {
          r = rng();
        } while (r >= limit);
        x = static_cast<Scalar>(r % q);
      }
      return coords_to_matrix(target, v, n);
    };
    std::vector<Mat> basis;
    // No invertible-closed subspace exceeds dimension n, so extension stops there.
    while (basis.size() < n) {
      bool extended = false;
      for (std::uint32_t a = 0; a < opts.attempts_per_step; ++a) {
        const Mat cand = draw();
        if (extends(F, basis, cand, n)) {
          basis.push_back(cand);
          extended = true;
          break;
        }
      }
      if (!extended) break;
    }
    best.log.push_back({{"pass", pass}, {"dim", basis.size()}});
    if (!have || basis.size() > best.best_dim) {
      have = true;
      best.best_dim = static_cast<std::uint32_t>(basis.size());
      best.witness_basis = canonical_basis(F, basis);
    }
    if (best.best_dim == n) break;
  }
  if (best.best_dim > n) throw std::logic_error("greedy_search exceeded the bound dim <= n");
  best.verification = {true, true, nonzero_count(q, best.best_dim), 0};
  best.verified = true;
  return best;
}

}  // namespace gsf
