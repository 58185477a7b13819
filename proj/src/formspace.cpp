#include "gsf/formspace.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

namespace gsf {

namespace {

// Columns of the Frobenius matrix: s[k] = sigma^i(x^k).
std::vector<FieldElement> frobenius_images(const FieldTower& tower, std::uint32_t i) {
  const std::uint32_t n = tower.degree();
  const Mat& m = tower.frobenius_matrix(i);
  std::vector<FieldElement> s(n, tower.zero());
  for (std::uint32_t k = 0; k < n; ++k) {
    for (std::uint32_t r = 0; r < n; ++r) s[k].coeffs[r] = m(r, k);
  }
  return s;
}

Scalar dot(const BaseField& F, const Vec& a, const Vec& b) {
  Scalar acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) acc = F.add(acc, F.mul(a[k], b[k]));
  return acc;
}

Scalar uniform_scalar(std::mt19937_64& rng, std::uint32_t q) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % q;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<Scalar>(x % q);
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(begin, end, histogram) over [0, total) split into contiguous
// blocks, one per worker, and merges the histograms.
template <typename Body>
std::map<std::uint32_t, std::uint64_t> parallel_histogram(std::uint64_t total, unsigned workers, Body body) {
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
  std::vector<std::map<std::uint32_t, std::uint64_t>> parts(workers);
  std::vector<std::thread> threads;
  const std::uint64_t block = total / workers;
  const std::uint64_t extra = total % workers;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + block + (w < extra ? 1 : 0);
    if (workers == 1) {
      body(begin, end, parts[w]);
    } else {
      threads.emplace_back([&, w, begin, end] { body(begin, end, parts[w]); });
    }
    begin = end;
  }
  for (auto& t : threads) t.join();
  std::map<std::uint32_t, std::uint64_t> merged;
  for (const auto& part : parts) {
    for (const auto& [rank, count] : part) merged[rank] += count;
  }
  return merged;
}

std::uint32_t combination_rank(const BaseField& F, const std::vector<Mat>& basis, const Vec& coeffs,
                               std::vector<Scalar>& buf) {
  std::fill(buf.begin(), buf.end(), 0);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Scalar c = coeffs[j];
    if (c == 0) continue;
    const auto& data = basis[j].data();
    for (std::size_t k = 0; k < buf.size(); ++k) {
      if (data[k] != 0) buf[k] = F.add(buf[k], F.mul(c, data[k]));
    }
  }
  return static_cast<std::uint32_t>(rank_in_place(F, buf, basis.front().rows(), basis.front().cols()));
}

}  // namespace

SymForm gram(const FieldTower& tower, const FieldElement& b, std::uint32_t i) {
  const BaseField& F = tower.base();
  const std::uint32_t n = tower.degree();
  const Mat& T = tower.trace_form();
  const auto s = frobenius_images(tower, i);
  // phi(e_j, e_k) = tr((b e_j) sigma^i(e_k)) + tr((b sigma^i(e_j)) e_k), with
  // tr(u v) = u^T T v.
  std::vector<Vec> left(n), right(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    left[j] = mat_vec(F, T, tower.mul(b, tower.basis(j)).coeffs);
    right[j] = mat_vec(F, T, tower.mul(b, s[j]).coeffs);
  }
  Mat g(n, n);
  for (std::uint32_t j = 0; j < n; ++j) {
    for (std::uint32_t k = 0; k < n; ++k) g(j, k) = F.add(dot(F, left[j], s[k].coeffs), right[j][k]);
  }
  return SymForm{std::move(g), b, i % n};
}

SymForm gram_alt(const FieldTower& tower, const FieldElement& b, std::uint32_t i) {
  const std::uint32_t n = tower.degree();
  Mat g(n, n);
  for (std::uint32_t j = 0; j < n; ++j) {
    const FieldElement x = tower.basis(j);
    const FieldElement w =
        tower.add(tower.frobenius_inverse(i, tower.mul(b, x)), tower.mul(b, tower.frobenius(i, x)));
    for (std::uint32_t k = 0; k < n; ++k) g(j, k) = tower.trace(tower.mul(w, tower.basis(k)));
  }
  return SymForm{std::move(g), b, i % n};
}

Subspace radical(const FieldTower& tower, const SymForm& form) { return kernel(tower.base(), form.gram); }

bool degenerate_by_norm(const FieldTower& tower, const FieldElement& b, std::uint32_t i) {
  if (b.is_zero()) throw std::invalid_argument("degenerate_by_norm: b must be nonzero");
  const std::uint32_t n = tower.degree();
  const std::uint32_t d = tower.order_of_power(i);
  if (d <= 2) {
    throw std::invalid_argument("degenerate_by_norm: ord(sigma^i) = " + std::to_string(d) +
                                "; the norm criterion needs order > 2");
  }
  const FieldElement c = tower.neg(tower.div(tower.frobenius(i, b), b));
  const std::uint32_t t = gcd_u32(2 * (i % n), n);
  return tower.norm_rel(t, c) == tower.one();
}

std::uint32_t degenerate_rank_value(const FieldTower& tower, std::uint32_t i) {
  const std::uint32_t d = tower.order_of_power(i);
  if (d % 2 != 0) throw std::invalid_argument("degenerate_rank_value: ord(sigma^i) is odd");
  const std::uint32_t n = tower.degree();
  return n - n / (d / 2);
}

FormSubspace family_image(const FieldTower& tower, const Subspace& params, std::uint32_t i) {
  if (params.ambient_dim() != tower.degree()) throw std::invalid_argument("family_image: parameter space not in L");
  std::vector<Vec> rows;
  for (const auto& b : params.basis()) rows.push_back(flatten_sym(gram(tower, as_element(b), i).gram));
  return FormSubspace{i % tower.degree(), Subspace::span(tower.base(), sym_dim(tower.degree()), std::move(rows))};
}

FormSubspace family(const FieldTower& tower, std::uint32_t i) {
  return family_image(tower, Subspace::full(tower.degree()), i);
}

Subspace parameter_kernel(const FieldTower& tower, std::uint32_t i) {
  const std::uint32_t n = tower.degree();
  Mat m(sym_dim(n), n);
  for (std::uint32_t j = 0; j < n; ++j) {
    const Vec col = flatten_sym(gram(tower, tower.basis(j), i).gram);
    for (std::size_t r = 0; r < col.size(); ++r) m(r, j) = col[r];
  }
  return kernel(tower.base(), m);
}

std::uint64_t RankProfile::total() const {
  std::uint64_t t = 0;
  for (const auto& [r, c] : histogram) t += c;
  return t;
}

std::optional<std::uint32_t> RankProfile::min_rank() const {
  if (histogram.empty()) return std::nullopt;
  return histogram.begin()->first;
}

bool RankProfile::only_ranks(std::initializer_list<std::uint32_t> allowed) const {
  for (const auto& [r, c] : histogram) {
    if (std::find(allowed.begin(), allowed.end(), r) == allowed.end()) return false;
  }
  return true;
}

std::uint64_t nonzero_count(std::uint64_t q, std::size_t d) {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    total *= q;
  }
  return total - 1;
}

RankProfile rank_profile_of_span(const BaseField& F, const std::vector<Mat>& basis, const ProfileOptions& opts) {
  RankProfile out;
  const std::size_t d = basis.size();
  if (d == 0) return out;
  const std::uint32_t q = F.q();
  const std::uint64_t total = nonzero_count(q, d);
  const std::size_t cells = basis.front().rows() * basis.front().cols();
  const unsigned workers = resolve_workers(opts.workers);

  bool exhaustive = false;
  switch (opts.mode) {
    case EnumerationMode::kExhaustive:
      if (total > opts.budget) throw BudgetExceeded(total, opts.budget);
      exhaustive = true;
      break;
    case EnumerationMode::kAuto:
      exhaustive = total <= opts.budget;
      break;
    case EnumerationMode::kSampled:
      exhaustive = false;
      break;
  }

  if (exhaustive) {
    out.exhaustive = true;
    out.count = total;
    out.histogram = parallel_histogram(total, workers, [&](std::uint64_t begin, std::uint64_t end, auto& hist) {
      std::vector<Scalar> buf(cells);
      Vec coeffs(d, 0);
      std::uint64_t idx = begin + 1;  // skip the zero combination
      for (std::size_t j = 0; j < d; ++j) {
        coeffs[j] = static_cast<Scalar>(idx % q);
        idx /= q;
      }
      for (std::uint64_t k = begin; k < end; ++k) {
        ++hist[combination_rank(F, basis, coeffs, buf)];
        std::size_t j = 0;
        while (j < d && ++coeffs[j] == q) coeffs[j++] = 0;
      }
    });
    return out;
  }

  out.exhaustive = false;
  out.count = opts.sample_count;
  out.seed = opts.seed;
  out.histogram =
      parallel_histogram(opts.sample_count, workers, [&](std::uint64_t begin, std::uint64_t end, auto& hist) {
        std::vector<Scalar> buf(cells);
        Vec coeffs(d, 0);
        for (std::uint64_t k = begin; k < end; ++k) {
          // Each sample has its own stream so the result is independent of the split.
          std::mt19937_64 rng(opts.seed ^ ((k + 1) * 0x9E3779B97F4A7C15ULL));
          bool nonzero = false;
          while (!nonzero) {
            for (auto& c : coeffs) {
              c = uniform_scalar(rng, q);
              nonzero = nonzero || c != 0;
            }
          }
          ++hist[combination_rank(F, basis, coeffs, buf)];
        }
      });
  return out;
}

RankProfile rank_profile(const FieldTower& tower, const Subspace& params, std::uint32_t i,
                         const ProfileOptions& opts) {
  if (params.ambient_dim() != tower.degree()) throw std::invalid_argument("rank_profile: parameter space not in L");
  std::vector<Mat> basis;
  for (const auto& b : params.basis()) basis.push_back(gram(tower, as_element(b), i).gram);
  return rank_profile_of_span(tower.base(), basis, opts);
}

RankProfile rank_profile(const FieldTower& tower, const FormSubspace& forms, const ProfileOptions& opts) {
  std::vector<Mat> basis;
  for (const auto& v : forms.forms.basis()) basis.push_back(unflatten_sym(v, tower.degree()));
  return rank_profile_of_span(tower.base(), basis, opts);
}

}  // namespace gsf
