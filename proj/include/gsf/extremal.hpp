#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsf/ffield.hpp"
#include "gsf/formspace.hpp"
#include "gsf/matrix.hpp"

namespace gsf {

/// n = odd_part * 2^(c + 4d) with 0 <= c <= 3.
struct RhoDecomposition {
  std::uint64_t n = 1;
  std::uint64_t odd_part = 1;
  std::uint32_t c = 0;
  std::uint32_t d = 0;

  static RhoDecomposition of(std::uint64_t n);
};

/// Radon-Hurwitz number 2^c + 8d.
std::uint64_t rho(std::uint64_t n);

struct Interval {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Range of mu_n over the reals: [1, 1] for odd n, 8d for c = 0, and
/// [1+8d, 2+8d], [2+8d, 4+8d], [4+8d, 8+8d] for c = 1, 2, 3.
Interval real_mu_interval(std::uint64_t n);

/// q = p^s with p an odd prime; throws std::invalid_argument otherwise.
PrimePower prime_power_of(std::uint64_t q);

enum class SearchTarget { kTau, kMu };

std::string to_string(SearchTarget t);
SearchTarget parse_target(const std::string& s);

/// Outcome of checking that every nonzero member of a span of n x n matrices is invertible.
struct InvertibilityCheck {
  bool all_invertible = false;
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::uint64_t seed = 0;
};

InvertibilityCheck check_invertible_span(const BaseField& F, const std::vector<Mat>& basis,
                                         const ProfileOptions& opts);

/// A subspace of M(n, K) or S(n, K) by a basis of matrices. verified means
/// every nonzero member was checked invertible exhaustively.
struct MatrixSubspace {
  std::size_t n = 0;
  std::vector<Mat> basis;
  bool verified = false;
};

struct SearchResult {
  SearchTarget target = SearchTarget::kTau;
  std::uint32_t n = 0;
  PrimePower field;
  std::uint32_t best_dim = 0;
  std::vector<Mat> witness_basis;  // canonical echelon order
  std::string mode;                // exhaustive | greedy | construction
  std::uint64_t seed = 0;
  std::uint32_t restarts = 0;
  bool verified = false;
  InvertibilityCheck verification;
  nlohmann::json log = nlohmann::json::array();  // per-dimension search record

  MatrixSubspace witness() const { return {n, witness_basis, verified}; }
  nlohmann::json to_json() const;
};

/// Multiplication by a as a K-linear map of L in the power basis.
Mat regular_representation(const FieldTower& tower, const FieldElement& a);

/// Symmetric blocks [[0, A], [A^T, 0]] for A in u. Rejects an unverified u.
MatrixSubspace block_construction(const BaseField& F, const MatrixSubspace& u, const ProfileOptions& opts);

/// Regular representation of L inside M(n, K): dimension n, all nonzero members invertible.
SearchResult construct_regular_rep_subspace(const FieldTower& tower, const ProfileOptions& opts);

/// Gram matrices of the trace forms phi_{b, id}: an n-dimensional subspace of S(n, K).
SearchResult construct_symmetric_witness(const FieldTower& tower, const ProfileOptions& opts);

/// Exact maximum dimension of a subspace of M(n, K) (tau) or S(n, K) (mu) whose
/// nonzero members are all invertible. Subspaces are enumerated by reduced
/// echelon representatives, dimension by dimension, until a dimension has none.
SearchResult exhaustive_search(SearchTarget target, std::uint32_t n, PrimePower field, std::uint64_t budget);

struct GreedyOptions {
  std::uint64_t seed = 1;
  std::uint32_t restarts = 0;
  std::uint32_t attempts_per_step = 20000;
};

/// Randomised basis extension; each accepted extension is checked exactly.
SearchResult greedy_search(SearchTarget target, std::uint32_t n, PrimePower field, const GreedyOptions& opts);

/// Gaussian binomial [N choose d]_q, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint64_t N, std::uint64_t d, std::uint64_t q);

}  // namespace gsf
