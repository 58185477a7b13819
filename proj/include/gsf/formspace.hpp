#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsf/exactla.hpp"
#include "gsf/ffield.hpp"
#include "gsf/matrix.hpp"

namespace gsf {

/// The symmetric form phi_{b, sigma^i}(x, y) = tr(b (x sigma^i(y) + sigma^i(x) y))
/// as its Gram matrix in the power basis.
struct SymForm {
  Mat gram;
  FieldElement b;
  std::uint32_t i = 0;
};

SymForm gram(const FieldTower& tower, const FieldElement& b, std::uint32_t i);

/// Same form computed from the one-sided expression
/// phi(x, y) = tr((sigma^-i(b x) + b sigma^i(x)) y).
SymForm gram_alt(const FieldTower& tower, const FieldElement& b, std::uint32_t i);

Subspace radical(const FieldTower& tower, const SymForm& form);

/// Norm criterion: phi_{b, sigma^i} is degenerate iff
/// N_{L/L_{2i}}(-sigma^i(b)/b) = 1, where L_{2i} is the fixed field of sigma^{2i}.
/// Requires b != 0 and ord(sigma^i) > 2.
bool degenerate_by_norm(const FieldTower& tower, const FieldElement& b, std::uint32_t i);

/// n - n/r for ord(sigma^i) = 2r; the only rank a degenerate nonzero form
/// in A^i can have. Rejects odd orders.
std::uint32_t degenerate_rank_value(const FieldTower& tower, std::uint32_t i);

/// A K-subspace of Sym_K(L) in flattened upper-triangle coordinates.
struct FormSubspace {
  std::optional<std::uint32_t> i;  // nullopt for mixed families
  Subspace forms;

  std::size_t dim() const { return forms.dim(); }
};

/// A^i = {phi_{b, sigma^i} : b in L}.
FormSubspace family(const FieldTower& tower, std::uint32_t i);

/// {phi_{b, sigma^i} : b in params}.
FormSubspace family_image(const FieldTower& tower, const Subspace& params, std::uint32_t i);

/// Kernel of the K-linear map b -> phi_{b, sigma^i}.
Subspace parameter_kernel(const FieldTower& tower, std::uint32_t i);

inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("exhaustive enumeration of " + std::to_string(required) +
                           " forms exceeds the budget of " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

enum class EnumerationMode { kExhaustive, kSampled, kAuto };

struct ProfileOptions {
  EnumerationMode mode = EnumerationMode::kAuto;
  std::uint64_t sample_count = 10'000;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct RankProfile {
  std::map<std::uint32_t, std::uint64_t> histogram;
  bool exhaustive = true;
  std::uint64_t count = 0;  // forms enumerated
  std::uint64_t seed = 0;   // meaningful when sampled

  std::uint64_t total() const;
  std::optional<std::uint32_t> min_rank() const;
  bool only_ranks(std::initializer_list<std::uint32_t> allowed) const;
};

/// q^d - 1, saturating at UINT64_MAX.
std::uint64_t nonzero_count(std::uint64_t q, std::size_t d);

/// Rank histogram of sum_j c_j basis[j] over nonzero coefficient vectors c,
/// all of them (exhaustive) or a seeded sample. Work is split over threads;
/// the histogram does not depend on the split.
RankProfile rank_profile_of_span(const BaseField& F, const std::vector<Mat>& basis, const ProfileOptions& opts);

/// Rank histogram of phi_{b, sigma^i} over nonzero b in params.
RankProfile rank_profile(const FieldTower& tower, const Subspace& params, std::uint32_t i,
                         const ProfileOptions& opts);

/// Rank histogram over the nonzero members of a form subspace.
RankProfile rank_profile(const FieldTower& tower, const FormSubspace& forms, const ProfileOptions& opts);

}  // namespace gsf
