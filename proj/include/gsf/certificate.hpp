#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsf/formspace.hpp"

namespace gsf {

enum class Verdict { kPass, kFail, kOutsideHypotheses };

std::string to_string(Verdict v);

/// One named piece of a decomposition: its dimension and the ranks of its
/// nonzero members, claimed against observed. Unset claims are reported but
/// not asserted.
struct Claim {
  std::string subspace;
  std::string space = "Sym";  // "L" for parameter subspaces of L, "Sym" for form subspaces
  std::optional<std::uint64_t> claimed_dim;
  std::uint64_t observed_dim = 0;
  std::optional<std::uint64_t> form_dim;  // dimension of the image in Sym_K(L), when space == "L"
  std::optional<std::vector<std::uint32_t>> claimed_ranks;  // allowed ranks of nonzero members
  bool require_all_ranks = false;                           // every allowed rank must occur
  std::optional<std::uint32_t> min_rank_bound;              // every observed rank >= bound
  std::optional<RankProfile> profile;

  bool asserted() const;
  bool ok() const;
};

/// A yes/no fact checked along the way (direct sums, norm identities, ...).
struct Check {
  std::string name;
  bool ok = false;
  nlohmann::json detail;
};

struct Certificate {
  std::string theorem_id;
  nlohmann::json instance = nlohmann::json::object();
  std::vector<Claim> claims;
  std::vector<Check> checks;
  bool direct_sum_ok = true;
  bool outside_hypotheses = false;
  std::string note;

  /// pass iff every asserted claim and every check holds and direct_sum_ok;
  /// outside_hypotheses when flagged and nothing structural failed.
  Verdict verdict() const;
  nlohmann::json to_json() const;
};

nlohmann::json to_json(const RankProfile& profile);
nlohmann::json to_json(const Claim& claim);

/// Stable byte representation: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace gsf
