#include "gsf/certificate.hpp"

#include <algorithm>

namespace gsf {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kOutsideHypotheses:
      return "outside_hypotheses";
  }
  return "fail";
}

bool Claim::asserted() const { return claimed_dim || claimed_ranks || min_rank_bound; }

bool Claim::ok() const {
  if (claimed_dim && *claimed_dim != observed_dim) return false;
  if (claimed_ranks && profile) {
    const auto& allowed = *claimed_ranks;
    for (const auto& [rank, count] : profile->histogram) {
      if (std::find(allowed.begin(), allowed.end(), rank) == allowed.end()) return false;
    }
    if (require_all_ranks) {
      for (auto r : allowed) {
        if (!profile->histogram.contains(r)) return false;
      }
    }
  }
  if (min_rank_bound && profile) {
    const auto lo = profile->min_rank();
    if (lo && *lo < *min_rank_bound) return false;
  }
  return true;
}

Verdict Certificate::verdict() const {
  bool structural_ok = direct_sum_ok;
  for (const auto& c : checks) structural_ok = structural_ok && c.ok;
  if (outside_hypotheses) {
    for (const auto& c : claims) {
      if (c.claimed_dim && *c.claimed_dim != c.observed_dim) structural_ok = false;
    }
    return structural_ok ? Verdict::kOutsideHypotheses : Verdict::kFail;
  }
  bool claims_ok = true;
  for (const auto& c : claims) claims_ok = claims_ok && c.ok();
  return structural_ok && claims_ok ? Verdict::kPass : Verdict::kFail;
}

nlohmann::json to_json(const RankProfile& profile) {
  nlohmann::json j;
  j["mode"] = profile.exhaustive ? "exhaustive" : "sampled";
  j["count"] = profile.count;
  if (!profile.exhaustive) j["seed"] = profile.seed;
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [rank, count] : profile.histogram) hist[std::to_string(rank)] = count;
  j["histogram"] = hist;
  return j;
}

nlohmann::json to_json(const Claim& claim) {
  nlohmann::json j;
  j["subspace"] = claim.subspace;
  j["space"] = claim.space;
  j["claimed_dim"] = claim.claimed_dim ? nlohmann::json(*claim.claimed_dim) : nlohmann::json(nullptr);
  j["observed_dim"] = claim.observed_dim;
  if (claim.form_dim) j["form_dim"] = *claim.form_dim;
  j["claimed_ranks"] = claim.claimed_ranks ? nlohmann::json(*claim.claimed_ranks) : nlohmann::json(nullptr);
  if (claim.require_all_ranks) j["require_all_ranks"] = true;
  if (claim.min_rank_bound) j["min_rank_bound"] = *claim.min_rank_bound;
  if (claim.profile) {
    j["observed_rank_histogram"] = to_json(*claim.profile);
    j["mixed_rank"] = claim.profile->histogram.size() > 1;
  } else {
    j["observed_rank_histogram"] = nullptr;
  }
  j["asserted"] = claim.asserted();
  j["ok"] = claim.ok();
  return j;
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["theorem_id"] = theorem_id;
  j["instance"] = instance;
  nlohmann::json cl = nlohmann::json::array();
  for (const auto& c : claims) cl.push_back(gsf::to_json(c));
  j["claims"] = cl;
  nlohmann::json ch = nlohmann::json::array();
  for (const auto& c : checks) ch.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  j["checks"] = ch;
  j["direct_sum_ok"] = direct_sum_ok;
  j["verdict"] = to_string(verdict());
  if (!note.empty()) j["note"] = note;

  // Enumeration summary: exhaustive unless some piece was sampled.
  bool sampled = false;
  std::uint64_t max_count = 0;
  std::uint64_t seed = 0;
  for (const auto& c : claims) {
    if (c.profile && !c.profile->exhaustive) {
      sampled = true;
      max_count = std::max(max_count, c.profile->count);
      seed = c.profile->seed;
    }
  }
  if (sampled) {
    j["enumeration"] = {{"mode", "sampled"}, {"count", max_count}, {"seed", seed}};
  } else {
    j["enumeration"] = "exhaustive";
  }
  return j;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace gsf
