// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gsf/cli.hpp"
#include "gsf/decomp.hpp"
#include "gsf/exactla.hpp"
#include "gsf/extremal.hpp"
#include "gsf/formspace.hpp"

#ifndef GSF_GOLDEN_DIR
#define GSF_GOLDEN_DIR "golden"
#endif

namespace {

using gsf::Certificate;
using gsf::FieldTower;
using gsf::PrimePower;
using gsf::Verdict;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

gsf::ProfileOptions exhaustive(unsigned workers = 0) {
  gsf::ProfileOptions o;
  o.mode = gsf::EnumerationMode::kExhaustive;
  o.workers = workers;
  return o;
}

const gsf::Claim* find_claim(const Certificate& c, const std::string& name) {
  for (const auto& cl : c.claims) {
    if (cl.subspace == name) return &cl;
  }
  return nullptr;
}

std::string tag(std::uint32_t p, std::uint32_t s, std::uint32_t n) {
  return "GF(" + std::to_string(p) + (s > 1 ? "^" + std::to_string(s) : "") + ")^" + std::to_string(n);
}

Outcome global_odd() {
  Outcome o;
  for (auto [p, n] : {std::pair{3u, 5u}, std::pair{5u, 3u}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Certificate c = gsf::verify_global(FieldTower(PrimePower{p, 1}, n), exhaustive());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t total = 0;
    bool all_n = true;
    for (const auto& cl : c.claims) {
      total += cl.observed_dim;
      all_n = all_n && cl.observed_dim == n;
    }
    o.require(c.verdict() == Verdict::kPass, tag(p, 1, n) + " verdict " + gsf::to_string(c.verdict()));
    o.require(all_n && c.claims.size() == (n + 1) / 2, tag(p, 1, n) + " piece dimensions");
    o.require(total == n * (n + 1) / 2, tag(p, 1, n) + " total dimension");
    o.require(secs < 1.0, tag(p, 1, n) + " took " + std::to_string(secs) + " s");
  }
  return o;
}

Outcome rank_dichotomy() {
  Outcome o;
  const FieldTower t(PrimePower{3, 1}, 4);
  const auto prof = gsf::rank_profile(t, gsf::Subspace::full(4), 1, exhaustive());
  o.require(prof.exhaustive && prof.total() == 80, "expected 80 forms");
  o.require(prof.only_ranks({2, 4}), "ranks outside {2, 4}");
  o.require(prof.histogram.contains(2) && prof.histogram.contains(4), "both ranks must occur");
  if (o.ok) o.detail = "rank 2: " + std::to_string(prof.histogram.at(2)) + ", rank 4: " + std::to_string(prof.histogram.at(4));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t compared = 0;
  std::size_t mismatches = 0;
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> towers = {
      {3, 1, 3}, {3, 1, 4}, {3, 1, 5}, {3, 1, 6}, {5, 1, 3}, {5, 1, 4}, {7, 1, 3}, {3, 2, 3}};
  for (auto [p, s, n] : towers) {
    const FieldTower t(PrimePower{p, s}, n);
    const std::uint32_t q = t.q();
    for (std::uint32_t i = 1; i < n; ++i) {
      if (t.order_of_power(i) <= 2) continue;
      gsf::Vec c(n, 0);
      while (true) {
        std::size_t j = 0;
        while (j < n && ++c[j] == q) c[j++] = 0;
        if (j == n) break;
        const gsf::FieldElement b = t.element(c);
        const bool by_rank = gsf::rank(t.base(), gsf::gram(t, b, i).gram) < n;
        mismatches += gsf::degenerate_by_norm(t, b, i) != by_rank;
        ++compared;
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.detail = std::to_string(compared) + " (b, i) pairs, " + std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome odd_times_two() {
  Outcome o;
  const Certificate c = gsf::refine_A1_2k(FieldTower(PrimePower{3, 1}, 6), exhaustive());
  o.require(c.verdict() == Verdict::kPass, "verdict " + gsf::to_string(c.verdict()));
  o.require(c.claims.size() == 2, "expected two pieces");
  if (c.claims.size() == 2) {
    const auto& u = c.claims[0];
    const auto& v = c.claims[1];
    o.require(u.observed_dim == 3 && u.profile && u.profile->total() == 26 && u.profile->only_ranks({6}),
              "first piece is not a 3-dimensional space of rank-6 forms");
    o.require(v.observed_dim == 3 && v.profile && v.profile->total() == 26 && v.profile->only_ranks({4}),
              "second piece is not a 3-dimensional space of rank-4 forms");
  }
  return o;
}

Certificate eigenspace_certificate(std::uint32_t n, unsigned workers) {
  return gsf::refine_A1_pow4(FieldTower(PrimePower{3, 1}, n), exhaustive(workers));
}

Outcome eigenspace_case_one() {
  Outcome o;
  for (std::uint32_t n : {4u, 8u}) {
    const Certificate c = eigenspace_certificate(n, 0);
    const std::string at = "n=" + std::to_string(n);
    o.require(c.instance["case"] == "case1", at + " not classified case1");
    o.require(c.verdict() == Verdict::kPass, at + " verdict " + gsf::to_string(c.verdict()));
    o.require(c.direct_sum_ok, at + " direct sum audit");
    for (const auto& cl : c.claims) {
      if (!cl.profile) continue;
      o.require(cl.profile->exhaustive, at + " " + cl.subspace + " not exhaustive");
      const bool is_v = cl.subspace.rfind("V_", 0) == 0;
      o.require(is_v ? cl.profile->only_ranks({n - 2}) : cl.profile->only_ranks({n}), at + " " + cl.subspace + " ranks");
    }
    const auto whole = gsf::rank_profile(FieldTower(PrimePower{3, 1}, n), gsf::Subspace::full(n), 1, exhaustive());
    o.require(whole.total() == (n == 4 ? 80u : 6560u), at + " form count");
  }
  return o;
}

Outcome outside_telemetry() {
  Outcome o;
  gsf::ProfileOptions opts;
  opts.mode = gsf::EnumerationMode::kSampled;
  opts.sample_count = 10'000;
  opts.seed = 1;
  const Certificate c = gsf::refine_A1_pow4(FieldTower(gsf::prime_power_of(11), 32), opts);
  o.require(c.instance["case"] == "outside", "not classified outside");
  o.require(c.verdict() == Verdict::kOutsideHypotheses, "verdict " + gsf::to_string(c.verdict()));
  const std::uint32_t a = c.instance["a"].get<std::uint32_t>();
  const std::uint32_t alpha = c.instance["alpha"].get<std::uint32_t>();
  std::string mixed;
  for (std::uint32_t t = a + 1; t < alpha; ++t) {
    const auto* cl = find_claim(c, "E_" + std::to_string(t));
    o.require(cl && cl->profile && !cl->profile->exhaustive, "E_" + std::to_string(t) + " missing or not sampled");
    if (!cl || !cl->profile) continue;
    o.require(cl->profile->histogram.size() > 1, "E_" + std::to_string(t) + " not mixed");
    o.require(!cl->claimed_ranks, "E_" + std::to_string(t) + " has an asserted rank claim");
    mixed += " E_" + std::to_string(t) + "=" + std::to_string(cl->profile->histogram.size()) + " ranks";
  }
  if (o.ok) o.detail = "mixed:" + mixed;
  return o;
}

Outcome dimension_theorem() {
  Outcome o;
  std::size_t families = 0;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const FieldTower t(PrimePower{p, 1}, n);
      for (std::uint32_t i = 0; i < n; ++i) {
        const auto a = gsf::family(t, i);
        const std::size_t expect = t.order_of_power(i) == 2 ? n / 2 : n;
        o.require(a.dim() == expect, tag(p, 1, n) + " i=" + std::to_string(i) + " dimension");
        o.require(a.forms == gsf::family(t, (n - i) % n).forms, tag(p, 1, n) + " i=" + std::to_string(i) + " symmetry");
        ++families;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(families) + " families";
  return o;
}

Outcome extremal_witnesses() {
  Outcome o;
  std::size_t towers = 0;
  for (std::uint64_t q = 3; q <= 729; q += 2) {
    PrimePower pp;
    try {
      pp = gsf::prime_power_of(q);
    } catch (const std::invalid_argument&) {
      continue;
    }
    std::uint64_t size = q;
    for (std::uint32_t n = 1; size <= 729; ++n, size *= q) {
      const FieldTower t(pp, n);
      const auto tau = gsf::construct_regular_rep_subspace(t, {});
      const auto mu = gsf::construct_symmetric_witness(t, {});
      const std::string at = "q=" + std::to_string(q) + " n=" + std::to_string(n);
      o.require(tau.best_dim == n && tau.verified, at + " tau witness");
      o.require(mu.best_dim == n && mu.verified, at + " mu witness");
      ++towers;
    }
  }
  for (auto target : {gsf::SearchTarget::kTau, gsf::SearchTarget::kMu}) {
    const auto r = gsf::exhaustive_search(target, 2, PrimePower{3, 1}, gsf::kDefaultBudget);
    const std::string name = gsf::to_string(target);
    o.require(r.best_dim == 2, name + " search best_dim " + std::to_string(r.best_dim));
    o.require(!r.log.empty() && r.log.back()["dim"] == 3 && r.log.back()["found"] == false,
              name + " search did not exhaust dimension 3");
  }
  if (o.ok) o.detail = std::to_string(towers) + " towers";
  return o;
}

Outcome min_rank_bound() {
  Outcome o;
  for (auto [n, kk] : {std::pair{4u, 1u}, std::pair{5u, 2u}}) {
    const Certificate c = gsf::min_rank_lower_bound(FieldTower(PrimePower{3, 1}, n), kk, exhaustive());
    const auto& cl = c.claims.front();
    const auto lo = cl.profile ? cl.profile->min_rank() : std::nullopt;
    const std::string at = "n=" + std::to_string(n) + " kk=" + std::to_string(kk);
    o.require(cl.profile && cl.profile->exhaustive, at + " not exhaustive");
    o.require(lo && *lo >= n - 2 * kk, at + " minimum rank below bound");
    o.require(c.verdict() == Verdict::kPass, at + " verdict");
    if (lo) o.detail += (o.detail.empty() ? "" : ", ") + at + " min " + std::to_string(*lo);
  }
  return o;
}

Outcome formula_calculators() {
  Outcome o;
  for (std::uint64_t n = 1; n <= 64; ++n) {
    std::uint64_t v = 0;
    for (std::uint64_t m = n; m % 2 == 0; m /= 2) ++v;
    const std::uint64_t expect = (std::uint64_t{1} << (v % 4)) + 8 * (v / 4);
    o.require(gsf::rho(n) == expect, "rho(" + std::to_string(n) + ")");
  }
  const std::pair<std::uint64_t, std::uint64_t> spot[] = {{1, 1}, {2, 2}, {4, 4}, {8, 8}, {16, 9}, {32, 10}, {64, 12}};
  for (auto [n, r] : spot) o.require(gsf::rho(n) == r, "spot rho(" + std::to_string(n) + ")");
  o.require(gsf::real_mu_interval(5) == gsf::Interval{1, 1}, "odd interval");
  o.require(gsf::real_mu_interval(2) == gsf::Interval{1, 2}, "n=2 interval");
  o.require(gsf::real_mu_interval(12) == gsf::Interval{2, 4}, "n=12 interval");
  o.require(gsf::real_mu_interval(8) == gsf::Interval{4, 8}, "n=8 interval");
  o.require(gsf::real_mu_interval(16) == gsf::Interval{8, 8}, "n=16 value");
  o.require(gsf::real_mu_interval(64) == gsf::Interval{10, 12}, "n=64 interval");
  return o;
}

Outcome determinism() {
  Outcome o;
  std::ostringstream out;
  std::ostringstream err;
  const int code = gsf::cli::run({"gsf", "golden-check", "--golden-dir", GSF_GOLDEN_DIR}, out, err);
  o.require(code == 0, "golden-check exit " + std::to_string(code) + ": " + err.str());
  for (std::uint32_t n : {4u, 8u}) {
    const std::string one = gsf::dump(eigenspace_certificate(n, 1).to_json());
    const std::string eight = gsf::dump(eigenspace_certificate(n, 8).to_json());
    o.require(one == eight, "n=" + std::to_string(n) + " certificates differ between 1 and 8 workers");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_secs;
  };
  const std::vector<Criterion> criteria = {
      {1, "global decomposition, odd degree", global_odd, 2.0},
      {2, "rank dichotomy over GF(3^4)", rank_dichotomy, 1.0},
      {3, "norm criterion agrees with rank", oracle_equivalence, 30.0},
      {4, "odd-times-two refinement over GF(3^6)", odd_times_two, 1.0},
      {5, "eigenspace refinement, q = 3, n = 4 and 8", eigenspace_case_one, 10.0},
      {6, "outside-hypotheses telemetry, q = 11, n = 32", outside_telemetry, 60.0},
      {7, "family dimensions and inverse symmetry", dimension_theorem, 5.0},
      {8, "extremal witnesses and exhaustive search", extremal_witnesses, 60.0},
      {9, "minimum rank bound", min_rank_bound, 60.0},
      {10, "formula calculators", formula_calculators, 1.0},
      {11, "determinism and golden certificates", determinism, 120.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.limit_secs) out.require(false, "exceeded " + std::to_string(c.limit_secs) + " s");
    failed += !out.ok;
    std::printf("criterion %2d: %s  %-46s %7.3f s  %s\n", c.id, out.ok ? "PASS" : "FAIL", c.name, secs,
                out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
