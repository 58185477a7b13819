#include "gsf/decomp.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "gsf/exactla.hpp"

namespace gsf {

namespace {

nlohmann::json base_instance(const FieldTower& tower) {
  return {{"p", tower.p()}, {"s", tower.s()}, {"n", tower.degree()}};
}

// sigma^e as an index in [1, n] for eigenspace_of_power.
std::uint32_t power_index(std::uint32_t n, std::uint64_t e) {
  const auto r = static_cast<std::uint32_t>(e % n);
  return r == 0 ? n : r;
}

std::uint32_t two_adic(std::uint64_t v, std::uint64_t& odd) {
  std::uint32_t e = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++e;
  }
  odd = v;
  return e;
}

Subspace multiply_by(const FieldTower& tower, const FieldElement& j, const Subspace& u) {
  std::vector<Vec> rows;
  for (const auto& b : u.basis()) rows.push_back(tower.mul(j, as_element(b)).coeffs);
  return Subspace::span(tower.base(), tower.degree(), std::move(rows));
}

// A piece of a decomposition: a parameter subspace P of L and the automorphism
// power i, standing for {phi_{b, sigma^i} : b in P}.
struct Piece {
  std::string name;
  Subspace params;
  std::uint32_t i = 0;
  std::optional<std::uint64_t> claimed_dim;
  std::optional<std::vector<std::uint32_t>> claimed_ranks;
  bool require_all_ranks = false;
};

// Claim about the parameter subspace (space "L").
Claim param_claim(const FieldTower& tower, const Piece& piece, const FormSubspace& image,
                  const ProfileOptions& opts) {
  Claim c;
  c.subspace = piece.name;
  c.space = "L";
  c.claimed_dim = piece.claimed_dim;
  c.observed_dim = piece.params.dim();
  c.form_dim = image.dim();
  c.claimed_ranks = piece.claimed_ranks;
  c.require_all_ranks = piece.require_all_ranks;
  c.profile = rank_profile(tower, piece.params, piece.i, opts);
  return c;
}

// Claim about the form subspace (space "Sym").
Claim form_claim(const FieldTower& tower, const Piece& piece, const FormSubspace& image,
                 const ProfileOptions& opts) {
  Claim c;
  c.subspace = piece.name;
  c.space = "Sym";
  c.claimed_dim = piece.claimed_dim;
  c.observed_dim = image.dim();
  c.claimed_ranks = piece.claimed_ranks;
  c.require_all_ranks = piece.require_all_ranks;
  c.profile = rank_profile(tower, piece.params, piece.i, opts);
  return c;
}

std::vector<std::uint32_t> ranks_for_power(const FieldTower& tower, std::uint32_t i) {
  const std::uint32_t n = tower.degree();
  const std::uint32_t d = tower.order_of_power(i);
  if (d % 2 == 1) return {n};
  if (d == 2) return {0, n};
  return {degenerate_rank_value(tower, i), n};
}

std::string indexed(const std::string& base, std::uint32_t i) { return base + "^" + std::to_string(i); }

// Adds the check that the images of the pieces form a direct sum equal to target.
void audit_forms(const FieldTower& tower, const std::vector<FormSubspace>& images, const FormSubspace& target,
                 const std::string& label, Certificate& cert) {
  std::vector<Subspace> parts;
  for (const auto& im : images) parts.push_back(im.forms);
  const bool direct = is_direct_sum(tower.base(), parts);
  const bool equal = sum_all(tower.base(), parts) == target.forms;
  cert.checks.push_back(
      {label, direct && equal, {{"direct", direct}, {"equals_target", equal}, {"target_dim", target.dim()}}});
  cert.direct_sum_ok = cert.direct_sum_ok && direct;
}

void audit_params(const FieldTower& tower, const std::vector<Subspace>& parts, const std::string& label,
                  Certificate& cert) {
  const bool direct = is_direct_sum(tower.base(), parts);
  const std::size_t total = sum_all(tower.base(), parts).dim();
  const bool whole = total == tower.degree();
  cert.checks.push_back({label, direct && whole, {{"direct", direct}, {"dim", total}}});
  cert.direct_sum_ok = cert.direct_sum_ok && direct;
}

// Eigenspace pieces of A^i for d = ord(sigma^i) = 2^beta k', beta >= 2:
// V_1^i, V_2^i (the +-1 eigenspaces of sigma^{i k'}) and E_t^i (the -1
// eigenspace of sigma^{i d / 2^t}), 1 <= t <= beta - 1. Rank claims follow the
// finite-field theorem applied to L over L_i, whose order is Q = q^gcd(n, i);
// they are left unasserted when its hypotheses fail.
struct Pow4Layout {
  std::vector<Piece> pieces;
  nlohmann::json info;
  bool hypotheses = false;
  std::optional<TheoremCCase> which;
};

Pow4Layout pow4_layout(const FieldTower& tower, std::uint32_t i, bool claim_e_dims) {
  const std::uint32_t n = tower.degree();
  const std::uint32_t d = tower.order_of_power(i);
  std::uint64_t kp = 0;
  const std::uint32_t beta = two_adic(d, kp);
  if (beta < 2) throw std::logic_error("pow4_layout: 4 does not divide ord(sigma^i)");
  const std::uint32_t g = n / d;

  Pow4Layout out;
  std::uint32_t a = 0;
  out.info = {{"i", i}, {"d", d}, {"beta", beta}, {"k_prime", kp}};

  // Q = q^g, saturating.
  std::uint64_t Q = 1;
  bool overflow = false;
  for (std::uint32_t e = 0; e < g; ++e) {
    if (Q > std::numeric_limits<std::uint64_t>::max() / tower.q() / 2) {
      overflow = true;
      break;
    }
    Q *= tower.q();
  }
  if (!overflow && Q % 4 == 3) {
    const TheoremCParams params = TheoremCParams::make(Q, d);
    out.which = theorem_c_case(params);
    out.info["Q"] = Q;
    a = params.a;
    out.info["a"] = params.a;
    out.info["l"] = params.l;
    out.info["case"] = to_string(*out.which);
    out.hypotheses = *out.which != TheoremCCase::kOutside;
  } else {
    out.info["case"] = "minus_one_is_square";
  }

  const std::uint32_t full = n;
  const std::uint32_t degen = n - 2 * n / d;
  const std::string suffix = i == 1 ? "" : "^" + std::to_string(i);
  for (int sign : {1, -1}) {
    Piece p;
    p.name = std::string("V_") + (sign == 1 ? "1" : "2") + suffix;
    p.params = eigenspace_of_power(tower, power_index(n, std::uint64_t{i} * kp), sign);
    p.i = i;
    p.claimed_dim = kp * n / d;
    if (out.hypotheses) p.claimed_ranks = std::vector<std::uint32_t>{degen};
    out.pieces.push_back(std::move(p));
  }
  for (std::uint32_t t = 1; t + 1 <= beta; ++t) {
    Piece p;
    p.name = "E_" + std::to_string(t) + suffix;
    p.params = eigenspace_of_power(tower, power_index(n, std::uint64_t{i} * (d >> t)), -1);
    p.i = i;
    if (claim_e_dims) p.claimed_dim = n >> t;
    if (out.hypotheses) {
      const bool nonsingular = *out.which == TheoremCCase::kCase1 || t <= a;
      p.claimed_ranks = std::vector<std::uint32_t>{nonsingular ? full : degen};
    }
    out.pieces.push_back(std::move(p));
  }
  return out;
}

// U_i = fixed space of sigma^{i d/2}, V_i = j U_i with j a -1 eigenvector of sigma^i.
struct Mod2Layout {
  Piece u, v;
  FieldElement j;
};

Mod2Layout mod2_layout(const FieldTower& tower, std::uint32_t i) {
  const std::uint32_t n = tower.degree();
  const std::uint32_t d = tower.order_of_power(i);
  const std::uint32_t kp = d / 2;
  Mod2Layout out;
  const Subspace minus = eigenspace_of_power(tower, power_index(n, i), -1);
  out.j = as_element(minus.basis().front());
  out.u.name = indexed("U", i);
  out.u.params = eigenspace_of_power(tower, power_index(n, std::uint64_t{i} * kp), 1);
  out.u.i = i;
  out.u.claimed_dim = n / 2;
  out.u.claimed_ranks = std::vector<std::uint32_t>{n};
  out.v.name = indexed("V", i);
  out.v.params = multiply_by(tower, out.j, out.u.params);
  out.v.i = i;
  out.v.claimed_dim = n / 2;
  out.v.claimed_ranks = std::vector<std::uint32_t>{n - 2 * n / d};
  return out;
}

Certificate refine_mod2(const FieldTower& tower, std::uint32_t i, const ProfileOptions& opts,
                        const std::string& theorem_id, bool allow_involution) {
  const std::uint32_t n = tower.degree();
  Certificate cert;
  cert.theorem_id = theorem_id;
  cert.instance = base_instance(tower);
  cert.instance["i"] = i;
  const std::uint32_t d = tower.order_of_power(i);
  cert.instance["d"] = d;
  if (d % 4 != 2 || (d == 2 && !allow_involution)) {
    cert.outside_hypotheses = true;
    cert.note = "ord(sigma^i) = " + std::to_string(d) + " is not 2 mod 4" + (d == 2 ? " (involution)" : "");
    return cert;
  }
  const Mod2Layout lay = mod2_layout(tower, i);
  const FormSubspace u_img = family_image(tower, lay.u.params, i);
  const FormSubspace v_img = family_image(tower, lay.v.params, i);
  cert.claims.push_back(param_claim(tower, lay.u, u_img, opts));
  cert.claims.push_back(param_claim(tower, lay.v, v_img, opts));
  audit_params(tower, {lay.u.params, lay.v.params}, "L = U + V direct", cert);
  audit_forms(tower, {u_img, v_img}, family(tower, i), indexed("A", i) + " = U + V direct", cert);

  // N_{L/L_{2i}}(sigma^i(j)/j) = -1
  const FieldElement ratio = tower.div(tower.frobenius(i, lay.j), lay.j);
  const FieldElement norm = tower.norm_rel(gcd_u32(2 * i, n), ratio);
  const bool norm_ok = norm == tower.neg(tower.one());
  cert.checks.push_back({"norm of sigma^i(j)/j is -1", norm_ok, {{"j", lay.j.coeffs}, {"norm", norm.coeffs}}});
  return cert;
}

}  // namespace

TheoremCParams TheoremCParams::make(std::uint64_t q, std::uint32_t n) {
  if (q % 4 != 3) {
    throw std::invalid_argument("q = " + std::to_string(q) + " is not 3 mod 4, so -1 is a square in K");
  }
  TheoremCParams p;
  p.q = q;
  std::uint64_t l = 0;
  p.a = two_adic(q + 1, l);
  p.l = l;
  if (n == 0) throw std::invalid_argument("n must be positive");
  std::uint64_t k = 0;
  p.alpha = two_adic(n, k);
  p.k = static_cast<std::uint32_t>(k);
  if (p.alpha < 2) throw std::invalid_argument("n = " + std::to_string(n) + " is not divisible by 4");
  return p;
}

std::string to_string(TheoremCCase c) {
  switch (c) {
    case TheoremCCase::kCase1:
      return "case1";
    case TheoremCCase::kCase2:
      return "case2";
    case TheoremCCase::kOutside:
      return "outside";
  }
  return "outside";
}

TheoremCCase theorem_c_case(const TheoremCParams& params) {
  if (params.alpha <= params.a + 1) return TheoremCCase::kCase1;
  if (params.l == 1) return TheoremCCase::kCase2;
  return TheoremCCase::kOutside;
}

std::uint32_t pair_count(std::uint32_t n) { return n == 0 ? 0 : (n - 1) / 2; }

Certificate verify_global(const FieldTower& tower, const ProfileOptions& opts) {
  const std::uint32_t n = tower.degree();
  if (n < 2) throw std::invalid_argument("verify_global: n must be at least 2");
  Certificate cert;
  cert.theorem_id = n % 2 == 1 ? "global_decomposition_odd" : "global_decomposition_even";
  cert.instance = base_instance(tower);
  const std::uint32_t m = pair_count(n);
  cert.instance["m"] = m;

  std::vector<Piece> pieces;
  if (n % 2 == 0) {
    // B^1 parametrised by the +1 eigenspace of the involution, a complement of its kernel.
    pieces.push_back({"B^1", eigenspace_of_power(tower, n / 2, 1), n / 2, n / 2, std::vector<std::uint32_t>{n}});
  }
  for (std::uint32_t i = 0; i <= m; ++i) {
    pieces.push_back({indexed("A", i), Subspace::full(n), i, n, ranks_for_power(tower, i)});
  }
  std::vector<FormSubspace> images;
  for (const auto& p : pieces) {
    images.push_back(family_image(tower, p.params, p.i));
    cert.claims.push_back(form_claim(tower, p, images.back(), opts));
  }
  if (n % 2 == 0) {
    const bool same = images.front().forms == family(tower, n / 2).forms;
    cert.checks.push_back({"B^1 image equals A^{n/2}", same, nlohmann::json::object()});
  }
  std::vector<Subspace> parts;
  for (const auto& im : images) parts.push_back(im.forms);
  cert.direct_sum_ok = is_direct_sum(tower.base(), parts);
  const std::size_t total = sum_all(tower.base(), parts).dim();
  cert.checks.push_back({"total dimension n(n+1)/2", total == sym_dim(n),
                         {{"observed", total}, {"expected", sym_dim(n)}}});
  return cert;
}

Certificate verify_rank_laws(const FieldTower& tower, const ProfileOptions& opts) {
  const std::uint32_t n = tower.degree();
  Certificate cert;
  cert.theorem_id = "rank_laws";
  cert.instance = base_instance(tower);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t d = tower.order_of_power(i);
    Piece p{indexed("A", i), Subspace::full(n), i, d == 2 ? n / 2 : n, ranks_for_power(tower, i)};
    Claim c = form_claim(tower, p, family(tower, i), opts);
    // Both ranks must occur for even order > 2; only an exhaustive run can show absence.
    if (d % 2 == 0 && d > 2 && c.profile->exhaustive) c.require_all_ranks = true;
    cert.claims.push_back(std::move(c));
    if (d == 2) {
      const bool same = parameter_kernel(tower, i) == eigenspace_of_power(tower, i, -1);
      cert.checks.push_back({"zero forms of " + indexed("A", i) + " are exactly b in E", same,
                             nlohmann::json::object()});
    }
  }
  return cert;
}

Certificate refine_A1_2k(const FieldTower& tower, const ProfileOptions& opts) {
  const std::uint32_t n = tower.degree();
  if (n % 2 != 0 || (n / 2) % 2 == 0) {
    Certificate cert;
    cert.theorem_id = "refine_A1_2k";
    cert.instance = base_instance(tower);
    cert.outside_hypotheses = true;
    cert.note = "n is not twice an odd number";
    return cert;
  }
  return refine_mod2(tower, 1, opts, "refine_A1_2k", true);
}

Certificate refine_Ai_mod2(const FieldTower& tower, std::uint32_t i, const ProfileOptions& opts) {
  if (i % tower.degree() == 0) {
    Certificate cert;
    cert.theorem_id = "refine_Ai_mod2";
    cert.instance = base_instance(tower);
    cert.instance["i"] = i;
    cert.outside_hypotheses = true;
    cert.note = "sigma^i is the identity";
    return cert;
  }
  return refine_mod2(tower, i % tower.degree(), opts, "refine_Ai_mod2", false);
}

Certificate refine_A1_pow4(const FieldTower& tower, const ProfileOptions& opts) {
  const std::uint32_t n = tower.degree();
  const TheoremCParams params = TheoremCParams::make(tower.q(), n);
  const TheoremCCase which = theorem_c_case(params);
  Certificate cert;
  cert.theorem_id = "refine_A1_pow4";
  cert.instance = base_instance(tower);
  cert.instance["q"] = params.q;
  cert.instance["a"] = params.a;
  cert.instance["l"] = params.l;
  cert.instance["alpha"] = params.alpha;
  cert.instance["k"] = params.k;
  cert.instance["case"] = to_string(which);

  const Pow4Layout lay = pow4_layout(tower, 1, true);
  std::vector<Subspace> params_parts;
  std::vector<FormSubspace> images;
  for (const auto& p : lay.pieces) {
    params_parts.push_back(p.params);
    images.push_back(family_image(tower, p.params, p.i));
    cert.claims.push_back(param_claim(tower, p, images.back(), opts));
  }
  audit_params(tower, params_parts, "L = V_1 + V_2 + E_1 + ... direct", cert);
  audit_forms(tower, images, family(tower, 1), "A^1 = V_1 + V_2 + E_1 + ... direct", cert);
  if (which == TheoremCCase::kOutside) {
    cert.outside_hypotheses = true;
    cert.note = "alpha > a + 1 and l > 1: rank pattern reported, not asserted";
  }
  return cert;
}

Certificate verify_full_refined(const FieldTower& tower, const ProfileOptions& opts) {
  const std::uint32_t n = tower.degree();
  if (n % 2 != 0) throw std::invalid_argument("verify_full_refined: n must be even");
  Certificate cert;
  cert.theorem_id = "full_refined_decomposition";
  cert.instance = base_instance(tower);

  std::vector<Piece> pieces;
  pieces.push_back({"B^1", eigenspace_of_power(tower, n / 2, 1), n / 2, n / 2, std::vector<std::uint32_t>{n}});
  pieces.push_back({"A^0", Subspace::full(n), 0, n, std::vector<std::uint32_t>{n}});
  nlohmann::json layout = nlohmann::json::array();
  for (std::uint32_t i = 1; i <= pair_count(n); ++i) {
    const std::uint32_t d = tower.order_of_power(i);
    if (d % 2 == 1) {
      pieces.push_back({indexed("A", i), Subspace::full(n), i, n, std::vector<std::uint32_t>{n}});
      layout.push_back({{"i", i}, {"d", d}, {"kind", "odd"}});
    } else if (d % 4 == 2) {
      const Mod2Layout lay = mod2_layout(tower, i);
      audit_params(tower, {lay.u.params, lay.v.params}, "L = U_" + std::to_string(i) + " + V_" + std::to_string(i),
                   cert);
      pieces.push_back(lay.u);
      pieces.push_back(lay.v);
      layout.push_back({{"i", i}, {"d", d}, {"kind", "mod2"}});
    } else {
      Pow4Layout lay = pow4_layout(tower, i, i == 1);
      std::vector<Subspace> parts;
      for (const auto& p : lay.pieces) parts.push_back(p.params);
      audit_params(tower, parts, "L = eigenspace pieces for i = " + std::to_string(i), cert);
      lay.info["kind"] = "pow4";
      layout.push_back(lay.info);
      for (auto& p : lay.pieces) pieces.push_back(std::move(p));
    }
  }
  cert.instance["layout"] = layout;

  std::vector<Subspace> parts;
  for (const auto& p : pieces) {
    const FormSubspace image = family_image(tower, p.params, p.i);
    parts.push_back(image.forms);
    cert.claims.push_back(form_claim(tower, p, image, opts));
  }
  const bool direct = is_direct_sum(tower.base(), parts);
  cert.direct_sum_ok = cert.direct_sum_ok && direct;
  const std::size_t total = sum_all(tower.base(), parts).dim();
  cert.checks.push_back({"total dimension n(n+1)/2", total == sym_dim(n),
                         {{"observed", total}, {"expected", sym_dim(n)}}});
  return cert;
}

Certificate min_rank_lower_bound(const FieldTower& tower, std::uint32_t kk, const ProfileOptions& opts) {
  const std::uint32_t n = tower.degree();
  const std::uint32_t m = pair_count(n);
  if (kk < 1 || kk > m) {
    throw std::invalid_argument("min_rank_lower_bound: kk must lie in [1, " + std::to_string(m) + "]");
  }
  Certificate cert;
  cert.theorem_id = "min_rank_lower_bound";
  cert.instance = base_instance(tower);
  cert.instance["kk"] = kk;

  std::vector<Mat> basis;
  std::vector<Subspace> families;
  for (std::uint32_t i = 1; i <= kk; ++i) {
    families.push_back(family(tower, i).forms);
    for (std::uint32_t j = 0; j < n; ++j) basis.push_back(gram(tower, tower.basis(j), i).gram);
  }
  cert.direct_sum_ok = is_direct_sum(tower.base(), families);

  Claim c;
  c.subspace = "A^1 + ... + A^" + std::to_string(kk);
  c.space = "Sym";
  c.claimed_dim = std::uint64_t{kk} * n;
  c.observed_dim = sum_all(tower.base(), families).dim();
  const std::int64_t bound = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(kk);
  c.min_rank_bound = static_cast<std::uint32_t>(bound < 0 ? 0 : bound);
  c.profile = rank_profile_of_span(tower.base(), basis, opts);
  cert.instance["bound"] = *c.min_rank_bound;
  cert.instance["observed_min_rank"] = c.profile->min_rank() ? nlohmann::json(*c.profile->min_rank()) : nlohmann::json(nullptr);
  cert.claims.push_back(std::move(c));
  return cert;
}

}  // namespace gsf
