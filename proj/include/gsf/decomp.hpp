#pragma once

#include <cstdint>

#include "gsf/certificate.hpp"
#include "gsf/ffield.hpp"
#include "gsf/formspace.hpp"

namespace gsf {

/// Parameters of the finite-field eigenspace theorem: q + 1 = 2^a l and
/// n = 2^alpha k with l, k odd, q = 3 (mod 4) and alpha >= 2.
struct TheoremCParams {
  std::uint64_t q = 0;
  std::uint32_t a = 0;
  std::uint64_t l = 0;
  std::uint32_t alpha = 0;
  std::uint32_t k = 0;

  /// Throws std::invalid_argument if q is not 3 mod 4 ("-1 is a square in K")
  /// or 4 does not divide n.
  static TheoremCParams make(std::uint64_t q, std::uint32_t n);
};

enum class TheoremCCase { kCase1, kCase2, kOutside };

std::string to_string(TheoremCCase c);

/// Case1: alpha <= a + 1. Case2: alpha > a + 1 and l = 1. Outside otherwise.
TheoremCCase theorem_c_case(const TheoremCParams& params);

/// Number of inverse pairs {sigma^i, sigma^-i} with ord(sigma^i) > 2, i.e. floor((n-1)/2).
std::uint32_t pair_count(std::uint32_t n);

/// Sym_K(L) = [B^1 +] A^0 + A^1 + ... + A^m, one A^i per inverse pair (smallest i).
Certificate verify_global(const FieldTower& tower, const ProfileOptions& opts);

/// Rank laws of A^i for every i: odd order gives only rank n; order 2 gives
/// 0 (exactly on the -1 eigenspace) or n; order 2r > 2 gives n - n/r or n, both occurring.
Certificate verify_rank_laws(const FieldTower& tower, const ProfileOptions& opts);

/// n = 2k, k odd: L = U + jU with U = L_k, giving A^1 = U_1 + V_1 with U_1 an
/// n-subspace and V_1 an (n-2)-subspace, each of dimension k.
Certificate refine_A1_2k(const FieldTower& tower, const ProfileOptions& opts);

/// ord(sigma^i) = d = 2 (mod 4), d != 2: A^i = U_i + V_i of dimensions n/2,
/// an n-subspace and an (n - 2n/d)-subspace.
Certificate refine_Ai_mod2(const FieldTower& tower, std::uint32_t i, const ProfileOptions& opts);

/// 4 | n, q = 3 (mod 4): L = V_1 + V_2 + E_1 + ... + E_{alpha-1} and the rank
/// pattern of the corresponding pieces of A^1 by case.
Certificate refine_A1_pow4(const FieldTower& tower, const ProfileOptions& opts);

/// n even: the global decomposition with every A^i replaced by its refinement.
Certificate verify_full_refined(const FieldTower& tower, const ProfileOptions& opts);

/// Every nonzero form in A^1 + ... + A^kk has rank >= n - 2 kk. Requires 1 <= kk <= pair_count(n).
Certificate min_rank_lower_bound(const FieldTower& tower, std::uint32_t kk, const ProfileOptions& opts);

}  // namespace gsf
