#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "gsf/exactla.hpp"
#include "gsf/extremal.hpp"
#include "gsf/formspace.hpp"

using gsf::FieldTower;
using gsf::Mat;
using gsf::PrimePower;
using gsf::SearchTarget;

namespace {

// 2-adic valuation by repeated halving, for cross-checking the decomposition.
std::uint32_t valuation(std::uint64_t n) {
  std::uint32_t v = 0;
  for (; n % 2 == 0; n /= 2) ++v;
  return v;
}

TEST(Rho, SpotValues) {
  const std::pair<std::uint64_t, std::uint64_t> table[] = {{1, 1}, {2, 2},  {3, 1},   {4, 4},   {6, 2},
                                                           {8, 8}, {16, 9}, {32, 10}, {64, 12}, {128, 16}};
  for (auto [n, r] : table) EXPECT_EQ(gsf::rho(n), r) << "n=" << n;
}

TEST(Rho, ScanProperties) {
  for (std::uint64_t n = 1; n <= 65536; ++n) {
    const auto d = gsf::RhoDecomposition::of(n);
    ASSERT_LE(d.c, 3u);
    ASSERT_EQ(d.odd_part % 2, 1u);
    ASSERT_EQ(d.odd_part << (d.c + 4 * d.d), n);
    ASSERT_EQ(d.c + 4 * d.d, valuation(n));
    const std::uint64_t r = gsf::rho(n);
    ASSERT_LE(r, n);
    ASSERT_EQ(r == n, n == 1 || n == 2 || n == 4 || n == 8) << "n=" << n;
  }
}

TEST(RealMu, PiecewiseTable) {
  EXPECT_EQ(gsf::real_mu_interval(7), (gsf::Interval{1, 1}));
  EXPECT_EQ(gsf::real_mu_interval(2), (gsf::Interval{1, 2}));
  EXPECT_EQ(gsf::real_mu_interval(4), (gsf::Interval{2, 4}));
  EXPECT_EQ(gsf::real_mu_interval(8), (gsf::Interval{4, 8}));
  EXPECT_EQ(gsf::real_mu_interval(16), (gsf::Interval{8, 8}));
  EXPECT_EQ(gsf::real_mu_interval(32), (gsf::Interval{9, 10}));
  EXPECT_EQ(gsf::real_mu_interval(48), (gsf::Interval{8, 8}));
}

TEST(PrimePowerOf, ParsesAndRejects) {
  EXPECT_EQ(gsf::prime_power_of(9).p, 3u);
  EXPECT_EQ(gsf::prime_power_of(9).s, 2u);
  EXPECT_EQ(gsf::prime_power_of(11).s, 1u);
  EXPECT_THROW(gsf::prime_power_of(12), std::invalid_argument);
  EXPECT_THROW(gsf::prime_power_of(8), std::invalid_argument);
}

TEST(RegularRepresentation, IsMultiplicative) {
  const FieldTower t(PrimePower{5, 1}, 4);
  std::mt19937_64 rng(1);
  auto draw = [&] {
    gsf::Vec c(4);
    for (auto& x : c) x = static_cast<gsf::Scalar>(rng() % 5);
    return t.element(c);
  };
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = draw();
    const auto b = draw();
    EXPECT_EQ(gsf::mat_mul(t.base(), gsf::regular_representation(t, a), gsf::regular_representation(t, b)),
              gsf::regular_representation(t, t.mul(a, b)));
  }
  EXPECT_EQ(gsf::regular_representation(t, t.one()), Mat::identity(4));
}

TEST(Constructions, WitnessesReachN) {
  for (auto [p, n] : {std::pair{3u, 1u}, std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{3u, 4u}, std::pair{5u, 2u},
                      std::pair{3u, 6u}}) {
    const FieldTower t(PrimePower{p, 1}, n);
    const auto tau = gsf::construct_regular_rep_subspace(t, {});
    const auto mu = gsf::construct_symmetric_witness(t, {});
    EXPECT_EQ(tau.best_dim, n);
    EXPECT_EQ(mu.best_dim, n);
    EXPECT_TRUE(tau.verified);
    EXPECT_TRUE(mu.verified);
    for (const auto& m : mu.witness_basis) EXPECT_TRUE(m.is_symmetric());
  }
  const auto small = gsf::construct_symmetric_witness(FieldTower(PrimePower{3, 1}, 2), {});
  EXPECT_EQ(small.verification.checked, 8u);
}

TEST(Constructions, UnverifiedWhenSampled) {
  gsf::ProfileOptions o;
  o.budget = 10;
  const auto r = gsf::construct_regular_rep_subspace(FieldTower(PrimePower{3, 1}, 4), o);
  EXPECT_EQ(r.best_dim, 4u);
  EXPECT_FALSE(r.verified);
  EXPECT_TRUE(r.verification.all_invertible);
}

TEST(Block, PreservesDimensionAndInvertibility) {
  const gsf::BaseField F = gsf::BaseField::prime(3);
  const gsf::MatrixSubspace unit{1, {Mat::identity(1)}, true};
  const auto out = gsf::block_construction(F, unit, {});
  ASSERT_EQ(out.basis.size(), 1u);
  EXPECT_EQ(out.basis[0], Mat::from_rows({{0, 1}, {1, 0}}));
  EXPECT_TRUE(out.verified);

  // The symmetric family for the identity over GF(9), as a subspace of M(2, GF(3)).
  const FieldTower t(PrimePower{3, 1}, 2);
  const auto a0 = gsf::construct_symmetric_witness(t, {});
  const auto blocks = gsf::block_construction(F, a0.witness(), {});
  EXPECT_EQ(blocks.n, 4u);
  EXPECT_EQ(blocks.basis.size(), 2u);
  EXPECT_TRUE(blocks.verified);
  const auto chk = gsf::check_invertible_span(F, blocks.basis, {});
  EXPECT_EQ(chk.checked, 8u);

  EXPECT_THROW(gsf::block_construction(F, gsf::MatrixSubspace{1, {Mat::identity(1)}, false}, {}),
               std::invalid_argument);
}

TEST(ExhaustiveSearch, TwoByTwoOverGF3) {
  const auto tau = gsf::exhaustive_search(SearchTarget::kTau, 2, PrimePower{3, 1}, gsf::kDefaultBudget);
  EXPECT_EQ(tau.best_dim, 2u);
  ASSERT_EQ(tau.log.size(), 3u);
  EXPECT_EQ(tau.log[1]["candidates"], 130);
  EXPECT_EQ(tau.log[2]["found"], false);
  const auto mu = gsf::exhaustive_search(SearchTarget::kMu, 2, PrimePower{3, 1}, gsf::kDefaultBudget);
  EXPECT_EQ(mu.best_dim, 2u);
  for (const auto& m : mu.witness_basis) EXPECT_TRUE(m.is_symmetric());
  const auto chk = gsf::check_invertible_span(gsf::BaseField::prime(3), tau.witness_basis, {});
  EXPECT_TRUE(chk.all_invertible);
}

TEST(ExhaustiveSearch, SymmetricThreeByThree) {
  const auto mu = gsf::exhaustive_search(SearchTarget::kMu, 3, PrimePower{3, 1}, gsf::kDefaultBudget);
  EXPECT_EQ(mu.best_dim, 3u);
}

TEST(ExhaustiveSearch, BudgetRefusal) {
  EXPECT_THROW(gsf::exhaustive_search(SearchTarget::kTau, 3, PrimePower{3, 1}, 1000), gsf::BudgetExceeded);
}

TEST(GreedySearch, FindsSymmetricWitnessOfFullDimension) {
  gsf::GreedyOptions g;
  g.seed = 1;
  g.restarts = 32;
  const auto r = gsf::greedy_search(SearchTarget::kMu, 4, PrimePower{3, 1}, g);
  EXPECT_EQ(r.best_dim, 4u);
  EXPECT_TRUE(gsf::check_invertible_span(gsf::BaseField::prime(3), r.witness_basis, {}).all_invertible);
}

TEST(GreedySearch, DeterministicAndBounded) {
  gsf::GreedyOptions g;
  g.seed = 5;
  const auto a = gsf::greedy_search(SearchTarget::kTau, 3, PrimePower{3, 1}, g);
  const auto b = gsf::greedy_search(SearchTarget::kTau, 3, PrimePower{3, 1}, g);
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_LE(a.best_dim, 3u);
}

TEST(GaussianBinomial, SmallValues) {
  EXPECT_EQ(gsf::gaussian_binomial(4, 2, 3), 130u);
  EXPECT_EQ(gsf::gaussian_binomial(4, 1, 3), 40u);
  EXPECT_EQ(gsf::gaussian_binomial(3, 3, 3), 1u);
  EXPECT_EQ(gsf::gaussian_binomial(2, 3, 3), 0u);
  EXPECT_EQ(gsf::gaussian_binomial(200, 100, 7), UINT64_MAX);
}

}  // namespace
