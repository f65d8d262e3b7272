#include "brauer_kl/block_sizes.hpp"
#include "brauer_kl/pipeline.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace brauer_kl;
using namespace brauer_kl::pipeline;

namespace {

combinat::Multipartition mp(std::vector<std::vector<int>> comps) {
  std::vector<combinat::Partition> ps;
  for (auto& c : comps) ps.emplace_back(std::move(c));
  return combinat::Multipartition(std::move(ps));
}

std::vector<ParamConfig> small_configs() {
  std::vector<ParamConfig> out;
  for (const ScalarVec& u : {ScalarVec{Scalar(0)}, ScalarVec{make_scalar(1, 3)}, ScalarVec{make_scalar(3, 2)},
                             ScalarVec{make_scalar(-1, 2)}, ScalarVec{make_scalar(1, 3), make_scalar(1, 5)},
                             ScalarVec{Scalar(0), Scalar(1)}})
    for (int r = 1; r <= (u.size() == 2 && u[0] == 0 ? 2 : 3); ++r) out.push_back(params::make_config(u, r));
  return out;
}

ReportOptions saturated() {
  ReportOptions o;
  o.assume_saturated = true;
  return o;
}

}  // namespace

TEST(VermaFlag, RankOneLevelOne) {
  auto cfg = params::make_config({make_scalar(1, 3)}, 1);
  auto flag = verma_flag(cfg);
  ASSERT_EQ(flag.size(), 2u);
  for (const auto& [mu, m] : flag) EXPECT_EQ(m, 1);
}

TEST(VermaFlag, RankThreeShapeTwoOne) {
  auto cfg = params::make_config({Scalar(0)}, 3);
  auto flag = verma_flag(cfg);
  EXPECT_EQ(flag.size(), 12u);
  const auto mu = weights::hat({0, mp({{2, 1}, {}})}, cfg);
  EXPECT_EQ(flag.at(mu), 2);
  EXPECT_EQ(flag.at(weights::hat({1, mp({{1}, {}})}, cfg)), 6);
}

TEST(VermaFlag, AgreesWithWeightPaths) {
  for (const auto& cfg : small_configs()) {
    auto by_paths = verma_flag_by_paths(cfg);
    EXPECT_EQ(verma_flag(cfg), by_paths) << to_string(cfg.u) << " r=" << cfg.r;
    std::set<Weight> support;
    for (const auto& [mu, m] : by_paths) support.insert(mu);
    auto F = weights::enumerate_F(cfg);
    EXPECT_EQ(support, std::set<Weight>(F.begin(), F.end()));
  }
}

TEST(VermaFlag, LevelKPathsCountLevelKTableaux) {
  for (const auto& cfg : small_configs()) {
    auto filtered = verma_flag_level_k(cfg);
    auto Frk = weights::enumerate_F_rk(cfg);
    combinat::TableauCounter counter(cfg.k);
    long long lhs = 0, rhs = 0;
    for (const auto& mu : Frk) {
      const auto idx = pipeline::truncate_to_level(weights::tilde(mu, cfg), cfg.k);
      EXPECT_EQ(filtered[mu], counter.count(cfg.r, idx.shape));
      lhs += filtered[mu];
    }
    for (const auto& idx : combinat::enumerate_lambda(cfg.k, cfg.r)) rhs += combinat::count_updown_tableaux(cfg.k, cfg.r, idx.shape);
    EXPECT_EQ(lhs, rhs) << to_string(cfg.u) << " r=" << cfg.r;
    EXPECT_EQ(Frk.size(), combinat::enumerate_lambda(cfg.k, cfg.r).size());
  }
}

TEST(VermaFlag, UnfilteredFlagCountsLevelTwoKTableaux) {
  auto cfg = params::make_config({make_scalar(1, 3)}, 2);
  long long total = 0;
  for (const auto& mu : weights::enumerate_F_rk(cfg)) total += verma_flag(cfg).at(mu);
  EXPECT_EQ(total, 4);
}

TEST(ContentConsistency, AllSmallConfigs) {
  for (const auto& cfg : small_configs()) {
    auto check = content_consistency_check(cfg);
    EXPECT_TRUE(check.ok) << to_string(cfg.u) << " r=" << cfg.r;
    EXPECT_GT(check.paths, 0u);
  }
}

TEST(ContentConsistency, FirstStepAddsTopLeftNode) {
  auto cfg = params::make_config({Scalar(0)}, 1);
  EXPECT_EQ(cfg.c[0] + cfg.n - make_scalar(1, 2), cfg.u[0]);
  combinat::UpdownTableau t{{mp({{}, {}}), mp({{1}, {}})}};
  EXPECT_EQ(combinat::content_sequence(t, cfg.u_ext), (ScalarVec{cfg.u[0]}));
}

TEST(TiltingDecomposition, GenericParametersGiveTheFlag) {
  for (int r = 1; r <= 3; ++r) {
    auto cfg = params::make_config({make_scalar(1, 3), make_scalar(1, 5)}, r);
    auto F = weights::enumerate_F(cfg);
    auto flag = verma_flag(cfg);
    BlockIndex blocks(F, weights::WeightContext(cfg), kPinnedConventions.kl);
    auto dec = tilting_decomposition(F, flag, blocks);
    EXPECT_EQ(dec.n, flag);
    EXPECT_EQ(dec.barF, F);
  }
}

TEST(TiltingDecomposition, ReconstructsTheFlagInEitherTieOrder) {
  for (const auto& cfg : small_configs()) {
    auto F = weights::enumerate_F(cfg);
    auto flag = verma_flag(cfg);
    BlockIndex blocks(F, weights::WeightContext(cfg), kPinnedConventions.kl);
    auto a = tilting_decomposition(F, flag, blocks, TieOrder::forward);
    auto b = tilting_decomposition(F, flag, blocks, TieOrder::reverse);
    EXPECT_EQ(a.n, b.n);
    for (const auto& mu : F) {
      long long total = 0;
      for (const auto& [lambda, m] : a.n) total += m * blocks.tilting_mult(lambda, mu);
      EXPECT_EQ(total, flag.at(mu));
    }
  }
}

TEST(TiltingDecomposition, StandardOrderBreaksTheFlag) {
  auto cfg = params::make_config({Scalar(0)}, 3);
  auto F = weights::enumerate_F(cfg);
  BlockIndex blocks(F, weights::WeightContext(cfg), KLOrder::standard);
  EXPECT_THROW(tilting_decomposition(F, verma_flag(cfg), blocks), NegativeResidual);
}

TEST(Report, GenericLevelOneRankTwoIsIdentity) {
  auto rep = decomposition_report(params::make_config({make_scalar(1, 3)}, 2));
  ASSERT_EQ(rep.F_rk.size(), 3u);
  ASSERT_EQ(rep.barF_rk, rep.F_rk);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(rep.matrixk[i][j], i == j ? 1 : 0);
  EXPECT_EQ(rep.label_k.at(rep.F_rk[0]), (combinat::LambdaIndex{0, mp({{2}})}));
}

TEST(Report, LevelOneNeverNeedsSaturationOverride) {
  for (const ScalarVec& u : {ScalarVec{Scalar(0)}, ScalarVec{make_scalar(3, 2)}, ScalarVec{make_scalar(-1, 2)}})
    for (int r = 1; r <= 3; ++r) {
      auto rep = decomposition_report(params::make_config(u, r));
      EXPECT_TRUE(rep.flags.phiA_ok);
      EXPECT_FALSE(rep.flags.assumed_saturated);
    }
}

TEST(Report, LinkedLevelTwoNeedsOverride) {
  auto cfg = params::make_config({Scalar(0), Scalar(1)}, 1);
  EXPECT_THROW(decomposition_report(cfg), SaturationNotEstablished);
  auto rep = decomposition_report(cfg, saturated());
  EXPECT_TRUE(rep.flags.assumed_saturated);
  EXPECT_FALSE(rep.flags.phiA_ok);
}

TEST(Report, StrictModeRejectsOtherConventions) {
  ReportOptions opt;
  opt.strict = true;
  opt.conventions.kl = KLOrder::standard;
  EXPECT_THROW(decomposition_report(params::make_config({Scalar(0)}, 2), opt), ConventionUnpinned);
  opt.conventions = kPinnedConventions;
  EXPECT_NO_THROW(decomposition_report(params::make_config({Scalar(0)}, 2), opt));
}

TEST(Report, StructuralInvariants) {
  for (const auto& cfg : small_configs()) {
    auto rep = decomposition_report(cfg, saturated());
    EXPECT_EQ(rep.F_rk.size(), combinat::enumerate_lambda(cfg.k, cfg.r).size());
    std::set<Weight> bar(rep.barF_r.begin(), rep.barF_r.end());
    std::vector<Weight> expected;
    for (const auto& mu : rep.F_rk)
      if (bar.count(mu)) expected.push_back(mu);
    EXPECT_EQ(rep.barF_rk, expected);
    for (std::size_t j = 0; j < rep.barF_r.size(); ++j) {
      auto row = std::find(rep.F_r.begin(), rep.F_r.end(), rep.barF_r[j]) - rep.F_r.begin();
      EXPECT_EQ(rep.matrix2k[row][j], 1);
    }
    // matrixk is the (F_rk, barF_rk) submatrix of matrix2k.
    for (std::size_t i = 0; i < rep.F_rk.size(); ++i)
      for (std::size_t j = 0; j < rep.barF_rk.size(); ++j) {
        auto r2 = std::find(rep.F_r.begin(), rep.F_r.end(), rep.F_rk[i]) - rep.F_r.begin();
        auto c2 = std::find(rep.barF_r.begin(), rep.barF_r.end(), rep.barF_rk[j]) - rep.barF_r.begin();
        EXPECT_EQ(rep.matrixk[i][j], rep.matrix2k[r2][c2]);
      }
    for (const auto& mu : rep.barF_r) EXPECT_GT(rep.n.at(mu), 0);
  }
}

TEST(Report, CrossCheckWithTiltingEngine) {
  for (const ScalarVec& u : {ScalarVec{Scalar(0)}, ScalarVec{make_scalar(3, 2)}, ScalarVec{Scalar(0), Scalar(1)}}) {
    ReportOptions opt = saturated();
    opt.cross_check_tilting = true;
    EXPECT_NO_THROW(decomposition_report(params::make_config(u, 2), opt)) << to_string(u);
  }
}

TEST(Report, CellModuleDataOnlyFlag) {
  auto rep = decomposition_report(params::make_config({make_scalar(3, 2)}, 2));
  EXPECT_EQ(rep.flags.cell_module_data_only, !params::simple_param_condition({make_scalar(3, 2)}));
  EXPECT_TRUE(rep.flags.r_even);
}
