#include "brauer_kl/block_sizes.hpp"
#include "brauer_kl/kl.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace brauer_kl;
using namespace brauer_kl::kl;

namespace {

LaurentPoly v(int e) { return LaurentPoly::monomial(e); }

Weight half_integral_point(int n) {
  Weight x;
  for (int i = 0; i < n; ++i) x.push_back(make_scalar(2 * (n - i) - 1, 2));
  return x;
}

// Every basis element reachable from the identity coset.
std::vector<int> closure(HeckeModule& m) {
  std::vector<int> ids{m.intern(identity_perm(m.system().n))};
  std::set<int> seen(ids.begin(), ids.end());
  for (std::size_t k = 0; k < ids.size(); ++k)
    for (int s = 0; s < m.num_simple(); ++s) {
      HeckeModule::Element e{{ids[k], LaurentPoly(1)}};
      for (const auto& [y, c] : m.act_H(e, s))
        if (seen.insert(y).second) ids.push_back(y);
    }
  return ids;
}

std::vector<int> singleton_blocks(int n) {
  std::vector<int> p;
  for (int i = 0; i <= n; ++i) p.push_back(i);
  return p;
}

}  // namespace

TEST(Laurent, Arithmetic) {
  LaurentPoly a = v(1) + v(-1);
  EXPECT_EQ((a * a).to_string(), "v^2 + 2 + v^-2");
  EXPECT_EQ(a * a, v(2) + LaurentPoly(2) + v(-2));
  EXPECT_EQ(a.bar(), a);
  EXPECT_EQ((v(3) - v(1)).bar(), v(-3) - v(-1));
  EXPECT_EQ((v(2) + LaurentPoly(3)).at_one(), 4);
  EXPECT_TRUE((v(1) - v(1)).is_zero());
  EXPECT_EQ((LaurentPoly(2) * v(1) - v(-2)).to_string(), "2v - v^-2");
  EXPECT_FALSE((v(1) - v(2)).nonnegative());
}

TEST(SignedPerm, ComposeInverseApply) {
  std::mt19937 rng(3);
  const int n = 5;
  for (int trial = 0; trial < 50; ++trial) {
    SignedPerm a = identity_perm(n), b = identity_perm(n);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    for (int j = 0; j < n; ++j) {
      if (rng() % 2) a[j] = -a[j];
      if (rng() % 2) b[j] = -b[j];
    }
    Weight x;
    for (int j = 0; j < n; ++j) x.push_back(make_scalar(static_cast<long>(rng() % 17) - 8, 3));
    EXPECT_EQ(act(compose(a, b), x), act(a, act(b, x)));
    EXPECT_EQ(compose(a, inverse(a)), identity_perm(n));
    EXPECT_EQ(act(inverse(a), act(a, x)), x);
  }
}

TEST(SignedPerm, ReflectionNegatesRootAndFixesOrthogonal) {
  const int n = 4;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int sj : {-1, 1}) {
        SRoot r{i, j, 1, sj};
        auto s = reflection(r, n);
        EXPECT_EQ(image(s, r), make_root(i, -1, j, -sj));
        EXPECT_EQ(compose(s, s), identity_perm(n));
        Weight x{Scalar(3), Scalar(5), Scalar(7), Scalar(11)};
        Weight y = act(s, x);
        EXPECT_EQ(pairing(y, r), -pairing(x, r));
      }
}

TEST(IntegralSystem, FullTypeDWhenHalfIntegral) {
  auto sys = IntegralSystem::of(half_integral_point(5));
  EXPECT_EQ(sys.positive.size(), 20u);
  std::set<SRoot> simple(sys.simple.begin(), sys.simple.end());
  std::set<SRoot> expected{{0, 1, 1, -1}, {1, 2, 1, -1}, {2, 3, 1, -1}, {3, 4, 1, -1}, {3, 4, 1, 1}};
  EXPECT_EQ(simple, expected);
}

TEST(IntegralSystem, SplitsIntoCommutingPieces) {
  // Coordinates 0,1 differ by integers; coordinate 2 is unrelated to both.
  Weight x{make_scalar(1, 3), make_scalar(-2, 3), make_scalar(1, 5)};
  auto sys = IntegralSystem::of(x);
  ASSERT_EQ(sys.positive.size(), 1u);
  EXPECT_EQ(sys.simple, (std::vector<SRoot>{{0, 1, 1, -1}}));
}

TEST(HeckeModule, RegularModuleOfD4HasFullSize) {
  HeckeModule m(IntegralSystem::of(half_integral_point(4)), WeightContext(singleton_blocks(4)),
                ModuleKind::antispherical);
  EXPECT_EQ(closure(m).size(), 192u);
}

TEST(HeckeModule, LongestElementCanonicalBasisIsGeometricSum) {
  for (int n : {3, 4}) {
    HeckeModule m(IntegralSystem::of(half_integral_point(n)), WeightContext(singleton_blocks(n)),
                  ModuleKind::antispherical);
    auto ids = closure(m);
    int top = ids.front();
    for (int y : ids)
      if (m.length(y) > m.length(top)) top = y;
    const auto& N = m.canonical(top);
    EXPECT_EQ(N.size(), ids.size());
    for (int y : ids) EXPECT_EQ(N.at(y), v(m.length(top) - m.length(y)));
  }
}

TEST(HeckeModule, SphericalTopElementIsGeometricSum) {
  const int n = 4;
  HeckeModule m(IntegralSystem::of(half_integral_point(n)), WeightContext(std::vector<int>{0, 2, 4}), ModuleKind::spherical);
  auto ids = closure(m);
  int top = ids.front();
  for (int y : ids)
    if (m.length(y) > m.length(top)) top = y;
  for (int y : ids) EXPECT_EQ(m.canonical(top).at(y), v(m.length(top) - m.length(y)));
}

TEST(HeckeModule, TwoElementModuleByHand) {
  // D_2 with one Levi block: the cosets are e and s = s_{eps_1+eps_2}.
  HeckeModule m(IntegralSystem::of(half_integral_point(2)), WeightContext(std::vector<int>{0, 2}), ModuleKind::antispherical);
  auto ids = closure(m);
  ASSERT_EQ(ids.size(), 2u);
  const int e = ids[0], s = ids[1];
  // bar(M_s) = M_s + (v - v^-1) M_e; N_s = M_s + p M_e is bar invariant iff p - bar(p) = v - v^-1.
  EXPECT_EQ(m.bar_standard(s), (HeckeModule::Element{{s, LaurentPoly(1)}, {e, v(1) - v(-1)}}));
  EXPECT_EQ(m.canonical(s), (HeckeModule::Element{{s, LaurentPoly(1)}, {e, v(1)}}));
}

TEST(HeckeModule, BarIsInvolutionAndCanonicalBasisIsCharacterised) {
  for (auto kind : {ModuleKind::antispherical, ModuleKind::spherical})
    for (const std::vector<int>& p : {std::vector<int>{0, 2, 4}, std::vector<int>{0, 3, 4}, std::vector<int>{0, 4},
                                      std::vector<int>{0, 1, 2, 3, 4}}) {
      HeckeModule m(IntegralSystem::of(half_integral_point(4)), WeightContext(p), kind);
      for (int x : closure(m)) {
        EXPECT_EQ(m.bar(m.bar_standard(x)), (HeckeModule::Element{{x, LaurentPoly(1)}}));
        const auto N = m.canonical(x);
        EXPECT_EQ(m.bar(N), N);
        for (const auto& [y, c] : N) {
          EXPECT_TRUE(c.nonnegative());
          if (y == x) {
            EXPECT_EQ(c, LaurentPoly(1));
          } else {
            EXPECT_GE(c.min_exponent(), 1);
            EXPECT_LT(m.length(y), m.length(x));
          }
        }
      }
    }
}

TEST(HeckeModule, LocalCoefficientsMatchFullCanonicalBasis) {
  for (auto kind : {ModuleKind::antispherical, ModuleKind::spherical})
    for (const std::vector<int>& p : {std::vector<int>{0, 2, 4}, std::vector<int>{0, 1, 4}, std::vector<int>{0, 1, 2, 3, 4}}) {
      HeckeModule full(IntegralSystem::of(half_integral_point(4)), WeightContext(p), kind);
      HeckeModule local(IntegralSystem::of(half_integral_point(4)), WeightContext(p), kind);
      auto ids = closure(full);
      for (int x : ids) {
        const auto N = full.canonical(x);
        const int lx = local.intern(full.element(x));
        for (int y : ids) {
          auto it = N.find(y);
          LaurentPoly expected = it == N.end() ? LaurentPoly() : it->second;
          EXPECT_EQ(local.coefficient(local.intern(full.element(y)), lx), expected);
        }
      }
    }
}

TEST(HeckeModule, ClosedWorldBound) {
  HeckeModule m(IntegralSystem::of(half_integral_point(4)), WeightContext(singleton_blocks(4)),
                ModuleKind::antispherical, 10);
  EXPECT_THROW(closure(m), ClosedWorldViolation);
}

TEST(Blocks, GenericWeightsAreSingletonsWithIdentityMatrices) {
  auto cfg = params::make_config({make_scalar(1, 3), make_scalar(1, 5)}, 3);
  weights::WeightContext ctx(cfg);
  auto F = weights::enumerate_F(cfg);
  auto blocks = partition_into_blocks(F, ctx);
  EXPECT_EQ(blocks.size(), F.size());
  for (auto& b : blocks) {
    EXPECT_EQ(b.size(), 1u);
    EXPECT_EQ(b.tilting_mult(0, 0), 1);
    EXPECT_EQ(b.composition_mult(0, 0), 1);
  }
}

TEST(Blocks, PartitionIsADisjointCoverRefiningOrbitInvariant) {
  for (const ScalarVec& u : {ScalarVec{Scalar(0)}, ScalarVec{make_scalar(3, 2)}, ScalarVec{make_scalar(-1, 2)}}) {
    auto cfg = params::make_config(u, 3);
    weights::WeightContext ctx(cfg);
    auto F = weights::enumerate_F(cfg);
    auto blocks = partition_into_blocks(F, ctx);
    std::size_t total = 0;
    std::set<Weight> all;
    for (auto& b : blocks) {
      total += b.size();
      auto invariant = [&](const Weight& mu) {
        Weight x = weights::add(mu, weights::rho(cfg.n));
        Weight a;
        int neg = 0;
        bool zero = false;
        for (auto& c : x) {
          a.push_back(abs(c));
          if (c < 0) ++neg;
          if (c == 0) zero = true;
        }
        std::sort(a.begin(), a.end());
        return std::make_pair(a, zero ? -1 : neg % 2);
      };
      for (const auto& mu : b.weights()) {
        EXPECT_EQ(invariant(mu), invariant(b.weights().front()));
        all.insert(mu);
      }
    }
    EXPECT_EQ(total, F.size());
    EXPECT_EQ(all, std::set<Weight>(F.begin(), F.end()));
  }
}

TEST(Blocks, UnitriangularNonnegativeAndBarInvariant) {
  for (const ScalarVec& u : {ScalarVec{Scalar(0)}, ScalarVec{make_scalar(3, 2)}, ScalarVec{make_scalar(-1, 2)},
                             ScalarVec{Scalar(0), Scalar(1)}}) {
    for (int r = 1; r <= (u.size() == 1 ? 3 : 2); ++r) {
      auto cfg = params::make_config(u, r);
      weights::WeightContext ctx(cfg);
      for (auto& b : partition_into_blocks(weights::enumerate_F(cfg), ctx)) {
        std::size_t bar_checked = 0;
        EXPECT_TRUE(b.verify_tilting_basis(2000, &bar_checked));
        if (u.size() == 1) {
          EXPECT_EQ(bar_checked, b.size());
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
          EXPECT_EQ(b.tilting_mult(i, i), 1);
          for (std::size_t j = 0; j < b.size(); ++j) {
            auto t = b.tilting_poly(i, j);
            EXPECT_TRUE(t.nonnegative());
            // Tilting modules only have Verma subquotients below their highest weight.
            if (i != j && !t.is_zero()) {
              EXPECT_TRUE(weights::dominance_less(b.weights()[j], b.weights()[i]));
            }
          }
        }
      }
    }
  }
}

TEST(Blocks, SingularBlockAtNegativeLoopParameter) {
  // u = 3/2 puts 1 and -1 into lambda_c + rho, which a plus root identifies.
  auto cfg = params::make_config({make_scalar(3, 2)}, 2);
  weights::WeightContext ctx(cfg);
  bool any_singular = false;
  for (auto& b : partition_into_blocks(weights::enumerate_F(cfg), ctx)) any_singular |= b.singular();
  EXPECT_TRUE(any_singular);
}

TEST(Blocks, CompositionMatrixOnSmallBlocks) {
  for (const ScalarVec& u : {ScalarVec{Scalar(0)}, ScalarVec{make_scalar(3, 2)}}) {
    auto cfg = params::make_config(u, 2);
    weights::WeightContext ctx(cfg);
    for (auto& b : partition_into_blocks(weights::enumerate_F(cfg), ctx)) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        EXPECT_EQ(b.composition_mult(i, i), 1);
        for (std::size_t j = 0; j < b.size(); ++j) {
          EXPECT_TRUE(b.composition_fiber_consistent(i, j));
          EXPECT_GE(b.composition_mult(i, j), 0);
          if (i != j && b.composition_mult(i, j) != 0) {
            EXPECT_TRUE(weights::dominance_less(b.weights()[i], b.weights()[j]));
          }
        }
      }
    }
  }
}
