#include "brauer_kl/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace brauer_kl;
using namespace brauer_kl::oracle;

namespace {

long long double_factorial_odd(int r) {
  long long x = 1;
  for (int i = 2 * r - 1; i > 1; i -= 2) x *= i;
  return x;
}

// Semisimplicity of B_r(delta), delta a nonzero integer, in characteristic zero:
// non-semisimple exactly for 4 - 2r <= delta <= r - 2, except odd delta with 4 - 2r < delta <= 3 - r.
bool semisimple_by_criterion(int r, int delta) {
  if (delta < 4 - 2 * r || delta > r - 2) return true;
  return delta % 2 != 0 && delta > 4 - 2 * r && delta <= 3 - r;
}

}  // namespace

TEST(BrauerDiagram, CountIsDoubleFactorial) {
  for (int r = 1; r <= 4; ++r) {
    auto all = all_diagrams(r);
    EXPECT_EQ(static_cast<long long>(all.size()), double_factorial_odd(r));
    for (const auto& d : all) EXPECT_TRUE(d.valid());
  }
}

TEST(BrauerDiagram, DefiningProducts) {
  const auto id = BrauerDiagram::identity(2);
  EXPECT_EQ(multiply(id, id), std::make_pair(id, 0));
  const auto e = BrauerDiagram::contraction(2, 0);
  EXPECT_EQ(multiply(e, e), std::make_pair(e, 1));
  const auto s = BrauerDiagram::swap(2, 0);
  EXPECT_EQ(multiply(s, s), std::make_pair(id, 0));
  EXPECT_EQ(multiply(s, e), std::make_pair(e, 0));
  EXPECT_EQ(multiply(e, s), std::make_pair(e, 0));
  // e_1 e_2 e_1 = e_1 at r = 3.
  const auto e1 = BrauerDiagram::contraction(3, 0), e2 = BrauerDiagram::contraction(3, 1);
  auto [e12, l1] = multiply(e1, e2);
  auto [e121, l2] = multiply(e12, e1);
  EXPECT_EQ(e121, e1);
  EXPECT_EQ(l1 + l2, 0);
}

TEST(BrauerDiagram, MultiplicationIsAssociativeWithLoopCounts) {
  std::mt19937 rng(17);
  for (int r = 2; r <= 4; ++r) {
    auto all = all_diagrams(r);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const auto &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
      auto [ab, l1] = multiply(a, b);
      auto [ab_c, l2] = multiply(ab, c);
      auto [bc, l3] = multiply(b, c);
      auto [a_bc, l4] = multiply(a, bc);
      EXPECT_EQ(ab_c, a_bc);
      EXPECT_EQ(l1 + l2, l3 + l4);
      EXPECT_TRUE(ab_c.valid());
    }
  }
}

TEST(Specht, DimensionsAndRepresentation) {
  std::map<std::vector<int>, std::size_t> dims{{{4}, 1}, {{3, 1}, 3}, {{2, 2}, 2}, {{2, 1, 1}, 3}, {{1, 1, 1, 1}, 1}};
  for (const auto& [parts, d] : dims) {
    SpechtModule S{combinat::Partition(parts)};
    EXPECT_EQ(S.dim(), d);
    Perm a{1, 0, 2, 3}, b{1, 2, 3, 0}, ab(4);
    for (int j = 0; j < 4; ++j) ab[j] = a[b[j]];
    EXPECT_EQ(S.action(a) * S.action(b), S.action(ab));
    EXPECT_EQ(S.form().rank(), d);
    EXPECT_EQ(S.action(a).transpose() * S.form() * S.action(a), S.form());
  }
  SpechtModule sign_rep{combinat::Partition({1, 1, 1})};
  EXPECT_EQ(sign_rep.action({1, 0, 2}).trace(), -1);
}

TEST(CellModule, ActionIsARepresentationWithInvariantForm) {
  std::mt19937 rng(23);
  for (int r = 2; r <= 4; ++r) {
    auto all = all_diagrams(r);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (const Scalar& delta : {Scalar(1), Scalar(-2), make_scalar(1, 3)})
      for (int f = 0; 2 * f <= r; ++f)
        for (const auto& lambda : combinat::partitions_of(r - 2 * f)) {
          CellModule C(r, f, lambda, delta);
          const ExactMatrix G = C.gram();
          EXPECT_EQ(G, G.transpose());
          for (int trial = 0; trial < 12; ++trial) {
            const auto &a = all[pick(rng)], &b = all[pick(rng)];
            auto [ab, loops] = multiply(a, b);
            Scalar scale = 1;
            for (int i = 0; i < loops; ++i) scale *= delta;
            ExactMatrix lhs = C.action(ab);
            ExactMatrix rhs = C.action(a) * C.action(b);
            for (std::size_t i = 0; i < rhs.rows(); ++i)
              for (std::size_t j = 0; j < rhs.cols(); ++j) lhs(i, j) *= scale;
            EXPECT_EQ(lhs, rhs);
            EXPECT_EQ(C.action(a).transpose() * G, G * C.action(a.flipped()));
          }
        }
  }
}

TEST(CellModule, GramRankIndependentOfBasisOrder) {
  CellModule C(4, 1, combinat::Partition({1, 1}), Scalar(1));
  const ExactMatrix G = C.gram();
  const std::size_t n = G.rows();
  ExactMatrix P(n, n);
  for (std::size_t i = 0; i < n; ++i) P(i, (i * 5 + 3) % n) = 1;
  ASSERT_EQ(P.rank(), n);
  EXPECT_EQ((P.transpose() * G * P).rank(), G.rank());
}

TEST(RegularTrace, GenericDeltaIsSemisimpleWithCellDimensionIdentity) {
  for (int r = 1; r <= 4; ++r) {
    auto reg = regular_trace_radical(r, make_scalar(1, 3));
    EXPECT_EQ(reg.radical_dim, 0u);
    std::size_t sq = 0;
    for (int f = 0; 2 * f <= r; ++f)
      for (const auto& lambda : combinat::partitions_of(r - 2 * f)) {
        const std::size_t d = CellModule(r, f, lambda, Scalar(0)).dim();
        sq += d * d;
      }
    EXPECT_EQ(static_cast<long long>(sq), double_factorial_odd(r));
  }
}

TEST(RegularTrace, SemisimplicityMatchesIntegralCriterion) {
  for (int r = 2; r <= 4; ++r)
    for (int delta = -5; delta <= 5; ++delta) {
      if (delta == 0) continue;
      auto reg = regular_trace_radical(r, Scalar(delta));
      EXPECT_EQ(reg.radical_dim == 0, semisimple_by_criterion(r, delta)) << "r=" << r << " delta=" << delta;
    }
}

TEST(RegularTrace, RadicalIsNilpotentTwoSidedIdeal) {
  const int r = 3;
  const Scalar delta = 1;
  auto basis = all_diagrams(r);
  std::map<BrauerDiagram, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  auto reg = regular_trace_radical(r, delta);
  ASSERT_GT(reg.radical_dim, 0u);
  const std::size_t N = basis.size();
  auto product = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> out(N, Scalar(0));
    for (std::size_t i = 0; i < N; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < N; ++j) {
        if (y[j] == 0) continue;
        auto [d, loops] = multiply(basis[i], basis[j]);
        Scalar c = x[i] * y[j];
        for (int l = 0; l < loops; ++l) c *= delta;
        out[index.at(d)] += c;
      }
    }
    return out;
  };
  auto column = [&](const ExactMatrix& m, std::size_t j) {
    std::vector<Scalar> v(N);
    for (std::size_t i = 0; i < N; ++i) v[i] = m(i, j);
    return v;
  };
  auto in_span = [&](const ExactMatrix& span, const std::vector<Scalar>& v) {
    ExactMatrix b(N, 1);
    for (std::size_t i = 0; i < N; ++i) b(i, 0) = v[i];
    return span.solve(b).has_value();
  };
  std::vector<Scalar> unit(N, Scalar(0));
  for (std::size_t j = 0; j < reg.radical_dim; ++j)
    for (std::size_t i = 0; i < N; ++i) {
      std::fill(unit.begin(), unit.end(), Scalar(0));
      unit[i] = 1;
      EXPECT_TRUE(in_span(reg.radical_basis, product(unit, column(reg.radical_basis, j))));
      EXPECT_TRUE(in_span(reg.radical_basis, product(column(reg.radical_basis, j), unit)));
    }
  // Powers of the radical shrink to zero.
  std::vector<std::vector<Scalar>> power;
  for (std::size_t j = 0; j < reg.radical_dim; ++j) power.push_back(column(reg.radical_basis, j));
  for (int step = 0; step < 10 && !power.empty(); ++step) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& x : power)
      for (std::size_t j = 0; j < reg.radical_dim; ++j) next.push_back(product(x, column(reg.radical_basis, j)));
    ExactMatrix m(N, next.size());
    for (std::size_t j = 0; j < next.size(); ++j)
      for (std::size_t i = 0; i < N; ++i) m(i, j) = next[j][i];
    const auto rk = m.rank();
    power.clear();
    if (rk == 0) break;
    auto red = m.transpose().rref();
    for (std::size_t i = 0; i < rk; ++i) {
      std::vector<Scalar> v(N);
      for (std::size_t c = 0; c < N; ++c) v[c] = red(i, c);
      power.push_back(v);
    }
  }
  EXPECT_TRUE(power.empty());
}

TEST(OracleMatrix, RankTwoLoopOneIsIdentity) {
  auto m = oracle_decomposition_matrix(2, Scalar(1));
  ASSERT_EQ(m.rows.size(), 3u);
  ASSERT_EQ(m.columns, m.rows);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m.entries[i][j], i == j ? 1 : 0);
}

TEST(OracleMatrix, GenericDeltaIsIdentity) {
  for (int r = 1; r <= 4; ++r) {
    auto m = oracle_decomposition_matrix(r, make_scalar(2, 7));
    ASSERT_EQ(m.columns, m.rows);
    for (std::size_t i = 0; i < m.rows.size(); ++i)
      for (std::size_t j = 0; j < m.rows.size(); ++j) EXPECT_EQ(m.entries[i][j], i == j ? 1 : 0);
  }
}

TEST(OracleMatrix, RankThreeLoopOneIsUnitriangularAndNotSemisimple) {
  auto m = oracle_decomposition_matrix(3, Scalar(1));
  long long off = 0;
  for (std::size_t c = 0; c < m.columns.size(); ++c) {
    std::size_t row = std::find(m.rows.begin(), m.rows.end(), m.columns[c]) - m.rows.begin();
    ASSERT_LT(row, m.rows.size());
    EXPECT_EQ(m.entries[row][c], 1);
    for (std::size_t i = 0; i < m.rows.size(); ++i)
      if (i != row) off += m.entries[i][c];
  }
  EXPECT_GE(off, 1);
  EXPECT_GT(m.radical_dim, 0u);
}

TEST(OracleMatrix, CellDimensionsMatchSimpleMultiplicities) {
  for (int r = 2; r <= 4; ++r)
    for (int delta : {1, 2, -2, -1}) {
      auto m = oracle_decomposition_matrix(r, Scalar(delta));
      for (std::size_t i = 0; i < m.rows.size(); ++i) {
        std::size_t total = 0;
        for (std::size_t j = 0; j < m.columns.size(); ++j) total += m.entries[i][j] * m.simple_dims[j];
        EXPECT_EQ(total, m.cell_dims[i]);
      }
    }
}

TEST(OracleMatrix, RejectsLargeRank) { EXPECT_THROW(oracle_decomposition_matrix(5, Scalar(1)), DimensionTooLarge); }
