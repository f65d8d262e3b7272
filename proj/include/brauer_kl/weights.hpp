#pragma once

// Type D_n weight combinatorics for the parabolic with Levi blocks p_0 < p_1 < ... < p_k.

#include "brauer_kl/combinat.hpp"
#include "brauer_kl/params.hpp"
#include "brauer_kl/rational.hpp"

#include <algorithm>
#include <compare>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace brauer_kl::weights {

using Weight = ScalarVec;

struct WeightContext {
  int n = 0;
  std::vector<int> p;
  std::vector<int> block;  // block[i] in 1..k for coordinate i (0-based)

  WeightContext() = default;
  explicit WeightContext(std::vector<int> bounds) : p(std::move(bounds)) {
    if (p.size() < 2 || p.front() != 0) throw std::invalid_argument("WeightContext: need 0 = p_0 < ... < p_k");
    for (std::size_t j = 1; j < p.size(); ++j)
      if (p[j] <= p[j - 1]) throw std::invalid_argument("WeightContext: boundaries must increase");
    n = p.back();
    for (std::size_t j = 1; j < p.size(); ++j)
      for (int i = p[j - 1]; i < p[j]; ++i) block.push_back(static_cast<int>(j));
  }
  explicit WeightContext(const params::ParamConfig& cfg) : WeightContext(cfg.p) {}

  int k() const { return static_cast<int>(p.size()) - 1; }
  /// Simple root alpha_i (1-based, i < n) lies in I iff i is not a block boundary.
  bool simple_in_I(int i) const { return i < n && block[i - 1] == block[i]; }
};

enum class RootKind { plus, minus };

/// eps_i + eps_j or eps_i - eps_j with 1 <= i < j <= n.
struct Root {
  int i = 0;
  int j = 0;
  RootKind kind = RootKind::minus;
  auto operator<=>(const Root&) const = default;
};

inline Scalar pairing(const Weight& x, const Root& b) {
  const Scalar& a = x[b.i - 1];
  const Scalar& c = x[b.j - 1];
  return b.kind == RootKind::plus ? Scalar(a + c) : Scalar(a - c);
}

/// The reflection s_beta applied to a vector of coordinates.
inline Weight reflect(Weight x, const Root& b) {
  auto& a = x[b.i - 1];
  auto& c = x[b.j - 1];
  if (b.kind == RootKind::minus) {
    std::swap(a, c);
  } else {
    Scalar t = a;
    a = -c;
    c = -t;
  }
  return x;
}

inline bool in_phi_I(const Root& b, const WeightContext& ctx) {
  return b.kind == RootKind::minus && ctx.block[b.i - 1] == ctx.block[b.j - 1];
}

inline Weight rho(int n) {
  Weight w;
  for (int i = n - 1; i >= 0; --i) w.emplace_back(i);
  return w;
}

inline Weight lambda_c(const params::ParamConfig& cfg) {
  Weight w;
  for (int j = 1; j <= cfg.k; ++j)
    for (int i = 0; i < cfg.q[j - 1]; ++i) w.push_back(cfg.c[j - 1]);
  return w;
}

inline Weight add(const Weight& a, const Weight& b) {
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Weight sub(const Weight& a, const Weight& b) {
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

/// Entries of x pairwise distinct within every block.
inline bool block_regular(const Weight& x, const WeightContext& ctx) {
  for (int i = 0; i < ctx.n; ++i)
    for (int j = i + 1; j < ctx.n && ctx.block[j] == ctx.block[i]; ++j)
      if (x[i] == x[j]) return false;
  return true;
}

struct PsiSets {
  std::set<Root> plus;
  std::set<Root> plus_plus;
};

inline PsiSets psi_sets(const Weight& lambda, const WeightContext& ctx) {
  const Weight x = add(lambda, rho(ctx.n));
  PsiSets out;
  for (int i = 1; i <= ctx.n; ++i)
    for (int j = i + 1; j <= ctx.n; ++j)
      for (RootKind kind : {RootKind::plus, RootKind::minus}) {
        Root b{i, j, kind};
        if (in_phi_I(b, ctx)) continue;
        Scalar v = pairing(x, b);
        if (!is_integer(v) || v <= 0) continue;
        out.plus.insert(b);
        if (block_regular(reflect(x, b), ctx)) out.plus_plus.insert(b);
      }
  return out;
}

/// Psi++ empty: the parabolic Verma module is simple and tilting.
inline bool is_simple_tilting_sufficient(const Weight& lambda, const WeightContext& ctx) {
  return psi_sets(lambda, ctx).plus_plus.empty();
}

/// No minus root joining distinct blocks lies in Psi+(lambda).
inline bool phiA_condition(const Weight& lambda, const WeightContext& ctx) {
  for (const Root& b : psi_sets(lambda, ctx).plus)
    if (b.kind == RootKind::minus) return false;
  return true;
}

inline Weight delta(const Weight& mu, const params::ParamConfig& cfg) { return sub(mu, lambda_c(cfg)); }

inline int abs_size(const Weight& d) {
  Scalar s = 0;
  for (const auto& x : d) s += abs(x);
  return static_cast<int>(to_long(s));
}

/// delta integral, weakly decreasing on each block, |delta| in {r, r-2, ...}.
inline bool in_F(const Weight& mu, const params::ParamConfig& cfg) {
  const Weight d = delta(mu, cfg);
  if (static_cast<int>(d.size()) != cfg.n) return false;
  for (const auto& x : d)
    if (!is_integer(x)) return false;
  const WeightContext ctx(cfg);
  for (int i = 0; i + 1 < cfg.n; ++i)
    if (ctx.block[i] == ctx.block[i + 1] && d[i] < d[i + 1]) return false;
  const int s = abs_size(d);
  return s <= cfg.r && (cfg.r - s) % 2 == 0;
}

inline bool in_F_rk(const Weight& mu, const params::ParamConfig& cfg) {
  if (!in_F(mu, cfg)) return false;
  const Weight d = delta(mu, cfg);
  return std::all_of(d.begin(), d.end(), [](const Scalar& x) { return x >= 0; });
}

/// All members of F_r, ordered by decreasing |delta| and then decreasing delta.
inline std::vector<Weight> enumerate_F(const params::ParamConfig& cfg) {
  // Per block: weakly decreasing integer vectors of length q with absolute sum <= r.
  std::vector<std::vector<std::pair<std::vector<int>, int>>> options(static_cast<std::size_t>(cfg.k));
  for (int j = 0; j < cfg.k; ++j) {
    const int q = cfg.q[j];
    for (int a = 0; a <= cfg.r; ++a)
      for (int b = 0; a + b <= cfg.r; ++b)
        for (const auto& alpha : combinat::partitions_of(a))
          for (const auto& beta : combinat::partitions_of(b)) {
            if (alpha.length() + beta.length() > q) continue;
            std::vector<int> v(static_cast<std::size_t>(q), 0);
            for (int i = 0; i < alpha.length(); ++i) v[i] = alpha.parts[i];
            for (int i = 0; i < beta.length(); ++i) v[q - 1 - i] = -beta.parts[i];
            options[j].emplace_back(std::move(v), a + b);
          }
  }
  std::vector<std::vector<int>> deltas;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int j, int used) -> void {
    if (j == cfg.k) {
      if ((cfg.r - used) % 2 == 0) deltas.push_back(cur);
      return;
    }
    for (const auto& [v, s] : options[j]) {
      if (used + s > cfg.r) continue;
      cur.insert(cur.end(), v.begin(), v.end());
      self(self, j + 1, used + s);
      cur.resize(cur.size() - v.size());
    }
  };
  rec(rec, 0, 0);
  auto size_of = [](const std::vector<int>& d) {
    int s = 0;
    for (int x : d) s += std::abs(x);
    return s;
  };
  std::sort(deltas.begin(), deltas.end(), [&](const auto& a, const auto& b) {
    const int sa = size_of(a), sb = size_of(b);
    if (sa != sb) return sa > sb;
    return a > b;
  });
  const Weight lc = lambda_c(cfg);
  std::vector<Weight> out;
  for (const auto& d : deltas) {
    Weight mu = lc;
    for (std::size_t i = 0; i < d.size(); ++i) mu[i] += d[i];
    out.push_back(std::move(mu));
  }
  return out;
}

inline std::vector<Weight> enumerate_F_rk(const params::ParamConfig& cfg) {
  std::vector<Weight> out;
  for (auto& mu : enumerate_F(cfg))
    if (in_F_rk(mu, cfg)) out.push_back(std::move(mu));
  return out;
}

/// Component j <= k reads the first r entries of block j of delta; component j > k reads
/// the last r entries of block 2k-j+1, reversed and negated.
inline combinat::LambdaIndex tilde(const Weight& mu, const params::ParamConfig& cfg) {
  if (!in_F(mu, cfg)) throw std::invalid_argument("tilde: weight is not in F_r");
  const Weight d = delta(mu, cfg);
  std::vector<combinat::Partition> comps;
  for (int j = 1; j <= 2 * cfg.k; ++j) {
    std::vector<int> parts;
    if (j <= cfg.k) {
      for (int i = 0; i < cfg.r; ++i) parts.push_back(static_cast<int>(to_long(d[cfg.p[j - 1] + i])));
    } else {
      const int b = 2 * cfg.k - j + 1;
      for (int i = 0; i < cfg.r; ++i) parts.push_back(-static_cast<int>(to_long(d[cfg.p[b] - 1 - i])));
    }
    for (int& x : parts) x = std::max(x, 0);
    comps.emplace_back(std::move(parts));
  }
  combinat::Multipartition shape(std::move(comps));
  return {(cfg.r - shape.size()) / 2, std::move(shape)};
}

inline Weight hat(const combinat::LambdaIndex& idx, const params::ParamConfig& cfg) {
  const auto& comps = idx.shape.components;
  if (static_cast<int>(comps.size()) != 2 * cfg.k) throw std::invalid_argument("hat: shape must have level 2k");
  if (idx.f < 0 || 2 * idx.f + idx.shape.size() != cfg.r) throw std::invalid_argument("hat: need |shape| = r - 2f");
  Weight mu = lambda_c(cfg);
  for (int j = 1; j <= cfg.k; ++j) {
    const auto& top = comps[j - 1];
    const auto& bottom = comps[2 * cfg.k - j];
    if (top.length() > cfg.r || bottom.length() > cfg.r) throw std::invalid_argument("hat: component has more than r rows");
    if (top.length() + bottom.length() > cfg.q[j - 1]) throw std::invalid_argument("hat: block too small");
    for (int i = 0; i < top.length(); ++i) mu[cfg.p[j - 1] + i] += top.parts[i];
    for (int i = 0; i < bottom.length(); ++i) mu[cfg.p[j] - 1 - i] -= bottom.parts[i];
  }
  return mu;
}

/// mu <= lambda in the dominance order: lambda - mu is a nonnegative integral
/// combination of the simple roots of D_n.
inline bool dominance_leq(const Weight& mu, const Weight& lambda) {
  const std::size_t n = mu.size();
  if (n < 2 || lambda.size() != n) throw std::invalid_argument("dominance_leq: need equal sizes >= 2");
  Scalar S = 0;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    S += lambda[j] - mu[j];
    if (!is_integer(S) || S < 0) return false;
  }
  const Scalar S1 = S + (lambda[n - 2] - mu[n - 2]);
  const Scalar vn = lambda[n - 1] - mu[n - 1];
  const Scalar Sn = S1 + vn;
  const Scalar c1 = (S1 - vn) / 2, cn = Sn / 2;
  return is_integer(c1) && is_integer(cn) && c1 >= 0 && cn >= 0;
}

inline bool dominance_less(const Weight& mu, const Weight& lambda) { return mu != lambda && dominance_leq(mu, lambda); }

}  // namespace brauer_kl::weights
