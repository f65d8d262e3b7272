#pragma once

// Verma flags, the greedy tilting decomposition and decomposition matrices at levels 2k and k.

#include "brauer_kl/combinat.hpp"
#include "brauer_kl/errors.hpp"
#include "brauer_kl/kl.hpp"
#include "brauer_kl/params.hpp"
#include "brauer_kl/rational.hpp"
#include "brauer_kl/weights.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace brauer_kl::pipeline {

using combinat::LambdaIndex;
using params::ParamConfig;
using weights::Weight;

/// How tilting multiplicities are read off the composition matrix d[mu][lambda] = [M(lambda) : L(mu)].
enum class KLOrder {
  standard,  // (T(mu) : M(lambda)) = d[mu][lambda]
  swapped,   // (T(mu) : M(lambda)) = d[lambda][mu]
};

inline const char* to_string(KLOrder o) { return o == KLOrder::standard ? "standard" : "swapped"; }

inline KLOrder parse_kl_order(const std::string& s) {
  if (s == "standard") return KLOrder::standard;
  if (s == "swapped") return KLOrder::swapped;
  throw std::invalid_argument("unknown kl convention: " + s);
}

/// Conventions fixed by the level-one diagram comparison.
struct Conventions {
  KLOrder kl = KLOrder::swapped;
  combinat::Conjugation conjugation = combinat::Conjugation::transpose;
};

inline constexpr Conventions kPinnedConventions{};
inline constexpr bool kConventionsPinned = true;

using VermaFlag = std::map<Weight, long long>;

/// Multiplicity of M^p(mu) in the tensor space: the number of updown tableaux of its label.
inline VermaFlag verma_flag(const ParamConfig& cfg) {
  VermaFlag flag;
  combinat::TableauCounter counter(2 * cfg.k);
  for (const auto& mu : weights::enumerate_F(cfg)) {
    const auto idx = weights::tilde(mu, cfg);
    flag[mu] = counter.count(cfg.r, idx.shape);
  }
  return flag;
}

/// Same multiplicities by walking weights: each step adds +-eps_i and stays p-dominant.
inline VermaFlag verma_flag_by_paths(const ParamConfig& cfg) {
  const Weight lc = weights::lambda_c(cfg);
  const weights::WeightContext ctx(cfg);
  VermaFlag cur{{lc, 1}};
  for (int step = 0; step < cfg.r; ++step) {
    VermaFlag next;
    for (const auto& [nu, c] : cur)
      for (int i = 0; i < cfg.n; ++i)
        for (int sigma : {1, -1}) {
          Weight mu = nu;
          mu[i] += sigma;
          bool dominant = true;
          for (int j = 0; j + 1 < cfg.n && dominant; ++j)
            if (ctx.block[j] == ctx.block[j + 1]) dominant = mu[j] - lc[j] >= mu[j + 1] - lc[j + 1];
          if (dominant) next[mu] += c;
        }
    cur = std::move(next);
  }
  return cur;
}

inline ParamConfig at_rank(ParamConfig cfg, int r) {
  cfg.r = r;
  return cfg;
}

/// Verma paths whose weight lies in F_{s,k} at every rank s; ends in F_{r,k}.
inline VermaFlag verma_flag_level_k(const ParamConfig& cfg) {
  const weights::WeightContext ctx(cfg);
  VermaFlag cur{{weights::lambda_c(cfg), 1}};
  for (int s = 1; s <= cfg.r; ++s) {
    const ParamConfig at = at_rank(cfg, s);
    VermaFlag next;
    for (const auto& [nu, c] : cur)
      for (int i = 0; i < cfg.n; ++i)
        for (int sigma : {1, -1}) {
          Weight mu = nu;
          mu[i] += sigma;
          if (weights::in_F(mu, at) && weights::in_F_rk(mu, at)) next[mu] += c;
        }
    cur = std::move(next);
  }
  return cur;
}

struct ContentMismatch {
  Weight weight;
  combinat::UpdownTableau path;
  int step = 0;  // 1-based
  Scalar content;
  Scalar casimir;
};

struct ContentCheck {
  bool ok = true;
  std::size_t paths = 0;
  std::size_t steps = 0;
  std::optional<ContentMismatch> first_mismatch;
};

/// For every Verma path and step, the content from the tableau equals the Casimir eigenvalue
/// sigma nu_i + (sigma eps_i - eps_1, rho) + n - 1/2.
inline ContentCheck content_consistency_check(const ParamConfig& cfg) {
  ContentCheck out;
  const int n = cfg.n;
  for (const auto& mu : weights::enumerate_F(cfg)) {
    const auto idx = weights::tilde(mu, cfg);
    for (const auto& t : combinat::updown_tableaux(2 * cfg.k, cfg.r, idx.shape)) {
      ++out.paths;
      const ScalarVec b = combinat::content_sequence(t, cfg.u_ext);
      for (int j = 0; j < cfg.r; ++j) {
        ++out.steps;
        const auto& before = t.shapes[j];
        const auto& after = t.shapes[j + 1];
        const Weight nu = weights::hat({(j - before.size()) / 2, before}, at_rank(cfg, j));
        const Weight next = weights::hat({(j + 1 - after.size()) / 2, after}, at_rank(cfg, j + 1));
        const Weight d = weights::sub(next, nu);
        int i = -1, sigma = 0;
        for (int a = 0; a < n; ++a)
          if (d[a] != 0) {
            if (i >= 0 || abs(d[a]) != 1) throw std::logic_error("content check: path step is not +-eps_i");
            i = a;
            sigma = d[a] > 0 ? 1 : -1;
          }
        if (i < 0) throw std::logic_error("content check: path step is not +-eps_i");
        // (eps_i, rho) = n - 1 - i with 0-based i.
        const Scalar a = sigma * nu[i] + sigma * (n - 1 - i) - (n - 1) + n - make_scalar(1, 2);
        if (a != b[j] && out.ok) {
          out.ok = false;
          out.first_mismatch = ContentMismatch{mu, t, j + 1, b[j], a};
        }
      }
    }
  }
  return out;
}

/// Index of each F_r weight inside its linkage block.
struct BlockIndex {
  std::vector<kl::Block> blocks;
  std::map<Weight, std::pair<std::size_t, std::size_t>> where;
  KLOrder order;

  BlockIndex(const std::vector<Weight>& F, const weights::WeightContext& ctx, KLOrder o)
      : blocks(kl::partition_into_blocks(F, ctx)), order(o) {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t i = 0; i < blocks[b].size(); ++i) where.emplace(blocks[b].weights()[i], std::make_pair(b, i));
  }

  /// [M(lambda) : L(mu)], zero across blocks.
  long long composition_mult(const Weight& mu, const Weight& lambda) {
    const auto [bm, im] = where.at(mu);
    const auto [bl, il] = where.at(lambda);
    if (bm != bl) return 0;
    return blocks[bm].composition_mult(im, il);
  }

  /// (T(mu) : M(lambda)) under the chosen index order.
  long long tilting_mult(const Weight& mu, const Weight& lambda) {
    return order == KLOrder::standard ? composition_mult(mu, lambda) : composition_mult(lambda, mu);
  }
};

struct TiltingDecomposition {
  std::map<Weight, long long> n;
  std::vector<Weight> barF;  // in the order of F
};

enum class TieOrder { forward, reverse };

/// Greedy peel: take a dominance-maximal weight with positive residual, record it and subtract
/// its tilting character.
inline TiltingDecomposition tilting_decomposition(const std::vector<Weight>& F, const VermaFlag& flag,
                                                  BlockIndex& blocks, TieOrder order = TieOrder::forward) {
  std::map<Weight, long long> residual;
  for (const auto& mu : F) residual[mu] = flag.count(mu) ? flag.at(mu) : 0;
  std::vector<Weight> scan = F;
  if (order == TieOrder::reverse) std::reverse(scan.begin(), scan.end());
  TiltingDecomposition out;
  while (true) {
    const Weight* pick = nullptr;
    for (const auto& mu : scan) {
      if (residual[mu] <= 0) continue;
      bool maximal = true;
      for (const auto& nu : scan)
        if (residual[nu] > 0 && weights::dominance_less(mu, nu)) {
          maximal = false;
          break;
        }
      if (maximal) {
        pick = &mu;
        break;
      }
    }
    if (!pick) break;
    const Weight mu = *pick;
    const long long m = residual[mu];
    out.n[mu] = m;
    const auto [b, i] = blocks.where.at(mu);
    for (const auto& lambda : blocks.blocks[b].weights()) {
      const long long t = blocks.tilting_mult(mu, lambda);
      if (t == 0) continue;
      if (!residual.count(lambda)) throw NegativeResidual("tilting character leaves F_r at " + brauer_kl::to_string(lambda));
      residual[lambda] -= m * t;
      if (residual[lambda] < 0) throw NegativeResidual("negative residual at " + brauer_kl::to_string(lambda));
    }
  }
  for (const auto& [mu, res] : residual)
    if (res != 0) throw NegativeResidual("nonzero residual at " + brauer_kl::to_string(mu));
  for (const auto& mu : F)
    if (out.n.count(mu)) out.barF.push_back(mu);
  return out;
}

struct ReportFlags {
  bool phiA_ok = false;
  bool omega_condition = false;
  bool r_even = false;
  bool assumed_saturated = false;  // results conditional on an unproven saturation hypothesis
  bool cell_module_data_only = false;
  std::size_t singular_blocks = 0;
};

struct BlockSummary {
  std::size_t size = 0;
  bool singular = false;
};

struct DecompositionReport {
  ParamConfig cfg;
  Conventions conventions;
  std::vector<Weight> F_r, F_rk, barF_r, barF_rk;
  std::map<Weight, LambdaIndex> label;        // level 2k
  std::map<Weight, LambdaIndex> label_k;      // level k, defined on F_rk
  VermaFlag flag;
  std::map<Weight, long long> n;
  std::vector<std::vector<long long>> matrix2k;  // rows F_r, columns barF_r
  std::vector<std::vector<long long>> matrixk;   // rows F_rk, columns barF_rk
  ReportFlags flags;
  std::vector<BlockSummary> blocks;
};

struct ReportOptions {
  Conventions conventions = kPinnedConventions;
  bool assume_saturated = false;
  bool strict = false;  // refuse conventions that differ from the pinned ones
  bool cross_check_tilting = false;  // compare with tilting characters from the antispherical module
};

inline LambdaIndex truncate_to_level(const LambdaIndex& idx, int k) {
  std::vector<combinat::Partition> comps(idx.shape.components.begin(), idx.shape.components.begin() + k);
  return {idx.f, combinat::Multipartition(std::move(comps))};
}

inline DecompositionReport decomposition_report(const ParamConfig& cfg, const ReportOptions& opt = {}) {
  if (opt.strict && (!kConventionsPinned || opt.conventions.kl != kPinnedConventions.kl ||
                     opt.conventions.conjugation != kPinnedConventions.conjugation))
    throw ConventionUnpinned("requested conventions are not the pinned ones");
  const weights::WeightContext ctx(cfg);
  const Weight lc = weights::lambda_c(cfg);
  DecompositionReport rep;
  rep.cfg = cfg;
  rep.conventions = opt.conventions;
  rep.flags.phiA_ok = weights::phiA_condition(lc, ctx);
  rep.flags.omega_condition = params::simple_param_condition(cfg.u);
  rep.flags.r_even = cfg.r % 2 == 0;
  rep.flags.cell_module_data_only = rep.flags.r_even && !rep.flags.omega_condition;
  if (!rep.flags.phiA_ok) {
    if (!opt.assume_saturated) throw SaturationNotEstablished("Phi_A meets Psi+ at lambda_c; saturation is not established");
    rep.flags.assumed_saturated = true;
  }
  rep.F_r = weights::enumerate_F(cfg);
  for (const auto& mu : rep.F_r) {
    rep.label.emplace(mu, weights::tilde(mu, cfg));
    if (weights::in_F_rk(mu, cfg)) {
      rep.F_rk.push_back(mu);
      rep.label_k.emplace(mu, truncate_to_level(rep.label.at(mu), cfg.k));
    }
  }
  rep.flag = verma_flag(cfg);
  BlockIndex blocks(rep.F_r, ctx, opt.conventions.kl);
  if (opt.cross_check_tilting)
    for (auto& b : blocks.blocks)
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
          if (b.tilting_mult(i, j) != blocks.tilting_mult(b.weights()[i], b.weights()[j]))
            throw std::logic_error("tilting engine disagrees with the composition matrix at " + brauer_kl::to_string(b.weights()[i]));
  for (auto& b : blocks.blocks) {
    rep.blocks.push_back({b.size(), b.singular()});
    if (b.singular()) ++rep.flags.singular_blocks;
  }
  const auto forward = tilting_decomposition(rep.F_r, rep.flag, blocks, TieOrder::forward);
  const auto backward = tilting_decomposition(rep.F_r, rep.flag, blocks, TieOrder::reverse);
  if (forward.n != backward.n) throw std::logic_error("tilting decomposition depends on the peel order");
  rep.n = forward.n;
  rep.barF_r = forward.barF;
  const std::set<Weight> bar(rep.barF_r.begin(), rep.barF_r.end());
  for (const auto& mu : rep.F_rk)
    if (bar.count(mu)) rep.barF_rk.push_back(mu);
  auto fill = [&](const std::vector<Weight>& rows, const std::vector<Weight>& cols) {
    std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = blocks.tilting_mult(cols[j], rows[i]);
    return m;
  };
  rep.matrix2k = fill(rep.F_r, rep.barF_r);
  rep.matrixk = fill(rep.F_rk, rep.barF_rk);
  return rep;
}

}  // namespace brauer_kl::pipeline
