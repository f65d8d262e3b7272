#pragma once

#include "brauer_kl/errors.hpp"
#include "brauer_kl/params.hpp"
#include "brauer_kl/weights.hpp"

#include <string>
#include <vector>

namespace brauer_kl::params {

struct BlockSizes {
  std::vector<int> q;
  std::vector<int> p;
};

inline bool verify_block_sizes(const ScalarVec& u, const std::vector<int>& q, int r) {
  for (int x : q)
    if (x < 2 * r) return false;
  const ParamConfig cfg = extend_parameters(u, q, r);
  if (cfg.n % 2 != 0 || !verify_disjoint_extension(cfg)) return false;
  const weights::WeightContext ctx(cfg);
  return weights::is_simple_tilting_sufficient(weights::lambda_c(cfg), ctx);
}

/// Deterministic block sizes q_1..q_k: the initial guess, then uniform increases of 2
/// until the postconditions hold.
inline BlockSizes select_block_sizes(const ScalarVec& u, int r, int max_retries = 8) {
  if (u.empty() || r < 1) throw std::invalid_argument("select_block_sizes: need k >= 1 and r >= 1");
  std::vector<int> q = initial_block_sizes(u, r);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    if (verify_block_sizes(u, q, r)) {
      BlockSizes out{q, {0}};
      for (int x : q) out.p.push_back(out.p.back() + x);
      return out;
    }
    for (int& x : q) x += 2;
  }
  throw RetryExhausted("select_block_sizes: no valid block sizes after " + std::to_string(max_retries) + " retries");
}

inline ParamConfig make_config(const ScalarVec& u, int r) { return extend_parameters(u, select_block_sizes(u, r).q, r); }

}  // namespace brauer_kl::params
