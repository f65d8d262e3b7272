#pragma once

// Admissibility series, disjointness, and the level-2k parameter extension.

#include "brauer_kl/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace brauer_kl::params {

/// Coefficients omega_0..omega_N of
///   (u - (-1)^k/2) * prod_i (u + v_i)/(u - v_i) - u + 1/2
/// expanded at u = infinity in powers of 1/u, where k = |v|.
inline ScalarVec omega_series(const ScalarVec& v, int N) {
  if (v.empty()) throw std::invalid_argument("omega_series: v must be nonempty");
  if (N < 0) throw std::invalid_argument("omega_series: N must be nonnegative");
  const std::size_t len = static_cast<std::size_t>(N) + 2;
  // P(x) with x = 1/u; each factor is (1 + v x)/(1 - v x).
  ScalarVec P(len, Scalar(0));
  P[0] = 1;
  for (const Scalar& vi : v) {
    for (std::size_t j = len - 1; j >= 1; --j) P[j] += vi * P[j - 1];
    for (std::size_t j = 1; j < len; ++j) P[j] += vi * P[j - 1];
  }
  const Scalar s = make_scalar(v.size() % 2 == 0 ? 1 : -1, 2);
  ScalarVec omega(static_cast<std::size_t>(N) + 1);
  for (std::size_t a = 0; a <= static_cast<std::size_t>(N); ++a) omega[a] = P[a + 1] - s * P[a];
  omega[0] += make_scalar(1, 2);
  return omega;
}

inline bool is_r_disjoint(const Scalar& a, const Scalar& b, int r) {
  auto ok = [r](const Scalar& x) { return !is_integer(x) || abs(x) >= r; };
  return ok(a + b) && ok(a - b);
}

/// Some omega_i, 0 <= i < k, is nonzero for the parameters (-1)^k u.
inline bool simple_param_condition(const ScalarVec& u) {
  const int k = static_cast<int>(u.size());
  ScalarVec v = u;
  if (k % 2 == 1)
    for (auto& x : v) x = -x;
  auto omega = omega_series(v, k - 1);
  return std::any_of(omega.begin(), omega.end(), [](const Scalar& w) { return w != 0; });
}

struct ParamConfig {
  int k = 0;
  int r = 0;
  ScalarVec u;
  std::vector<int> q;
  std::vector<int> p;  // p_0 .. p_k
  int n = 0;
  ScalarVec c;
  ScalarVec u_ext;  // u_1 .. u_{2k}
  ScalarVec omega;  // omega_0 .. omega_{2k} of u_ext
};

/// Fills c, u_ext and omega from u and the block sizes q.
inline ParamConfig extend_parameters(const ScalarVec& u, const std::vector<int>& q, int r) {
  const int k = static_cast<int>(u.size());
  if (k < 1 || static_cast<int>(q.size()) != k) throw std::invalid_argument("extend_parameters: need |q| = |u| >= 1");
  ParamConfig cfg;
  cfg.k = k;
  cfg.r = r;
  cfg.u = u;
  cfg.q = q;
  cfg.p.assign(1, 0);
  for (int qt : q) {
    if (qt < 1) throw std::invalid_argument("extend_parameters: block sizes must be positive");
    cfg.p.push_back(cfg.p.back() + qt);
  }
  cfg.n = cfg.p.back();
  const Scalar half = make_scalar(1, 2);
  for (int j = 1; j <= k; ++j) cfg.c.push_back(u[j - 1] + cfg.p[j - 1] - cfg.n + half);
  cfg.u_ext = u;
  for (int j = k + 1; j <= 2 * k; ++j) {
    const int b = 2 * k - j + 1;
    cfg.u_ext.push_back(-cfg.c[b - 1] + cfg.p[b] - cfg.n + half);
  }
  cfg.omega = omega_series(cfg.u_ext, 2 * k);
  if (cfg.omega[0] != 2 * cfg.n) throw std::logic_error("extend_parameters: omega_0 != 2n");
  return cfg;
}

/// u_{j+1} is r-disjoint from u_1..u_j for every k <= j < 2k.
inline bool verify_disjoint_extension(const ParamConfig& cfg) {
  for (int j = cfg.k; j < 2 * cfg.k; ++j)
    for (int i = 0; i < j; ++i)
      if (!is_r_disjoint(cfg.u_ext[j], cfg.u_ext[i], cfg.r)) return false;
  return true;
}

/// First guess for the block sizes: q_t = 2r + 4 + 2 G_t, where G_t bounds the integral
/// values among 2u_t and u_t +- u_s, then widened so that components whose parameters differ
/// by integers, listed by decreasing u, satisfy q_a - q_b >= (u_a - u_b) + r.
/// Finally n is made even.
inline std::vector<int> initial_block_sizes(const ScalarVec& u, int r) {
  const int k = static_cast<int>(u.size());
  std::vector<int> q(k);
  for (int t = 0; t < k; ++t) {
    Scalar G = 0;
    auto consider = [&G](const Scalar& x) {
      if (is_integer(x) && abs(x) > G) G = abs(x);
    };
    consider(2 * u[t]);
    for (int s = 0; s < k; ++s) {
      if (s == t) continue;
      consider(u[t] + u[s]);
      consider(u[t] - u[s]);
    }
    q[t] = 2 * r + 4 + 2 * static_cast<int>(to_long(G));
  }

  std::vector<int> cls(k, -1);
  std::vector<std::vector<int>> classes;
  for (int t = 0; t < k; ++t) {
    if (cls[t] >= 0) continue;
    cls[t] = static_cast<int>(classes.size());
    classes.push_back({t});
    for (int s = t + 1; s < k; ++s)
      if (cls[s] < 0 && is_integer(u[s] - u[t])) {
        cls[s] = cls[t];
        classes.back().push_back(s);
      }
  }
  for (auto& members : classes) {
    std::stable_sort(members.begin(), members.end(), [&u](int a, int b) { return u[a] > u[b]; });
    for (std::size_t i = members.size() - 1; i >= 1; --i) {
      const int a = members[i - 1], b = members[i];
      const int need = q[b] + static_cast<int>(to_long(u[a] - u[b])) + r;
      q[a] = std::max(q[a], need);
    }
  }

  int n = 0;
  for (int x : q) n += x;
  if (n % 2 != 0) q[classes[cls[k - 1]].front()] += 1;
  return q;
}

}  // namespace brauer_kl::params
