#pragma once

// Parabolic Kazhdan-Lusztig theory for the integral Weyl group of a type D_n weight,
// with the type A parabolic given by the Levi blocks.

#include "brauer_kl/errors.hpp"
#include "brauer_kl/laurent.hpp"
#include "brauer_kl/rational.hpp"
#include "brauer_kl/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace brauer_kl::kl {

using weights::Weight;
using weights::WeightContext;

/// w(eps_j) = sign * eps_{|w[j]|-1}, sign = sign of w[j].
using SignedPerm = std::vector<int>;

inline SignedPerm identity_perm(int n) {
  SignedPerm w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[j] = j + 1;
  return w;
}

/// (a o b)(eps_j) = a(b(eps_j)).
inline SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm out(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    const int m = std::abs(b[j]) - 1;
    out[j] = b[j] > 0 ? a[m] : -a[m];
  }
  return out;
}

inline SignedPerm inverse(const SignedPerm& w) {
  SignedPerm out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    const int m = std::abs(w[j]) - 1;
    out[m] = w[j] > 0 ? static_cast<int>(j) + 1 : -(static_cast<int>(j) + 1);
  }
  return out;
}

inline Weight act(const SignedPerm& w, const Weight& x) {
  Weight out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const int m = std::abs(w[j]) - 1;
    out[m] = w[j] > 0 ? x[j] : Scalar(-x[j]);
  }
  return out;
}

/// si * eps_i + sj * eps_j with i < j (0-based).
struct SRoot {
  int i = 0;
  int j = 0;
  int si = 1;
  int sj = -1;
  auto operator<=>(const SRoot&) const = default;
};

inline SRoot make_root(int a, int sa, int b, int sb) {
  if (a > b) {
    std::swap(a, b);
    std::swap(sa, sb);
  }
  return {a, b, sa, sb};
}

inline bool is_positive(const SRoot& r) { return r.si > 0; }

inline SRoot image(const SignedPerm& w, const SRoot& r) {
  const int a = std::abs(w[r.i]) - 1, b = std::abs(w[r.j]) - 1;
  const int sa = w[r.i] > 0 ? r.si : -r.si;
  const int sb = w[r.j] > 0 ? r.sj : -r.sj;
  return make_root(a, sa, b, sb);
}

inline SignedPerm reflection(const SRoot& r, int n) {
  SignedPerm w = identity_perm(n);
  const int c = -r.si * r.sj;
  w[r.i] = c * (r.j + 1);
  w[r.j] = c * (r.i + 1);
  return w;
}

inline Scalar pairing(const Weight& x, const SRoot& r) { return r.si * x[r.i] + r.sj * x[r.j]; }

/// Root in +-Phi_I: an eps_a - eps_b inside one Levi block.
inline bool in_levi(const SRoot& r, const WeightContext& ctx) {
  return r.si != r.sj && ctx.block[r.i] == ctx.block[r.j];
}

inline weights::Root to_root(const SRoot& r) {
  return {r.i + 1, r.j + 1, r.si == r.sj ? weights::RootKind::plus : weights::RootKind::minus};
}

/// Positive roots with integral pairing against x and the simple system they determine.
struct IntegralSystem {
  int n = 0;
  std::vector<SRoot> positive;
  std::vector<SRoot> simple;

  static IntegralSystem of(const Weight& x) {
    IntegralSystem sys;
    sys.n = static_cast<int>(x.size());
    for (int i = 0; i < sys.n; ++i)
      for (int j = i + 1; j < sys.n; ++j)
        for (int sj : {-1, 1}) {
          SRoot r{i, j, 1, sj};
          if (is_integer(pairing(x, r))) sys.positive.push_back(r);
        }
    std::set<SRoot> members(sys.positive.begin(), sys.positive.end());
    std::set<SRoot> decomposable;
    for (std::size_t a = 0; a < sys.positive.size(); ++a)
      for (std::size_t b = a + 1; b < sys.positive.size(); ++b) {
        auto sum = add_roots(sys.positive[a], sys.positive[b]);
        if (sum && members.count(*sum)) decomposable.insert(*sum);
      }
    for (const auto& r : sys.positive)
      if (!decomposable.count(r)) sys.simple.push_back(r);
    return sys;
  }

 private:
  static std::optional<SRoot> add_roots(const SRoot& a, const SRoot& b) {
    std::map<int, int> coords;
    coords[a.i] += a.si;
    coords[a.j] += a.sj;
    coords[b.i] += b.si;
    coords[b.j] += b.sj;
    std::vector<std::pair<int, int>> nz;
    for (auto [k, v] : coords)
      if (v != 0) nz.emplace_back(k, v);
    if (nz.size() != 2 || std::abs(nz[0].second) != 1 || std::abs(nz[1].second) != 1) return std::nullopt;
    return make_root(nz[0].first, nz[0].second, nz[1].first, nz[1].second);
  }
};

enum class ModuleKind { antispherical, spherical };

inline const char* to_string(ModuleKind k) { return k == ModuleKind::antispherical ? "antispherical" : "spherical"; }

/// Right module over the Hecke algebra of the integral Weyl group with standard basis
/// indexed by minimal coset representatives of W_I.
class HeckeModule {
 public:
  using Element = std::map<int, LaurentPoly>;

  HeckeModule(IntegralSystem sys, WeightContext ctx, ModuleKind kind, std::size_t max_elements = 400000)
      : sys_(std::move(sys)), ctx_(std::move(ctx)), kind_(kind), max_elements_(max_elements) {
    for (int i = 0; i + 1 < ctx_.n; ++i) {
      if (!ctx_.simple_in_I(i + 1)) continue;
      SRoot a{i, i + 1, 1, -1};
      if (std::find(sys_.simple.begin(), sys_.simple.end(), a) == sys_.simple.end())
        throw std::logic_error("HeckeModule: Levi simple root is not simple in the integral system");
      levi_simple_.push_back(a);
    }
    for (const auto& s : sys_.simple) reflections_.push_back(reflection(s, sys_.n));
  }

  const IntegralSystem& system() const { return sys_; }
  ModuleKind kind() const { return kind_; }
  std::size_t size() const { return elems_.size(); }
  int num_simple() const { return static_cast<int>(sys_.simple.size()); }

  bool is_minimal(const SignedPerm& w) const {
    const SignedPerm winv = inverse(w);
    for (const auto& a : levi_simple_)
      if (!is_positive(image(winv, a))) return false;
    return true;
  }

  int length_of(const SignedPerm& w) const {
    int len = 0;
    for (const auto& b : sys_.positive)
      if (!is_positive(image(w, b))) ++len;
    return len;
  }

  int intern(const SignedPerm& w) {
    if (auto it = ids_.find(w); it != ids_.end()) return it->second;
    if (elems_.size() >= max_elements_)
      throw ClosedWorldViolation("Hecke module exceeded " + std::to_string(max_elements_) + " basis elements");
    const int id = static_cast<int>(elems_.size());
    elems_.push_back(w);
    lengths_.push_back(length_of(w));
    ids_.emplace(w, id);
    return id;
  }

  const SignedPerm& element(int id) const { return elems_[static_cast<std::size_t>(id)]; }
  int length(int id) const { return lengths_[static_cast<std::size_t>(id)]; }

  /// M_y C_s with C_s = H_s + v.
  Element act_C(const Element& m, int s) {
    Element out;
    for (const auto& [y, c] : m) {
      const SRoot g = image(element(y), sys_.simple[s]);
      if (in_levi(g, ctx_)) {
        if (kind_ == ModuleKind::spherical) add(out, y, c * (LaurentPoly::monomial(1) + LaurentPoly::monomial(-1)));
        continue;
      }
      add(out, intern(compose(element(y), reflections_[s])), c);
      add(out, y, c.shifted(is_positive(g) ? 1 : -1));
    }
    return out;
  }

  /// M_y H_s.
  Element act_H(const Element& m, int s) {
    Element out;
    for (const auto& [y, c] : m) {
      const SRoot g = image(element(y), sys_.simple[s]);
      if (in_levi(g, ctx_)) {
        add(out, y, kind_ == ModuleKind::antispherical ? -c.shifted(1) : c.shifted(-1));
        continue;
      }
      add(out, intern(compose(element(y), reflections_[s])), c);
      if (!is_positive(g)) add(out, y, c.shifted(-1) - c.shifted(1));
    }
    return out;
  }

  /// A simple reflection s with ys < y, or -1 for the identity coset.
  int descent(int y) const {
    for (int s = 0; s < num_simple(); ++s)
      if (!is_positive(image(element(y), sys_.simple[s]))) return s;
    return -1;
  }

  /// Canonical basis element N_x = M_x + sum_{y<x} n_{y,x} M_y with n_{y,x} in vZ[v].
  const Element& canonical(int x) {
    if (auto it = canon_.find(x); it != canon_.end()) return it->second;
    Element result;
    const int s = descent(x);
    if (s < 0) {
      result[x] = LaurentPoly(1);
    } else {
      const int xs = intern(compose(element(x), reflections_[s]));
      const Element base = canonical(xs);
      Element prod = act_C(base, s);
      std::map<std::pair<int, int>, int, std::greater<>> order;
      for (const auto& [z, c] : prod)
        if (z != x) order.emplace(std::make_pair(length(z), z), z);
      while (!order.empty()) {
        const int z = order.begin()->second;
        order.erase(order.begin());
        auto it = prod.find(z);
        if (it == prod.end()) continue;
        if (it->second.min_exponent() < 0)
          throw std::logic_error("canonical basis: negative exponent during reduction");
        const long long c0 = it->second.coeff(0);
        if (c0 == 0) continue;
        const Element nz = canonical(z);
        for (const auto& [y, c] : nz) {
          add(prod, y, c * LaurentPoly(-c0));
          if (y != z && prod.count(y)) order.emplace(std::make_pair(length(y), y), y);
        }
      }
      result = std::move(prod);
    }
    return canon_.emplace(x, std::move(result)).first->second;
  }

  /// bar(M_x) in the standard basis.
  const Element& bar_standard(int x) {
    if (auto it = bar_std_.find(x); it != bar_std_.end()) return it->second;
    Element result;
    const int s = descent(x);
    if (s < 0) {
      result[x] = LaurentPoly(1);
    } else {
      const int xs = intern(compose(element(x), reflections_[s]));
      const Element b = bar_standard(xs);
      // bar(H_s) = H_s^{-1} = H_s + v - v^{-1}
      result = act_H(b, s);
      for (const auto& [y, c] : b) add(result, y, c.shifted(1) - c.shifted(-1));
    }
    return bar_std_.emplace(x, std::move(result)).first->second;
  }

  Element bar(const Element& m) {
    Element out;
    for (const auto& [y, c] : m) {
      const Element by = bar_standard(y);
      for (const auto& [z, d] : by) add(out, z, c.bar() * d);
    }
    return out;
  }

  bool is_bar_invariant(int x) {
    const Element n = canonical(x);
    return bar(n) == n;
  }

  /// The coefficient n_{y,x} of M_y in N_x, computed from Bruhat intervals below x only.
  /// Agrees with canonical(x) but never materialises the full support.
  LaurentPoly coefficient(int y, int x) {
    if (y == x) return LaurentPoly(1);
    if (length(y) >= length(x)) return {};
    const auto key = std::make_pair(y, x);
    if (auto it = coeff_memo_.find(key); it != coeff_memo_.end()) return it->second;
    LaurentPoly result = coefficient_uncached(y, x);
    coeff_memo_.emplace(key, result);
    return result;
  }

  /// Elements z with y <= z <= x in the Bruhat order on minimal coset representatives.
  std::vector<int> interval(int y, int x) {
    std::set<int> down{x};
    std::vector<int> frontier{x};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int z : frontier) {
        if (length(z) <= length(y)) continue;
        for (int w : covers(z, false))
          if (length(w) >= length(y) && down.insert(w).second) next.push_back(w);
      }
      frontier = std::move(next);
    }
    if (!down.count(y)) return {};
    std::set<int> up{y};
    frontier = {y};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int z : frontier)
        for (int w : covers(z, true))
          if (down.count(w) && up.insert(w).second) next.push_back(w);
      frontier = std::move(next);
    }
    return {up.begin(), up.end()};
  }

  /// All z <= x in the Bruhat order, or nothing once more than limit elements turn up.
  std::optional<std::vector<int>> lower_ideal(int x, std::size_t limit) {
    std::set<int> seen{x};
    std::vector<int> frontier{x};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int z : frontier)
        for (int w : covers(z, false))
          if (seen.insert(w).second) {
            if (seen.size() > limit) return std::nullopt;
            next.push_back(w);
          }
      frontier = std::move(next);
    }
    return std::vector<int>(seen.begin(), seen.end());
  }

  /// N_x assembled from local coefficients over a known lower ideal.
  Element local_canonical(int x, const std::vector<int>& ideal) {
    Element out;
    for (int y : ideal) add(out, y, coefficient(y, x));
    return out;
  }

  static void add(Element& m, int y, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = m.find(y);
    if (it == m.end()) {
      m.emplace(y, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }

 private:
  LaurentPoly coefficient_uncached(int y, int x) {
    // A descent s of x with ys > y gives n_{y,x} = v n_{ys,x}; with ys outside the
    // coset representatives the antispherical coefficient vanishes.
    int chosen = -1;
    for (int s = 0; s < num_simple(); ++s) {
      if (is_positive(image(element(x), sys_.simple[s]))) continue;
      const SRoot g = image(element(y), sys_.simple[s]);
      if (in_levi(g, ctx_)) {
        if (kind_ == ModuleKind::antispherical) return {};
      } else if (is_positive(g)) {
        return coefficient(intern(compose(element(y), reflections_[s])), x).shifted(1);
      }
      if (chosen < 0) chosen = s;
    }
    // N_x = N_{xs} C_s - sum_z mu(z, xs) N_z
    const int s = chosen;
    const int xs = intern(compose(element(x), reflections_[s]));
    const SRoot g = image(element(y), sys_.simple[s]);
    LaurentPoly result;
    if (in_levi(g, ctx_)) {
      result = coefficient(y, xs) * (LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
    } else {
      result = coefficient(intern(compose(element(y), reflections_[s])), xs) + coefficient(y, xs).shifted(-1);
    }
    for (int z : interval(y, xs)) {
      if (z == xs) continue;
      const SRoot gz = image(element(z), sys_.simple[s]);
      const bool lowers = in_levi(gz, ctx_) ? kind_ == ModuleKind::spherical : !is_positive(gz);
      if (!lowers) continue;
      const long long mu = coefficient(z, xs).coeff(1);
      if (mu != 0) result -= coefficient(y, z) * LaurentPoly(mu);
    }
    return result;
  }

  const std::vector<int>& covers(int z, bool upward) {
    auto& cache = upward ? up_covers_ : down_covers_;
    if (auto it = cache.find(z); it != cache.end()) return it->second;
    std::vector<int> out;
    const SignedPerm w = element(z);
    const int target = length(z) + (upward ? 1 : -1);
    for (const auto& b : sys_.positive) {
      if (is_positive(image(w, b)) != upward) continue;
      SignedPerm u = compose(w, reflection(b, sys_.n));
      if (!is_minimal(u) || length_of(u) != target) continue;
      out.push_back(intern(u));
    }
    return cache.emplace(z, std::move(out)).first->second;
  }

  std::map<std::pair<int, int>, LaurentPoly> coeff_memo_;
  std::unordered_map<int, std::vector<int>> up_covers_, down_covers_;
  IntegralSystem sys_;
  WeightContext ctx_;
  ModuleKind kind_;
  std::size_t max_elements_;
  std::vector<SRoot> levi_simple_;
  std::vector<SignedPerm> reflections_;
  std::deque<SignedPerm> elems_;
  std::vector<int> lengths_;
  std::map<SignedPerm, int> ids_;
  std::unordered_map<int, Element> canon_;
  std::unordered_map<int, Element> bar_std_;
};

enum class BaseSide { antidominant, dominant };

/// Moves x into the closed antidominant (or dominant) chamber of the integral system.
/// Returns (base point, w) with x = w(base).
inline std::pair<Weight, SignedPerm> reduce_to_base(const Weight& x, const IntegralSystem& sys, BaseSide side) {
  Weight cur = x;
  SignedPerm w = identity_perm(sys.n);
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& s : sys.simple) {
      const Scalar p = pairing(cur, s);
      if (side == BaseSide::antidominant ? p > 0 : p < 0) {
        const SignedPerm r = reflection(s, sys.n);
        cur = act(r, cur);
        w = compose(w, r);
        moved = true;
      }
    }
  }
  return {cur, w};
}

/// Elements of the stabilizer of a chamber point, generated by the simple reflections fixing it.
inline std::vector<SignedPerm> stabilizer(const Weight& base, const IntegralSystem& sys, std::size_t bound = 100000) {
  std::vector<SignedPerm> gens;
  for (const auto& s : sys.simple)
    if (pairing(base, s) == 0) gens.push_back(reflection(s, sys.n));
  std::set<SignedPerm> seen{identity_perm(sys.n)};
  std::vector<SignedPerm> frontier{identity_perm(sys.n)};
  while (!frontier.empty()) {
    std::vector<SignedPerm> next;
    for (const auto& t : frontier)
      for (const auto& g : gens) {
        auto u = compose(t, g);
        if (seen.insert(u).second) {
          if (seen.size() > bound) throw ClosedWorldViolation("stabilizer exceeds bound");
          next.push_back(std::move(u));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Longest element of W_I: reverses every Levi block.
inline SignedPerm longest_levi(const WeightContext& ctx) {
  SignedPerm w(static_cast<std::size_t>(ctx.n));
  for (std::size_t b = 1; b < ctx.p.size(); ++b)
    for (int j = ctx.p[b - 1]; j < ctx.p[b]; ++j) w[j] = ctx.p[b - 1] + ctx.p[b] - 1 - j + 1;
  return w;
}

/// The linkage class of a weight: the antidominant point of (mu + rho) under its integral Weyl group.
inline Weight linkage_key(const Weight& mu) {
  const Weight x = weights::add(mu, weights::rho(static_cast<int>(mu.size())));
  return reduce_to_base(x, IntegralSystem::of(x), BaseSide::antidominant).first;
}

/// The weights of F_r lying in one linkage class, with tilting and composition data.
class Block {
 public:
  Block(std::vector<Weight> members, WeightContext ctx, ModuleKind tilting_kind = ModuleKind::antispherical)
      : weights_(std::move(members)), ctx_(std::move(ctx)), tilting_kind_(tilting_kind) {
    if (weights_.empty()) throw std::invalid_argument("Block: no weights");
    const int n = ctx_.n;
    auto height = [n](const Weight& w) {
      Scalar h = 0;
      for (int i = 0; i < n; ++i) h += (n - 1 - i) * w[i];
      return h;
    };
    std::sort(weights_.begin(), weights_.end(), [&](const Weight& a, const Weight& b) {
      const Scalar ha = height(a), hb = height(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    const Weight x0 = shifted(weights_.front());
    sys_ = IntegralSystem::of(x0);
    anti_ = reduce_to_base(x0, sys_, BaseSide::antidominant).first;
    dom_ = reduce_to_base(x0, sys_, BaseSide::dominant).first;
    for (const auto& mu : weights_) {
      if (reduce_to_base(shifted(mu), sys_, BaseSide::antidominant).first != anti_)
        throw std::invalid_argument("Block: weights are not linked");
      index_.emplace(mu, index_.size());
    }
    anti_stab_ = stabilizer(anti_, sys_);
    dom_stab_ = stabilizer(dom_, sys_);
  }

  const std::vector<Weight>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  bool singular() const { return anti_stab_.size() > 1; }
  const Weight& antidominant_point() const { return anti_; }
  ModuleKind tilting_kind() const { return tilting_kind_; }
  std::size_t index_of(const Weight& mu) const { return index_.at(mu); }

  /// Graded (T(weights[mu]) : M(weights[lambda])).
  LaurentPoly tilting_poly(std::size_t mu, std::size_t lambda) {
    ensure_tilting();
    const int x = tilt_fibers_[mu].front();
    LaurentPoly out;
    for (int y : tilt_fibers_[lambda]) out += tilt_module_->coefficient(y, x);
    return out;
  }

  long long tilting_mult(std::size_t mu, std::size_t lambda) { return tilting_poly(mu, lambda).at_one(); }

  /// Graded [M(weights[lambda]) : L(weights[mu])].
  LaurentPoly composition_poly(std::size_t mu, std::size_t lambda) {
    ensure_composition();
    return comp_module_->coefficient(comp_fibers_[lambda].back(), comp_fibers_[mu].back());
  }

  long long composition_mult(std::size_t mu, std::size_t lambda) { return composition_poly(mu, lambda).at_one(); }

  /// Every member of the fiber of lambda yields the same ungraded multiplicity.
  bool composition_fiber_consistent(std::size_t mu, std::size_t lambda) {
    ensure_composition();
    const long long expected = composition_mult(mu, lambda);
    for (int y : comp_fibers_[lambda])
      if (comp_module_->coefficient(y, comp_fibers_[mu].back()).at_one() != expected) return false;
    return true;
  }

  /// The canonical basis elements behind the tilting columns: nonnegative and unitriangular
  /// with off-diagonal entries in vZ[v]. Bar invariance is checked on the whole lower ideal
  /// whenever it has at most bar_limit elements; bar_checked counts those columns.
  bool verify_tilting_basis(std::size_t bar_limit = 2000, std::size_t* bar_checked = nullptr) {
    ensure_tilting();
    HeckeModule& m = *tilt_module_;
    auto entry_ok = [](bool diagonal, const LaurentPoly& c) {
      if (!c.nonnegative()) return false;
      return diagonal ? c == LaurentPoly(1) : c.is_zero() || c.min_exponent() >= 1;
    };
    if (bar_checked) *bar_checked = 0;
    for (std::size_t mu = 0; mu < size(); ++mu) {
      const int x = tilt_fibers_[mu].front();
      for (std::size_t la = 0; la < size(); ++la)
        for (int y : tilt_fibers_[la])
          if (!entry_ok(y == x, m.coefficient(y, x))) return false;
      auto ideal = m.lower_ideal(x, bar_limit);
      if (!ideal) continue;
      const auto n = m.local_canonical(x, *ideal);
      for (const auto& [y, c] : n)
        if (!entry_ok(y == x, c)) return false;
      if (!(m.bar(n) == n)) return false;
      if (bar_checked) ++*bar_checked;
    }
    return true;
  }

  HeckeModule& tilting_module() {
    ensure_tilting();
    return *tilt_module_;
  }
  const std::vector<int>& tilting_fiber(std::size_t mu) {
    ensure_tilting();
    return tilt_fibers_[mu];
  }

 private:
  Weight shifted(const Weight& mu) const { return weights::add(mu, weights::rho(ctx_.n)); }

  // Labels y in ^IW' of the regular deformations of weights[mu], sorted by length.
  // Antidominant base: mu + rho = w_I y (anti) for y minimal.
  void ensure_tilting() {
    if (tilt_module_) return;
    tilt_module_ = std::make_unique<HeckeModule>(sys_, ctx_, tilting_kind_);
    const SignedPerm wI = longest_levi(ctx_);
    for (const auto& mu : weights_) {
      const SignedPerm w = reduce_to_base(shifted(mu), sys_, BaseSide::antidominant).second;
      std::vector<SignedPerm> labels;
      for (const auto& t : anti_stab_) {
        SignedPerm y = compose(wI, compose(w, t));
        if (tilt_module_->is_minimal(y)) labels.push_back(std::move(y));
      }
      tilt_fibers_.push_back(intern_sorted(*tilt_module_, labels));
    }
  }

  // Dominant base: mu + rho = y (dom) for y minimal.
  void ensure_composition() {
    if (comp_module_) return;
    comp_module_ = std::make_unique<HeckeModule>(sys_, ctx_, ModuleKind::antispherical);
    for (const auto& mu : weights_) {
      const SignedPerm w = reduce_to_base(shifted(mu), sys_, BaseSide::dominant).second;
      std::vector<SignedPerm> labels;
      for (const auto& t : dom_stab_) {
        SignedPerm y = compose(w, t);
        if (comp_module_->is_minimal(y)) labels.push_back(std::move(y));
      }
      comp_fibers_.push_back(intern_sorted(*comp_module_, labels));
    }
  }

  static std::vector<int> intern_sorted(HeckeModule& m, const std::vector<SignedPerm>& labels) {
    if (labels.empty()) throw std::logic_error("Block: weight has no admissible coset label");
    std::vector<int> ids;
    for (const auto& y : labels) ids.push_back(m.intern(y));
    std::sort(ids.begin(), ids.end(), [&m](int a, int b) {
      if (m.length(a) != m.length(b)) return m.length(a) < m.length(b);
      return m.element(a) < m.element(b);
    });
    return ids;
  }

  std::vector<Weight> weights_;
  WeightContext ctx_;
  ModuleKind tilting_kind_;
  IntegralSystem sys_;
  Weight anti_, dom_;
  std::vector<SignedPerm> anti_stab_, dom_stab_;
  std::map<Weight, std::size_t> index_;
  std::unique_ptr<HeckeModule> tilt_module_, comp_module_;
  std::vector<std::vector<int>> tilt_fibers_, comp_fibers_;
};

/// Groups weights by linkage class; blocks are ordered by their first appearance in F.
inline std::vector<Block> partition_into_blocks(const std::vector<Weight>& F, const WeightContext& ctx,
                                                ModuleKind tilting_kind = ModuleKind::antispherical) {
  std::vector<Weight> keys;
  std::map<Weight, std::vector<Weight>> groups;
  for (const auto& mu : F) {
    Weight key = linkage_key(mu);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) keys.push_back(key);
    it->second.push_back(mu);
  }
  std::vector<Block> out;
  for (const auto& key : keys) out.emplace_back(groups.at(key), ctx, tilting_kind);
  return out;
}

}  // namespace brauer_kl::kl
