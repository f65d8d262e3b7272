#pragma once

// Brauer diagram algebra B_r(delta) over Q: diagram basis, cell modules built from
// half diagrams and Specht modules, and decomposition numbers of cell modules.

#include "brauer_kl/combinat.hpp"
#include "brauer_kl/errors.hpp"
#include "brauer_kl/exact_matrix.hpp"
#include "brauer_kl/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer_kl::oracle {

using combinat::LambdaIndex;
using combinat::Partition;

/// Perfect matching on 2r points: top i is point i, bottom i is point r + i.
struct BrauerDiagram {
  int r = 0;
  std::vector<int> m;

  static BrauerDiagram identity(int r) {
    BrauerDiagram d{r, std::vector<int>(2 * static_cast<std::size_t>(r))};
    for (int i = 0; i < r; ++i) d.link(i, r + i);
    return d;
  }

  /// Transposition of strands i, i+1 (0-based).
  static BrauerDiagram swap(int r, int i) {
    BrauerDiagram d = identity(r);
    d.link(i, r + i + 1);
    d.link(i + 1, r + i);
    return d;
  }

  /// Cap on top and cup on bottom joining i, i+1 (0-based).
  static BrauerDiagram contraction(int r, int i) {
    BrauerDiagram d = identity(r);
    d.link(i, i + 1);
    d.link(r + i, r + i + 1);
    return d;
  }

  BrauerDiagram flipped() const {
    BrauerDiagram d{r, std::vector<int>(m.size())};
    auto swap_side = [this](int p) { return p < r ? p + r : p - r; };
    for (int p = 0; p < 2 * r; ++p) d.m[swap_side(p)] = swap_side(m[p]);
    return d;
  }

  bool valid() const {
    if (m.size() != 2 * static_cast<std::size_t>(r)) return false;
    for (int p = 0; p < 2 * r; ++p)
      if (m[p] < 0 || m[p] >= 2 * r || m[p] == p || m[m[p]] != p) return false;
    return true;
  }

  auto operator<=>(const BrauerDiagram&) const = default;

 private:
  void link(int a, int b) {
    m[a] = b;
    m[b] = a;
  }
};

inline std::vector<BrauerDiagram> all_diagrams(int r) {
  std::vector<BrauerDiagram> out;
  std::vector<int> m(2 * static_cast<std::size_t>(r), -1);
  auto rec = [&](auto&& self) -> void {
    int p = 0;
    while (p < 2 * r && m[p] >= 0) ++p;
    if (p == 2 * r) {
      out.push_back({r, m});
      return;
    }
    for (int q = p + 1; q < 2 * r; ++q) {
      if (m[q] >= 0) continue;
      m[p] = q, m[q] = p;
      self(self);
      m[p] = m[q] = -1;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

/// a on top of b; returns the product diagram and the number of closed loops.
inline std::pair<BrauerDiagram, int> multiply(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (a.r != b.r) throw std::invalid_argument("multiply: diagrams of different rank");
  const int r = a.r;
  // Vertices: 0..r-1 top of a, r..2r-1 middle row, 2r..3r-1 bottom of b.
  auto step_a = [&](int v) { return a.m[v]; };
  // Top of b sits on the middle row and bottom of b on the outer row, so both shift by r.
  auto step_b = [&](int v) { return b.m[v - r] + r; };
  BrauerDiagram out{r, std::vector<int>(2 * static_cast<std::size_t>(r), -1)};
  std::vector<bool> mid_seen(static_cast<std::size_t>(r), false);
  auto outer_index = [r](int v) { return v < r ? v : v - r; };
  auto walk = [&](int start) {
    // start is an outer vertex; alternate edges until another outer vertex.
    int v = start;
    bool via_a = start < r;
    while (true) {
      const int w = via_a ? step_a(v) : step_b(v);
      if (w < r || w >= 2 * r) return w;
      mid_seen[w - r] = true;
      v = w;
      via_a = !via_a;
    }
  };
  for (int s = 0; s < r; ++s)
    if (out.m[s] < 0) {
      const int e = walk(s);
      out.m[s] = outer_index(e);
      out.m[outer_index(e)] = s;
    }
  for (int s = 2 * r; s < 3 * r; ++s)
    if (out.m[s - r] < 0) {
      const int e = walk(s);
      out.m[s - r] = outer_index(e);
      out.m[outer_index(e)] = s - r;
    }
  int loops = 0;
  for (int c = 0; c < r; ++c) {
    if (mid_seen[c]) continue;
    ++loops;
    int v = c + r;
    bool via_a = true;
    do {
      mid_seen[v - r] = true;
      v = via_a ? step_a(v) : step_b(v);
      via_a = !via_a;
    } while (v != c + r);
  }
  return {out, loops};
}

/// r points, partner index or -1 for a free point.
using HalfDiagram = std::vector<int>;

inline std::vector<HalfDiagram> half_diagrams(int r, int f) {
  std::vector<HalfDiagram> out;
  HalfDiagram h(static_cast<std::size_t>(r), -1);
  std::vector<bool> decided(static_cast<std::size_t>(r), false);
  auto rec = [&](auto&& self, int arcs_left) -> void {
    int p = 0;
    while (p < r && decided[p]) ++p;
    const int undecided = static_cast<int>(std::count(decided.begin(), decided.end(), false));
    if (arcs_left == 0) {
      out.push_back(h);
      return;
    }
    if (p == r || undecided < 2 * arcs_left) return;
    decided[p] = true;
    for (int q = p + 1; q < r; ++q) {
      if (decided[q]) continue;
      decided[q] = true;
      h[p] = q, h[q] = p;
      self(self, arcs_left - 1);
      h[p] = h[q] = -1;
      decided[q] = false;
    }
    if (undecided - 1 >= 2 * arcs_left) self(self, arcs_left);
    decided[p] = false;
  };
  rec(rec, f);
  std::sort(out.begin(), out.end());
  return out;
}

/// Permutation of {0..m-1}: p[j] is the image of j.
using Perm = std::vector<int>;

inline int sign(const Perm& p) {
  int s = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true, ++len;
    if (len % 2 == 0) s = -s;
  }
  return s;
}

/// Specht module over Q spanned by standard polytabloids inside the permutation module on
/// row tabloids; S_m acts on the left by relabelling entries.
class SpechtModule {
 public:
  explicit SpechtModule(Partition shape) : shape_(std::move(shape)), m_(shape_.size()) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape_.length()));
    auto rec = [&](auto&& self, int e) -> void {
      if (e == m_) {
        standard_.push_back(rows);
        return;
      }
      for (int i = 0; i < shape_.length(); ++i) {
        const std::size_t len = rows[i].size();
        if (static_cast<int>(len) == shape_.parts[i]) continue;
        if (i > 0 && rows[i - 1].size() <= len) continue;
        rows[i].push_back(e);
        self(self, e + 1);
        rows[i].pop_back();
      }
    };
    rec(rec, 0);
    Perm p(static_cast<std::size_t>(m_));
    std::iota(p.begin(), p.end(), 0);
    do perms_.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    if (!standard_.empty()) {
      std::vector<int> row(static_cast<std::size_t>(m_));
      for (std::size_t i = 0; i < standard_[0].size(); ++i)
        for (int e : standard_[0][i]) row[e] = static_cast<int>(i);
      for (const auto& q : perms_) {
        Tabloid tab(static_cast<std::size_t>(m_));
        for (int e = 0; e < m_; ++e) tab[q[e]] = row[e];
        tabloids_.try_emplace(tab, tabloids_.size());
      }
    }
    for (const auto& t : standard_) columns_.push_back(polytabloid(t));
    basis_ = ExactMatrix(tabloids_.size(), standard_.size());
    for (std::size_t b = 0; b < columns_.size(); ++b)
      for (const auto& [tab, c] : columns_[b]) basis_(tabloids_.at(tab), b) = c;
  }

  std::size_t dim() const { return standard_.size(); }
  int degree() const { return m_; }
  const Partition& shape() const { return shape_; }

  /// Matrix of sigma in the standard polytabloid basis.
  const ExactMatrix& action(const Perm& sigma) {
    if (auto it = action_cache_.find(sigma); it != action_cache_.end()) return it->second;
    ExactMatrix rhs(tabloids_.size(), dim());
    for (std::size_t b = 0; b < dim(); ++b) {
      auto t = standard_[b];
      for (auto& row : t)
        for (int& e : row) e = sigma[e];
      for (const auto& [tab, c] : polytabloid(t)) rhs(tabloids_.at(tab), b) = c;
    }
    auto x = basis_.solve(rhs);
    if (!x) throw std::logic_error("SpechtModule: image left the span of standard polytabloids");
    return action_cache_.emplace(sigma, std::move(*x)).first->second;
  }

  /// Restriction of the invariant form on tabloids.
  ExactMatrix form() const { return basis_.transpose() * basis_; }

 private:
  using Tabloid = std::vector<int>;  // row of each entry

  std::map<Tabloid, Scalar> polytabloid(const std::vector<std::vector<int>>& t) {
    std::vector<int> col(static_cast<std::size_t>(m_)), row(static_cast<std::size_t>(m_));
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t[i].size(); ++j) col[t[i][j]] = static_cast<int>(j), row[t[i][j]] = static_cast<int>(i);
    std::map<Tabloid, Scalar> out;
    for (const auto& p : perms_) {
      bool keeps_columns = true;
      for (int e = 0; e < m_ && keeps_columns; ++e) keeps_columns = col[p[e]] == col[e];
      if (!keeps_columns) continue;
      Tabloid tab(static_cast<std::size_t>(m_));
      for (int e = 0; e < m_; ++e) tab[p[e]] = row[e];
      out[tab] += sign(p);
    }
    return out;
  }

  Partition shape_;
  int m_;
  std::vector<std::vector<std::vector<int>>> standard_;
  std::vector<Perm> perms_;
  std::map<Tabloid, std::size_t> tabloids_;
  std::vector<std::map<Tabloid, Scalar>> columns_;
  ExactMatrix basis_;
  std::map<Perm, ExactMatrix> action_cache_;
};

/// Cell module C(f, lambda) with basis (half diagram) x (standard polytabloid).
class CellModule {
 public:
  CellModule(int r, int f, Partition lambda, Scalar delta)
      : r_(r), f_(f), delta_(std::move(delta)), specht_(std::move(lambda)), halves_(half_diagrams(r, f)) {
    if (specht_.degree() != r - 2 * f) throw std::invalid_argument("CellModule: |lambda| must be r - 2f");
    for (std::size_t i = 0; i < halves_.size(); ++i) index_.emplace(halves_[i], i);
  }

  int rank() const { return r_; }
  int arcs() const { return f_; }
  const Partition& shape() const { return specht_.shape(); }
  std::size_t dim() const { return halves_.size() * specht_.dim(); }
  const std::vector<HalfDiagram>& halves() const { return halves_; }

  /// Matrix of d acting on the left.
  ExactMatrix action(const BrauerDiagram& d) {
    const std::size_t s = specht_.dim();
    ExactMatrix out(dim(), dim());
    for (std::size_t col = 0; col < halves_.size(); ++col) {
      auto res = act_on_half(d, halves_[col]);
      if (!res) continue;
      const auto& [h, loops, sigma] = *res;
      const std::size_t row = index_.at(h);
      const Scalar scale = power(loops);
      const ExactMatrix& rho = specht_.action(sigma);
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) out(row * s + a, col * s + b) = scale * rho(a, b);
    }
    return out;
  }

  /// Invariant bilinear form: pair h1 over h2 and transport the Specht label along the strands.
  ExactMatrix gram() {
    const std::size_t s = specht_.dim();
    const ExactMatrix g = specht_.form();
    ExactMatrix out(dim(), dim());
    for (std::size_t i = 0; i < halves_.size(); ++i)
      for (std::size_t j = 0; j < halves_.size(); ++j) {
        auto res = pair_halves(halves_[i], halves_[j]);
        if (!res) continue;
        const auto& [loops, tau] = *res;
        const ExactMatrix block = specht_.action(tau).transpose() * g;
        const Scalar scale = power(loops);
        for (std::size_t a = 0; a < s; ++a)
          for (std::size_t b = 0; b < s; ++b) out(i * s + a, j * s + b) = scale * block(a, b);
      }
    return out;
  }

 private:
  struct Image {
    HalfDiagram h;
    int loops;
    Perm sigma;
  };

  Scalar power(int e) const {
    Scalar p = 1;
    for (int i = 0; i < e; ++i) p *= delta_;
    return p;
  }

  static std::vector<int> free_slots(const HalfDiagram& h) {
    std::vector<int> slot(h.size(), -1);
    int k = 0;
    for (std::size_t p = 0; p < h.size(); ++p)
      if (h[p] < 0) slot[p] = k++;
    return slot;
  }

  // Glue the bottom row of d onto h. Empty when two free points of h get joined.
  std::optional<Image> act_on_half(const BrauerDiagram& d, const HalfDiagram& h) const {
    const int r = r_;
    const auto slot = free_slots(h);
    const int m = r - 2 * f_;
    HalfDiagram out(static_cast<std::size_t>(r), -1);
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    std::vector<int> source(static_cast<std::size_t>(r), -1);
    int reached = 0;
    for (int t = 0; t < r; ++t) {
      if (out[t] >= 0 || source[t] >= 0) continue;
      int x = d.m[t];
      while (true) {
        if (x < r) {
          out[t] = x, out[x] = t;
          break;
        }
        const int b = x - r;
        seen[b] = true;
        if (h[b] < 0) {
          source[t] = slot[b];
          ++reached;
          break;
        }
        seen[h[b]] = true;
        x = d.m[r + h[b]];
      }
    }
    if (reached < m) return std::nullopt;
    int loops = 0;
    for (int b = 0; b < r; ++b) {
      if (seen[b]) continue;
      ++loops;
      int p = b;
      do {
        seen[p] = true;
        const int q = h[p];
        seen[q] = true;
        p = d.m[r + q] - r;
      } while (p != b);
    }
    Perm sigma(static_cast<std::size_t>(m));
    const auto new_slot = free_slots(out);
    for (int t = 0; t < r; ++t)
      if (source[t] >= 0) sigma[source[t]] = new_slot[t];
    return Image{out, loops, sigma};
  }

  // tau sends free slot i of h1 to the free slot of h2 at the other end of its strand.
  std::optional<std::pair<int, Perm>> pair_halves(const HalfDiagram& h1, const HalfDiagram& h2) const {
    const int r = r_;
    const auto s1 = free_slots(h1), s2 = free_slots(h2);
    Perm tau(static_cast<std::size_t>(r - 2 * f_));
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (int p0 = 0; p0 < r; ++p0) {
      if (h1[p0] >= 0) continue;
      int p = p0;
      seen[p] = true;
      while (true) {
        if (h2[p] < 0) {
          tau[s1[p0]] = s2[p];
          break;
        }
        p = h2[p];
        seen[p] = true;
        if (h1[p] < 0) return std::nullopt;
        p = h1[p];
        seen[p] = true;
      }
    }
    int loops = 0;
    for (int p0 = 0; p0 < r; ++p0) {
      if (seen[p0]) continue;
      ++loops;
      int p = p0;
      do {
        seen[p] = true;
        p = h1[p];
        seen[p] = true;
        p = h2[p];
      } while (p != p0);
    }
    return std::make_pair(loops, tau);
  }

  int r_;
  int f_;
  Scalar delta_;
  SpechtModule specht_;
  std::vector<HalfDiagram> halves_;
  std::map<HalfDiagram, std::size_t> index_;
};

/// Rank of the trace form of the regular representation gives dim A - dim rad A.
struct RegularTraceData {
  std::size_t algebra_dim = 0;
  std::size_t radical_dim = 0;
  ExactMatrix radical_basis;  // columns in the diagram basis
};

inline RegularTraceData regular_trace_radical(int r, const Scalar& delta) {
  const auto basis = all_diagrams(r);
  std::map<BrauerDiagram, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  auto power = [&](int e) {
    Scalar p = 1;
    for (int i = 0; i < e; ++i) p *= delta;
    return p;
  };
  const std::size_t N = basis.size();
  std::vector<Scalar> reg_trace(N, Scalar(0));
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t i = 0; i < N; ++i) {
      auto [d, loops] = multiply(basis[k], basis[i]);
      if (d == basis[i]) reg_trace[k] += power(loops);
    }
  ExactMatrix form(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      auto [d, loops] = multiply(basis[i], basis[j]);
      form(i, j) = power(loops) * reg_trace[index.at(d)];
    }
  RegularTraceData out;
  out.algebra_dim = N;
  out.radical_basis = form.nullspace();
  out.radical_dim = out.radical_basis.cols();
  return out;
}

struct OracleMatrix {
  int r = 0;
  Scalar delta;
  std::vector<LambdaIndex> rows;     // all cell modules
  std::vector<LambdaIndex> columns;  // cells with nonzero Gram form
  std::vector<std::vector<long long>> entries;  // entries[row][col] = [C(row) : D(col)]
  std::vector<std::size_t> cell_dims;
  std::vector<std::size_t> simple_dims;
  std::size_t radical_dim = 0;
};

inline constexpr int kMaxOracleRank = 4;

inline LambdaIndex level_one_index(int f, const Partition& lambda) {
  return {f, combinat::Multipartition({lambda})};
}

/// Decomposition numbers of the cell modules of B_r(delta).
/// Simple heads D = C / rad(Gram); multiplicities by splitting characters over the diagram basis,
/// using that characters of distinct simples are independent in characteristic zero.
inline OracleMatrix oracle_decomposition_matrix(int r, const Scalar& delta) {
  if (r > kMaxOracleRank) throw DimensionTooLarge("oracle supports r <= " + std::to_string(kMaxOracleRank));
  if (r < 1) throw std::invalid_argument("oracle needs r >= 1");
  OracleMatrix out;
  out.r = r;
  out.delta = delta;
  const auto basis = all_diagrams(r);
  const std::size_t N = basis.size();
  std::vector<std::vector<Scalar>> cell_chars, simple_chars;
  for (int f = 0; 2 * f <= r; ++f)
    for (const auto& lambda : combinat::partitions_of(r - 2 * f)) {
      CellModule cell(r, f, lambda, delta);
      const ExactMatrix gram = cell.gram();
      const ExactMatrix rad = gram.nullspace();
      std::vector<Scalar> chi_c(N), chi_d(N);
      for (std::size_t i = 0; i < N; ++i) {
        const ExactMatrix a = cell.action(basis[i]);
        chi_c[i] = a.trace();
        Scalar on_rad = 0;
        if (rad.cols() > 0) {
          auto x = rad.solve(a * rad);
          if (!x) throw std::logic_error("oracle: Gram radical is not a submodule");
          on_rad = x->trace();
        }
        chi_d[i] = chi_c[i] - on_rad;
      }
      out.rows.push_back(level_one_index(f, lambda));
      out.cell_dims.push_back(cell.dim());
      cell_chars.push_back(std::move(chi_c));
      if (rad.cols() < cell.dim()) {
        out.columns.push_back(level_one_index(f, lambda));
        out.simple_dims.push_back(cell.dim() - rad.cols());
        simple_chars.push_back(std::move(chi_d));
      }
    }
  ExactMatrix S(N, simple_chars.size()), C(N, cell_chars.size());
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < simple_chars.size(); ++j) S(i, j) = simple_chars[j][i];
    for (std::size_t j = 0; j < cell_chars.size(); ++j) C(i, j) = cell_chars[j][i];
  }
  if (S.rank() != simple_chars.size()) throw std::logic_error("oracle: simple characters are dependent");
  auto mult = S.solve(C);
  if (!mult) throw std::logic_error("oracle: cell character outside the span of simple characters");
  out.entries.assign(out.rows.size(), std::vector<long long>(out.columns.size(), 0));
  for (std::size_t c = 0; c < out.rows.size(); ++c)
    for (std::size_t s = 0; s < out.columns.size(); ++s) {
      const Scalar& x = (*mult)(s, c);
      if (!is_integer(x) || x < 0) throw std::logic_error("oracle: non-integral multiplicity " + to_string(x));
      out.entries[c][s] = to_long(x);
    }
  // Wedderburn: dim A - dim rad A = sum of squared simple dimensions.
  const auto reg = regular_trace_radical(r, delta);
  out.radical_dim = reg.radical_dim;
  std::size_t sq = 0;
  for (auto d : out.simple_dims) sq += d * d;
  if (sq + reg.radical_dim != reg.algebra_dim) throw std::logic_error("oracle: simple dimensions disagree with the radical");
  return out;
}

}  // namespace brauer_kl::oracle
