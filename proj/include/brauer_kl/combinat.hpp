#pragma once

// Partitions, multipartitions, updown tableaux and content sequences.

#include "brauer_kl/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer_kl::combinat {

/// Weakly decreasing positive parts; trailing zeros are never stored.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
      if (parts[i] < parts[i + 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    for (int x : parts)
      if (x < 0) throw std::invalid_argument("partition parts must be nonnegative");
  }

  int size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
  }
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  /// Row length, zero past the last row. Rows are 1-based.
  int row(int l) const { return l >= 1 && l <= length() ? parts[l - 1] : 0; }

  Partition transpose() const {
    std::vector<int> t;
    if (!parts.empty()) {
      for (int c = 1; c <= parts.front(); ++c) {
        int h = 0;
        while (h < length() && parts[h] >= c) ++h;
        t.push_back(h);
      }
    }
    return Partition(std::move(t));
  }

  auto operator<=>(const Partition&) const = default;
};

/// A tuple of partitions of fixed level.
struct Multipartition {
  std::vector<Partition> components;

  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> c) : components(std::move(c)) {}
  static Multipartition empty_of_level(int level) {
    return Multipartition(std::vector<Partition>(static_cast<std::size_t>(level)));
  }

  int level() const { return static_cast<int>(components.size()); }
  int size() const {
    int s = 0;
    for (const auto& p : components) s += p.size();
    return s;
  }

  auto operator<=>(const Multipartition&) const = default;
};

/// (row, column, component), all 1-based. As an addable node of mu the column is
/// mu^(comp)_row + 1; as a removable node it equals mu^(comp)_row.
struct Node {
  int row = 0;
  int col = 0;
  int comp = 0;
  auto operator<=>(const Node&) const = default;
};

enum class Direction { add, remove };

inline std::vector<Node> boundary_nodes(const Multipartition& mp, Direction dir) {
  std::vector<Node> out;
  for (int t = 0; t < mp.level(); ++t) {
    const Partition& p = mp.components[static_cast<std::size_t>(t)];
    if (dir == Direction::add) {
      for (int l = 1; l <= p.length() + 1; ++l)
        if (l == 1 || p.row(l - 1) > p.row(l)) out.push_back({l, p.row(l) + 1, t + 1});
    } else {
      for (int l = 1; l <= p.length(); ++l)
        if (p.row(l) > p.row(l + 1)) out.push_back({l, p.row(l), t + 1});
    }
  }
  return out;
}

inline Multipartition apply_node(Multipartition mp, const Node& node, Direction dir) {
  auto& parts = mp.components.at(static_cast<std::size_t>(node.comp - 1)).parts;
  if (dir == Direction::add) {
    if (node.row == static_cast<int>(parts.size()) + 1) parts.push_back(0);
    parts.at(static_cast<std::size_t>(node.row - 1)) += 1;
  } else {
    parts.at(static_cast<std::size_t>(node.row - 1)) -= 1;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
  }
  return mp;
}

/// All partitions of m in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(remaining, max_part); x >= 1; --x) {
      cur.push_back(x);
      self(self, remaining - x, x);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

/// All multipartitions of the given level and size. Components are chosen
/// left to right with earlier components taking the larger share first.
inline std::vector<Multipartition> multipartitions_of(int level, int m) {
  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  auto rec = [&](auto&& self, int comp, int remaining) -> void {
    if (comp == level) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    int lo = comp + 1 == level ? remaining : 0;
    for (int s = remaining; s >= lo; --s) {
      for (const auto& p : partitions_of(s)) {
        cur.push_back(p);
        self(self, comp + 1, remaining - s);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0, m);
  return out;
}

/// Index of a cell module: f arcs and a multipartition of r - 2f.
struct LambdaIndex {
  int f = 0;
  Multipartition shape;
  auto operator<=>(const LambdaIndex&) const = default;
};

inline std::vector<LambdaIndex> enumerate_lambda(int level, int rank) {
  if (level < 1 || rank < 0) throw std::invalid_argument("enumerate_lambda: need level >= 1 and rank >= 0");
  std::vector<LambdaIndex> out;
  for (int f = 0; 2 * f <= rank; ++f)
    for (auto& mp : multipartitions_of(level, rank - 2 * f)) out.push_back({f, std::move(mp)});
  return out;
}

/// Walk t_0 = empty, t_1, ..., t_r with one box added or removed per step.
struct UpdownTableau {
  std::vector<Multipartition> shapes;

  int length() const { return static_cast<int>(shapes.size()) - 1; }
  const Multipartition& shape() const { return shapes.back(); }
};

/// The node distinguishing two shapes that differ by one box, and whether it was added.
inline std::pair<Node, Direction> step_node(const Multipartition& before, const Multipartition& after) {
  for (auto dir : {Direction::add, Direction::remove}) {
    for (const Node& nd : boundary_nodes(before, dir))
      if (apply_node(before, nd, dir) == after) return {nd, dir};
  }
  throw std::invalid_argument("shapes do not differ by exactly one box");
}

inline bool is_valid_tableau(const UpdownTableau& t) {
  if (t.shapes.empty() || t.shapes.front().size() != 0) return false;
  for (std::size_t i = 1; i < t.shapes.size(); ++i) {
    try {
      step_node(t.shapes[i - 1], t.shapes[i]);
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return true;
}

namespace detail {
inline void check_shape(int level, int rank, const Multipartition& shape) {
  if (shape.level() != level) throw std::invalid_argument("shape has wrong level");
  int s = shape.size();
  if (s > rank || (rank - s) % 2 != 0) throw std::invalid_argument("shape size must be rank - 2f for some f >= 0");
}

/// Shapes reachable from `mp` in one step that still admit a walk to the empty shape
/// in `steps_left` steps.
inline std::vector<Multipartition> neighbours_within(const Multipartition& mp, int steps_left) {
  std::vector<Multipartition> out;
  for (auto dir : {Direction::add, Direction::remove})
    for (const Node& nd : boundary_nodes(mp, dir)) {
      auto next = apply_node(mp, nd, dir);
      if (next.size() <= steps_left) out.push_back(std::move(next));
    }
  return out;
}
}  // namespace detail

/// All updown tableaux of length `rank` ending at `shape`.
inline std::vector<UpdownTableau> updown_tableaux(int level, int rank, const Multipartition& shape) {
  detail::check_shape(level, rank, shape);
  std::vector<UpdownTableau> out;
  std::vector<Multipartition> rev{shape};
  // Walk backwards: at remaining length i the shape must have size <= i.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 0) {
      UpdownTableau t;
      t.shapes.assign(rev.rbegin(), rev.rend());
      out.push_back(std::move(t));
      return;
    }
    for (auto& prev : detail::neighbours_within(rev.back(), i - 1)) {
      rev.push_back(std::move(prev));
      self(self, i - 1);
      rev.pop_back();
    }
  };
  rec(rec, rank);
  return out;
}

/// Counts walks without materialising them, memoised on (shape, prefix length).
class TableauCounter {
 public:
  explicit TableauCounter(int level) : level_(level) {}

  long long count(int rank, const Multipartition& shape) {
    detail::check_shape(level_, rank, shape);
    return count_impl(rank, shape);
  }

 private:
  long long count_impl(int i, const Multipartition& mp) {
    if (i == 0) return mp.size() == 0 ? 1 : 0;
    auto key = std::make_pair(i, mp);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    long long total = 0;
    for (const auto& prev : detail::neighbours_within(mp, i - 1)) total += count_impl(i - 1, prev);
    memo_.emplace(std::move(key), total);
    return total;
  }

  int level_;
  std::map<std::pair<int, Multipartition>, long long> memo_;
};

inline long long count_updown_tableaux(int level, int rank, const Multipartition& shape) {
  return TableauCounter(level).count(rank, shape);
}

/// b_i = u_t + h - l when step i adds (l,h,t), and its negative when it removes it.
inline ScalarVec content_sequence(const UpdownTableau& t, const ScalarVec& u) {
  if (!t.shapes.empty() && t.shapes.front().level() != static_cast<int>(u.size()))
    throw std::invalid_argument("content_sequence: parameter count must equal the level");
  ScalarVec out;
  for (std::size_t i = 1; i < t.shapes.size(); ++i) {
    auto [nd, dir] = step_node(t.shapes[i - 1], t.shapes[i]);
    Scalar c = u[static_cast<std::size_t>(nd.comp - 1)] + nd.col - nd.row;
    out.push_back(dir == Direction::add ? c : Scalar(-c));
  }
  return out;
}

enum class Conjugation { rev_transpose, transpose };

inline const char* to_string(Conjugation c) {
  return c == Conjugation::rev_transpose ? "rev-transpose" : "transpose";
}

inline Conjugation parse_conjugation(const std::string& name) {
  if (name == "rev-transpose") return Conjugation::rev_transpose;
  if (name == "transpose") return Conjugation::transpose;
  throw std::invalid_argument("unknown conjugation convention: " + name);
}

inline Multipartition conjugate(const Multipartition& mp, Conjugation conv) {
  std::vector<Partition> out;
  for (const auto& p : mp.components) out.push_back(p.transpose());
  if (conv == Conjugation::rev_transpose) std::reverse(out.begin(), out.end());
  return Multipartition(std::move(out));
}

inline std::string to_string(const Partition& p) {
  if (p.empty()) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts[i]);
  }
  return s + ")";
}

inline std::string to_string(const Multipartition& mp) {
  std::string s = "[";
  for (std::size_t i = 0; i < mp.components.size(); ++i) {
    if (i) s += " ";
    s += to_string(mp.components[i]);
  }
  return s + "]";
}

inline std::string to_string(const LambdaIndex& idx) {
  return "f=" + std::to_string(idx.f) + " " + to_string(idx.shape);
}

}  // namespace brauer_kl::combinat
