#pragma once

// Cell-by-cell comparison of a level-one report with the diagram algebra.

#include "brauer_kl/block_sizes.hpp"
#include "brauer_kl/oracle.hpp"
#include "brauer_kl/pipeline.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brauer_kl::compare {

using combinat::Conjugation;
using combinat::LambdaIndex;
using pipeline::KLOrder;

struct Diff {
  std::vector<std::string> messages;
  bool empty() const { return messages.empty(); }
};

/// Conjugates a level-2k label and truncates to level k; nothing if boxes land past level k.
inline std::optional<LambdaIndex> conjugated_level_k(const LambdaIndex& idx, int k, Conjugation conv) {
  const auto c = combinat::conjugate(idx.shape, conv);
  for (std::size_t j = static_cast<std::size_t>(k); j < c.components.size(); ++j)
    if (!c.components[j].empty()) return std::nullopt;
  return pipeline::truncate_to_level({idx.f, c}, k);
}

inline Diff compare(const pipeline::DecompositionReport& rep, const oracle::OracleMatrix& orc, Conjugation conv) {
  Diff diff;
  if (rep.cfg.k != 1) {
    diff.messages.push_back("report is not at level one");
    return diff;
  }
  if (rep.cfg.r != orc.r) {
    diff.messages.push_back("rank differs from the oracle");
    return diff;
  }
  auto relabel = [&](const std::vector<weights::Weight>& ws, const char* what) {
    std::map<LambdaIndex, std::size_t> out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      auto l = conjugated_level_k(rep.label.at(ws[i]), 1, conv);
      if (!l) {
        diff.messages.push_back(std::string(what) + " " + combinat::to_string(rep.label.at(ws[i])) +
                                " leaves level one under " + combinat::to_string(conv));
        continue;
      }
      out.emplace(*l, i);
    }
    return out;
  };
  const auto rows = relabel(rep.F_rk, "row");
  const auto cols = relabel(rep.barF_rk, "column");
  std::map<LambdaIndex, std::size_t> orows, ocols;
  for (std::size_t i = 0; i < orc.rows.size(); ++i) orows.emplace(orc.rows[i], i);
  for (std::size_t j = 0; j < orc.columns.size(); ++j) ocols.emplace(orc.columns[j], j);
  auto same_keys = [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [k, v] : a)
      if (!b.count(k)) return false;
    return true;
  };
  if (!same_keys(rows, orows)) diff.messages.push_back("row labels do not match the cell modules");
  if (!same_keys(cols, ocols)) diff.messages.push_back("column labels do not match the simple modules");
  if (!diff.empty()) return diff;
  for (const auto& [rl, i] : rows)
    for (const auto& [cl, j] : cols) {
      const long long mine = rep.matrixk[i][j];
      const long long theirs = orc.entries[orows.at(rl)][ocols.at(cl)];
      if (mine != theirs)
        diff.messages.push_back("[" + combinat::to_string(rl) + " : " + combinat::to_string(cl) + "] report " +
                                std::to_string(mine) + " oracle " + std::to_string(theirs));
    }
  return diff;
}

/// Loop parameter of the level-one algebra: delta = 1 - 2 u_1.
inline Scalar u_for_delta(const Scalar& delta) { return (1 - delta) / 2; }

struct ConventionOutcome {
  pipeline::Conventions conventions;
  bool all_empty = true;
  std::vector<std::string> notes;
};

/// Runs every (kl, conjugation) pair over the given (r, delta) runs.
inline std::vector<ConventionOutcome> pin_conventions(const std::vector<std::pair<int, Scalar>>& runs) {
  std::vector<ConventionOutcome> out;
  std::map<std::pair<int, Scalar>, oracle::OracleMatrix> oracles;
  for (const auto& run : runs) oracles.emplace(run, oracle::oracle_decomposition_matrix(run.first, run.second));
  for (KLOrder kind : {KLOrder::standard, KLOrder::swapped})
    for (Conjugation conv : {Conjugation::rev_transpose, Conjugation::transpose}) {
      ConventionOutcome o;
      o.conventions = {kind, conv};
      for (const auto& [r, delta] : runs) {
        const std::string tag = "r=" + std::to_string(r) + " delta=" + to_string(delta) + ": ";
        try {
          pipeline::ReportOptions opt;
          opt.conventions = o.conventions;
          const auto cfg = params::make_config({u_for_delta(delta)}, r);
          const auto rep = pipeline::decomposition_report(cfg, opt);
          const auto d = compare(rep, oracles.at({r, delta}), conv);
          if (!d.empty()) {
            o.all_empty = false;
            for (const auto& m : d.messages) o.notes.push_back(tag + m);
          }
        } catch (const NegativeResidual& e) {
          o.all_empty = false;
          o.notes.push_back(tag + "negative residual: " + e.what());
        }
      }
      out.push_back(std::move(o));
    }
  return out;
}

}  // namespace brauer_kl::compare
