#pragma once

// JSON and CSV emission for decomposition reports and oracle matrices.

#include "brauer_kl/oracle.hpp"
#include "brauer_kl/pipeline.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace brauer_kl::report_io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "brauer-kl/1";

inline Json scalars_json(const ScalarVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(brauer_kl::to_string(x));
  return out;
}

inline Json config_json(const params::ParamConfig& cfg) {
  Json j;
  j["k"] = cfg.k;
  j["r"] = cfg.r;
  j["u"] = scalars_json(cfg.u);
  j["q"] = cfg.q;
  j["p"] = cfg.p;
  j["n"] = cfg.n;
  j["c"] = scalars_json(cfg.c);
  j["u_ext"] = scalars_json(cfg.u_ext);
  j["omega"] = scalars_json(cfg.omega);
  return j;
}

/// Nonzero entries as [row, column, value].
inline Json triplets(const std::vector<std::vector<long long>>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != 0) out.push_back(Json::array({i, j, m[i][j]}));
  return out;
}

inline Json weight_list(const std::vector<weights::Weight>& ws, const std::map<weights::Weight, combinat::LambdaIndex>& label) {
  Json out = Json::array();
  for (const auto& mu : ws) {
    Json w;
    w["weight"] = scalars_json(mu);
    w["label"] = combinat::to_string(label.at(mu));
    out.push_back(std::move(w));
  }
  return out;
}

inline Json report_json(const pipeline::DecompositionReport& rep) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "decomposition";
  j["config"] = config_json(rep.cfg);
  j["conventions"] = {{"kl", pipeline::to_string(rep.conventions.kl)},
                      {"conjugation", combinat::to_string(rep.conventions.conjugation)},
                      {"pinned", pipeline::kConventionsPinned}};
  j["F_r"] = weight_list(rep.F_r, rep.label);
  j["barF_r"] = weight_list(rep.barF_r, rep.label);
  j["F_rk"] = weight_list(rep.F_rk, rep.label_k);
  j["barF_rk"] = weight_list(rep.barF_rk, rep.label_k);
  Json flag = Json::array(), n = Json::array();
  for (const auto& mu : rep.F_r) flag.push_back(rep.flag.at(mu));
  for (const auto& mu : rep.barF_r) n.push_back(rep.n.at(mu));
  j["verma_flag"] = std::move(flag);
  j["n"] = std::move(n);
  j["matrix2k"] = {{"rows", rep.F_r.size()}, {"columns", rep.barF_r.size()}, {"entries", triplets(rep.matrix2k)}};
  j["matrixk"] = {{"rows", rep.F_rk.size()}, {"columns", rep.barF_rk.size()}, {"entries", triplets(rep.matrixk)}};
  const auto& f = rep.flags;
  j["flags"] = {{"phiA_ok", f.phiA_ok},
                {"omega_condition", f.omega_condition},
                {"r_even", f.r_even},
                {"assumed_saturated", f.assumed_saturated},
                {"cell_module_data_only", f.cell_module_data_only},
                {"singular_blocks", f.singular_blocks}};
  Json blocks = Json::array();
  for (const auto& b : rep.blocks) blocks.push_back({{"size", b.size}, {"singular", b.singular ? "reduced" : "regular"}});
  j["blocks"] = std::move(blocks);
  return j;
}

inline Json poly_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c}));
  return out;
}

/// Nonzero composition polynomials [M(lambda) : L(mu)] per block, as [exponent, coefficient] pairs.
inline Json kl_table_json(const params::ParamConfig& cfg, pipeline::BlockIndex& blocks) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "kl-table";
  j["config"] = config_json(cfg);
  Json out = Json::array();
  for (auto& b : blocks.blocks) {
    Json block;
    Json labels = Json::array();
    for (const auto& mu : b.weights()) labels.push_back(combinat::to_string(weights::tilde(mu, cfg)));
    block["labels"] = std::move(labels);
    Json entries = Json::array();
    for (std::size_t mu = 0; mu < b.size(); ++mu)
      for (std::size_t lambda = 0; lambda < b.size(); ++lambda) {
        const auto p = b.composition_poly(mu, lambda);
        if (!p.is_zero()) entries.push_back({{"mu", mu}, {"lambda", lambda}, {"poly", poly_json(p)}});
      }
    block["composition"] = std::move(entries);
    out.push_back(std::move(block));
  }
  j["blocks"] = std::move(out);
  return j;
}

inline Json oracle_json(const oracle::OracleMatrix& orc) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "oracle";
  j["config"] = {{"k", 1}, {"r", orc.r}, {"delta", brauer_kl::to_string(orc.delta)}};
  Json rows = Json::array(), cols = Json::array();
  for (const auto& l : orc.rows) rows.push_back(combinat::to_string(l));
  for (const auto& l : orc.columns) cols.push_back(combinat::to_string(l));
  j["rows"] = std::move(rows);
  j["columns"] = std::move(cols);
  j["cell_dims"] = orc.cell_dims;
  j["simple_dims"] = orc.simple_dims;
  j["radical_dim"] = orc.radical_dim;
  j["matrix"] = {{"rows", orc.rows.size()}, {"columns", orc.columns.size()}, {"entries", triplets(orc.entries)}};
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string matrix_csv(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
                              const std::vector<std::vector<long long>>& m) {
  std::ostringstream os;
  os << "weight";
  for (const auto& c : col_labels) os << ',' << csv_field(c);
  os << '\n';
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    os << csv_field(row_labels[i]);
    for (std::size_t j = 0; j < col_labels.size(); ++j) os << ',' << m[i][j];
    os << '\n';
  }
  return os.str();
}

/// Level-k matrix by default; level 2k on request.
inline std::string report_csv(const pipeline::DecompositionReport& rep, bool level_2k = false) {
  const auto& rows = level_2k ? rep.F_r : rep.F_rk;
  const auto& cols = level_2k ? rep.barF_r : rep.barF_rk;
  const auto& label = level_2k ? rep.label : rep.label_k;
  std::vector<std::string> rl, cl;
  for (const auto& mu : rows) rl.push_back(combinat::to_string(label.at(mu)));
  for (const auto& mu : cols) cl.push_back(combinat::to_string(label.at(mu)));
  return matrix_csv(rl, cl, level_2k ? rep.matrix2k : rep.matrixk);
}

inline std::string oracle_csv(const oracle::OracleMatrix& orc) {
  std::vector<std::string> rl, cl;
  for (const auto& l : orc.rows) rl.push_back(combinat::to_string(l));
  for (const auto& l : orc.columns) cl.push_back(combinat::to_string(l));
  return matrix_csv(rl, cl, orc.entries);
}

/// FNV-1a; stable across platforms, unlike std::hash.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string file_stem(const params::ParamConfig& cfg) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(brauer_kl::to_string(cfg.u))));
  return "brauer-kl_k" + std::to_string(cfg.k) + "_r" + std::to_string(cfg.r) + "_u" + std::string(hex, 8);
}

}  // namespace brauer_kl::report_io
