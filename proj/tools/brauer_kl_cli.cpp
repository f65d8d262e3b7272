#include "brauer_kl/block_sizes.hpp"
#include "brauer_kl/compare.hpp"
#include "brauer_kl/report_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace brauer_kl;
using report_io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSaturation = 3;
constexpr int kExitMismatch = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int k = 0;
  int r = 0;
  std::string u;
  std::string q;
  int N = 4;
  std::string delta;
  bool assume_saturated = false;
  std::string kl = "swapped";
  std::string conjugation = "transpose";
  bool strict = false;
  bool cross_check = false;
  bool full = false;
  std::string kl_table;
  std::string format = "json";
  std::string out;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  return out;
}

Scalar parse_rational(const std::string& text) {
  auto s = parse_scalar(text);
  if (!s) throw UsageError("not a rational: '" + text + "'");
  return *s;
}

ScalarVec parse_u(const RunConfig& rc) {
  if (rc.u.empty()) throw UsageError("--u is required");
  ScalarVec u;
  for (const auto& part : split(rc.u)) u.push_back(parse_rational(part));
  if (rc.k != 0 && static_cast<int>(u.size()) != rc.k)
    throw UsageError("--u has " + std::to_string(u.size()) + " entries but --k is " + std::to_string(rc.k));
  return u;
}

params::ParamConfig build_config(const RunConfig& rc) {
  const ScalarVec u = parse_u(rc);
  if (rc.r < 1) throw UsageError("--r must be at least 1");
  if (rc.q.empty()) return params::make_config(u, rc.r);
  std::vector<int> q;
  for (const auto& part : split(rc.q)) {
    try {
      q.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("not an integer in --q: '" + part + "'");
    }
  }
  if (q.size() != u.size()) throw UsageError("--q must have one entry per parameter");
  if (!params::verify_block_sizes(u, q, rc.r)) throw UsageError("--q block sizes fail the admissibility checks");
  return params::extend_parameters(u, q, rc.r);
}

pipeline::Conventions conventions(const RunConfig& rc) {
  pipeline::Conventions c;
  try {
    c.kl = pipeline::parse_kl_order(rc.kl);
    c.conjugation = combinat::parse_conjugation(rc.conjugation);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

void emit(const RunConfig& rc, const params::ParamConfig* cfg, const std::string& text, const std::string& ext) {
  if (rc.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path path(rc.out);
  if (std::filesystem::is_directory(path)) {
    const std::string stem = cfg ? report_io::file_stem(*cfg) : "brauer-kl";
    path /= stem + "." + ext;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
}

int cmd_admissible(const RunConfig& rc) {
  ScalarVec u = parse_u(rc);
  if (rc.N < 0) throw UsageError("--N must be nonnegative");
  ScalarVec v = u;
  if (u.size() % 2 == 1)
    for (auto& x : v) x = -x;
  const auto omega = params::omega_series(v, rc.N);
  const bool cond = params::simple_param_condition(u);
  if (rc.format == "json") {
    Json j;
    j["schema"] = report_io::kSchema;
    j["kind"] = "admissible";
    j["u"] = report_io::scalars_json(u);
    j["omega"] = report_io::scalars_json(omega);
    j["condition"] = cond;
    emit(rc, nullptr, j.dump(2) + "\n", "json");
  } else {
    std::ostringstream os;
    os << "i,omega\n";
    for (std::size_t i = 0; i < omega.size(); ++i) os << i << ',' << to_string(omega[i]) << '\n';
    os << "condition," << (cond ? "true" : "false") << '\n';
    emit(rc, nullptr, os.str(), "csv");
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& rc) {
  const auto cfg = build_config(rc);
  const auto F = weights::enumerate_F(cfg);
  const auto flag = pipeline::verma_flag(cfg);
  if (rc.format == "json") {
    Json j;
    j["schema"] = report_io::kSchema;
    j["kind"] = "enumerate";
    j["config"] = report_io::config_json(cfg);
    Json ws = Json::array();
    for (const auto& mu : F) {
      const auto idx = weights::tilde(mu, cfg);
      Json w;
      w["weight"] = report_io::scalars_json(mu);
      w["label"] = combinat::to_string(idx);
      w["level_k"] = weights::in_F_rk(mu, cfg);
      w["verma_flag"] = flag.at(mu);
      ws.push_back(std::move(w));
    }
    j["F_r"] = std::move(ws);
    emit(rc, &cfg, j.dump(2) + "\n", "json");
  } else {
    std::ostringstream os;
    os << "weight,label,level_k,verma_flag\n";
    for (const auto& mu : F)
      os << report_io::csv_field(to_string(mu)) << ',' << report_io::csv_field(combinat::to_string(weights::tilde(mu, cfg)))
         << ',' << (weights::in_F_rk(mu, cfg) ? 1 : 0) << ',' << flag.at(mu) << '\n';
    emit(rc, &cfg, os.str(), "csv");
  }
  return kExitOk;
}

int cmd_decompose(const RunConfig& rc) {
  const auto cfg = build_config(rc);
  pipeline::ReportOptions opt;
  opt.conventions = conventions(rc);
  opt.assume_saturated = rc.assume_saturated;
  opt.strict = rc.strict;
  opt.cross_check_tilting = rc.cross_check;
  const auto rep = pipeline::decomposition_report(cfg, opt);
  if (!rc.kl_table.empty()) {
    pipeline::BlockIndex blocks(rep.F_r, weights::WeightContext(cfg), opt.conventions.kl);
    std::ofstream os(rc.kl_table, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + rc.kl_table);
    os << report_io::kl_table_json(cfg, blocks).dump(2) << '\n';
  }
  if (rc.format == "json")
    emit(rc, &cfg, report_io::report_json(rep).dump(2) + "\n", "json");
  else
    emit(rc, &cfg, report_io::report_csv(rep, rc.full), "csv");
  return kExitOk;
}

int cmd_oracle_compare(const RunConfig& rc) {
  if (rc.k != 0 && rc.k != 1) throw UsageError("oracle-compare needs k = 1");
  if (rc.r < 1 || rc.r > oracle::kMaxOracleRank)
    throw UsageError("oracle-compare needs 1 <= r <= " + std::to_string(oracle::kMaxOracleRank));
  Scalar delta;
  if (!rc.delta.empty()) {
    delta = parse_rational(rc.delta);
  } else {
    const ScalarVec u = parse_u(rc);
    if (u.size() != 1) throw UsageError("oracle-compare needs k = 1");
    delta = 1 - 2 * u[0];
  }
  const auto outcomes = compare::pin_conventions({{rc.r, delta}});
  std::ostringstream os;
  os << "r=" << rc.r << " delta=" << to_string(delta) << '\n';
  bool pinned_ok = false, any_ok = false;
  for (const auto& o : outcomes) {
    const bool pinned = o.conventions.kl == pipeline::kPinnedConventions.kl &&
                        o.conventions.conjugation == pipeline::kPinnedConventions.conjugation;
    os << "kl=" << pipeline::to_string(o.conventions.kl) << " conjugation=" << combinat::to_string(o.conventions.conjugation)
       << ": " << (o.all_empty ? "match" : "differs") << '\n';
    for (const auto& n : o.notes) os << "  " << n << '\n';
    any_ok = any_ok || o.all_empty;
    if (pinned) pinned_ok = o.all_empty;
  }
  os << "pinned: kl=" << pipeline::to_string(pipeline::kPinnedConventions.kl)
     << " conjugation=" << combinat::to_string(pipeline::kPinnedConventions.conjugation)
     << (pinned_ok ? " (agrees)" : " (disagrees)") << '\n';
  std::cout << os.str();
  if (!rc.out.empty()) {
    const auto orc = oracle::oracle_decomposition_matrix(rc.r, delta);
    const auto cfg = params::make_config({compare::u_for_delta(delta)}, rc.r);
    if (rc.format == "json")
      emit(rc, &cfg, report_io::oracle_json(orc).dump(2) + "\n", "json");
    else
      emit(rc, &cfg, report_io::oracle_csv(orc), "csv");
  }
  return any_ok ? kExitOk : kExitMismatch;
}

int cmd_kl_selftest() {
  bool ok = true;
  for (const ScalarVec& u : {ScalarVec{Scalar(0)}, ScalarVec{make_scalar(3, 2)}, ScalarVec{make_scalar(-1, 2)},
                             ScalarVec{make_scalar(1, 3), make_scalar(1, 5)}}) {
    for (int r = 1; r <= 3; ++r) {
      const auto cfg = params::make_config(u, r);
      const auto F = weights::enumerate_F(cfg);
      const auto flag = pipeline::verma_flag(cfg);
      pipeline::BlockIndex blocks(F, weights::WeightContext(cfg), pipeline::kPinnedConventions.kl);
      std::size_t checked = 0, bar_checked = 0;
      bool blocks_ok = true;
      for (auto& b : blocks.blocks) {
        std::size_t bc = 0;
        blocks_ok = b.verify_tilting_basis(2000, &bc) && blocks_ok;
        checked += b.size();
        bar_checked += bc;
      }
      bool peel_ok = true;
      try {
        const auto a = pipeline::tilting_decomposition(F, flag, blocks, pipeline::TieOrder::forward);
        const auto b = pipeline::tilting_decomposition(F, flag, blocks, pipeline::TieOrder::reverse);
        peel_ok = a.n == b.n;
      } catch (const NegativeResidual&) {
        peel_ok = false;
      }
      const bool line_ok = blocks_ok && peel_ok;
      ok = ok && line_ok;
      std::cout << (line_ok ? "PASS" : "FAIL") << " u=" << to_string(u) << " r=" << r << " blocks=" << blocks.blocks.size()
                << " weights=" << checked << " bar-checked=" << bar_checked << '\n';
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition numbers of cyclotomic Brauer algebras in exact arithmetic"};
  app.require_subcommand(1);
  RunConfig rc;

  auto add_params = [&rc](CLI::App* sub, bool need_r) {
    sub->add_option("--k", rc.k, "level (checked against the length of --u)")->check(CLI::PositiveNumber);
    sub->add_option("--u", rc.u, "parameters u_1,...,u_k as p/q rationals");
    if (need_r) sub->add_option("--r", rc.r, "rank")->required();
    sub->add_option("--format", rc.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", rc.out, "output file or directory");
  };

  auto* adm = app.add_subcommand("admissible", "omega series and the simple-module condition");
  add_params(adm, false);
  adm->add_option("--N", rc.N, "last omega index");

  auto* en = app.add_subcommand("enumerate", "weights of F_r with labels and Verma multiplicities");
  add_params(en, true);
  en->add_option("--q", rc.q, "block sizes q_1,...,q_k");

  auto* dec = app.add_subcommand("decompose", "decomposition matrices");
  add_params(dec, true);
  dec->add_option("--q", rc.q, "block sizes q_1,...,q_k");
  dec->add_flag("--assume-saturated", rc.assume_saturated, "proceed when saturation is not established");
  dec->add_option("--kl", rc.kl, "standard or swapped")->check(CLI::IsMember({"standard", "swapped"}));
  dec->add_option("--conjugation", rc.conjugation, "transpose or rev-transpose")
      ->check(CLI::IsMember({"transpose", "rev-transpose"}));
  dec->add_flag("--strict", rc.strict, "reject conventions other than the pinned ones");
  dec->add_flag("--cross-check", rc.cross_check, "recompute tilting characters independently");
  dec->add_flag("--full", rc.full, "CSV of the level-2k matrix");
  dec->add_option("--kl-table", rc.kl_table, "also write the KL polynomials of every block as JSON");

  auto* oc = app.add_subcommand("oracle-compare", "compare level one with the diagram algebra");
  add_params(oc, true);
  oc->add_option("--delta", rc.delta, "loop parameter (instead of --u)");

  auto* st = app.add_subcommand("kl-selftest", "internal checks of the KL engine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (adm->parsed()) return cmd_admissible(rc);
    if (en->parsed()) return cmd_enumerate(rc);
    if (dec->parsed()) return cmd_decompose(rc);
    if (oc->parsed()) return cmd_oracle_compare(rc);
    if (st->parsed()) return cmd_kl_selftest();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConventionUnpinned& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SaturationNotEstablished& e) {
    std::cerr << "error: " << e.what() << " (rerun with --assume-saturated)\n";
    return kExitSaturation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
