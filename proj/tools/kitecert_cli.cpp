// kitecert command-line driver.
//
// Commands:
//   prove [ids... | all]      run catalog proofs, write certificates + report
//   certify <file> <rect>     certify an ad-hoc polynomial as nonpositive
//   scan <fig1|bounds|hotspots>  CSV region / bound / FEM scans to stdout
//   fem <domain> [params]     finite-element eigenvalue solve, JSON to stdout
//   check-certificate <file>  independent re-verification of a certificate
//
// Exit codes: 0 = everything certified / verified, 1 = a proof or check
// failed, 2 = usage or input errors.  All emitted files are deterministic for
// a fixed configuration except the report's "generated_at" field; files are
// written atomically (temp file + rename).

#include <CLI11.hpp>

#include "kitecert/bounds.hpp"
#include "kitecert/certificate.hpp"
#include "kitecert/certify.hpp"
#include "kitecert/checker.hpp"
#include "kitecert/config.hpp"
#include "kitecert/fem.hpp"
#include "kitecert/polyexpr.hpp"
#include "kitecert/prove.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

using kitecert::CaseCertificate;
using kitecert::Json;
using kitecert::Rational;
using kitecert::RatInterval;
using kitecert::RunConfig;

std::string iso_timestamp_utc() {
  const std::time_t tt =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp =
      path.parent_path() / (path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

Rational arg_rational(const std::string& s, const std::string& what) {
  const auto r = kitecert::try_parse_rational(s);
  if (!r)
    throw std::invalid_argument(what + ": '" + s +
                                "' is not an exact rational (write p or p/q; "
                                "decimals are not accepted)");
  return *r;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string decimal_mid(const RatInterval& iv) {
  return fmt_double(kitecert::to_double((iv.lo + iv.hi) / 2));
}

// ---------------------------------------------------------------------------
// prove
// ---------------------------------------------------------------------------

int cmd_prove(const RunConfig& cfg, std::vector<std::string> ids,
              const std::string& strategy_str, unsigned jobs) {
  const kitecert::Strategy strategy = kitecert::parse_strategy(strategy_str);
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all"))
    ids = kitecert::cases::case_ids();

  std::vector<kitecert::cases::CaseDef> defs;
  defs.reserve(ids.size());
  for (const std::string& id : ids) defs.push_back(kitecert::cases::make_case(id));

  struct Slot {
    CaseCertificate cc;
    std::string error;
    long long wall_ms = 0;
  };
  std::vector<Slot> slots(defs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= defs.size()) return;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        slots[i].cc =
            kitecert::prove_case(defs[i], strategy, cfg.certify_options());
      } catch (const std::exception& e) {
        slots[i].error = e.what();
      }
      slots[i].wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(defs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  const std::filesystem::path out_dir(cfg.out_dir);
  Json report;
  report["format"] = "kitecert-report-1";
  report["generated_at"] = iso_timestamp_utc();
  report["config"] = {{"pi_bits", cfg.pi_bits},
                      {"max_depth", cfg.max_depth},
                      {"denom_bits", cfg.denom_bits}};
  report["strategy_request"] = strategy_str;
  Json jcases = Json::array();
  bool all_ok = true;

  for (std::size_t i = 0; i < defs.size(); ++i) {
    const auto& def = defs[i];
    Json jc;
    jc["id"] = def.id;
    jc["note"] = def.note;
    if (!def.remark.empty()) jc["remark"] = def.remark;
    bool ok = false;
    if (!slots[i].error.empty()) {
      jc["error"] = slots[i].error;
      jc["certified"] = false;
      std::printf("[FAIL] %-4s error: %s\n", def.id.c_str(),
                  slots[i].error.c_str());
    } else {
      const CaseCertificate& cc = slots[i].cc;
      ok = cc.certified;
      jc["strategy"] = cc.strategy;
      jc["certified"] = cc.certified;
      Json jclaims = Json::array();
      long long leaves = 0;
      int depth = 0;
      for (const auto& claim : cc.claims) {
        const kitecert::TreeStats st = kitecert::tree_stats(claim.tree);
        Json jcl;
        jcl["name"] = claim.name;
        jcl["certified"] = claim.certified;
        jcl["fold_leaves"] = st.fold_leaves;
        jcl["max_split_depth"] = st.max_depth;
        jcl["fail_nodes"] = st.fail_nodes;
        jclaims.push_back(std::move(jcl));
        leaves += st.fold_leaves;
        depth = std::max(depth, st.max_depth);
      }
      jc["claims"] = std::move(jclaims);
      const std::string rel = "certs/" + def.id + ".json";
      write_file_atomic(out_dir / rel,
                        kitecert::certificate_to_json(cc).dump(2) + "\n");
      jc["certificate"] = rel;
      std::printf("[%s] %-4s %-9s %3lld fold leaves, max split depth %d, %lld ms\n",
                  ok ? " OK " : "FAIL", def.id.c_str(), cc.strategy.c_str(),
                  leaves, depth, static_cast<long long>(slots[i].wall_ms));
    }
    all_ok = all_ok && ok;
    jcases.push_back(std::move(jc));
  }
  report["cases"] = std::move(jcases);
  report["all_certified"] = all_ok;
  write_file_atomic(out_dir / "report.json", report.dump(2) + "\n");
  std::printf("%s  report: %s\n", all_ok ? "all cases certified" : "NOT all cases certified",
              (out_dir / "report.json").string().c_str());
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------------

int cmd_certify(const RunConfig& cfg, const std::string& poly_file,
                const std::string& x0s, const std::string& y0s,
                const std::string& dxs, const std::string& dys,
                const std::string& vars, const std::string& name) {
  std::ifstream in(poly_file);
  if (!in) throw std::invalid_argument("cannot open polynomial file '" + poly_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();

  const std::size_t comma = vars.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == vars.size())
    throw std::invalid_argument("--vars expects two names, e.g. x,y");
  const std::string xn = vars.substr(0, comma);
  const std::string yn = vars.substr(comma + 1);

  const kitecert::Poly2 p = kitecert::polyexpr::parse(buf.str(), xn, yn);
  const kitecert::Rect rect{arg_rational(x0s, "x0"), arg_rational(y0s, "y0"),
                            arg_rational(dxs, "dx"), arg_rational(dys, "dy")};

  kitecert::CertifyResult res =
      kitecert::certify_nonpos(p, rect, cfg.certify_options());

  CaseCertificate cc;
  cc.case_id = name;
  cc.strategy = "subdivide";
  cc.pi_bits = cfg.pi_bits;
  cc.sqrt_bits = cfg.denom_bits;
  kitecert::Claim claim;
  claim.name = name;
  claim.poly = p;
  claim.rect = rect;
  claim.tree = std::move(res.tree);
  claim.certified = res.certified;
  cc.claims.push_back(std::move(claim));
  cc.certified = res.certified;

  const std::filesystem::path cert_path =
      std::filesystem::path(cfg.out_dir) / "certs" / (name + ".json");
  write_file_atomic(cert_path, kitecert::certificate_to_json(cc).dump(2) + "\n");

  std::printf("%s on [%s, %s+%s] x [%s, %s+%s]\n",
              res.certified ? "Certified nonpositive" : "NOT certified",
              x0s.c_str(), x0s.c_str(), dxs.c_str(), y0s.c_str(), y0s.c_str(),
              dys.c_str());
  std::printf("worst fold bound: %s (~%s); %d fold leaves, max depth %d, %d folds\n",
              kitecert::to_fraction_string(res.worst_bound).c_str(),
              fmt_double(kitecert::to_double(res.worst_bound)).c_str(),
              res.stats.leaves, res.stats.max_depth, res.stats.folds);
  std::printf("certificate: %s\n", cert_path.string().c_str());
  return res.certified ? 0 : 1;
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

int scan_fig1(const RunConfig& cfg, std::ostream& os) {
  os << "a_frac,b_frac,a,b,admissible,kite_sym,mu_cond,acute,small_angle,"
        "angle_le_pi4\n";
  const int n = cfg.grid;
  for (int i = 0; i <= n; ++i) {
    const Rational a(i, 2LL * n);
    for (int j = 1; j <= n; ++j) {
      const Rational b(j, n);
      const kitecert::bounds::TriParam t{a, b};
      const auto f = kitecert::bounds::region_classify(t);
      os << kitecert::to_fraction_string(a) << ','
         << kitecert::to_fraction_string(b) << ','
         << fmt_double(kitecert::to_double(a)) << ','
         << fmt_double(kitecert::to_double(b)) << ','
         << int(kitecert::bounds::unitbase_admissible(t)) << ','
         << int(f.kite_sym) << ',' << int(f.mu_cond) << ',' << int(f.acute)
         << ',' << int(f.small_angle) << ',' << int(f.angle_le_pi4) << '\n';
    }
  }
  return 0;
}

int scan_bounds(const RunConfig& cfg, std::ostream& os) {
  namespace b = kitecert::bounds;
  os << "a_frac,b_frac,a,b,kite_sym,mu_cond,mu_a_domain,u1_hi_frac,u1_hi,"
        "u2_frac,u2,mu2_upper_hi_frac,mu2_upper_hi,lemma_holds,mu_a_lo_frac,"
        "mu_a_lo,kite_upper_hi_frac,kite_upper_hi,chain_strict\n";
  const int n = cfg.grid;
  const int bits = static_cast<int>(cfg.pi_bits);
  for (int i = 0; i <= n; ++i) {
    const Rational a(i, 2LL * n);
    for (int j = 1; j <= n; ++j) {
      const Rational bb(j, n);
      const b::TriParam t{a, bb};
      if (!b::unitbase_admissible(t)) continue;
      const auto f = b::region_classify(t);
      const b::TriParam sym = b::to_symbase(t);
      const RatInterval u1 = b::u1_sym(sym, bits);
      const RatInterval u2 = b::u2_sym(sym.a);
      const RatInterval m2 = b::mu2_upper_lemma(t, bits);
      const RatInterval gap = b::mu2_upper_vs_box_gap_b2(a, bb * bb, bits);
      // The antisymmetric-mode lower bound is valid only for a nonobtuse
      // apex (delta = a^2 + b^2 - a >= 0) inside the kite region; the chain
      // columns stay empty elsewhere.
      const bool mu_a_domain = f.kite_sym && !(bb * bb < a - a * a);
      os << kitecert::to_fraction_string(a) << ','
         << kitecert::to_fraction_string(bb) << ','
         << fmt_double(kitecert::to_double(a)) << ','
         << fmt_double(kitecert::to_double(bb)) << ',' << int(f.kite_sym) << ','
         << int(f.mu_cond) << ',' << int(mu_a_domain) << ','
         << kitecert::to_fraction_string(u1.hi) << ','
         << fmt_double(kitecert::to_double(u1.hi)) << ','
         << kitecert::to_fraction_string(u2.hi) << ','
         << fmt_double(kitecert::to_double(u2.hi)) << ','
         << kitecert::to_fraction_string(m2.hi) << ','
         << fmt_double(kitecert::to_double(m2.hi)) << ','
         << int(gap.lo >= 0) << ',';
      if (mu_a_domain) {
        const RatInterval ma =
            b::mu_a_lower(t, bits, static_cast<int>(cfg.denom_bits));
        const RatInterval ku = b::kite_upper_ABC(t, bits);
        os << kitecert::to_fraction_string(ma.lo) << ','
           << fmt_double(kitecert::to_double(ma.lo)) << ','
           << kitecert::to_fraction_string(ku.hi) << ','
           << fmt_double(kitecert::to_double(ku.hi)) << ','
           << int(ma.lo > ku.hi) << '\n';
      } else {
        os << ",,,,\n";
      }
    }
  }
  return 0;
}

const char* class_str(kitecert::fem::ExtremumClass c) {
  switch (c) {
    case kitecert::fem::ExtremumClass::Vertex: return "vertex";
    case kitecert::fem::ExtremumClass::EdgeInterior: return "edge-interior";
    default: return "interior";
  }
}

int scan_hotspots(const RunConfig& cfg, std::ostream& os) {
  namespace f = kitecert::fem;
  os << "a_frac,b_frac,a,b,mu2,mu3,gap,degenerate,max_class,min_class,stable\n";
  const int n = std::min(cfg.grid, 8);  // each row costs two eigensolves
  for (int i = 0; i <= n; ++i) {
    const Rational a(i, 2LL * n);
    for (int j = 1; j <= n; ++j) {
      const Rational b(j, n);
      if (!kitecert::bounds::unitbase_admissible({a, b})) continue;
      const f::OracleResult r = f::solve_domain(
          f::DomainSpec::triangle_unit(kitecert::to_double(a),
                                       kitecert::to_double(b)),
          4, {}, cfg.fem_level_lo, cfg.fem_level_hi);
      os << kitecert::to_fraction_string(a) << ','
         << kitecert::to_fraction_string(b) << ','
         << fmt_double(kitecert::to_double(a)) << ','
         << fmt_double(kitecert::to_double(b)) << ','
         << fmt_double(r.modes[1].value) << ',' << fmt_double(r.modes[2].value)
         << ',' << fmt_double(r.modes[2].value - r.modes[1].value) << ',';
      try {
        const f::HotSpotReport hi = f::hot_spots(r);
        const f::HotSpotReport lo =
            f::analyze_hot_spots(r.mesh_lo, r.sol_lo.vectors.col(1));
        const bool stable = hi.max_class == lo.max_class &&
                            hi.min_class == lo.min_class &&
                            hi.max_corner == lo.max_corner &&
                            hi.min_corner == lo.min_corner;
        os << "0," << class_str(hi.max_class) << ',' << class_str(hi.min_class)
           << ',' << int(stable) << '\n';
      } catch (const std::runtime_error&) {
        os << "1,,,\n";
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// fem
// ---------------------------------------------------------------------------

int cmd_fem(const RunConfig& cfg, const std::string& kind,
            const std::vector<std::string>& params, bool sym_base, int modes,
            bool mixed, bool dirichlet_all) {
  namespace f = kitecert::fem;
  const auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("domain '" + kind + "' takes " +
                                  std::to_string(n) + " parameter(s)");
  };

  f::DomainSpec spec = f::DomainSpec::square();
  Json jdom;
  jdom["kind"] = kind;
  if (kind == "square") {
    need(0);
  } else if (kind == "triangle" || kind == "kite") {
    need(2);
    const Rational a = arg_rational(params[0], "a");
    const Rational b = arg_rational(params[1], "b");
    const double ad = kitecert::to_double(a), bd = kitecert::to_double(b);
    if (kind == "kite")
      spec = f::DomainSpec::kite(ad, bd);
    else
      spec = sym_base ? f::DomainSpec::triangle_sym(ad, bd)
                      : f::DomainSpec::triangle_unit(ad, bd);
    jdom["a"] = kitecert::to_fraction_string(a);
    jdom["b"] = kitecert::to_fraction_string(b);
    jdom["a_decimal"] = ad;
    jdom["b_decimal"] = bd;
    if (kind == "triangle") jdom["base"] = sym_base ? "sym" : "unit";
  } else if (kind == "rhombus") {
    need(1);
    const Rational h = arg_rational(params[0], "h");
    spec = f::DomainSpec::rhombus(kitecert::to_double(h));
    jdom["h"] = kitecert::to_fraction_string(h);
    jdom["h_decimal"] = kitecert::to_double(h);
  } else {
    throw std::invalid_argument("unknown domain '" + kind +
                                "' (square, triangle, kite, rhombus)");
  }

  if (mixed && kind != "triangle")
    throw std::invalid_argument("--mixed applies to triangle domains only");
  if (mixed && dirichlet_all)
    throw std::invalid_argument("--mixed and --dirichlet conflict");
  f::BoundaryCondition bc;
  std::string bc_name = "neumann";
  if (mixed) {
    bc = f::BoundaryCondition::dirichlet_on({0});
    bc_name = "mixed: dirichlet on side 0";
  } else if (dirichlet_all) {
    bc = f::BoundaryCondition::dirichlet_everywhere();
    bc_name = "dirichlet";
  }

  const f::OracleResult r =
      f::solve_domain(spec, modes, bc, cfg.fem_level_lo, cfg.fem_level_hi);

  Json out;
  out["format"] = "kitecert-fem-1";
  out["domain"] = std::move(jdom);
  out["boundary"] = bc_name;
  out["levels"] = {cfg.fem_level_lo, cfg.fem_level_hi};
  Json jmodes = Json::array();
  for (std::size_t i = 0; i < r.modes.size(); ++i) {
    Json jm;
    jm["index"] = i;
    jm["value"] = r.modes[i].value;
    jm["error"] = r.modes[i].error;
    jm["coarse"] = r.modes[i].coarse;
    jm["fine"] = r.modes[i].fine;
    jmodes.push_back(std::move(jm));
  }
  out["modes"] = std::move(jmodes);

  if (kind == "kite") {
    Json jp = Json::array();
    for (const f::Parity p : f::classify_symmetry(r.mesh_hi, r.sol_hi)) {
      jp.push_back(p == f::Parity::Symmetric      ? "symmetric"
                   : p == f::Parity::Antisymmetric ? "antisymmetric"
                                                   : "mixed");
    }
    out["parity"] = std::move(jp);
  }

  if (!mixed && !dirichlet_all && modes >= 3) {
    const double gap = r.modes[2].value - r.modes[1].value;
    const double bars = r.modes[1].error + r.modes[2].error;
    const bool degenerate =
        gap <= std::max(10.0 * bars, 1e-6 * std::abs(r.modes[1].value));
    out["degenerate_pair"] = degenerate;
    if (!degenerate) {
      const f::HotSpotReport rep = f::hot_spots(r);
      Json jh;
      jh["max_class"] = class_str(rep.max_class);
      jh["min_class"] = class_str(rep.min_class);
      if (rep.max_corner >= 0) jh["max_corner"] = rep.max_corner;
      if (rep.min_corner >= 0) jh["min_corner"] = rep.min_corner;
      jh["side_sign_changes"] = rep.side_sign_changes;
      out["hot_spots"] = std::move(jh);
    }
  }

  std::cout << out.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// check-certificate
// ---------------------------------------------------------------------------

int cmd_check(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open certificate '" + file + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("certificate '" + file + "' is not valid JSON: " +
                                e.what());
  }
  const kitecert::CheckReport rep = kitecert::check_certificate(j);
  std::printf("valid:     %s\n", rep.valid ? "yes" : "no");
  std::printf("certified: %s\n", rep.certified ? "yes" : "no");
  std::printf("fold leaves checked: %d\n", rep.leaves_checked);
  for (const auto& issue : rep.issues)
    std::printf("issue [%s]: %s\n", issue.claim.c_str(), issue.detail.c_str());
  return rep.certified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified eigenvalue-inequality toolkit"};
  app.require_subcommand(1);

  std::string config_file;
  app.add_option("--config", config_file, "key=value configuration file");
  std::string o_pi_bits, o_max_depth, o_denom_bits, o_fem_levels, o_grid, o_out;
  app.add_option("--pi-bits", o_pi_bits, "pi^2 enclosure width in bits (default 96)");
  app.add_option("--max-depth", o_max_depth, "bisection depth cap (default 12)");
  app.add_option("--denom-bits", o_denom_bits,
                 "denominator cap in bits for sqrt enclosures (default 192)");
  app.add_option("--fem-levels", o_fem_levels,
                 "two comma-separated refinement levels (default 5,6)");
  app.add_option("--grid", o_grid, "scan grid density per axis (default 40)");
  app.add_option("--out-dir", o_out, "output directory (default out)");

  auto* prove = app.add_subcommand("prove", "prove catalog cases");
  std::vector<std::string> prove_ids;
  std::string strategy = "auto";
  unsigned jobs = 0;
  prove->add_option("ids", prove_ids, "case ids, or 'all' (default)");
  prove->add_option("--strategy", strategy, "auto | subdivide | tactics")
      ->check(CLI::IsMember({"auto", "subdivide", "tactics"}));
  prove->add_option("--jobs", jobs, "worker threads (default: hardware)");

  auto* certify = app.add_subcommand("certify", "certify a polynomial file");
  std::string poly_file, x0s, y0s, dxs, dys, vars = "x,y", adhoc_name = "adhoc";
  certify->add_option("file", poly_file, "polynomial expression file")->required();
  certify->add_option("x0", x0s, "rectangle origin x (rational)")->required();
  certify->add_option("y0", y0s, "rectangle origin y (rational)")->required();
  certify->add_option("dx", dxs, "rectangle width (rational > 0)")->required();
  certify->add_option("dy", dys, "rectangle height (rational >= 0)")->required();
  certify->add_option("--vars", vars, "variable names, e.g. x,y");
  certify->add_option("--name", adhoc_name, "claim name for the certificate");

  auto* scan = app.add_subcommand("scan", "CSV scans to stdout");
  std::string scan_mode;
  scan->add_option("mode", scan_mode, "fig1 | bounds | hotspots")
      ->required()
      ->check(CLI::IsMember({"fig1", "bounds", "hotspots"}));

  auto* fem = app.add_subcommand("fem", "finite-element eigenvalue solve");
  std::string fem_kind;
  std::vector<std::string> fem_params;
  bool fem_sym = false, fem_mixed = false, fem_dirichlet = false;
  int fem_modes = 4;
  fem->add_option("domain", fem_kind, "square | triangle | kite | rhombus")
      ->required();
  fem->add_option("params", fem_params, "domain parameters (rationals)");
  fem->add_flag("--sym", fem_sym, "triangle: use the symmetric base (-1,0)-(1,0)");
  fem->add_flag("--mixed", fem_mixed, "triangle: Dirichlet condition on the base");
  fem->add_flag("--dirichlet", fem_dirichlet, "Dirichlet condition on all sides");
  fem->add_option("--modes", fem_modes, "number of eigenpairs (default 4)")
      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check-certificate",
                                   "re-verify an emitted certificate");
  std::string cert_file;
  check->add_option("file", cert_file, "certificate JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    if (!config_file.empty()) kitecert::apply_config_file(cfg, config_file);
    if (!o_pi_bits.empty()) kitecert::set_option(cfg, "pi_bits", o_pi_bits);
    if (!o_max_depth.empty()) kitecert::set_option(cfg, "max_depth", o_max_depth);
    if (!o_denom_bits.empty()) kitecert::set_option(cfg, "denom_bits", o_denom_bits);
    if (!o_fem_levels.empty()) kitecert::set_option(cfg, "fem_levels", o_fem_levels);
    if (!o_grid.empty()) kitecert::set_option(cfg, "grid", o_grid);
    if (!o_out.empty()) kitecert::set_option(cfg, "out_dir", o_out);

    if (*prove) return cmd_prove(cfg, prove_ids, strategy, jobs);
    if (*certify)
      return cmd_certify(cfg, poly_file, x0s, y0s, dxs, dys, vars, adhoc_name);
    if (*scan) {
      if (scan_mode == "fig1") return scan_fig1(cfg, std::cout);
      if (scan_mode == "bounds") return scan_bounds(cfg, std::cout);
      return scan_hotspots(cfg, std::cout);
    }
    if (*fem)
      return cmd_fem(cfg, fem_kind, fem_params, fem_sym, fem_modes, fem_mixed,
                     fem_dirichlet);
    if (*check) return cmd_check(cert_file);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
