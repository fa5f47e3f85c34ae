// lie-contract: command-line front end for the liecontract library.
//
// Exit codes: 0 success, 2 validation failure, 64 usage error, 66 file error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "liecontract/csv.hpp"
#include "liecontract/liecontract.hpp"
#include "liecontract/parallel.hpp"

namespace lc = liecontract;
namespace su2h = liecontract::su2h;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;

enum class OutputMode { report, csv, both };

/// Parsed flags shared by the subcommands.
struct RunConfig {
  std::string csv_path;
  bool report = false;
  unsigned jobs = 0;
  lc::Tolerances tol;

  OutputMode mode() const {
    if (csv_path.empty()) return OutputMode::report;
    return report ? OutputMode::both : OutputMode::csv;
  }
  bool wants_report() const { return mode() != OutputMode::csv; }
  bool wants_csv() const { return mode() != OutputMode::report; }
};

void add_output_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--csv", cfg.csv_path, "Write results as CSV to this path");
  cmd->add_flag("--report", cfg.report, "Print a human-readable report (default when --csv is absent)");
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lc::IoError("cannot write '" + path + "'");
  return out;
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string fmt_vec(const Eigen::VectorXd& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << fmt(v[i]);
  os << ')';
  return os.str();
}

void print_brackets(std::ostream& os, const lc::LieAlgebra& alg) {
  const auto& names = alg.basis_names();
  bool any = false;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      std::ostringstream rhs;
      bool first = true;
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        const double c = alg.c(i, j, k);
        if (c == 0.0) continue;
        rhs << (first ? "" : (c < 0 ? " - " : " + "));
        if (first && c < 0) rhs << '-';
        const double a = std::abs(c);
        if (a != 1.0) rhs << fmt(a) << '*';
        rhs << names[k];
        first = false;
      }
      if (!first) {
        os << "  [" << names[i] << "," << names[j] << "] = " << rhs.str() << '\n';
        any = true;
      }
    }
  }
  if (!any) os << "  (abelian)\n";
}

lc::ContractionSpec make_spec(const std::string& variant, const std::vector<double>& u,
                              const std::vector<double>& powers) {
  const lc::Variant v = lc::parse_variant(variant);
  if (v == lc::Variant::powers) {
    if (powers.empty()) throw lc::ValidationError("--variant powers needs --powers a1,a2,...");
    return lc::ContractionSpec::powers(powers);
  }
  if (u.empty()) throw lc::ValidationError("--u is required for the " + variant + " variant");
  return lc::ContractionSpec::make(v, u);
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw lc::ValidationError("grid must look like 128x256");
  try {
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw lc::ValidationError("grid must look like 128x256");
  }
}

std::vector<lc::FlowSample> load_flows(const std::string& path, std::size_t dim) {
  std::ifstream in(path);
  if (!in) throw lc::IoError("cannot open '" + path + "'");
  try {
    nlohmann::json doc;
    in >> doc;
    std::vector<lc::FlowSample> out;
    for (const auto& item : doc) {
      const auto x = item.at("X").get<std::vector<double>>();
      if (x.size() != dim) throw lc::DimensionError("flow generator has wrong dimension");
      out.push_back({Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size())),
                     item.at("t").get<double>()});
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw lc::IoError("flows file '" + path + "': " + e.what());
  }
}

// ---------------------------------------------------------------- lie_core

int cmd_catalog_list() {
  for (auto name : lc::catalog_names) std::cout << name << '\n';
  return 0;
}

int cmd_catalog_show(const std::string& name, const std::string& out) {
  const lc::LieAlgebra alg = lc::catalog(name);
  if (out.empty()) {
    std::cout << lc::to_json(alg).dump(2) << '\n';
  } else {
    lc::save(alg, out);
  }
  return 0;
}

int cmd_check_jacobi(const std::string& path, const RunConfig& cfg) {
  const lc::LieAlgebra alg = lc::load(path, cfg.tol.jacobi);
  std::cout << "jacobi_residual " << lc::csv::number(lc::jacobi_residual(alg)) << '\n';
  const auto series = lc::lower_central_series(alg);
  std::cout << "lower_central_series [";
  for (std::size_t i = 0; i < series.dims.size(); ++i) std::cout << (i ? "," : "") << series.dims[i];
  std::cout << "] nilpotent=" << (series.nilpotent ? "true" : "false") << '\n';
  return 0;
}

// ------------------------------------------------------ contraction_engine

int cmd_iw_tensor(const std::string& path, const std::vector<double>& u, const RunConfig& cfg) {
  const lc::LieAlgebra alg = lc::load(path, cfg.tol.jacobi);
  const auto spec = lc::ContractionSpec::iw(u);
  const auto table = lc::iw_tensor(alg, spec);
  const auto& names = alg.basis_names();
  for (const auto& e : table.entries()) {
    std::cout << "T(" << names[e.i] << "," << names[e.j] << ") = " << fmt_vec(e.value)
              << "  |V_N| = " << fmt(e.null_norm) << "  |V_R| = " << fmt(e.range_norm) << '\n';
  }
  return 0;
}

int cmd_classify(const std::string& path, const std::vector<double>& u, const RunConfig& cfg) {
  const lc::LieAlgebra alg = lc::load(path, cfg.tol.jacobi);
  const auto spec = lc::ContractionSpec::iw(u);
  const auto table = lc::iw_tensor(alg, spec);
  const auto verdict = lc::classify(table, spec, cfg.tol.membership);
  std::cout << lc::to_string(verdict) << '\n';
  if (cfg.report) {
    const auto& names = alg.basis_names();
    for (const auto& e : table.entries())
      std::cout << "  T(" << names[e.i] << "," << names[e.j] << ") = " << fmt_vec(e.value) << '\n';
    if (verdict == lc::Classification::both) {
      std::cout << "IW contraction:\n";
      print_brackets(std::cout, lc::contracted_bracket_iw(alg, spec, cfg.tol));
      std::cout << "anti-IW contraction:\n";
      print_brackets(std::cout, lc::contracted_bracket_anti(alg, lc::ContractionSpec::anti_iw(u), cfg.tol));
    }
  }
  return 0;
}

int cmd_contract(const std::string& path, const std::vector<double>& u, const std::string& variant,
                 const std::vector<double>& powers, const std::string& out, const RunConfig& cfg) {
  const lc::LieAlgebra alg = lc::load(path, cfg.tol.jacobi);
  const auto spec = make_spec(variant, u, powers);
  const lc::LieAlgebra contracted = lc::contract(alg, spec, cfg.tol);
  if (out.empty()) {
    std::cout << lc::to_json(contracted).dump(2) << '\n';
  } else {
    lc::save(contracted, out);
  }
  if (cfg.report) {
    std::cerr << "contracted brackets:\n";
    print_brackets(std::cerr, contracted);
    if (spec.variant() != lc::Variant::powers) {
      const auto checks = lc::structural_checks(alg, contracted, spec, cfg.tol);
      std::cerr << "nilpotent=" << (checks.series.nilpotent ? "true" : "false") << '\n';
      for (const auto& f : checks.failures) std::cerr << "structural check failed: " << f << '\n';
    }
  }
  return 0;
}

int cmd_limit_sweep(const std::string& path, const std::vector<double>& u, const std::string& variant,
                    const std::vector<double>& powers, double eps_from, double eps_to, int steps,
                    const RunConfig& cfg) {
  const lc::LieAlgebra alg = lc::load(path, cfg.tol.jacobi);
  const auto spec = make_spec(variant, u, powers);
  const auto schedule = lc::geometric_schedule(eps_from, eps_to, steps);
  const auto rep = lc::numeric_limit(alg, spec, schedule, {}, cfg.tol);

  if (cfg.wants_csv()) {
    auto out = open_csv(cfg.csv_path);
    std::vector<std::string> header{"eps", "max_error"};
    header.insert(header.end(), rep.component_labels.begin(), rep.component_labels.end());
    lc::csv::write_row(out, header);
    for (std::size_t k = 0; k < rep.eps_values.size(); ++k) {
      std::vector<std::string> row{lc::csv::number(rep.eps_values[k]), lc::csv::number(rep.errors[k])};
      for (double e : rep.component_errors[k]) row.push_back(lc::csv::number(e));
      lc::csv::write_row(out, row);
    }
  }
  if (cfg.wants_report()) {
    std::cout << "eps            max_error\n";
    for (std::size_t k = 0; k < rep.eps_values.size(); ++k)
      std::cout << lc::csv::number(rep.eps_values[k]) << "  " << lc::csv::number(rep.errors[k]) << '\n';
    std::cout << "fitted_rate " << fmt(rep.fitted_rate) << '\n';
    std::cout << "verdict " << lc::to_string(rep.verdict) << '\n';
    if (!rep.diagnostic.empty()) std::cout << "diagnostic " << rep.diagnostic << '\n';
    if (rep.limit_estimate) {
      std::cout << "limit estimate at eps=" << lc::csv::number(rep.eps_values.back()) << ":\n";
      print_brackets(std::cout, lc::LieAlgebra(alg.basis_names(), *rep.limit_estimate, 1e300));
    }
  }
  return rep.verdict == lc::Verdict::diverged ? kExitValidation : 0;
}

// --------------------------------------------------------- coadjoint_orbits

int cmd_orbit_deform(const std::string& path0, const std::string& path1, const std::vector<double>& u,
                     const std::string& variant, const std::vector<double>& powers,
                     const std::vector<double>& mu, double eps, const std::string& flows_path,
                     const RunConfig& cfg) {
  const lc::LieAlgebra alg0 = lc::load(path0, cfg.tol.jacobi);
  const lc::LieAlgebra alg1 = lc::load(path1, cfg.tol.jacobi);
  const auto spec = make_spec(variant, u, powers);
  if (mu.size() != alg1.dim()) throw lc::DimensionError("--mu has wrong dimension");
  const lc::DualVector base(Eigen::Map<const Eigen::VectorXd>(mu.data(), static_cast<Eigen::Index>(mu.size())));
  const auto flows = load_flows(flows_path, alg1.dim());
  const auto sample = lc::orbit_deform(alg0, alg1, spec, base, eps, flows);
  const std::size_t n = alg1.dim();

  if (cfg.wants_csv()) {
    auto out = open_csv(cfg.csv_path);
    std::vector<std::string> header{"point", "t"};
    for (std::size_t k = 0; k < n; ++k) header.push_back("x_" + std::to_string(k + 1));
    for (std::size_t k = 0; k < n; ++k) header.push_back("mu_" + std::to_string(k + 1));
    for (std::size_t k = 0; k < n; ++k) header.push_back("limit_" + std::to_string(k + 1));
    header.push_back("distance");
    lc::csv::write_row(out, header);
    for (std::size_t p = 0; p < sample.points.size(); ++p) {
      std::vector<std::string> row{std::to_string(p), lc::csv::number(sample.generators[p].t)};
      for (std::size_t k = 0; k < n; ++k) row.push_back(lc::csv::number(sample.generators[p].X[static_cast<Eigen::Index>(k)]));
      for (std::size_t k = 0; k < n; ++k) row.push_back(lc::csv::number(sample.points[p][k]));
      for (std::size_t k = 0; k < n; ++k) row.push_back(lc::csv::number(sample.limit_points[p][k]));
      row.push_back(lc::csv::number((sample.points[p].coeffs() - sample.limit_points[p].coeffs()).norm()));
      lc::csv::write_row(out, row);
    }
  }
  if (cfg.wants_report()) {
    for (std::size_t p = 0; p < sample.points.size(); ++p) {
      std::cout << "point " << p << ": " << fmt_vec(sample.points[p].coeffs()) << "  limit "
                << fmt_vec(sample.limit_points[p].coeffs()) << '\n';
    }
    if (sample.casimir_spread) std::cout << "casimir_spread " << lc::csv::number(*sample.casimir_spread) << '\n';
  }
  return 0;
}

int cmd_integrality(double spin, const std::string& grid, double hbar) {
  const auto [nt, np] = parse_grid(grid);
  const auto res = lc::sphere_integrality(spin, nt, np, {hbar});
  std::cout << "integral " << lc::csv::number(res.integral) << '\n';
  std::cout << "value " << lc::csv::number(res.value) << '\n';
  std::cout << "quantizable " << (res.quantizable ? "true" : "false") << '\n';
  return 0;
}

// ----------------------------------------------------------- su2_heisenberg

int cmd_mn_sweep(double lambda, const std::vector<double>& g, const std::vector<double>& spins, int block,
                 double coupling, int cutoff, const RunConfig& cfg) {
  if (g.size() != 3) throw lc::DimensionError("--g takes three coordinates x,y,t");
  const su2h::HeisenbergElement elem{g[0], g[1], g[2]};
  std::vector<su2h::Spin> ss;
  for (double s : spins) ss.push_back(su2h::Spin::from_value(s));
  const su2h::MnOptions opts{coupling, cutoff};
  std::vector<su2h::MnPoint> points(ss.size(), su2h::MnPoint{su2h::Spin::from_twice(0)});
  lc::parallel_for(ss.size(), cfg.jobs, [&](std::size_t i) {
    points[i] = {ss[i], su2h::mn_eps(lambda, ss[i], coupling), su2h::mn_error(lambda, elem, ss[i], block, opts)};
  });

  if (cfg.wants_csv()) {
    auto out = open_csv(cfg.csv_path);
    lc::csv::write_row(out, {"s", "eps", "error"});
    for (const auto& p : points)
      lc::csv::write_row(out, {lc::csv::number(p.s.value()), lc::csv::number(p.eps), lc::csv::number(p.error)});
  }
  if (cfg.wants_report()) {
    std::cout << "s        eps                 error\n";
    for (const auto& p : points)
      std::cout << std::left << std::setw(8) << fmt(p.s.value()) << " " << lc::csv::number(p.eps) << "  "
                << lc::csv::number(p.error) << '\n';
  }
  return 0;
}

int cmd_transition(double lambda, double radius, double eps_from, double eps_to, int steps, const RunConfig& cfg) {
  const auto schedule = lc::geometric_schedule(eps_from, eps_to, steps);
  su2h::TransitionOptions opts;
  opts.radius = radius;
  const auto study = su2h::transition_convergence(lambda, schedule, opts);

  if (cfg.wants_csv()) {
    auto out = open_csv(cfg.csv_path);
    lc::csv::write_row(out, {"eps", "sup_err_c1", "sup_err_c2"});
    for (std::size_t k = 0; k < study.eps_values.size(); ++k) {
      lc::csv::write_row(out, {lc::csv::number(study.eps_values[k]), lc::csv::number(study.vs_c1.errors[k]),
                               lc::csv::number(study.vs_c2.errors[k])});
    }
  }
  if (cfg.wants_report()) {
    std::cout << "eps                 s_eps      sup|c - e^{iλz}|    sup|c - e^{2iλz}|\n";
    for (std::size_t k = 0; k < study.eps_values.size(); ++k) {
      std::cout << lc::csv::number(study.eps_values[k]) << "  " << std::left << std::setw(9) << study.s_eps[k]
                << "  " << lc::csv::number(study.vs_c1.errors[k]) << "  " << lc::csv::number(study.vs_c2.errors[k])
                << '\n';
    }
    std::cout << "c=1 " << lc::to_string(study.vs_c1.verdict) << ", c=2 " << lc::to_string(study.vs_c2.verdict)
              << '\n';
    std::cout << "winning_c " << (study.winning_c ? std::to_string(*study.winning_c) : "none") << '\n';
    if (!study.diagnostic.empty()) std::cout << "diagnostic " << study.diagnostic << '\n';
  }
  return 0;
}

int cmd_quantize_sphere(double spin, double hbar, bool report) {
  const su2h::Spin s = su2h::Spin::from_value(spin);
  const lc::QuantConfig qc{hbar};
  const auto ops = su2h::prequantum_spin_ops(s, qc);
  const std::complex<double> ih(0.0, hbar);
  const double c12 = (ops.J1 * ops.J2 - ops.J2 * ops.J1 - ih * ops.J3).norm();
  const double c23 = (ops.J2 * ops.J3 - ops.J3 * ops.J2 - ih * ops.J1).norm();
  const double c31 = (ops.J3 * ops.J1 - ops.J1 * ops.J3 - ih * ops.J2).norm();
  const auto eye = su2h::MatC::Identity(s.dim(), s.dim());
  const double cas = (ops.J1 * ops.J1 + ops.J2 * ops.J2 + ops.J3 * ops.J3 -
                      hbar * hbar * s.value() * (s.value() + 1.0) * eye).norm();
  const auto dv = su2h::dim_vs_volume(s, qc);
  std::cout << "spin " << fmt(s.value()) << '\n';
  std::cout << "dimension " << dv.dimension << '\n';
  std::cout << "symplectic_volume " << lc::csv::number(dv.volume) << '\n';
  if (report) {
    std::cout << "commutator_residual_12 " << lc::csv::number(c12) << '\n';
    std::cout << "commutator_residual_23 " << lc::csv::number(c23) << '\n';
    std::cout << "commutator_residual_31 " << lc::csv::number(c31) << '\n';
    std::cout << "casimir_residual " << lc::csv::number(cas) << '\n';
    std::cout << "integral_orbit "
              << (lc::sphere_integrality(s.value(), 128, 256, qc).quantizable ? "true" : "false") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebra contractions, coadjoint orbits and the su2 -> Heisenberg limit", "lie-contract"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int()> run;

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Builtin algebras");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List catalog names")->callback([&] { run = cmd_catalog_list; });
  std::string show_name, show_out;
  auto* show = catalog->add_subcommand("show", "Print a catalog algebra as JSON");
  show->add_option("name", show_name, "Catalog name (abelian_<n> for abelian)")->required();
  show->add_option("--out", show_out, "Write to this file instead of stdout");
  show->callback([&] { run = [&] { return cmd_catalog_show(show_name, show_out); }; });

  // check-jacobi
  std::string file0, file1;
  auto* cj = app.add_subcommand("check-jacobi", "Load an algebra file and report its Jacobi residual");
  cj->add_option("file", file0, "Algebra JSON file")->required();
  cj->callback([&] { run = [&] { return cmd_check_jacobi(file0, cfg); }; });

  // contraction options shared by several subcommands
  std::vector<double> u, powers, mu, g, spins;
  std::string variant = "iw";
  auto add_u = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--u", u, "Diagonal of u, comma separated")->delimiter(',');
    if (required) opt->required();
  };
  auto add_variant = [&](CLI::App* cmd) {
    cmd->add_option("--variant", variant, "iw | anti | powers")->check(CLI::IsMember({"iw", "anti", "powers"}));
    cmd->add_option("--powers", powers, "Exponents a_i of U = diag(eps^a_i), comma separated")->delimiter(',');
  };

  auto* iwt = app.add_subcommand("iw-tensor", "Print the IW-tensor table");
  iwt->add_option("file", file0, "Algebra JSON file")->required();
  add_u(iwt, true);
  iwt->callback([&] { run = [&] { return cmd_iw_tensor(file0, u, cfg); }; });

  auto* cls = app.add_subcommand("classify", "Classify a diagonal contraction candidate");
  cls->add_option("file", file0, "Algebra JSON file")->required();
  add_u(cls, true);
  cls->add_flag("--report", cfg.report, "Also print the IW-tensor table");
  cls->callback([&] { run = [&] { return cmd_classify(file0, u, cfg); }; });

  std::string contract_out;
  auto* con = app.add_subcommand("contract", "Closed-form contracted algebra as JSON");
  con->add_option("file", file0, "Algebra JSON file")->required();
  add_u(con, false);
  add_variant(con);
  con->add_option("--out", contract_out, "Write to this file instead of stdout");
  con->add_flag("--report", cfg.report, "Print brackets and structural checks to stderr");
  con->callback([&] { run = [&] { return cmd_contract(file0, u, variant, powers, contract_out, cfg); }; });

  double eps_from = 1e-1, eps_to = 1e-6;
  int steps = 6;
  auto* ls = app.add_subcommand("limit-sweep", "Brute-force eps-limit of the conjugated bracket");
  ls->add_option("file", file0, "Algebra JSON file")->required();
  add_u(ls, false);
  add_variant(ls);
  ls->add_option("--eps-from", eps_from, "Largest eps")->capture_default_str();
  ls->add_option("--eps-to", eps_to, "Smallest eps")->capture_default_str();
  ls->add_option("--steps", steps, "Number of geometric steps")->capture_default_str();
  add_output_flags(ls, cfg);
  ls->callback([&] { run = [&] { return cmd_limit_sweep(file0, u, variant, powers, eps_from, eps_to, steps, cfg); }; });

  double eps = 1e-3;
  std::string flows_path;
  auto* od = app.add_subcommand("orbit-deform", "Deform a coadjoint orbit of alg1 towards alg0");
  od->add_option("alg0", file0, "Contracted algebra JSON file")->required();
  od->add_option("alg1", file1, "Original algebra JSON file")->required();
  add_u(od, false);
  add_variant(od);
  od->add_option("--mu", mu, "Base point in the dual, comma separated")->delimiter(',')->required();
  od->add_option("--eps", eps, "Contraction parameter")->capture_default_str();
  od->add_option("--flows", flows_path, "JSON list of {\"X\": [...], \"t\": ...}")->required();
  add_output_flags(od, cfg);
  od->callback([&] { run = [&] { return cmd_orbit_deform(file0, file1, u, variant, powers, mu, eps, flows_path, cfg); }; });

  double spin = 0.5, hbar = 1.0;
  std::string grid = "128x256";
  auto* integ = app.add_subcommand("integrality", "(1/2 pi hbar) * symplectic area of the spin sphere");
  integ->add_option("--spin", spin, "Sphere radius s")->required();
  integ->add_option("--grid", grid, "Quadrature grid, e.g. 128x256")->capture_default_str();
  integ->add_option("--hbar", hbar, "Planck constant")->capture_default_str();
  integ->callback([&] { run = [&] { return cmd_integrality(spin, grid, hbar); }; });

  auto* qs = app.add_subcommand("quantize-sphere", "Prequantum spin operators on the spin-s sphere");
  qs->add_option("--spin", spin, "Spin s (half-integer)")->required();
  qs->add_option("--hbar", hbar, "Planck constant")->capture_default_str();
  qs->add_flag("--report", cfg.report, "Print commutator and Casimir residuals");
  qs->callback([&] { run = [&] { return cmd_quantize_sphere(spin, hbar, cfg.report); }; });

  // su2h
  auto* su2h_cmd = app.add_subcommand("su2h", "su2 -> Heisenberg worked example");
  su2h_cmd->require_subcommand(1);
  double lambda = 1.0, coupling = 1.0, radius = 1.0;
  int block = 5, cutoff = -1;
  auto* mn = su2h_cmd->add_subcommand("mn-sweep", "MN-contraction error along a spin sweep");
  mn->add_option("--lambda", lambda, "Heisenberg character parameter")->capture_default_str();
  mn->add_option("--g", g, "Group element x,y,t in exponential coordinates")->delimiter(',')->required();
  mn->add_option("--spins", spins, "Spins s, comma separated")->delimiter(',')->required();
  mn->add_option("--block", block, "Compared block size K")->capture_default_str();
  mn->add_option("--coupling", coupling, "c in eps^2 = lambda/(c s)")->capture_default_str();
  mn->add_option("--cutoff", cutoff, "Fock truncation N (default 2K)");
  mn->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)");
  add_output_flags(mn, cfg);
  mn->callback([&] { run = [&] { return cmd_mn_sweep(lambda, g, spins, block, coupling, cutoff, cfg); }; });

  eps_from = 1e-1;
  auto* tr = su2h_cmd->add_subcommand("transition", "Deformed transition functions against e^{i c lambda z}");
  tr->add_option("--lambda", lambda, "Heisenberg character parameter")->capture_default_str();
  tr->add_option("--radius", radius, "Disk radius R")->capture_default_str();
  tr->add_option("--eps-from", eps_from, "Largest eps")->capture_default_str();
  tr->add_option("--eps-to", eps_to, "Smallest eps (default 1e-4)");
  tr->add_option("--steps", steps, "Number of geometric steps (default 4)");
  add_output_flags(tr, cfg);
  tr->callback([&] {
    run = [&] {
      const bool custom_to = tr->count("--eps-to") > 0;
      const bool custom_steps = tr->count("--steps") > 0;
      return cmd_transition(lambda, radius, eps_from, custom_to ? eps_to : 1e-4, custom_steps ? steps : 4, cfg);
    };
  });

  try {
    cfg.tol = lc::Tolerances::from_env();
  } catch (const lc::Error& e) {
    std::cerr << "lie-contract: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return run ? run() : kExitUsage;
  } catch (const lc::IoError& e) {
    std::cerr << "lie-contract: " << e.what() << '\n';
    return kExitFile;
  } catch (const lc::Error& e) {
    std::cerr << "lie-contract: " << e.what() << '\n';
    return kExitValidation;
  }
}
