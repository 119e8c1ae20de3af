// Command-line front end: tables and plot data for the Romanovski/Scarf
// machinery. CSV output starts with a single '#' parameter line; JSON output
// is an object {params, columns, rows}. Exact rational values are printed
// exactly; floating values use the requested number of significant digits.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "romscarf/fdoracle.hpp"
#include "romscarf/hypergeq.hpp"
#include "romscarf/noncentral.hpp"
#include "romscarf/quadrature.hpp"
#include "romscarf/romanovski.hpp"
#include "romscarf/scarf.hpp"

using namespace romscarf;

namespace {

struct Cell {
  std::variant<long long, double, Rational, std::string> value;
};

struct Table {
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct OutputOptions {
  std::string format = "csv";
  int precision = 12;
  std::string path;
};

std::string format_real(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

void write_csv(const Table& t, const OutputOptions& opt, std::ostream& os) {
  os << "# romscarf";
  for (const auto& [k, v] : t.params) os << ' ' << k << '=' << v;
  os << '\n';
  for (size_t i = 0; i < t.columns.size(); ++i)
    os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "\n");
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      const auto& c = row[i].value;
      if (std::holds_alternative<long long>(c))
        os << std::get<long long>(c);
      else if (std::holds_alternative<double>(c))
        os << format_real(std::get<double>(c), opt.precision);
      else if (std::holds_alternative<Rational>(c))
        os << std::get<Rational>(c).str();
      else
        os << std::get<std::string>(c);
      os << (i + 1 < row.size() ? "," : "\n");
    }
  }
}

void write_json(const Table& t, const OutputOptions& opt, std::ostream& os) {
  nlohmann::ordered_json j;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.params) j["params"][k] = v;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      const auto& c = cell.value;
      if (std::holds_alternative<long long>(c))
        jr.push_back(std::get<long long>(c));
      else if (std::holds_alternative<double>(c))
        jr.push_back(std::stod(format_real(std::get<double>(c), opt.precision)));
      else if (std::holds_alternative<Rational>(c))
        jr.push_back(std::get<Rational>(c).str());
      else
        jr.push_back(std::get<std::string>(c));
    }
    j["rows"].push_back(std::move(jr));
  }
  os << j.dump(2) << '\n';
}

void emit(const Table& t, const OutputOptions& opt) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!opt.path.empty()) {
    file.open(opt.path);
    if (!file) throw std::runtime_error("cannot open output file " + opt.path);
    os = &file;
  }
  if (opt.format == "json")
    write_json(t, opt, *os);
  else
    write_csv(t, opt, *os);
}

void add_output_options(CLI::App* cmd, OutputOptions& opt) {
  cmd->add_option("--format", opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--precision", opt.precision, "significant digits for real values")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  cmd->add_option("--output", opt.path, "write to a file instead of standard output");
}

Rational parse_rational(const std::string& text) { return Rational::parse(text); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Romanovski polynomials and the Scarf potentials"};
  app.require_subcommand(1);

  // ---- spectrum ----
  std::string sp_potential = "scarf2";
  std::string sp_a = "10", sp_b = "5", sp_alpha = "1";
  int sp_nmax = 10;
  bool sp_oracle = false;
  double sp_L = 20.0;
  int sp_N = 4000;
  OutputOptions sp_out;
  auto* sp = app.add_subcommand("spectrum", "bound-state energies");
  sp->add_option("--potential", sp_potential)->check(CLI::IsMember({"scarf1", "scarf2"}));
  sp->add_option("--a", sp_a, "strength a > 0 (rational)")->required();
  sp->add_option("--b", sp_b, "asymmetry b (rational)")->required();
  sp->add_option("--alpha", sp_alpha, "scale alpha > 0 (rational)");
  sp->add_option("--n-max", sp_nmax, "trigonometric ladder cutoff");
  sp->add_flag("--oracle", sp_oracle, "append finite-difference comparison columns (scarf2)");
  sp->add_option("--L", sp_L, "oracle box half-width");
  sp->add_option("--N", sp_N, "oracle interior points");
  add_output_options(sp, sp_out);

  // ---- poly ----
  std::string po_p, po_q = "0";
  int po_n = 0;
  OutputOptions po_out;
  auto* po = app.add_subcommand("poly", "exact Romanovski coefficients");
  po->add_option("--p", po_p, "weight exponent p > 0 (rational)")->required();
  po->add_option("--q", po_q, "arctan coefficient q (rational)");
  po->add_option("--n", po_n, "degree")->required()->check(CLI::Range(0, 32));
  add_output_options(po, po_out);

  // ---- wavefunction ----
  std::string wf_a, wf_b = "0", wf_alpha = "1";
  int wf_n = 0, wf_points = 401;
  double wf_zmin = -8.0, wf_zmax = 8.0;
  OutputOptions wf_out;
  auto* wf = app.add_subcommand("wavefunction", "normalized hyperbolic-Scarf bound state");
  wf->add_option("--a", wf_a)->required();
  wf->add_option("--b", wf_b);
  wf->add_option("--alpha", wf_alpha);
  wf->add_option("--n", wf_n, "level index")->required();
  wf->add_option("--zmin", wf_zmin);
  wf->add_option("--zmax", wf_zmax);
  wf->add_option("--points", wf_points)->check(CLI::Range(2, 1000000));
  add_output_options(wf, wf_out);

  // ---- gram ----
  std::string gr_p, gr_q = "0";
  int gr_maxn = 3, gr_nodes = 512;
  OutputOptions gr_out;
  auto* gr = app.add_subcommand("gram", "orthogonality matrix with convergence mask");
  gr->add_option("--p", gr_p)->required();
  gr->add_option("--q", gr_q);
  gr->add_option("--max-n", gr_maxn)->required()->check(CLI::Range(0, 64));
  gr->add_option("--nodes", gr_nodes)->check(CLI::Range(8, 65536));
  add_output_options(gr, gr_out);

  // ---- angular ----
  int an_l = 1, an_m = 1, an_n = 0, an_points = 361;
  double an_c = 0.0, an_mreal = 1.0;
  std::string an_strategy = "integer-l";
  bool an_legendre_limit = false;
  OutputOptions an_out;
  auto* an = app.add_subcommand("angular", "polar profile of the non-spherical angular function");
  an->add_option("--l", an_l, "separation label (integer for the default strategy)")->required();
  an->add_option("--m", an_m, "azimuthal label")->required();
  an->add_option("--strategy", an_strategy)
      ->check(CLI::IsMember({"integer-l", "from-lc", "from-mnc"}));
  an->add_option("--c", an_c, "non-central strength (from-lc / from-mnc)");
  an->add_option("--n", an_n, "polynomial degree (from-lc / from-mnc)");
  an->add_option("--m-real", an_mreal, "azimuthal label for from-mnc");
  an->add_option("--points", an_points)->check(CLI::Range(2, 1000000));
  an->add_flag("--legendre-limit", an_legendre_limit,
               "use the c = 0 reduction (a = l, b = 0, n = l - m)");
  add_output_options(an, an_out);

  // ---- classify ----
  std::string cl_a, cl_b, cl_c, cl_d, cl_e;
  OutputOptions cl_out;
  auto* cl = app.add_subcommand("classify", "canonical family of an equation parameter tuple");
  cl->add_option("--a", cl_a)->required();
  cl->add_option("--b", cl_b)->required();
  cl->add_option("--c", cl_c)->required();
  cl->add_option("--d", cl_d)->required();
  cl->add_option("--e", cl_e)->required();
  add_output_options(cl, cl_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (sp->parsed()) {
      ScarfParams params(parse_rational(sp_a), parse_rational(sp_b), parse_rational(sp_alpha));
      Table t;
      t.params = {{"command", "spectrum"},
                  {"potential", sp_potential},
                  {"a", params.a.str()},
                  {"b", params.b.str()},
                  {"alpha", params.alpha.str()}};
      t.columns = {"n", "epsilon", "e"};
      if (sp_potential == "scarf1") {
        if (sp_oracle) throw std::domain_error("spectrum: --oracle applies to scarf2 only");
        for (const auto& lv : spectrum_i(params, sp_nmax))
          t.rows.push_back({{static_cast<long long>(lv.n)}, {lv.epsilon}, {lv.e}});
      } else if (sp_oracle) {
        t.columns.push_back("numeric");
        t.columns.push_back("deviation");
        auto levels = spectrum_ii(params);
        auto report =
            compare_spectrum(params, FDGrid{sp_L, sp_N}, static_cast<int>(levels.size()));
        t.params.push_back({"oracle_L", format_real(sp_L, 6)});
        t.params.push_back({"oracle_N", std::to_string(sp_N)});
        for (size_t i = 0; i < levels.size(); ++i)
          t.rows.push_back({{static_cast<long long>(levels[i].n)},
                            {levels[i].epsilon},
                            {levels[i].e},
                            {report.numeric[i]},
                            {report.deviations[i]}});
      } else {
        for (const auto& lv : spectrum_ii(params))
          t.rows.push_back({{static_cast<long long>(lv.n)}, {lv.epsilon}, {lv.e}});
      }
      emit(t, sp_out);
    } else if (po->parsed()) {
      RomanovskiParams params(parse_rational(po_p), parse_rational(po_q));
      auto r = romanovski(params, po_n);
      Table t;
      t.params = {{"command", "poly"},
                  {"p", params.p.str()},
                  {"q", params.q.str()},
                  {"n", std::to_string(po_n)},
                  {"degree", std::to_string(r.poly.degree())},
                  {"degree_deficient", r.degree_deficient ? "true" : "false"}};
      t.columns = {"k", "coefficient"};
      for (int k = 0; k <= (r.poly.is_zero() ? 0 : r.poly.degree()); ++k)
        t.rows.push_back({{static_cast<long long>(k)}, {r.poly.coeff(k)}});
      emit(t, po_out);
    } else if (wf->parsed()) {
      ScarfParams params(parse_rational(wf_a), parse_rational(wf_b), parse_rational(wf_alpha));
      auto psi = wavefunction_ii(params, wf_n);
      Table t;
      t.params = {{"command", "wavefunction"},     {"a", params.a.str()},
                  {"b", params.b.str()},           {"alpha", params.alpha.str()},
                  {"n", std::to_string(wf_n)},     {"epsilon", psi.level.epsilon.str()},
                  {"e", psi.level.e.str()}};
      t.columns = {"z", "psi"};
      for (int i = 0; i < wf_points; ++i) {
        double z = wf_zmin + (wf_zmax - wf_zmin) * i / (wf_points - 1);
        t.rows.push_back({{z}, {psi.value(z)}});
      }
      emit(t, wf_out);
    } else if (gr->parsed()) {
      RomanovskiParams params(parse_rational(gr_p), parse_rational(gr_q));
      QuadratureSpec spec;
      spec.nodes = gr_nodes;
      auto g = gram(params, gr_maxn, spec);
      Table t;
      t.params = {{"command", "gram"},
                  {"p", params.p.str()},
                  {"q", params.q.str()},
                  {"max_n", std::to_string(gr_maxn)},
                  {"nodes", std::to_string(gr_nodes)}};
      t.columns = {"m", "mprime", "value", "convergent"};
      for (int m = 0; m <= gr_maxn; ++m)
        for (int mp = m; mp <= gr_maxn; ++mp) {
          std::vector<Cell> row{{static_cast<long long>(m)}, {static_cast<long long>(mp)}};
          if (g.convergent[static_cast<size_t>(m)][static_cast<size_t>(mp)]) {
            row.push_back({g.entries[static_cast<size_t>(m)][static_cast<size_t>(mp)]});
            row.push_back({std::string("true")});
          } else {
            row.push_back({std::string("divergent")});
            row.push_back({std::string("false")});
          }
          t.rows.push_back(std::move(row));
        }
      emit(t, gr_out);
    } else if (an->parsed()) {
      AngularProblem problem;
      if (an_legendre_limit) {
        if (an_m < 0 || an_m > an_l)
          throw std::domain_error("angular: the c = 0 limit needs 0 <= m <= l");
        problem = AngularProblem{ParamStrategy::FromLC,    static_cast<double>(an_l),
                                 static_cast<double>(an_m), 0.0,
                                 static_cast<double>(an_l), 0.0,
                                 an_l - an_m};
      } else if (an_strategy == "integer-l") {
        problem = solve_params_integer_l(an_l, an_m);
      } else if (an_strategy == "from-lc") {
        problem = solve_params_from_lc(static_cast<double>(an_l), an_c, an_n);
      } else {
        problem = solve_params_from_mnc(an_mreal, an_n, an_c);
      }
      auto fn = angular_function(problem);
      auto labels = su11_labels(problem);
      Table t;
      t.params = {{"command", "angular"},
                  {"l", format_real(problem.l, 12)},
                  {"m", format_real(problem.m, 12)},
                  {"j", format_real(labels.j, 12)},
                  {"mprime", format_real(labels.mprime, 12)},
                  {"a", format_real(problem.a, 12)},
                  {"b", format_real(problem.b, 12)},
                  {"n", std::to_string(problem.n)},
                  {"c", format_real(problem.c, 12)}};
      t.columns = {"theta", "absZ"};
      for (int i = 0; i < an_points; ++i) {
        double theta = (i + 0.5) * M_PI / an_points;
        t.rows.push_back({{theta}, {fn.abs_Z(theta, 0.0)}});
      }
      emit(t, an_out);
    } else if (cl->parsed()) {
      HypergeqParams hp{parse_rational(cl_a), parse_rational(cl_b), parse_rational(cl_c),
                        parse_rational(cl_d), parse_rational(cl_e)};
      auto fam = classify(hp);
      Table t;
      t.params = {{"command", "classify"}};
      t.columns = {"key", "value"};
      t.rows.push_back({{std::string("family")}, {family_name(fam.tag)}});
      for (const auto& [k, v] : fam.params) t.rows.push_back({{k}, {v}});
      if (fam.shift) {
        t.rows.push_back({{std::string("shift_alpha")}, {fam.shift->alpha}});
        t.rows.push_back({{std::string("shift_beta")}, {fam.shift->beta}});
        t.rows.push_back({{std::string("shift_scale")}, {fam.shift->scale}});
      }
      if (!fam.note.empty()) t.rows.push_back({{std::string("note")}, {fam.note}});
      emit(t, cl_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
