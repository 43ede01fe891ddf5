// Command-line front end: evaluates the closed-form solutions, the L1
// fractional derivative and the discretized cost functional, and emits the
// comparison table and figure data as CSV/JSON for external plotting.

#include "fracvar/report.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace fracvar;
using varsolve::Method;

struct CommonOpts {
  double alpha = 1.0;
  std::string method = "cc";
  int m = 1000;
  double tol = 1e-14;
  std::string format = "csv";
  std::string out; // empty -> stdout
};

Method parse_method(const std::string& name) {
  if (name == "classical")
    return Method::Classical;
  if (name == "crl")
    return Method::CRL;
  if (name == "cc")
    return Method::CC;
  throw domain_error("unknown method '" + name + "'");
}

specfun::SeriesControl make_ctl(double tol) {
  specfun::SeriesControl ctl;
  ctl.tol = tol;
  ctl.validate();
  return ctl;
}

// Serialize to --out (or stdout) in the requested format. Files are opened
// in binary mode so line endings are LF everywhere.
void emit(const report::Table& table, const std::string& format,
          const std::string& out) {
  std::ostringstream body;
  if (format == "json")
    report::write_json(body, table);
  else if (format == "csv")
    report::write_csv(body, table);
  else
    throw domain_error("unknown format '" + format + "'");

  if (out.empty()) {
    std::cout << body.str();
    return;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os)
    throw io_error("cannot open output file '" + out + "'");
  os << body.str();
  if (!os)
    throw io_error("failed writing output file '" + out + "'");
}

report::Table samples_table(const fracops::SampledFunction& f,
                            const std::vector<double>& col,
                            const char* col_name) {
  report::Table t;
  t.header = {"x", col_name};
  t.numeric = {true, true};
  for (int i = 0; i <= f.grid.m; ++i)
    t.rows.push_back({report::format_sci(f.grid.node(i)),
                      report::format_sci(col[static_cast<std::size_t>(i)])});
  return t;
}

int cmd_solve(const CommonOpts& o) {
  varsolve::SolutionSpec spec(parse_method(o.method), fracops::Order(o.alpha));
  fracops::Grid grid(0.0, 1.0, o.m);
  fracops::SampledFunction y =
      varsolve::sample_solution(spec, grid, make_ctl(o.tol));
  emit(samples_table(y, y.values, "y"), o.format, o.out);
  return 0;
}

int cmd_functional(const CommonOpts& o) {
  Method method = parse_method(o.method);
  const double J =
      report::functional_cell(method, o.alpha, o.m, make_ctl(o.tol));
  report::Table t;
  t.header = {"alpha", "method", "m", "J"};
  t.numeric = {true, false, true, true};
  t.rows.push_back({report::format_sci(o.alpha), varsolve::method_name(method),
                    std::to_string(o.m), report::format_sci(J)});
  emit(t, o.format, o.out);
  return 0;
}

int cmd_table(const std::vector<double>& alphas, const std::vector<int>& sweep,
              double tol, const std::string& format, const std::string& out) {
  std::vector<report::TableRow> rows =
      report::build_table(alphas, sweep, make_ctl(tol));
  report::Table t;
  t.header = {"alpha", "j_crl", "j_cc", "m", "j_crl_extrap", "j_cc_extrap"};
  t.numeric = {true, true, true, true, true, true};
  for (const report::TableRow& r : rows) {
    t.rows.push_back(
        {report::format_sci(r.alpha),
         r.j_crl ? report::format_sci(*r.j_crl) : report::kNotExists,
         report::format_sci(r.j_cc), std::to_string(r.m),
         r.j_crl_extrap ? report::format_sci(*r.j_crl_extrap)
                        : report::kNotExists,
         report::format_sci(r.j_cc_extrap)});
  }
  emit(t, format, out);
  return 0;
}

report::Table figure_table(const report::FigureData& fig) {
  report::Table t;
  t.header.push_back("x");
  for (const report::CurveColumn& c : fig.curves)
    t.header.push_back(c.name);
  t.numeric.assign(t.header.size(), true);
  for (std::size_t i = 0; i < fig.x.size(); ++i) {
    std::vector<std::string> row;
    row.push_back(report::format_sci(fig.x[i]));
    for (const report::CurveColumn& c : fig.curves)
      row.push_back(report::format_sci(c.y[i]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

int cmd_figures(const std::vector<double>& alphas_conv,
                const std::vector<double>& alphas_cmp, int m, double tol,
                const std::string& out_dir) {
  specfun::SeriesControl ctl = make_ctl(tol);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec)
    throw io_error("cannot create output directory '" + out_dir + "'");

  auto write_figure = [&](const report::FigureData& fig, const char* name) {
    const std::string path = out_dir + "/" + name;
    std::ofstream os(path, std::ios::binary);
    if (!os)
      throw io_error("cannot open output file '" + path + "'");
    report::write_csv(os, figure_table(fig));
    if (!os)
      throw io_error("failed writing output file '" + path + "'");
  };

  write_figure(report::figure_curves(alphas_conv, m, ctl), "figure1.csv");
  write_figure(report::figure_curves(alphas_cmp, m, ctl), "figure2.csv");
  write_figure(report::figure_cc_single(0.4, m, ctl), "figure3.csv");
  return 0;
}

int cmd_deriv(const std::string& input, double alpha, const std::string& side,
              const std::string& format, const std::string& out) {
  if (side != "left" && side != "right")
    throw domain_error("--side must be 'left' or 'right'");
  std::ifstream is(input, std::ios::binary);
  if (!is)
    throw io_error("cannot open input file '" + input + "'");
  fracops::SampledFunction f = report::parse_xy(is);
  fracops::Order ord(alpha);
  std::vector<double> d = side == "left"
                              ? fracops::caputo_left_l1_all(f, ord)
                              : fracops::caputo_right_l1_all(f, ord);
  emit(samples_table(f, d, "dy"), format, out);
  return 0;
}

void add_common(CLI::App* sub, CommonOpts& o, bool with_method = true) {
  sub->add_option("--alpha", o.alpha, "fractional order in (0,1]");
  if (with_method)
    sub->add_option("--method", o.method, "classical | crl | cc");
  sub->add_option("--m", o.m, "grid steps")->check(CLI::PositiveNumber);
  sub->add_option("--tol", o.tol, "series truncation tolerance");
  sub->add_option("--format", o.format, "csv | json");
  sub->add_option("--out", o.out, "output file (stdout when omitted)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracvar: fractional variational problem toolkit"};
  app.require_subcommand(1);

  CommonOpts solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "sample a solution as x,y rows");
  add_common(solve, solve_opts);

  CommonOpts fun_opts;
  CLI::App* functional =
      app.add_subcommand("functional", "discretized cost functional value");
  add_common(functional, fun_opts);

  std::vector<double> table_alphas(std::begin(report::kTableAlphas),
                                   std::end(report::kTableAlphas));
  std::vector<int> table_sweep(std::begin(report::kTableSweep),
                               std::end(report::kTableSweep));
  double table_tol = 1e-14;
  std::string table_format = "csv", table_out;
  CLI::App* table = app.add_subcommand(
      "table", "comparison table of both formulations over the order set");
  table->add_option("--alphas", table_alphas, "orders, one row each");
  table->add_option("--m-sweep", table_sweep, "candidate grid sizes");
  table->add_option("--tol", table_tol, "series truncation tolerance");
  table->add_option("--format", table_format, "csv | json");
  table->add_option("--out", table_out, "output file (stdout when omitted)");

  std::vector<double> fig_alphas = {0.7, 0.8, 0.9, 1.0};
  std::vector<double> fig_cmp_alphas = {0.55, 0.7, 0.8, 0.9};
  int fig_m = 1000;
  double fig_tol = 1e-14;
  std::string fig_dir = ".";
  CLI::App* figures =
      app.add_subcommand("figures", "curve data files for the three figures");
  figures->add_option("--alphas", fig_alphas, "orders for the convergence file");
  figures->add_option("--alphas-compare", fig_cmp_alphas,
                      "orders for the method-comparison file");
  figures->add_option("--m", fig_m, "grid steps")->check(CLI::PositiveNumber);
  figures->add_option("--tol", fig_tol, "series truncation tolerance");
  figures->add_option("--out-dir", fig_dir, "output directory");

  std::string deriv_in, deriv_side = "left", deriv_format = "csv", deriv_out;
  double deriv_alpha = 0.5;
  CLI::App* deriv = app.add_subcommand(
      "deriv", "L1 fractional derivative of x,y samples on a uniform grid");
  deriv->add_option("--in", deriv_in, "input CSV of x,y rows")->required();
  deriv->add_option("--alpha", deriv_alpha, "fractional order in (0,1]");
  deriv->add_option("--side", deriv_side, "left | right");
  deriv->add_option("--format", deriv_format, "csv | json");
  deriv->add_option("--out", deriv_out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve)
      return cmd_solve(solve_opts);
    if (*functional)
      return cmd_functional(fun_opts);
    if (*table)
      return cmd_table(table_alphas, table_sweep, table_tol, table_format,
                       table_out);
    if (*figures)
      return cmd_figures(fig_alphas, fig_cmp_alphas, fig_m, fig_tol, fig_dir);
    if (*deriv)
      return cmd_deriv(deriv_in, deriv_alpha, deriv_side, deriv_format,
                       deriv_out);
  } catch (const no_solution_error&) {
    std::cerr << "error: solution does not exist for alpha <= 0.5\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
