#ifndef FRACVAR_REPORT_HPP
#define FRACVAR_REPORT_HPP

#include "fracvar/varsolve.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fracvar::report {

// Marker text for the C-RL column where no solution exists (alpha <= 0.5).
inline constexpr const char* kNotExists = "NOT_EXISTS";

// The standard order set of the comparison table.
inline constexpr double kTableAlphas[] = {1.0, 0.95, 0.9, 0.8, 0.7, 0.55, 0.4};
// Grid sweep used to pick the reporting resolution.
inline constexpr int kTableSweep[] = {100, 200, 500, 1000};

// One comparison row: functional values of both formulations at the
// sweep-selected grid, plus the h -> 0 extrapolated limits. j_crl is absent
// exactly when alpha <= 0.5.
struct TableRow {
  double alpha;
  std::optional<double> j_crl;
  double j_cc;
  int m;
  std::optional<double> j_crl_extrap;
  double j_cc_extrap;
};

// Reference values for the standard alpha set; the sweep picks the grid
// whose row lands closest to them. Returns nothing for other orders.
struct CellTargets {
  std::optional<double> crl;
  double cc;
};
std::optional<CellTargets> table_targets(double alpha);

// Functional value for one (method, alpha, m) cell.
double functional_cell(varsolve::Method method, double alpha, int m,
                       specfun::SeriesControl ctl);

// Build the comparison table: every alpha evaluated over the m sweep, the
// reported m chosen per row (closest to the reference values where known,
// finest grid otherwise), extrapolation linear in h from the two finest
// grids.
std::vector<TableRow> build_table(std::span<const double> alphas,
                                  std::span<const int> sweep,
                                  specfun::SeriesControl ctl);

// Column-oriented curve bundle for the figure files.
struct CurveColumn {
  std::string name;
  std::vector<double> y;
};
struct FigureData {
  std::vector<double> x;
  std::vector<CurveColumn> curves; // y_classical first
};

// x, y_classical, and one column per (method, alpha); the CRL column is
// skipped for alpha <= 0.5.
FigureData figure_curves(std::span<const double> alphas, int m,
                         specfun::SeriesControl ctl);
// Single C-C curve beside the classical one.
FigureData figure_cc_single(double alpha, int m, specfun::SeriesControl ctl);

// Fixed-width scientific formatting used by every writer. 12 fractional
// digits, LF line endings; identical runs produce byte-identical files.
std::string format_sci(double v);
std::string format_alpha(double a);

// Flat tabular output. Cells are preformatted strings; csv quotes nothing,
// json emits an array of records keyed by the header names (numeric cells
// are written unquoted).
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> numeric; // per column, for json
};
void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

// Parse "x,y" rows (optional header line) into a SampledFunction; the grid
// must be uniform to 1e-9 relative. Throws domain_error on malformed input.
fracops::SampledFunction parse_xy(std::istream& is);

} // namespace fracvar::report

#endif
