#include "fracvar/varsolve.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <string>

namespace fracvar::varsolve {

namespace {

void check_unit_domain(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw domain_error("solution domain is [0,1], got x = " +
                       std::to_string(x));
}

void check_interior_node(int i, int m, const char* what) {
  if (i < 1 || i > m - 1)
    throw std::out_of_range(std::string(what) + ": interior node expected, " +
                            std::to_string(i));
}

std::vector<double> residual_all_impl(const fracops::SampledFunction& y,
                                      fracops::Order ord, bool rl_form) {
  const int m = y.grid.m;
  std::vector<double> g = fracops::caputo_left_l1_all(y, ord);
  fracops::SampledFunction gs(y.grid, g);
  std::vector<double> right = fracops::caputo_right_l1_all(gs, ord);

  const double g_end = g[static_cast<std::size_t>(m)];
  const bool corrected = rl_form && ord.alpha < 1.0;
  const double corr_scale =
      corrected ? g_end / specfun::gamma(1.0 - ord.alpha) : 0.0;

  std::vector<double> res(static_cast<std::size_t>(m) + 1,
                          std::numeric_limits<double>::quiet_NaN());
  for (int i = 1; i <= m - 1; ++i) {
    double r = right[static_cast<std::size_t>(i)] - 12.0;
    if (corrected)
      r += corr_scale * std::pow(1.0 - y.grid.node(i), -ord.alpha);
    res[static_cast<std::size_t>(i)] = r;
  }
  return res;
}

fracops::SampledFunction sample_impl(const SolutionSpec& spec,
                                     const fracops::Grid& grid,
                                     specfun::SeriesControl ctl,
                                     bool parallel) {
  const int m = grid.m;
  std::vector<double> v(static_cast<std::size_t>(m) + 1);
  auto eval = [&](int i) {
    const double x = grid.node(i);
    switch (spec.kind) {
    case Method::Classical:
      return solve_classical(x);
    case Method::CRL:
      return solve_crl(spec.ord, x, ctl);
    case Method::CC:
    default:
      return solve_cc(spec.ord, x, ctl);
    }
  };
  if (parallel) {
    // exceptions (series non-convergence) must not escape the parallel
    // region; capture the first one and rethrow outside
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i <= m; ++i) {
      try {
        v[static_cast<std::size_t>(i)] = eval(i);
      } catch (...) {
#pragma omp critical
        if (!failure)
          failure = std::current_exception();
        v[static_cast<std::size_t>(i)] = 0.0;
      }
    }
    if (failure)
      std::rethrow_exception(failure);
  } else {
    for (int i = 0; i <= m; ++i)
      v[static_cast<std::size_t>(i)] = eval(i);
  }
  return fracops::SampledFunction(grid, std::move(v));
}

} // namespace

const char* method_name(Method m) {
  switch (m) {
  case Method::Classical:
    return "classical";
  case Method::CRL:
    return "crl";
  case Method::CC:
  default:
    return "cc";
  }
}

SolutionSpec::SolutionSpec(Method k, fracops::Order o) : kind(k), ord(o) {
  if (kind == Method::CRL && !(ord.alpha > 0.5))
    throw no_solution_error(
        "solution does not exist for alpha <= 0.5");
  if (kind == Method::Classical && ord.alpha != 1.0)
    throw domain_error("SolutionSpec: classical solution requires alpha = 1");
}

double solve_classical(double x) {
  check_unit_domain(x);
  return 6.0 * x - 6.0 * x * x;
}

double solve_crl(fracops::Order ord, double x, specfun::SeriesControl ctl) {
  if (!(ord.alpha > 0.5))
    throw no_solution_error("solution does not exist for alpha <= 0.5");
  check_unit_domain(x);
  const double a = ord.alpha;
  const double g1 = specfun::gamma(1.0 + a);
  const double inv = 1.0 / (g1 * g1);
  const double xa = std::pow(x, a);
  const double f1 = specfun::hyp2f1(1.0, -a, 1.0 + a, x, ctl);
  const double f2 = specfun::hyp2f1(1.0, 1.0 - a, 1.0 + a, x, ctl);
  const double f2_at_1 = specfun::hyp2f1(1.0, 1.0 - a, 1.0 + a, 1.0, ctl);
  return 12.0 * inv * xa * f1 - 6.0 * inv * xa * f2 / f2_at_1;
}

double solve_cc(fracops::Order ord, double x, specfun::SeriesControl ctl) {
  check_unit_domain(x);
  const double a = ord.alpha;
  const double g1 = specfun::gamma(1.0 + a);
  const double inv = 1.0 / (g1 * g1);
  const double xa = std::pow(x, a);
  const double f1 = specfun::hyp2f1(1.0, -a, 1.0 + a, x, ctl);
  return inv * xa * (12.0 * f1 - 6.0);
}

fracops::SampledFunction sample_solution(const SolutionSpec& spec,
                                         const fracops::Grid& grid,
                                         specfun::SeriesControl ctl) {
  return sample_impl(spec, grid, ctl, true);
}

fracops::SampledFunction sample_solution_serial(const SolutionSpec& spec,
                                                const fracops::Grid& grid,
                                                specfun::SeriesControl ctl) {
  return sample_impl(spec, grid, ctl, false);
}

FunctionalValue evaluate_functional(const fracops::SampledFunction& y,
                                    fracops::Order ord, Method method) {
  const fracops::Grid& gr = y.grid;
  if (gr.m < 2)
    throw domain_error("evaluate_functional: grid too coarse, need m >= 2");
  if (std::abs(gr.a) > 1e-12 || std::abs(gr.b - 1.0) > 1e-12)
    throw domain_error("evaluate_functional: grid must cover [0,1]");
  if (std::abs(y.values.front()) > 1e-6 || std::abs(y.values.back()) > 1e-6)
    throw domain_error(
        "evaluate_functional: boundary conditions y(0) = y(1) = 0 violated");

  std::vector<double> g = fracops::caputo_left_l1_all(y, ord);
  double acc = 0.0;
  for (int i = 1; i <= gr.m; ++i) {
    const double gi = g[static_cast<std::size_t>(i)];
    acc += gi * gi - 24.0 * y.values[static_cast<std::size_t>(i)];
  }
  return FunctionalValue{gr.h * acc, gr.m, method};
}

double el_residual_crl(const fracops::SampledFunction& y, fracops::Order ord,
                       int i) {
  check_interior_node(i, y.grid.m, "el_residual_crl");
  return el_residual_crl_all(y, ord)[static_cast<std::size_t>(i)];
}

double el_residual_cc(const fracops::SampledFunction& y, fracops::Order ord,
                      int i) {
  check_interior_node(i, y.grid.m, "el_residual_cc");
  return el_residual_cc_all(y, ord)[static_cast<std::size_t>(i)];
}

std::vector<double> el_residual_crl_all(const fracops::SampledFunction& y,
                                        fracops::Order ord) {
  return residual_all_impl(y, ord, true);
}

std::vector<double> el_residual_cc_all(const fracops::SampledFunction& y,
                                       fracops::Order ord) {
  return residual_all_impl(y, ord, false);
}

bool convexity_certificate(std::span<const ConvexSample> samples) {
  for (const ConvexSample& s : samples) {
    const double lhs = (s.u + s.u1) * (s.u + s.u1) - 24.0 * (s.y + s.y1) -
                       (s.u * s.u - 24.0 * s.y);
    const double rhs = -24.0 * s.y1 + 2.0 * s.u * s.u1;
    // floating-point noise floor; analytically lhs - rhs = u1^2 >= 0
    const double scale = 1.0 + s.u * s.u + s.u1 * s.u1 + 24.0 * std::abs(s.y) +
                         24.0 * std::abs(s.y1);
    if (lhs - rhs < -1e-12 * scale)
      return false;
  }
  return true;
}

} // namespace fracvar::varsolve
