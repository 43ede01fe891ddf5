#include "fracvar/fracops.hpp"
#include "fracvar/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace fracvar::fracops {

namespace {

void check_node_range(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi)
    throw std::out_of_range(std::string(what) + ": node index " +
                            std::to_string(i) + " outside [" +
                            std::to_string(lo) + "," + std::to_string(hi) +
                            "]");
}

// (j+1)^e - j^e with 0^e := 0, so the alpha = 1 limit (e = 0) degenerates
// cleanly to the backward difference instead of tripping over pow(0, 0) = 1.
inline double l1_weight(int j, double e) {
  if (j == 0)
    return 1.0;
  return std::pow(j + 1.0, e) - std::pow(static_cast<double>(j), e);
}

// Core L1 sum at node i; the caller applies the h^(-a)/Gamma(2-a) scale.
// Weights may be supplied precomputed (batch path) or empty (per-node path);
// both evaluate the identical expressions in identical order.
inline double l1_sum(const std::vector<double>& v, int i, double e,
                     const std::vector<double>* weights) {
  double s = 0.0;
  for (int k = 0; k < i; ++k) {
    const int j = i - k - 1;
    const double w =
        weights ? (*weights)[static_cast<std::size_t>(j)] : l1_weight(j, e);
    s += w * (v[static_cast<std::size_t>(k) + 1] -
              v[static_cast<std::size_t>(k)]);
  }
  return s;
}

std::vector<double> reflect_values(const std::vector<double>& v) {
  return std::vector<double>(v.rbegin(), v.rend());
}

std::vector<double> left_l1_all_impl(const SampledFunction& f, Order ord,
                                     bool parallel) {
  const int m = f.grid.m;
  const double e = 1.0 - ord.alpha;
  const double scale =
      std::pow(f.grid.h, -ord.alpha) / specfun::gamma(2.0 - ord.alpha);

  std::vector<double> w(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    w[static_cast<std::size_t>(j)] = l1_weight(j, e);

  std::vector<double> out(static_cast<std::size_t>(m) + 1);
  out[0] = 0.0;
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (int i = 1; i <= m; ++i)
      out[static_cast<std::size_t>(i)] = l1_sum(f.values, i, e, &w) * scale;
  } else {
    for (int i = 1; i <= m; ++i)
      out[static_cast<std::size_t>(i)] = l1_sum(f.values, i, e, &w) * scale;
  }
  return out;
}

std::vector<double> right_l1_all_impl(const SampledFunction& f, Order ord,
                                      bool parallel) {
  const int m = f.grid.m;
  SampledFunction reflected(f.grid, reflect_values(f.values));
  std::vector<double> left = left_l1_all_impl(reflected, ord, parallel);
  std::vector<double> out(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i < m; ++i)
    out[static_cast<std::size_t>(i)] = left[static_cast<std::size_t>(m - i)];
  out[static_cast<std::size_t>(m)] = 0.0;
  return out;
}

} // namespace

Order::Order(double a) : alpha(a) {
  if (!(a > 0.0 && a <= 1.0))
    throw domain_error("Order: alpha must lie in (0,1], got " +
                       std::to_string(a));
}

Grid::Grid(double a_, double b_, int m_) : a(a_), b(b_), m(m_) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw domain_error("Grid: endpoints must be finite");
  if (!(b > a))
    throw domain_error("Grid: requires b > a");
  if (m < 1)
    throw domain_error("Grid: requires m >= 1");
  h = (b - a) / m;
}

double Grid::node(int i) const {
  check_node_range(i, 0, m, "Grid::node");
  return i == m ? b : a + i * h;
}

SampledFunction::SampledFunction(Grid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != static_cast<std::size_t>(grid.m) + 1)
    throw domain_error("SampledFunction: expected m+1 values");
  for (double x : values)
    if (!std::isfinite(x))
      throw domain_error("SampledFunction: values must be finite");
}

double rl_integral_num(const SampledFunction& f, Order ord, int i) {
  check_node_range(i, 1, f.grid.m, "rl_integral_num");
  const double a = ord.alpha;
  // cell moment: int_{x_k}^{x_{k+1}} (x_i - s)^(a-1) ds
  //            = h^a / a * ((i-k)^a - (i-k-1)^a)
  double s = 0.0;
  for (int k = 0; k < i; ++k) {
    const double d = i - k;
    s += f.values[static_cast<std::size_t>(k)] *
         (std::pow(d, a) - std::pow(d - 1.0, a));
  }
  return s * std::pow(f.grid.h, a) / specfun::gamma(a + 1.0);
}

double caputo_left_power(double beta, Order ord, double a, double x) {
  if (!(beta > 0.0))
    throw domain_error("caputo_left_power: requires beta > 0");
  if (x < a)
    throw domain_error("caputo_left_power: requires x >= a");
  return specfun::gamma(1.0 + beta) /
         specfun::gamma(1.0 + beta - ord.alpha) *
         std::pow(x - a, beta - ord.alpha);
}

double rl_right_power(double beta, Order ord, double b, double x) {
  if (!(beta > -1.0))
    throw domain_error("rl_right_power: requires beta > -1");
  if (x > b)
    throw domain_error("rl_right_power: requires x <= b");
  const double expo = 1.0 + beta - ord.alpha;
  // beta = alpha - 1: the 1/Gamma(0) pole annihilates the kernel.
  if (std::abs(expo) <= 1e-12 * (1.0 + std::abs(beta)))
    return 0.0;
  return specfun::gamma(1.0 + beta) / specfun::gamma(expo) *
         std::pow(b - x, beta - ord.alpha);
}

double caputo_of_constant(double, Order) { return 0.0; }

double rl_left_of_constant(double K, Order ord, double a, double x) {
  if (ord.alpha == 1.0)
    throw domain_error(
        "rl_left_of_constant: alpha = 1 hits the Gamma(0) pole");
  if (!(x > a))
    throw domain_error("rl_left_of_constant: singular at x = a, needs x > a");
  return K / specfun::gamma(1.0 - ord.alpha) * std::pow(x - a, -ord.alpha);
}

double caputo_left_l1(const SampledFunction& f, Order ord, int i) {
  check_node_range(i, 1, f.grid.m, "caputo_left_l1");
  const double e = 1.0 - ord.alpha;
  const double scale =
      std::pow(f.grid.h, -ord.alpha) / specfun::gamma(2.0 - ord.alpha);
  return l1_sum(f.values, i, e, nullptr) * scale;
}

double caputo_right_l1(const SampledFunction& f, Order ord, int i) {
  check_node_range(i, 0, f.grid.m - 1, "caputo_right_l1");
  SampledFunction reflected(f.grid, reflect_values(f.values));
  return caputo_left_l1(reflected, ord, f.grid.m - i);
}

std::vector<double> caputo_left_l1_all(const SampledFunction& f, Order ord) {
  return left_l1_all_impl(f, ord, true);
}

std::vector<double> caputo_left_l1_all_serial(const SampledFunction& f,
                                              Order ord) {
  return left_l1_all_impl(f, ord, false);
}

std::vector<double> caputo_right_l1_all(const SampledFunction& f, Order ord) {
  return right_l1_all_impl(f, ord, true);
}

std::vector<double> caputo_right_l1_all_serial(const SampledFunction& f,
                                               Order ord) {
  return right_l1_all_impl(f, ord, false);
}

} // namespace fracvar::fracops
