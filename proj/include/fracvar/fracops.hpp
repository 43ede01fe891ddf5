#ifndef FRACVAR_FRACOPS_HPP
#define FRACVAR_FRACOPS_HPP

#include "fracvar/errors.hpp"

#include <vector>

namespace fracvar::fracops {

// Fractional order restricted to (0, 1], so ceil(alpha) = 1 in every
// operator definition below. alpha = 1 is admitted and routed to the
// classical limits.
struct Order {
  double alpha;
  explicit Order(double a);
};

// Uniform partition of [a, b] into m steps of size h = (b - a) / m.
struct Grid {
  double a;
  double b;
  int m;
  double h;

  Grid(double a_, double b_, int m_);

  // node(m) is pinned to b so powers of (b - x) never see a negative base
  // from accumulated rounding.
  double node(int i) const;
  int size() const { return m + 1; }
};

// Function values on a Grid; values[i] = y(node(i)). Immutable exchange
// format between the operators and the functional evaluator.
struct SampledFunction {
  Grid grid;
  std::vector<double> values;

  SampledFunction(Grid g, std::vector<double> v);

  template <typename F> static SampledFunction sample(const Grid& g, F&& f) {
    std::vector<double> v(static_cast<std::size_t>(g.m) + 1);
    for (int i = 0; i <= g.m; ++i)
      v[static_cast<std::size_t>(i)] = f(g.node(i));
    return SampledFunction(g, std::move(v));
  }
};

/* Riemann-Liouville fractional integral of order alpha at node i,
 *
 *   I^a[f](x_i) = 1/Gamma(a) * int_a^{x_i} (x_i - s)^(a-1) f(s) ds,
 *
 * by the product-rectangle rule: left-node values with the kernel moment of
 * each cell integrated in closed form, so the integrable singularity at
 * s = x_i needs no adaptive quadrature. First-order accurate.
 */
double rl_integral_num(const SampledFunction& f, Order ord, int i);

// Left Caputo derivative of (x - a)^beta, beta > 0:
//   Gamma(1+beta)/Gamma(1+beta-alpha) * (x-a)^(beta-alpha).
double caputo_left_power(double beta, Order ord, double a, double x);

// Right Riemann-Liouville derivative of (b - x)^beta, beta > -1:
//   Gamma(1+beta)/Gamma(1+beta-alpha) * (b-x)^(beta-alpha),
// returning exactly 0 when beta = alpha - 1 (kernel annihilation).
double rl_right_power(double beta, Order ord, double b, double x);

// Caputo derivatives kill constants.
double caputo_of_constant(double K, Order ord);

// Left Riemann-Liouville derivative of the constant K at x > a:
//   K / Gamma(1-alpha) * (x-a)^(-alpha).
// alpha = 1 is rejected here (Gamma(0) pole); the classical value 0 is the
// caller's branch, not this kernel's.
double rl_left_of_constant(double K, Order ord, double a, double x);

/* L1 discretization of the left Caputo derivative at node i,
 *
 *   D^a[y](x_i) = sum_{k=0}^{i-1} b_{i-k-1} (y(x_{k+1}) - y(x_k)),
 *   b_k = h^(-a)/Gamma(2-a) * ((k+1)^(1-a) - k^(1-a)).
 *
 * Exact on affine data, order 2-alpha otherwise. At alpha = 1 the weights
 * degenerate to b_k = delta_{k,0}/h and the sum is the backward difference.
 */
double caputo_left_l1(const SampledFunction& f, Order ord, int i);

// Right-sided mirror of caputo_left_l1 via the reflection s -> a + b - s:
// equals the left scheme applied to the reversed sample sequence at the
// reflected index. Defined for 0 <= i <= m-1.
double caputo_right_l1(const SampledFunction& f, Order ord, int i);

// Batch evaluation of the L1 derivative at every node; entry 0 (left) or m
// (right) is the empty sum and set to 0. The plain variants are the
// OpenMP-parallel kernels used by the functional and residual pipelines;
// the _serial variants are the reference loops they are tested against.
// Both produce bit-identical results node for node.
std::vector<double> caputo_left_l1_all(const SampledFunction& f, Order ord);
std::vector<double> caputo_left_l1_all_serial(const SampledFunction& f,
                                              Order ord);
std::vector<double> caputo_right_l1_all(const SampledFunction& f, Order ord);
std::vector<double> caputo_right_l1_all_serial(const SampledFunction& f,
                                               Order ord);

} // namespace fracvar::fracops

#endif
