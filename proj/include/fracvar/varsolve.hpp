#ifndef FRACVAR_VARSOLVE_HPP
#define FRACVAR_VARSOLVE_HPP

#include "fracvar/fracops.hpp"
#include "fracvar/specfun.hpp"

#include <span>
#include <vector>

namespace fracvar::varsolve {

enum class Method { Classical, CRL, CC };

const char* method_name(Method m);

// Which closed-form solution at which order. CRL requires alpha > 0.5
// (otherwise the normalizing series value diverges and no solution satisfies
// the terminal condition); Classical forces alpha = 1.
struct SolutionSpec {
  Method kind;
  fracops::Order ord;

  SolutionSpec(Method k, fracops::Order o);
};

// Value of the discretized cost functional together with the grid it was
// computed on.
struct FunctionalValue {
  double J;
  int m;
  Method method;
};

// Minimizer of the classical problem: y(x) = -6x^2 + 6x on [0, 1].
double solve_classical(double x);

/* Closed-form solution of the Caputo/Riemann-Liouville Euler-Lagrange
 * equation on [0, 1]:
 *
 *   y_RL(x) = 12/Gamma(1+a)^2 x^a 2F1(1,-a,1+a,x)
 *           -  6/Gamma(1+a)^2 x^a 2F1(1,1-a,1+a,x) / 2F1(1,1-a,1+a,1).
 *
 * Only valid for alpha > 0.5; below that the normalizer diverges and
 * no_solution_error is thrown.
 */
double solve_crl(fracops::Order ord, double x, specfun::SeriesControl ctl = {});

/* Closed-form solution of the all-Caputo Euler-Lagrange equation on [0, 1],
 * valid for every alpha in (0, 1]:
 *
 *   y_C(x) = 12/Gamma(1+a)^2 x^a 2F1(1,-a,1+a,x) - 6/Gamma(1+a)^2 x^a.
 */
double solve_cc(fracops::Order ord, double x, specfun::SeriesControl ctl = {});

// Sample the chosen solution on a grid over [0, 1]. The plain variant
// parallelizes over nodes with OpenMP; _serial is the reference loop.
fracops::SampledFunction sample_solution(const SolutionSpec& spec,
                                         const fracops::Grid& grid,
                                         specfun::SeriesControl ctl = {});
fracops::SampledFunction sample_solution_serial(const SolutionSpec& spec,
                                                const fracops::Grid& grid,
                                                specfun::SeriesControl ctl = {});

/* Discretized cost functional
 *
 *   J = h * sum_{i=1}^{m} ( (D^a y)(x_i)^2 - 24 y(x_i) )
 *
 * with the L1 derivative, i.e. a right-endpoint Riemann sum (the L1 value at
 * node 0 is the empty sum). Requires a grid over [0,1], m >= 2, and
 * |y(0)|, |y(1)| <= 1e-6.
 */
FunctionalValue evaluate_functional(const fracops::SampledFunction& y,
                                    fracops::Order ord, Method method);

/* Residual of the C-RL Euler-Lagrange equation at interior node i:
 *
 *   (right-RL D^a)(D^a y)(x_i) - 12,
 *
 * with the right RL derivative realized as the right Caputo L1 scheme plus
 * the analytic correction g(1)/Gamma(1-a) (1-x)^(-a), g = L1 left derivative
 * of y. The divergent last sample cancels exactly between the two pieces.
 * At alpha = 1 the correction vanishes.
 */
double el_residual_crl(const fracops::SampledFunction& y, fracops::Order ord,
                       int i);

// Residual of the all-Caputo equation at interior node i:
//   (right-Caputo D^a)(D^a y)(x_i) - 12.
double el_residual_cc(const fracops::SampledFunction& y, fracops::Order ord,
                      int i);

// Batch residuals at every interior node (entries 0 and m are NaN). These
// compute the derivative profile once, unlike the per-node operations.
std::vector<double> el_residual_crl_all(const fracops::SampledFunction& y,
                                        fracops::Order ord);
std::vector<double> el_residual_cc_all(const fracops::SampledFunction& y,
                                       fracops::Order ord);

// One subgradient-inequality sample for the convexity certificate.
struct ConvexSample {
  double y;
  double u;
  double y1;
  double u1;
};

// Verifies L(x,y+y1,u+u1) - L(x,y,u) >= L_y y1 + L_u u1 for the Lagrangian
// L = u^2 - 24 y at every sample (up to floating-point noise). The
// difference reduces to u1^2, so true is the expected outcome everywhere;
// convexity of L is what certifies the C-RL solution as the minimizer.
bool convexity_certificate(std::span<const ConvexSample> samples);

} // namespace fracvar::varsolve

#endif
