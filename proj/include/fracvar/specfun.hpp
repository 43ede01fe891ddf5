#ifndef FRACVAR_SPECFUN_HPP
#define FRACVAR_SPECFUN_HPP

#include "fracvar/errors.hpp"

namespace fracvar::specfun {

// Truncation control for the infinite series in this module. tol is the
// relative magnitude of the first discarded term; max_terms caps the sum.
struct SeriesControl {
  double tol = 1e-14;
  int max_terms = 100000;

  void validate() const {
    if (!(tol > 0.0 && tol < 1.0))
      throw domain_error("SeriesControl: tol must be in (0,1)");
    if (max_terms < 1)
      throw domain_error("SeriesControl: max_terms must be >= 1");
  }
};

/* Gamma function for real argument.
 *
 * Lanczos approximation (g = 7, 9 coefficients) for x >= 0.5, reflection
 * formula Gamma(x) = pi / (sin(pi x) Gamma(1-x)) for x < 0.5, so ratios such
 * as Gamma(n-a)/Gamma(-a) with non-integer a are computable.
 *
 * Throws pole_error at x in {0, -1, -2, ...} and overflow_error when the
 * result leaves the double range (|x| >~ 171.7).
 */
double gamma(double x);

/* Two-parameter Mittag-Leffler function
 *
 *   E_{alpha,beta}(z) = sum_{k>=0} z^k / Gamma(alpha k + beta)
 *
 * summed directly, truncated when the next term's relative magnitude drops
 * below ctl.tol. Requires alpha > 0, beta > 0, z finite (real arguments
 * only). Throws convergence_error if max_terms is exhausted first.
 */
double mittag_leffler(double alpha, double beta, double z,
                      SeriesControl ctl = {});

/* Gauss hypergeometric function 2F1(a, b; c; x) on x in [0, 1].
 *
 * Summed by the term recurrence
 *
 *   t_{n+1} = t_n * (a+n)(b+n) / ((c+n)(n+1)) * x,   t_0 = 1,
 *
 * which avoids gamma evaluations at negative arguments. When a or b is a
 * non-positive integer the series terminates and the exact polynomial sum is
 * returned regardless of ctl. At x = 1 the series converges only for
 * c - a - b > 0 (Gauss condition); there the limit is evaluated through the
 * Gauss summation value Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)), since
 * the partial sums approach it like N^-(c-a-b), far too slowly for any
 * practical term cap.
 *
 * Throws pole_error when c is a non-positive integer, divergence_error at
 * x = 1 with c - a - b <= 0, domain_error for x outside [0,1], and
 * convergence_error if max_terms is exhausted.
 */
double hyp2f1(double a, double b, double c, double x, SeriesControl ctl = {});

} // namespace fracvar::specfun

#endif
