// Timing harness for the OpenMP batch kernels against their serial
// reference loops. Checks bit-identical agreement while it is at it.

#include "fracvar/fracops.hpp"
#include "fracvar/varsolve.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace fracvar;

double time_ms(const std::function<void()>& fn, int reps) {
  using clock = std::chrono::steady_clock;
  fn(); // warm up
  const auto t0 = clock::now();
  for (int r = 0; r < reps; ++r)
    fn();
  const auto t1 = clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

bool identical(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      return false;
  return true;
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP, parallel kernels run serially\n");
#endif

  const fracops::Order ord(0.7);

  std::printf("\nL1 derivative profile (all nodes), f(x) = x^2 on [0,1]\n");
  std::printf("%8s %12s %12s %9s %6s\n", "m", "serial[ms]", "omp[ms]",
              "speedup", "equal");
  for (int m : {1000, 2000, 4000, 8000}) {
    fracops::Grid grid(0.0, 1.0, m);
    auto f = fracops::SampledFunction::sample(
        grid, [](double x) { return x * x; });
    std::vector<double> ref, par;
    const double ts =
        time_ms([&] { ref = fracops::caputo_left_l1_all_serial(f, ord); }, 3);
    const double tp =
        time_ms([&] { par = fracops::caputo_left_l1_all(f, ord); }, 3);
    std::printf("%8d %12.2f %12.2f %8.2fx %6s\n", m, ts, tp, ts / tp,
                identical(ref, par) ? "yes" : "NO");
  }

  std::printf("\nclosed-form solution sampling, C-RL at alpha = 0.7\n");
  std::printf("%8s %12s %12s %9s %6s\n", "m", "serial[ms]", "omp[ms]",
              "speedup", "equal");
  varsolve::SolutionSpec spec(varsolve::Method::CRL, ord);
  for (int m : {500, 1000, 2000}) {
    fracops::Grid grid(0.0, 1.0, m);
    fracops::SampledFunction ys(grid, std::vector<double>(m + 1, 0.0));
    fracops::SampledFunction yp = ys;
    const double ts =
        time_ms([&] { ys = varsolve::sample_solution_serial(spec, grid); }, 3);
    const double tp =
        time_ms([&] { yp = varsolve::sample_solution(spec, grid); }, 3);
    std::printf("%8d %12.2f %12.2f %8.2fx %6s\n", m, ts, tp, ts / tp,
                identical(ys.values, yp.values) ? "yes" : "NO");
  }
  return 0;
}
