#ifndef FRACVAR_ERRORS_HPP
#define FRACVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracvar {

// Precondition and argument-domain violations. The CLI maps these to exit
// status 2.
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Evaluation at a pole of the gamma function (non-positive integer) or of a
// hypergeometric parameter.
class pole_error : public domain_error {
public:
  using domain_error::domain_error;
};

// Result magnitude exceeds the double range.
class overflow_error : public domain_error {
public:
  using domain_error::domain_error;
};

// A series whose value is infinite at the requested argument, e.g. 2F1 at
// x = 1 with c - a - b <= 0.
class divergence_error : public domain_error {
public:
  using domain_error::domain_error;
};

// The C-RL closed form does not satisfy the terminal condition for
// alpha <= 0.5; there is no solution to report.
class no_solution_error : public domain_error {
public:
  using domain_error::domain_error;
};

// Series truncation cap reached before the tolerance was met.
class convergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// File-system failures in the CLI layer. Maps to exit status 1.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace fracvar

#endif
