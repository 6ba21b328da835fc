#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "charvar/invariants.hpp"

namespace charvar {

/// sum_i Re tr(X_i X_i*): squared norm of the tuple. Equals r n on SU tuples.
double kn_functional(const RepTuple& rho, double tol = kDefaultTol);

struct MomentResidual {
  CMat M;  // sum_i (X_i X_i* - X_i* X_i), Hermitian and traceless
  double norm = 0.0;
};

/// Criticality residual. The derivative of kn_functional along
/// rho -> e^{hH} rho e^{-hH} at h = 0 is 2 Re tr(H M).
MomentResidual moment_residual(const RepTuple& rho, double tol = kDefaultTol);

struct FlowTrace {
  struct Step {
    std::size_t iter;
    double p;
    double residual;
    double step;
  };
  std::vector<Step> steps;
  bool converged = false;
};

struct FlowResult {
  RepTuple rho;
  FlowTrace trace;
};

/// Backtracking descent rho <- e^{-eps M} rho e^{eps M} until the residual
/// norm is <= tol. Not converging within max_iter is reported through
/// trace.converged; the best iterate is returned.
FlowResult kn_flow(const RepTuple& rho, std::size_t max_iter = 100000, double tol = kDefaultTol);

void write_csv(std::ostream& os, const FlowTrace& trace);

struct CompositeResult {
  InvariantRecord before;
  InvariantRecord after;
  RepTuple rho_t;
  FlowTrace flow;
};

/// Flow to the critical set, then retract for time t.
CompositeResult composite_retraction(const RepTuple& rho, double t, std::size_t max_iter = 100000,
                                     double tol = kDefaultTol);

}  // namespace charvar
