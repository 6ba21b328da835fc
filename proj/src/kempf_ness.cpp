#include "charvar/kempf_ness.hpp"

#include <cmath>
#include <locale>
#include <ostream>

#include "charvar/retraction.hpp"

namespace charvar {

namespace {

constexpr int kMaxHalvings = 40;
constexpr double kRoundingFloor = 1e-14;

double functional_unchecked(const RepTuple& rho) {
  double p = 0.0;
  for (const auto& x : rho.mats) {
    const double f = x.frobenius();
    p += f * f;
  }
  return p;
}

MomentResidual residual_unchecked(const RepTuple& rho) {
  const std::size_t n = rho.dim();
  CMat m = CMat::zero(n);
  for (const auto& x : rho.mats) {
    const CMat xa = x.adjoint();
    m += x * xa - xa * x;
  }
  // Exact symmetrization; the commutators are Hermitian up to rounding.
  m = (m + m.adjoint()) * Complex(0.5);
  return {m, m.frobenius()};
}

RepTuple similarity(const RepTuple& rho, const CMat& m, double eps) {
  const CMat left = exp_herm(m, -eps);
  const CMat right = exp_herm(m, eps);
  RepTuple out{rho.group, {}};
  out.mats.reserve(rho.rank());
  for (const auto& x : rho.mats) out.mats.push_back(left * x * right);
  return out;
}

}  // namespace

double kn_functional(const RepTuple& rho, double tol) {
  require_valid(rho, tol);
  return functional_unchecked(rho);
}

MomentResidual moment_residual(const RepTuple& rho, double tol) {
  require_valid(rho, tol);
  return residual_unchecked(rho);
}

FlowResult kn_flow(const RepTuple& rho_in, std::size_t max_iter, double tol) {
  require_valid(rho_in, tol);
  FlowResult out{rho_in, {}};
  double p = functional_unchecked(out.rho);
  MomentResidual res = residual_unchecked(out.rho);
  out.trace.steps.push_back({0, p, res.norm, 0.0});

  for (std::size_t iter = 1; iter <= max_iter && res.norm > tol; ++iter) {
    double eps = 1.0 / (4.0 * res.norm + 1.0);
    bool moved = false;
    for (int h = 0; h <= kMaxHalvings; ++h, eps *= 0.5) {
      RepTuple next = similarity(out.rho, res.M, eps);
      // |X'|^2 - |X|^2 = Re tr((X' - X)(X' + X)*): accurate even when the
      // change is far below the resolution of p itself.
      double delta = 0.0;
      for (std::size_t i = 0; i < next.rank(); ++i)
        delta += ((next[i] - out.rho[i]) * (next[i] + out.rho[i]).adjoint()).trace().real();
      // Near the minimum the decrease (about 2 eps |M|^2) drops below the
      // rounding floor of p; there a drop in the residual decides instead.
      const double floor = kRoundingFloor * p;
      if (delta < -floor) {
        res = residual_unchecked(next);
      } else if (delta <= floor) {
        MomentResidual trial = residual_unchecked(next);
        if (!(trial.norm < res.norm)) continue;
        res = std::move(trial);
      } else {
        continue;
      }
      out.rho = std::move(next);
      p = std::min(p, p + delta);
      moved = true;
      break;
    }
    if (!moved) break;
    out.trace.steps.push_back({iter, p, res.norm, eps});
  }
  out.trace.converged = res.norm <= tol;
  return out;
}

void write_csv(std::ostream& os, const FlowTrace& trace) {
  const auto old_locale = os.imbue(std::locale::classic());
  const auto flags = os.flags();
  const auto precision = os.precision(17);
  os << "iter,p,residual,step\n";
  for (const auto& s : trace.steps) os << s.iter << ',' << s.p << ',' << s.residual << ',' << s.step << '\n';
  os.flags(flags);
  os.precision(precision);
  os.imbue(old_locale);
}

CompositeResult composite_retraction(const RepTuple& rho, double t, std::size_t max_iter, double tol) {
  CompositeResult out;
  out.before = invariant_record(rho, tol);
  FlowResult flow = kn_flow(rho, max_iter, tol);
  out.rho_t = retract_tuple(flow.rho, t, tol);
  out.after = invariant_record(out.rho_t, tol);
  out.flow = std::move(flow.trace);
  return out;
}

}  // namespace charvar
