#include "charvar/retraction.hpp"

#include <cmath>

namespace charvar {

namespace {

void require_unit_interval(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::BadParameter, "retraction time must lie in [0, 1]");
}

}  // namespace

CMat phi(const CMat& g, double t, double tol) {
  require_unit_interval(t);
  if (!g.is_finite() || std::abs(g.det()) <= tol) throw Error(ErrorKind::Singular, "phi needs an invertible matrix");
  if (t == 0.0) return g;
  // g = u s v* gives phi_t(g) = u s^{1-t} v*.
  const SVDParts d = svd(g);
  std::vector<Complex> scaled(d.sigma.size());
  for (std::size_t i = 0; i < d.sigma.size(); ++i) scaled[i] = std::pow(d.sigma[i], 1.0 - t);
  CMat out = d.u * CMat::diag(scaled) * d.v.adjoint();
  if (t == 1.0) {
    // Newton steps k <- (k + k^{-*}) / 2 remove the cond(g)^2 rounding left by
    // the eigen route; the iteration converges quadratically to the polar factor.
    for (int i = 0; i < 3; ++i) {
      const CMat next = (out + out.inverse().adjoint()) * 0.5;
      const double change = distance(next, out);
      out = next;
      if (change <= 1e-15) break;
    }
  }
  return out;
}

RepTuple retract_tuple(const RepTuple& rho, double t, double tol) {
  require_unit_interval(t);
  require_valid(rho, tol);
  RepTuple out{rho.group, {}};
  if (t == 1.0) out.group.family = Family::SU;
  out.mats.reserve(rho.rank());
  for (const auto& g : rho.mats) out.mats.push_back(phi(g, t, tol));
  return out;
}

RetractionPath retraction_path(const RepTuple& rho, std::size_t steps, double tol) {
  if (steps == 0) throw Error(ErrorKind::BadParameter, "a retraction path needs at least one step");
  RetractionPath path;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = (i == steps) ? 1.0 : static_cast<double>(i) / static_cast<double>(steps);
    path.samples.push_back({t, retract_tuple(rho, t, tol)});
  }
  return path;
}

std::vector<CMat> abelian_retract(const std::vector<CMat>& diagonals, double t, double tol) {
  require_unit_interval(t);
  std::vector<CMat> out;
  out.reserve(diagonals.size());
  for (const auto& d : diagonals) {
    const std::size_t n = d.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && std::abs(d(i, j)) > tol) throw Error(ErrorKind::NotDiagonal, "abelian retraction needs diagonal matrices");
    if (std::abs(d.det() - 1.0) > tol) throw Error(ErrorKind::NotInGroup, "diagonal matrix does not have determinant 1");
    CMat r(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex z = d(i, i);
      const double mod = std::abs(z);
      if (mod == 0.0) throw Error(ErrorKind::Singular, "zero diagonal entry");
      r(i, i) = z * std::pow(mod, -t);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace charvar
