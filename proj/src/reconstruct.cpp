#include "charvar/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "charvar/semialgebraic.hpp"

namespace charvar {

namespace {

constexpr double kRoundTripTol = 1e-9;

CMat su2_matrix(double a, double b, double c, double d) {
  const Complex alpha(a, b);
  const Complex beta(c, d);
  return CMat{{alpha, beta}, {-std::conj(beta), std::conj(alpha)}};
}

double sqrt0(double x) { return std::sqrt(std::max(x, 0.0)); }

double max_error(const SU2Rank3Coords& x, const SU2Rank3Coords& y) {
  const auto a = x.as_array();
  const auto b = y.as_array();
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

}  // namespace

LiftResult su2_rank2_lift(const SU2Rank2Coords& a, double tol) {
  if (!in_su2_rank2_image(a, tol).inside) throw Error(ErrorKind::NotInImage, "coordinates violate the sigma conditions");
  const double b1 = sqrt0(1.0 - a.a1 * a.a1);
  double b2 = 0.0;
  double c2 = 0.0;
  if (b1 > tol) {
    b2 = (a.a3 - a.a1 * a.a2) / b1;
    c2 = sqrt0(1.0 - a.a2 * a.a2 - b2 * b2);
  } else {
    b2 = sqrt0(1.0 - a.a2 * a.a2);
  }
  LiftResult out;
  out.tuples.push_back({{Family::SU, 2}, {su2_matrix(a.a1, b1, 0.0, 0.0), su2_matrix(a.a2, b2, c2, 0.0)}});
  return out;
}

namespace {

using Triple = std::array<CMat, 3>;

// Index orderings tried for the generic construction; the leading pair must
// be irreducible.
constexpr std::array<std::array<std::size_t, 3>, 6> kOrderings{{
    {0, 1, 2}, {1, 0, 2}, {2, 0, 1}, {0, 2, 1}, {1, 2, 0}, {2, 1, 0}}};

SU2Rank3Coords permuted(const SU2Rank3Coords& c, const std::array<std::size_t, 3>& p) {
  return {c.single(p[0] + 1),       c.single(p[1] + 1),       c.single(p[2] + 1),
          c.pair(p[0] + 1, p[1] + 1), c.pair(p[0] + 1, p[2] + 1), c.pair(p[1] + 1, p[2] + 1)};
}

// Generic construction with X1 diagonal and X2 in the (i, k) plane. Returns
// nothing when the leading pair is reducible.
std::optional<Triple> generic_triple(const SU2Rank3Coords& c, int sign, bool collapse_sheets, double tol) {
  const RSTInvariants inv = rst(c, tol);
  const auto& r = inv.r;
  const double b1 = sqrt0(r[0][0]);
  if (b1 <= tol || inv.s12 <= tol) return std::nullopt;
  const double b2 = r[0][1] / b1;
  const double b3 = r[0][2] / b1;
  const double d2 = std::sqrt(inv.s12) / b1;
  const double d3 = (r[1][2] * b1 * b1 - r[0][1] * r[0][2]) / (d2 * b1 * b1);
  const double c3 = collapse_sheets ? 0.0 : sign * sqrt0(r[2][2] - b3 * b3 - d3 * d3);
  return Triple{su2_matrix(c.a1, b1, 0.0, 0.0), su2_matrix(c.a2, b2, 0.0, d2), su2_matrix(c.a3, b3, c3, d3)};
}

// All imaginary parts collinear: X_j = a_j + e_j |Im X_j| i.
Triple diagonal_triple(const SU2Rank3Coords& c, double tol) {
  const RSTInvariants inv = rst(c, tol);
  std::size_t lead = 0;
  for (std::size_t j = 1; j < 3; ++j)
    if (inv.r[j][j] > inv.r[lead][lead]) lead = j;
  Triple out;
  for (std::size_t j = 0; j < 3; ++j) {
    const double sgn = (j == lead || inv.r[lead][j] >= 0.0) ? 1.0 : -1.0;
    out[j] = su2_matrix(c.single(j + 1), sgn * sqrt0(inv.r[j][j]), 0.0, 0.0);
  }
  return out;
}

}  // namespace

LiftResult su2_rank3_lift(const SU2Rank3Coords& c, std::optional<int> sign, double tol) {
  if (!in_su2_rank3_image(c, tol).inside) throw Error(ErrorKind::NotInImage, "coordinates violate the rank-3 image conditions");
  if (sign && *sign != 1 && *sign != -1) throw Error(ErrorKind::BadParameter, "sheet sign must be +1 or -1");

  LiftResult out;
  out.t123 = rst(c, tol).t123;
  out.unique = std::abs(out.t123) <= tol;
  std::vector<int> wanted;
  if (sign) wanted = {*sign};
  else if (out.unique) wanted = {1};
  else wanted = {1, -1};

  auto accept = [&](const Triple& t) {
    RepTuple rho{{Family::SU, 2}, {t[0], t[1], t[2]}};
    if (!validate(rho, 1e-8)) return std::optional<RepTuple>{};
    if (max_error(su2_rank3_coords(rho, 1e-8), c) > kRoundTripTol) return std::optional<RepTuple>{};
    return std::optional<RepTuple>{std::move(rho)};
  };

  for (const int s : wanted) {
    std::optional<RepTuple> found;
    for (const auto& p : kOrderings) {
      auto local = generic_triple(permuted(c, p), s, out.unique, tol);
      if (!local) continue;
      Triple t;
      for (std::size_t j = 0; j < 3; ++j) t[p[j]] = (*local)[j];
      if ((found = accept(t))) break;
    }
    if (!found) found = accept(diagonal_triple(c, tol));
    if (!found) throw Error(ErrorKind::DegenerateUnhandled, "no construction reproduces the rank-3 coordinates");
    out.tuples.push_back(std::move(*found));
    out.signs.push_back(s);
  }
  return out;
}

std::optional<CMat> unitary_conjugacy(const RepTuple& rho1, const RepTuple& rho2, double tol) {
  if (rho1.group.n != rho2.group.n || rho1.rank() != rho2.rank())
    throw Error(ErrorKind::DimensionMismatch, "conjugacy needs tuples of the same shape");
  const std::size_t n = rho1.dim();
  const std::size_t r = rho1.rank();
  require_shape(rho1, Family::SU, n, r, tol);
  require_shape(rho2, Family::SU, n, r, tol);
  if (r == 0) return CMat::identity(n);

  const double accept_tol = 10.0 * tol;
  const NormalEig e1 = normal_eig(rho1[0], tol);
  const NormalEig e2 = normal_eig(rho2[0], tol);
  for (const auto* e : {&e1, &e2})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(e->values[i] - e->values[j]) <= tol)
          throw Error(ErrorKind::DegenerateSpectrum, "first component has a repeated eigenvalue");

  std::vector<CMat> a_rot(r);
  for (std::size_t i = 0; i < r; ++i) a_rot[i] = e1.vectors.adjoint() * rho1[i] * e1.vectors;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = std::abs(e2.values[perm[i]] - e1.values[i]) <= accept_tol;
    if (!match) continue;

    CMat v(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t row = 0; row < n; ++row) v(row, i) = e2.vectors(row, perm[i]);
    std::vector<CMat> b_rot(r);
    for (std::size_t i = 0; i < r; ++i) b_rot[i] = v.adjoint() * rho2[i] * v;

    // Residual torus freedom: theta_p a_pq conj(theta_q) = b_pq. Grow a
    // spanning tree from index 0 along the largest available entries.
    std::vector<Complex> theta(n, 1.0);
    std::vector<bool> known(n, false);
    known[0] = true;
    for (std::size_t added = 1; added < n; ++added) {
      double best = tol;
      std::size_t bp = 0, bq = 0, bi = 0;
      for (std::size_t i = 1; i < r; ++i)
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q)
            if (known[p] && !known[q] && std::abs(a_rot[i](p, q)) > best) {
              best = std::abs(a_rot[i](p, q));
              bp = p;
              bq = q;
              bi = i;
            }
      if (best <= tol) {
        // Disconnected from the known indices: its phase is free.
        known[static_cast<std::size_t>(std::find(known.begin(), known.end(), false) - known.begin())] = true;
        continue;
      }
      const Complex ratio = b_rot[bi](bp, bq) / a_rot[bi](bp, bq);
      const double mod = std::abs(ratio);
      theta[bq] = mod > 0.0 ? theta[bp] * std::conj(ratio) / mod : theta[bp];
      known[bq] = true;
    }

    CMat k = v * CMat::diag(theta) * e1.vectors.adjoint();
    k *= 1.0 / std::polar(1.0, std::arg(k.det()) / static_cast<double>(n));
    double residual = 0.0;
    for (std::size_t i = 0; i < r; ++i) residual = std::max(residual, distance(k * rho1[i] * k.adjoint(), rho2[i]));
    if (residual <= accept_tol) return k;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace charvar
