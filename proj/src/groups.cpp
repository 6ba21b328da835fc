#include "charvar/groups.hpp"

#include <cmath>

namespace charvar {

std::string to_string(const GroupDescriptor& d) {
  return std::string(d.family == Family::SU ? "SU(" : "SL(") + std::to_string(d.n) + ")";
}

Family parse_family(const std::string& s) {
  if (s == "SU") return Family::SU;
  if (s == "SL") return Family::SL;
  throw Error(ErrorKind::Parse, "unknown group family '" + s + "'");
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

bool validate(const CMat& g, const GroupDescriptor& d, double tol) {
  if (g.dim() != d.n || !g.is_finite()) return false;
  if (std::abs(g.det() - 1.0) > tol) return false;
  if (d.family == Family::SU && distance(g * g.adjoint(), CMat::identity(d.n)) > tol) return false;
  return true;
}

bool validate(const RepTuple& rho, double tol) {
  for (const auto& m : rho.mats)
    if (!validate(m, rho.group, tol)) return false;
  return true;
}

void require_valid(const RepTuple& rho, double tol) {
  for (std::size_t i = 0; i < rho.rank(); ++i) {
    if (rho.mats[i].dim() != rho.group.n)
      throw Error(ErrorKind::DimensionMismatch, "component " + std::to_string(i + 1) + " has the wrong dimension");
    if (!validate(rho.mats[i], rho.group, tol))
      throw Error(ErrorKind::NotInGroup, "component " + std::to_string(i + 1) + " is not in " + to_string(rho.group));
  }
}

void require_shape(const RepTuple& rho, Family family, std::size_t n, std::size_t r, double tol) {
  if (rho.group.n != n || (r != 0 && rho.rank() != r))
    throw Error(ErrorKind::NotInGroup, "expected a rank " + std::to_string(r) + " tuple in dimension " + std::to_string(n) +
                                           ", got " + to_string(rho.group) + " rank " + std::to_string(rho.rank()));
  if (family == Family::SU && rho.group.family != Family::SU) {
    // SL-labelled tuples are accepted when they happen to be unitary.
    RepTuple relabelled{{Family::SU, n}, rho.mats};
    require_valid(relabelled, tol);
    return;
  }
  require_valid(rho, tol);
}

Quaternion to_quaternion(const CMat& g, double tol) {
  if (!validate(g, {Family::SU, 2}, tol)) throw Error(ErrorKind::NotInGroup, "not an SU(2) matrix");
  // Average the redundant entries so the result is exactly unit up to rounding.
  const Complex alpha = 0.5 * (g(0, 0) + std::conj(g(1, 1)));
  const Complex beta = 0.5 * (g(0, 1) - std::conj(g(1, 0)));
  return {alpha.real(), alpha.imag(), beta.real(), beta.imag()};
}

CMat from_quaternion(const Quaternion& q, double tol) {
  if (std::abs(q.norm2() - 1.0) > tol) throw Error(ErrorKind::NotInGroup, "quaternion is not a unit quaternion");
  const Complex alpha(q.a, q.b);
  const Complex beta(q.c, q.d);
  return CMat{{alpha, beta}, {-std::conj(beta), std::conj(alpha)}};
}

RepTuple conjugate_tuple(const CMat& g, const RepTuple& rho) {
  if (g.dim() != rho.group.n) throw Error(ErrorKind::DimensionMismatch, "conjugator dimension differs from tuple dimension");
  const CMat g_inv = g.inverse();
  RepTuple out{rho.group, {}};
  out.mats.reserve(rho.rank());
  for (const auto& m : rho.mats) out.mats.push_back(conjugate_by(g, m, g_inv));
  return out;
}

RepTuple sample_tuple(const GroupDescriptor& d, std::size_t r, Rng& rng, double spread) {
  RepTuple out{d, {}};
  out.mats.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    CMat k = haar_su(d.n, rng);
    if (d.family == Family::SL) k = k * exp_herm(random_traceless_hermitian(d.n, rng), spread);
    out.mats.push_back(std::move(k));
  }
  return out;
}

}  // namespace charvar
