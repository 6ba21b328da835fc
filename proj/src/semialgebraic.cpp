#include "charvar/semialgebraic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace charvar {

bool Margin::satisfied(double tol) const {
  switch (relation) {
    case Relation::GreaterEq: return value >= -tol;
    case Relation::LessEq: return value <= tol;
    case Relation::Greater: return value > tol;
    case Relation::Less: return value < -tol;
  }
  return false;
}

const Margin* RegionVerdict::find(const std::string& name) const {
  for (const auto& m : margins)
    if (m.name == name) return &m;
  return nullptr;
}

RegionVerdict make_verdict(std::vector<Margin> margins, double tol) {
  RegionVerdict v;
  v.margins = std::move(margins);
  for (const auto& m : v.margins) {
    if (!m.satisfied(tol)) v.inside = false;
    if (std::abs(m.value) <= tol) v.on_boundary = true;
  }
  return v;
}

double sigma(const SU2Rank2Coords& a) { return cayley(a.a1, a.a2, a.a3); }

RegionVerdict in_su2_rank2_image(const SU2Rank2Coords& a, double tol) {
  const double s = sigma(a);
  return make_verdict({{"a1_range", 1.0 - std::abs(a.a1), Relation::GreaterEq},
                       {"a2_range", 1.0 - std::abs(a.a2), Relation::GreaterEq},
                       {"a3_range", 1.0 - std::abs(a.a3), Relation::GreaterEq},
                       {"sigma_lower", s, Relation::GreaterEq},
                       {"sigma_upper", 1.0 - s, Relation::GreaterEq}},
                      tol);
}

std::array<double, 3> theta(const SU2Rank2Coords& a, double tol) {
  std::array<double, 3> out{};
  const std::array<double, 3> in{a.a1, a.a2, a.a3};
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(in[i]) > 1.0 + tol) throw Error(ErrorKind::OutOfRange, "theta needs coordinates in [-1, 1]");
    out[i] = std::acos(std::clamp(in[i], -1.0, 1.0)) / std::numbers::pi;
  }
  return out;
}

RegionVerdict tetrahedron_check(const std::array<double, 3>& th, double tol) {
  return make_verdict({{"face_12_3", th[0] + th[1] - th[2], Relation::GreaterEq},
                       {"face_13_2", th[0] + th[2] - th[1], Relation::GreaterEq},
                       {"face_23_1", th[1] + th[2] - th[0], Relation::GreaterEq},
                       {"face_sum", 2.0 - (th[0] + th[1] + th[2]), Relation::GreaterEq}},
                      tol);
}

RegionVerdict in_su2_rank3_image(const SU2Rank3Coords& c, double tol) {
  std::vector<Margin> m;
  const std::array<const char*, 6> names{"a1", "a2", "a3", "a12", "a13", "a23"};
  const auto values = c.as_array();
  for (std::size_t i = 0; i < 6; ++i) m.push_back({std::string(names[i]) + "_range", 1.0 - std::abs(values[i]), Relation::GreaterEq});
  auto interval = [&](const std::string& name, double q) {
    m.push_back({name + "_lower", q, Relation::GreaterEq});
    m.push_back({name + "_upper", 1.0 - q, Relation::GreaterEq});
  };
  interval("pair12", cayley(c.a1, c.a2, c.a12));
  interval("pair13", cayley(c.a1, c.a3, c.a13));
  interval("pair23", cayley(c.a2, c.a3, c.a23));
  interval("mixed", cayley(c.a12, c.a13, c.a23));
  return make_verdict(std::move(m), tol);
}

double su3_alcove_margin(Complex tau) {
  const double m2 = std::norm(tau);
  return m2 * m2 - 8.0 * (tau * tau * tau).real() + 18.0 * m2 - 27.0;
}

RegionVerdict su3_alcove_check(Complex tau, double tol) {
  return make_verdict({{"discriminant", su3_alcove_margin(tau), Relation::LessEq}}, tol);
}

double su3_delta(double P, double Q) { return Q * Q + 12.0 * P * Q + 18.0 * Q - 4.0 * P * P * P - 27.0; }

RegionVerdict in_S_plus(const UCoords& u, const PQRecord& pq, double tol) {
  if (!u.is_real() || pq.P.imag() != 0.0 || pq.Q.imag() != 0.0)
    throw Error(ErrorKind::ComplexInput, "S+ membership needs realified coordinates");
  std::vector<Margin> m;
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex tau(u.re[k].real(), u.im[k].real());
    m.push_back({"alcove_" + std::to_string(k + 1), su3_alcove_margin(tau), Relation::LessEq});
  }
  const double P = pq.P.real();
  const double Q = pq.Q.real();
  m.push_back({"Delta", su3_delta(P, Q), Relation::LessEq});
  m.push_back({"branch", P * P - 4.0 * Q, Relation::Less});
  return make_verdict(std::move(m), tol);
}

std::string to_string(BClass c) {
  switch (c) {
    case BClass::Plus: return "B_plus";
    case BClass::Zero: return "B_zero";
    case BClass::Minus: return "B_minus";
  }
  return "?";
}

BClass classify_B(const RepTuple& rho, double tol) {
  require_shape(rho, Family::SU, 3, 2, tol);
  const UCoords u = realify(u_coords(su3_traces(rho, tol)));
  const double u5 = u.u5.real();
  if (u5 > tol) return BClass::Plus;
  if (u5 < -tol) return BClass::Minus;
  return BClass::Zero;
}

RegionVerdict product_condition(const RepTuple& rho, double tol) {
  require_shape(rho, Family::SU, 3, 2, tol);
  const NormalEig eig = normal_eig(rho[0], tol);
  const CMat x = eig.vectors.adjoint() * rho[1] * eig.vectors;
  const auto& l = eig.values;
  const Complex cycle = x(0, 1) * x(1, 2) * x(2, 0) - x(0, 2) * x(1, 0) * x(2, 1);
  return make_verdict({{"gap_12", std::abs(l[0] - l[1]), Relation::Greater},
                       {"gap_13", std::abs(l[0] - l[2]), Relation::Greater},
                       {"gap_23", std::abs(l[1] - l[2]), Relation::Greater},
                       {"cycle_difference", std::abs(cycle), Relation::Greater}},
                      tol);
}

AlcovePoint alcove_lambda(const CMat& k, double tol) {
  const std::size_t n = k.dim();
  if (!validate(k, {Family::SU, n}, tol)) throw Error(ErrorKind::NotInGroup, "alcove_lambda needs a special unitary matrix");
  const NormalEig eig = normal_eig(k, tol);
  std::vector<double> angles(n);
  for (std::size_t i = 0; i < n; ++i) {
    double a = std::arg(eig.values[i]) / (2.0 * std::numbers::pi);
    if (a < 0.0) a += 1.0;
    if (a >= 1.0) a -= 1.0;
    angles[i] = a;
  }
  std::sort(angles.begin(), angles.end());
  double sum = 0.0;
  for (double a : angles) sum += a;
  // det = 1 makes the sum an integer m in [0, n); lowering the m largest
  // lifts by one gives sum zero and spread at most one.
  const auto m = static_cast<std::size_t>(std::clamp(std::lround(sum), 0L, static_cast<long>(n)));
  for (std::size_t i = 0; i < m; ++i) angles[n - 1 - i] -= 1.0;
  std::sort(angles.begin(), angles.end(), std::greater<>());
  return {angles};
}

}  // namespace charvar
