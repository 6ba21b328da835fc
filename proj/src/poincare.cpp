#include "charvar/poincare.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "charvar/error.hpp"

namespace charvar {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly add(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

RPoly scale(RPoly a, const Rational& s) {
  for (auto& c : a) c *= s;
  trim(a);
  return a;
}

RPoly mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

RPoly power(const RPoly& a, int e) {
  RPoly out{1};
  for (int i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

RPoly monomial(std::size_t k) {
  RPoly m(k + 1);
  m[k] = 1;
  return m;
}

// Long division; returns quotient and leaves the remainder in `num`.
RPoly divide(RPoly& num, const RPoly& den) {
  trim(num);
  if (num.size() < den.size()) return {};
  RPoly q(num.size() - den.size() + 1);
  while (!num.empty() && num.size() >= den.size()) {
    const std::size_t shift = num.size() - den.size();
    const Rational c = num.back() / den.back();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  trim(q);
  return q;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> c) : coefficients(std::move(c)) {
  while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> c) {
  for (long long v : c) coefficients.emplace_back(v);
  while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

std::string IntPolynomial::str() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const BigInt& c = coefficients[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::string IntPolynomial::json() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coefficients.size(); ++i) os << (i ? "," : "") << coefficients[i];
  os << ']';
  return os.str();
}

IntPolynomial baird_poly(int r) {
  if (r < 1) throw Error(ErrorKind::BadParameter, "rank must be at least 1");
  // Multiply through by D = 2(1-t^4)(1-t^2)(1+t^2). Since 1-t^4 = (1-t^2)(1+t^2):
  //   D (1 + t)                       = 2(1+t)(1-t^4)(1-t^4)
  //   D t (1+t^3)^r / (1-t^4)         = 2 t (1+t^3)^r (1-t^4)
  //   D (t^3/2)(1+t)^r / (1-t^2)      = t^3 (1+t)^r (1-t^4)(1+t^2)
  //   D (t^3/2)(1-t)^r / (1+t^2)      = t^3 (1-t)^r (1-t^4)(1-t^2)
  const RPoly one_m_t4{1, 0, 0, 0, -1};
  const RPoly one_m_t2{1, 0, -1};
  const RPoly one_p_t2{1, 0, 1};
  const RPoly one_p_t{1, 1};
  const RPoly one_m_t{1, -1};
  const RPoly one_p_t3{1, 0, 0, 1};

  RPoly num = scale(mul(one_p_t, mul(one_m_t4, one_m_t4)), 2);
  num = add(num, scale(mul(monomial(1), mul(power(one_p_t3, r), one_m_t4)), -2));
  num = add(num, mul(monomial(3), mul(power(one_p_t, r), mul(one_m_t4, one_p_t2))));
  num = add(num, scale(mul(monomial(3), mul(power(one_m_t, r), mul(one_m_t4, one_m_t2))), -1));

  const RPoly den = scale(mul(one_m_t4, mul(one_m_t2, one_p_t2)), 2);
  RPoly q = divide(num, den);
  if (!num.empty()) throw Error(ErrorKind::NonPolynomial, "division leaves a nonzero remainder");

  std::vector<BigInt> coeffs;
  for (const auto& c : q) {
    if (denominator(c) != 1 || c < 0) throw Error(ErrorKind::NonPolynomial, "coefficient is not a nonnegative integer");
    coeffs.push_back(numerator(c));
  }
  IntPolynomial out(std::move(coeffs));
  if (out.coefficient(0) != 1) throw Error(ErrorKind::NonPolynomial, "constant term is not 1");
  return out;
}

SurfacePolys surface_counterexample_polys() {
  SurfacePolys s;
  s.fixed_determinant = IntPolynomial{1, 0, 1, 4, 1, 0, 1};
  s.character_variety = IntPolynomial{1, 0, 1, 4, 2, 34, 2};
  s.differ = s.fixed_determinant != s.character_variety;
  return s;
}

}  // namespace charvar
