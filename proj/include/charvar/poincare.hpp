#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace charvar {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial, coefficient i multiplies t^i. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
struct IntPolynomial {
  std::vector<BigInt> coefficients;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> c);
  IntPolynomial(std::initializer_list<long long> c);

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }  // -1 for zero
  BigInt coefficient(std::size_t i) const { return i < coefficients.size() ? coefficients[i] : BigInt(0); }
  std::string str() const;   // "1 + t^6"
  std::string json() const;  // "[1,0,0,0,0,0,1]"

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

/// Baird's Poincare polynomial of the SL(2, C) character variety of rank r:
///   1 + t - t(1+t^3)^r/(1-t^4) + (t^3/2)((1+t)^r/(1-t^2) - (1-t)^r/(1+t^2)),
/// expanded exactly. Throws BadParameter for r < 1, NonPolynomial if the
/// expression is not a polynomial with nonnegative integer coefficients and
/// constant term 1.
IntPolynomial baird_poly(int r);

struct SurfacePolys {
  IntPolynomial fixed_determinant;  // 1 + t^2 + 4t^3 + t^4 + t^6
  IntPolynomial character_variety;  // 1 + t^2 + 4t^3 + 2t^4 + 34t^5 + 2t^6
  bool differ = true;
};

SurfacePolys surface_counterexample_polys();

}  // namespace charvar
