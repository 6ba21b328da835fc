#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "charvar/cmat.hpp"
#include "charvar/error.hpp"
#include "charvar/linalg.hpp"

namespace charvar {

enum class Family { SU, SL };

struct GroupDescriptor {
  Family family = Family::SU;
  std::size_t n = 2;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

std::string to_string(const GroupDescriptor& d);
Family parse_family(const std::string& s);  // "SU" / "SL"

/// A point of Hom(F_r, G): the images of the r free generators.
struct RepTuple {
  GroupDescriptor group;
  std::vector<CMat> mats;

  std::size_t rank() const noexcept { return mats.size(); }
  std::size_t dim() const noexcept { return group.n; }
  const CMat& operator[](std::size_t i) const { return mats[i]; }
};

/// Unit quaternion a + b i + c j + d k.
struct Quaternion {
  double a = 1.0, b = 0.0, c = 0.0, d = 0.0;

  double norm2() const { return a * a + b * b + c * c + d * d; }
  Quaternion conj() const { return {a, -b, -c, -d}; }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
};

/// Conjugate transpose.
inline CMat cartan(const CMat& g) { return g.adjoint(); }

bool validate(const CMat& g, const GroupDescriptor& d, double tol = kDefaultTol);
bool validate(const RepTuple& rho, double tol = kDefaultTol);

/// Throws NotInGroup / DimensionMismatch unless every component is valid.
void require_valid(const RepTuple& rho, double tol = kDefaultTol);

/// Throws NotInGroup unless rho is a valid tuple over `family` of dimension
/// n and rank r (r = 0 skips the rank check).
void require_shape(const RepTuple& rho, Family family, std::size_t n, std::size_t r, double tol = kDefaultTol);

// g = [[alpha, beta], [-conj(beta), conj(alpha)]], alpha = a + ib, beta = c + id.
Quaternion to_quaternion(const CMat& g, double tol = kDefaultTol);
CMat from_quaternion(const Quaternion& q, double tol = kDefaultTol);

/// g rho g^{-1} componentwise.
RepTuple conjugate_tuple(const CMat& g, const RepTuple& rho);

/// SU components are Haar. SL components are k exp(spread H) with k Haar and H
/// a random traceless Hermitian matrix.
RepTuple sample_tuple(const GroupDescriptor& d, std::size_t r, Rng& rng, double spread = 1.0);

}  // namespace charvar
