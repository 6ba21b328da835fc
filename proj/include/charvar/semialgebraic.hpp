#pragma once

#include <array>
#include <string>
#include <vector>

#include "charvar/invariants.hpp"

namespace charvar {

/// How a margin value must compare with zero for its inequality to hold.
enum class Relation { GreaterEq, LessEq, Greater, Less };

struct Margin {
  std::string name;
  double value;
  Relation relation;

  /// Non-strict relations get a tol-wide allowance; strict ones must clear
  /// zero by more than tol.
  bool satisfied(double tol) const;
};

struct RegionVerdict {
  bool inside = true;
  bool on_boundary = false;
  std::vector<Margin> margins;

  const Margin* find(const std::string& name) const;
};

/// Builds a verdict: inside iff every margin is satisfied, on_boundary iff
/// some |margin| <= tol.
RegionVerdict make_verdict(std::vector<Margin> margins, double tol);

// --- SU(2) rank 2 ----------------------------------------------------------

/// 1 - a1^2 - a2^2 - a3^2 + 2 a1 a2 a3.
double sigma(const SU2Rank2Coords& a);

/// a in [-1,1]^3 and sigma in [0,1].
RegionVerdict in_su2_rank2_image(const SU2Rank2Coords& a, double tol = kDefaultTol);

/// theta_i = arccos(a_i) / pi. Throws OutOfRange if some |a_i| > 1 + tol.
std::array<double, 3> theta(const SU2Rank2Coords& a, double tol = kDefaultTol);

/// theta_i + theta_j - theta_k >= 0 (three ways) and sum <= 2.
RegionVerdict tetrahedron_check(const std::array<double, 3>& th, double tol = kDefaultTol);

// --- SU(2) rank 3 ----------------------------------------------------------

/// The three pairwise sigma conditions plus the condition on (a12, a13, a23),
/// together with the coordinate ranges.
RegionVerdict in_su2_rank3_image(const SU2Rank3Coords& c, double tol = kDefaultTol);

// --- SU(3) -----------------------------------------------------------------

/// |tau|^4 - 8 Re(tau^3) + 18 |tau|^2 - 27: minus the discriminant of the
/// characteristic polynomial of an SU(3) matrix with trace tau.
double su3_alcove_margin(Complex tau);

RegionVerdict su3_alcove_check(Complex tau, double tol = kDefaultTol);

/// Q^2 + 12 P Q + 18 Q - 4 P^3 - 27.
double su3_delta(double P, double Q);

/// Each (u_k, u_{-k}) in the alcove image, Delta <= 0 and P^2 - 4Q < 0.
/// Throws ComplexInput unless u and P, Q are realified.
RegionVerdict in_S_plus(const UCoords& u, const PQRecord& pq, double tol = kDefaultTol);

enum class BClass { Plus, Zero, Minus };

std::string to_string(BClass c);

/// Sign of u5 = Im tr(X1 X2 X1^{-1} X2^{-1}), with a tol-wide zero band.
BClass classify_B(const RepTuple& rho, double tol = kDefaultTol);

/// After diagonalizing X1: distinct eigenvalues and
/// x12 x23 x31 - x13 x21 x32 != 0 for the conjugated X2.
RegionVerdict product_condition(const RepTuple& rho, double tol = kDefaultTol);

/// Point of the fundamental alcove: descending, summing to zero, spread <= 1,
/// with eigenvalues exp(2 pi i lambda_j).
struct AlcovePoint {
  std::vector<double> lambda;
};

AlcovePoint alcove_lambda(const CMat& k, double tol = kDefaultTol);

}  // namespace charvar
