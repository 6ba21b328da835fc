#pragma once

#include <optional>
#include <vector>

#include "charvar/invariants.hpp"

namespace charvar {

struct LiftResult {
  std::vector<RepTuple> tuples;  // one or two SU(2) tuples
  std::vector<int> signs;        // sheet (+1 / -1) of each tuple; rank 3 only
  bool unique = true;
  double t123 = 0.0;  // rank 3 only
};

/// Explicit pair with X1 = a1 + b1 i diagonal and X2 = a2 + b2 i + c2 j.
/// Throws NotInImage if the coordinates fail the sigma conditions.
LiftResult su2_rank2_lift(const SU2Rank2Coords& a, double tol = kDefaultTol);

/// Explicit triple realizing rank-3 coordinates. `sign` selects the sheet
/// (sign of the j-component of X3); without it both sheets are returned when
/// they differ. Throws NotInImage, or DegenerateUnhandled if no construction
/// reproduces the coordinates.
LiftResult su2_rank3_lift(const SU2Rank3Coords& c, std::optional<int> sign = std::nullopt, double tol = kDefaultTol);

/// Finds k in SU(n) with k rho1 k^{-1} = rho2 (within 10 tol) when the first
/// components have simple spectrum; returns nullopt if no such k exists.
/// Throws DegenerateSpectrum if a first component has a repeated eigenvalue.
std::optional<CMat> unitary_conjugacy(const RepTuple& rho1, const RepTuple& rho2, double tol = kDefaultTol);

}  // namespace charvar
