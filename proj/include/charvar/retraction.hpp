#pragma once

#include <vector>

#include "charvar/groups.hpp"

namespace charvar {

/// phi_t(g) = g (g* g)^{-t/2} = k exp((1 - t) p). phi_0 = id, phi_1 lands in
/// the unitary group, and phi_t fixes unitary matrices for every t.
CMat phi(const CMat& g, double t, double tol = kDefaultTol);

/// Componentwise phi_t. The descriptor is kept; at t = 1 the result is
/// reported as an SU tuple.
RepTuple retract_tuple(const RepTuple& rho, double t, double tol = kDefaultTol);

struct RetractionPath {
  struct Sample {
    double t;
    RepTuple tuple;
  };
  std::vector<Sample> samples;
};

/// Samples of retract_tuple at `steps + 1` evenly spaced times in [0, 1].
RetractionPath retraction_path(const RepTuple& rho, std::size_t steps, double tol = kDefaultTol);

/// Torus retraction on diagonal tuples: each entry z -> z |z|^{-t}.
std::vector<CMat> abelian_retract(const std::vector<CMat>& diagonals, double t, double tol = kDefaultTol);

}  // namespace charvar
