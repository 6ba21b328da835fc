#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "charvar/cmat.hpp"
#include "charvar/error.hpp"

namespace charvar {

/// Seeded random source. All randomness in the library is threaded through
/// an explicit Rng; there is no global generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  double uniform(double lo = 0.0, double hi = 1.0) { return lo + (hi - lo) * unit_(engine_); }
  Complex complex_gaussian() { return {gaussian(), gaussian()}; }

  /// Independent generator for substream `index` of `seed`.
  static Rng substream(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

struct HermEig {
  std::vector<double> values;  // ascending
  CMat vectors;                // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix. Closed form for n = 2, cyclic
/// Jacobi otherwise. Throws NotHermitian if |H - H*| exceeds tol.
HermEig herm_eig(const CMat& h, double tol = kDefaultTol);

/// Returns U diag(f(lambda)) U*.
CMat spectral_apply(const HermEig& eig, const std::vector<Complex>& mapped);

/// P^s for positive-definite Hermitian P. Throws NotPositive.
CMat psd_power(const CMat& p, double s, double tol = kDefaultTol);

/// Hermitian logarithm of a positive-definite matrix.
CMat psd_log(const CMat& p, double tol = kDefaultTol);

/// exp(t H) for Hermitian H.
CMat exp_herm(const CMat& h, double t, double tol = kDefaultTol);

/// g = u diag(sigma) v* by one-sided Jacobi on the columns of g; accurate to
/// eps cond(g) rather than eps cond(g)^2. sigma is not sorted.
struct SVDParts {
  CMat u;
  std::vector<double> sigma;
  CMat v;
};

SVDParts svd(const CMat& g);

/// Cartan decomposition g = k exp(p): k unitary, p Hermitian.
struct PolarParts {
  CMat k;
  CMat p;
};

PolarParts polar(const CMat& g, double tol = kDefaultTol);

/// Spectral decomposition of a normal (in practice unitary) matrix:
/// k = U diag(values) U*.
struct NormalEig {
  std::vector<Complex> values;
  CMat vectors;
};

NormalEig normal_eig(const CMat& k, double tol = kDefaultTol);

/// Haar-distributed element of SU(n).
CMat haar_su(std::size_t n, Rng& rng);

/// Traceless Hermitian matrix with independent standard normal entries
/// (real diagonal, complex off-diagonal pairs), then trace removed.
CMat random_traceless_hermitian(std::size_t n, Rng& rng);

bool is_hermitian(const CMat& h, double tol = kDefaultTol);

}  // namespace charvar
