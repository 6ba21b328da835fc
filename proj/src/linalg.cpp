#include "charvar/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

namespace charvar {

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return Rng((static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
}

bool is_hermitian(const CMat& h, double tol) {
  return distance(h, h.adjoint()) <= tol * std::max(1.0, h.frobenius());
}

namespace {

CMat symmetrized(const CMat& h) { return (h + h.adjoint()) * 0.5; }

HermEig eig2(const CMat& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const Complex b = h(0, 1);
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double disc = std::hypot(half, std::abs(b));
  HermEig out{{mean - disc, mean + disc}, CMat(2)};
  if (std::abs(b) == 0.0) {
    // Already diagonal; order so that values ascend.
    if (a <= d) {
      out.values = {a, d};
      out.vectors = CMat::identity(2);
    } else {
      out.values = {d, a};
      out.vectors = CMat{{0.0, 1.0}, {1.0, 0.0}};
    }
    return out;
  }
  const double lo = out.values[0];
  // Two candidate kernel vectors of H - lo I; pick the better conditioned one.
  const Complex v1[2] = {b, lo - a};
  const Complex v2[2] = {lo - d, std::conj(b)};
  const double n1 = std::hypot(std::abs(v1[0]), std::abs(v1[1]));
  const double n2 = std::hypot(std::abs(v2[0]), std::abs(v2[1]));
  Complex x, y;
  if (n1 >= n2) {
    x = v1[0] / n1;
    y = v1[1] / n1;
  } else {
    x = v2[0] / n2;
    y = v2[1] / n2;
  }
  out.vectors(0, 0) = x;
  out.vectors(1, 0) = y;
  out.vectors(0, 1) = -std::conj(y);
  out.vectors(1, 1) = std::conj(x);
  return out;
}

HermEig jacobi(const CMat& h) {
  const std::size_t n = h.dim();
  CMat a = symmetrized(h);
  CMat v = CMat::identity(n);
  const double scale = std::max(1.0, a.frobenius());
  constexpr double kOffThreshold = 1e-14;
  constexpr int kMaxSweeps = 100;

  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < kMaxSweeps && off_mass() > kOffThreshold * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        // Diagonal phase change so that a(p,q) becomes real positive.
        const Complex phase = a(p, q) / g;
        const Complex cphase = std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          a(k, q) *= cphase;
          v(k, q) *= cphase;
        }
        for (std::size_t k = 0; k < n; ++k) a(q, k) *= phase;
        // Real Jacobi rotation annihilating the now-real (p,q) entry.
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermEig out{std::vector<double>(n), CMat(n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

}  // namespace

HermEig herm_eig(const CMat& h, double tol) {
  if (!h.is_finite()) throw Error(ErrorKind::NotHermitian, "non-finite entries");
  if (!is_hermitian(h, tol)) throw Error(ErrorKind::NotHermitian, "input differs from its adjoint");
  const std::size_t n = h.dim();
  if (n == 1) return {{h(0, 0).real()}, CMat::identity(1)};
  if (n == 2) return eig2(symmetrized(h));
  return jacobi(h);
}

CMat spectral_apply(const HermEig& eig, const std::vector<Complex>& mapped) {
  const std::size_t n = eig.vectors.dim();
  CMat r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += eig.vectors(i, k) * mapped[k] * std::conj(eig.vectors(j, k));
      r(i, j) = s;
    }
  return r;
}

namespace {

HermEig positive_eig(const CMat& p, double tol) {
  HermEig eig = herm_eig(p, tol);
  if (eig.values.front() <= tol) throw Error(ErrorKind::NotPositive, "minimum eigenvalue is not positive");
  return eig;
}

}  // namespace

CMat psd_power(const CMat& p, double s, double tol) {
  const HermEig eig = positive_eig(p, tol);
  std::vector<Complex> mapped(eig.values.size());
  std::transform(eig.values.begin(), eig.values.end(), mapped.begin(),
                 [s](double l) { return Complex(std::pow(l, s)); });
  return spectral_apply(eig, mapped);
}

CMat psd_log(const CMat& p, double tol) {
  const HermEig eig = positive_eig(p, tol);
  std::vector<Complex> mapped(eig.values.size());
  std::transform(eig.values.begin(), eig.values.end(), mapped.begin(),
                 [](double l) { return Complex(std::log(l)); });
  return spectral_apply(eig, mapped);
}

CMat exp_herm(const CMat& h, double t, double tol) {
  const HermEig eig = herm_eig(h, tol);
  std::vector<Complex> mapped(eig.values.size());
  std::transform(eig.values.begin(), eig.values.end(), mapped.begin(),
                 [t](double l) { return Complex(std::exp(t * l)); });
  return spectral_apply(eig, mapped);
}

SVDParts svd(const CMat& g) {
  const std::size_t n = g.dim();
  CMat a = g;
  CMat v = CMat::identity(n);
  auto column_dot = [&](const CMat& m, std::size_t p, std::size_t q) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::conj(m(i, p)) * m(i, q);
    return s;
  };
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = column_dot(a, p, p).real();
        const double beta = column_dot(a, q, q).real();
        const Complex gamma = column_dot(a, p, q);
        const double mag = std::abs(gamma);
        if (mag <= 1e-15 * std::sqrt(alpha * beta) || mag == 0.0) continue;
        rotated = true;
        // Rotate column q by the phase of gamma, then a real Jacobi rotation
        // makes columns p and q orthogonal.
        const Complex phase = gamma / mag;
        const double zeta = (beta - alpha) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (CMat* m : {&a, &v})
          for (std::size_t i = 0; i < n; ++i) {
            const Complex xp = (*m)(i, p);
            const Complex xq = (*m)(i, q) * std::conj(phase);
            (*m)(i, p) = c * xp - s * xq;
            (*m)(i, q) = s * xp + c * xq;
          }
      }
    if (!rotated) break;
  }
  SVDParts out{CMat(n), std::vector<double>(n), v};
  for (std::size_t j = 0; j < n; ++j) {
    out.sigma[j] = std::sqrt(column_dot(a, j, j).real());
    for (std::size_t i = 0; i < n; ++i) out.u(i, j) = out.sigma[j] > 0.0 ? a(i, j) / out.sigma[j] : Complex(i == j ? 1.0 : 0.0);
  }
  return out;
}

PolarParts polar(const CMat& g, double tol) {
  if (!g.is_finite() || std::abs(g.det()) <= tol) throw Error(ErrorKind::Singular, "polar decomposition needs an invertible matrix");
  const SVDParts d = svd(g);
  std::vector<Complex> log_sigma(d.sigma.size());
  for (std::size_t i = 0; i < d.sigma.size(); ++i) {
    if (d.sigma[i] <= 0.0) throw Error(ErrorKind::Singular, "zero singular value");
    log_sigma[i] = std::log(d.sigma[i]);
  }
  CMat p = d.v * CMat::diag(log_sigma) * d.v.adjoint();
  p = (p + p.adjoint()) * 0.5;
  return {d.u * d.v.adjoint(), p};
}

NormalEig normal_eig(const CMat& k, double tol) {
  const std::size_t n = k.dim();
  const CMat re = (k + k.adjoint()) * 0.5;
  const CMat im = (k - k.adjoint()) * Complex(0.0, -0.5);
  // A generic real combination of the commuting Hermitian parts has simple
  // spectrum; fall through the list if an accidental degeneracy shows up.
  constexpr std::array<double, 4> kMix = {0.5773502691896258, 1.3247179572447460, 0.2360679774997897, 2.718281828459045};
  NormalEig best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (const double gamma : kMix) {
    const HermEig eig = herm_eig(re + im * gamma, 1e-6);
    const CMat d = eig.vectors.adjoint() * k * eig.vectors;
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += std::norm(d(i, j));
    off = std::sqrt(off);
    if (off < best_residual) {
      best_residual = off;
      best.vectors = eig.vectors;
      best.values.resize(n);
      for (std::size_t i = 0; i < n; ++i) best.values[i] = d(i, i);
    }
    if (off <= tol) break;
  }
  return best;
}

CMat haar_su(std::size_t n, Rng& rng) {
  CMat z(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = rng.complex_gaussian() * M_SQRT1_2;
  // Modified Gram-Schmidt with one reorthogonalization pass. The diagonal of
  // the implied R factor is real positive, which fixes the column phases.
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex proj = 0.0;
        for (std::size_t r = 0; r < n; ++r) proj += std::conj(z(r, i)) * z(r, j);
        for (std::size_t r = 0; r < n; ++r) z(r, j) -= proj * z(r, i);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(z(r, j));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) z(r, j) /= norm;
  }
  const Complex root = std::polar(1.0, std::arg(z.det()) / static_cast<double>(n));
  return z * (1.0 / root);
}

CMat random_traceless_hermitian(std::size_t n, Rng& rng) {
  CMat h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = rng.gaussian();
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = rng.complex_gaussian();
      h(j, i) = std::conj(h(i, j));
    }
  }
  const Complex mean = h.trace() / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) h(i, i) -= mean;
  return h;
}

}  // namespace charvar
