#include "charvar/cmat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "charvar/error.hpp"

namespace charvar {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::DegenerateUnhandled: return "DegenerateUnhandled";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::ComplexInput: return "ComplexInput";
    case ErrorKind::DataIntegrity: return "DataIntegrity";
    case ErrorKind::NonPolynomial: return "NonPolynomial";
    case ErrorKind::UnknownRegion: return "UnknownRegion";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

CMat::CMat(std::initializer_list<std::initializer_list<Complex>> rows) : n_(rows.size()), data_(n_ * n_) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorKind::DimensionMismatch, "matrix literal is not square");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    ++i;
  }
}

CMat CMat::identity(std::size_t n) {
  CMat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diag(std::span<const Complex> d) {
  CMat m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMat CMat::diag(std::initializer_list<Complex> d) {
  return diag(std::span<const Complex>(d.begin(), d.size()));
}

CMat CMat::diag_real(std::span<const double> d) {
  CMat m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMat CMat::adjoint() const {
  CMat r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

CMat CMat::transpose() const {
  CMat r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CMat CMat::conj() const {
  CMat r(*this);
  for (auto& z : r.data_) z = std::conj(z);
  return r;
}

Complex CMat::trace() const {
  Complex s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

Complex CMat::det() const {
  if (n_ == 0) return 1.0;
  if (n_ == 1) return data_[0];
  if (n_ == 2) return data_[0] * data_[3] - data_[1] * data_[2];
  if (n_ == 3) {
    const auto& a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  }
  // LU with partial pivoting.
  CMat lu(*this);
  Complex d = 1.0;
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n_; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (lu(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(lu(k, j), lu(piv, j));
      d = -d;
    }
    d *= lu(k, k);
    for (std::size_t i = k + 1; i < n_; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      for (std::size_t j = k; j < n_; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return d;
}

CMat CMat::inverse() const {
  // Gauss-Jordan with partial pivoting.
  CMat a(*this);
  CMat inv = identity(n_);
  const double scale = std::max(max_abs(), 1e-300);
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n_; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) <= 1e-14 * scale) throw Error(ErrorKind::Singular, "matrix is not invertible");
    if (piv != k) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    }
    const Complex p = 1.0 / a(k, k);
    for (std::size_t j = 0; j < n_; ++j) {
      a(k, j) *= p;
      inv(k, j) *= p;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == k) continue;
      const Complex f = a(i, k);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

double CMat::frobenius() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMat::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool CMat::is_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

CMat& CMat::operator+=(const CMat& o) {
  if (o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  if (o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMat& CMat::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  const std::size_t n = a.n_;
  CMat r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

CMat operator-(const CMat& a) {
  CMat r(a);
  for (auto& z : r.data_) z = -z;
  return r;
}

double distance(const CMat& a, const CMat& b) { return (a - b).frobenius(); }

}  // namespace charvar
