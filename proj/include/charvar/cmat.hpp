#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace charvar {

using Complex = std::complex<double>;

/// Dense n x n complex matrix, row-major. Intended for small n (2 or 3 in
/// most of the library); no attempt is made at blocking or vectorization.
class CMat {
 public:
  CMat() = default;
  explicit CMat(std::size_t n) : n_(n), data_(n * n) {}
  CMat(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMat identity(std::size_t n);
  static CMat zero(std::size_t n) { return CMat(n); }
  static CMat diag(std::span<const Complex> d);
  static CMat diag(std::initializer_list<Complex> d);
  static CMat diag_real(std::span<const double> d);

  std::size_t dim() const noexcept { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const Complex> data() const noexcept { return data_; }

  CMat adjoint() const;
  CMat transpose() const;
  CMat conj() const;
  Complex trace() const;
  Complex det() const;
  CMat inverse() const;  // throws Error{Singular}

  double frobenius() const;
  double max_abs() const;
  bool is_finite() const;

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(Complex s);

  friend CMat operator+(CMat a, const CMat& b) { return a += b; }
  friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
  friend CMat operator*(CMat a, Complex s) { return a *= s; }
  friend CMat operator*(Complex s, CMat a) { return a *= s; }
  friend CMat operator*(const CMat& a, const CMat& b);
  friend CMat operator-(const CMat& a);

  friend bool operator==(const CMat&, const CMat&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// Frobenius norm of a - b.
double distance(const CMat& a, const CMat& b);

/// A B A^{-1} with a precomputed inverse.
inline CMat conjugate_by(const CMat& a, const CMat& b, const CMat& a_inv) { return a * b * a_inv; }

}  // namespace charvar
