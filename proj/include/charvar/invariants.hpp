#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charvar/groups.hpp"

namespace charvar {

// ---------------------------------------------------------------------------
// Words in the free group

struct Letter {
  std::size_t generator;  // 1-based
  int exponent;           // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
  std::vector<Letter> letters;  // empty word: trace = n

  std::string str() const;  // "x1 x2^-1", or "1" for the empty word
  friend bool operator==(const Word&, const Word&) = default;
};

/// Parses "x1 x2^-1 x1" (whitespace separated, optional ^-1 or ^1).
Word parse_word(std::string_view text);

/// Reduced words of length 1..max_len over x_1^{+-1}..x_r^{+-1}, one
/// representative per class of cyclic rotations (rotations share a trace).
std::vector<Word> enumerate_words(std::size_t r, std::size_t max_len);

CMat evaluate_word(const RepTuple& rho, const Word& w);
Complex trace_word(const RepTuple& rho, const Word& w);

// ---------------------------------------------------------------------------
// SU(2): quaternion real parts

/// Re X = tr(X) / 2.
double quaternion_real(const CMat& x);

struct SU2Rank2Coords {
  double a1 = 1.0, a2 = 1.0, a3 = 1.0;  // Re X1, Re X2, Re(X1^{-1} X2)
};

SU2Rank2Coords su2_rank2_coords(const RepTuple& rho, double tol = kDefaultTol);

struct FrickeCheck {
  double lhs;  // Re(X1 X2 X1^{-1} X2^{-1}) by matrix multiplication
  double rhs;  // 2(a1^2 + a2^2 + a3^2) - 4 a1 a2 a3 - 1
};

FrickeCheck fricke_check(const RepTuple& rho, double tol = kDefaultTol);

struct SU2Rank3Coords {
  double a1 = 1.0, a2 = 1.0, a3 = 1.0;
  double a12 = 1.0, a13 = 1.0, a23 = 1.0;  // Re(X_j^{-1} X_k)

  double single(std::size_t j) const;               // a_j, j in 1..3
  double pair(std::size_t j, std::size_t k) const;  // a_jk, symmetric
  std::array<double, 6> as_array() const { return {a1, a2, a3, a12, a13, a23}; }
};

SU2Rank3Coords su2_rank3_coords(const RepTuple& rho, double tol = kDefaultTol);

/// Invariants of a rank-3 coordinate vector. r is the Gram matrix of the
/// imaginary parts: r_jj = 1 - a_j^2, r_jk = a_jk - a_j a_k.
struct RSTInvariants {
  std::array<std::array<double, 3>, 3> r{};
  double s12 = 0.0, s13 = 0.0, s23 = 0.0;
  double t123 = 0.0;
  // Cosines of the angles between imaginary parts; empty when an imaginary
  // part vanishes (within tol).
  std::optional<double> l12, l13, l23;

  double s(std::size_t j, std::size_t k) const;
  double gram_det() const;
};

RSTInvariants rst(const SU2Rank3Coords& c, double tol = kDefaultTol);

/// 1 - x^2 - y^2 - z^2 + 2xyz; the shape shared by sigma, s_jk and t123.
inline double cayley(double x, double y, double z) { return 1.0 - x * x - y * y - z * z + 2.0 * x * y * z; }

// ---------------------------------------------------------------------------
// SU(3) / SL(3) rank 2

/// Traces t_{+-k}, k = 1..5, stored at index k-1 of `pos` and `neg`:
/// t1 = tr X1, t2 = tr X2, t3 = tr X1X2, t4 = tr X1X2^{-1},
/// t5 = tr X1X2X1^{-1}X2^{-1}; t_{-k} uses the inverse word (t_{-4} = tr X1^{-1}X2,
/// t_{-5} = tr X2X1X2^{-1}X1^{-1}).
struct SU3Rank2Traces {
  std::array<Complex, 5> pos{};
  std::array<Complex, 5> neg{};

  Complex t(int k) const { return k > 0 ? pos[static_cast<std::size_t>(k - 1)] : neg[static_cast<std::size_t>(-k - 1)]; }
};

SU3Rank2Traces su3_traces(const RepTuple& rho, double tol = kDefaultTol);

/// u_k = (t_k + t_{-k}) / 2, u_{-k} = (t_k - t_{-k}) / 2i for k = 1..4 and
/// u5 = (t5 - t_{-5}) / 2i. Real on SU tuples.
struct UCoords {
  std::array<Complex, 4> re{};  // u_1..u_4
  std::array<Complex, 4> im{};  // u_{-1}..u_{-4}
  Complex u5{};

  bool is_real() const;
};

UCoords u_coords(const SU3Rank2Traces& t);

/// Truncates imaginary parts below tol to exact zero; throws DataIntegrity
/// if any is larger.
UCoords realify(const UCoords& u, double tol = 1e-10);

struct PQRecord {
  Complex P, Q, tau;  // P = t5 + t_{-5}, Q = t5 t_{-5}, tau = t5
};

PQRecord pq(const SU3Rank2Traces& t);

/// PQRecord with P, Q realified (imaginary parts below tol dropped, larger
/// ones throw DataIntegrity).
PQRecord realify(const PQRecord& r, double tol = 1e-10);

RepTuple transpose_tuple(const RepTuple& rho);

/// Torus-invariant minors of a 3x3 matrix. m_{-k} is the principal cofactor
/// complementary to x_kk, so that m_k(X^{-1}) = m_{-k}(X) when det X = 1.
struct MinorsRecord {
  Complex m1, m2, m3, mm1, mm2, mm3, m4;
};

MinorsRecord su3_minors(const CMat& x);

/// The degree relation among the seven minors; vanishes on SL(3).
Complex relation_residual(const MinorsRecord& m);

// ---------------------------------------------------------------------------
// Case dispatch

/// Named invariant coordinates for a tuple. The coordinate system is chosen by
/// (r, n): SU(2) pairs, SU(2) triples, rank-2 in dimension 3, otherwise a
/// table of word traces up to length 3.
struct InvariantRecord {
  std::string system;  // "su2-rank2", "su2-rank3", "su3-rank2", "word-traces"
  std::vector<std::pair<std::string, Complex>> values;
  bool real_valued = false;

  std::optional<Complex> get(std::string_view name) const;
};

InvariantRecord invariant_record(const RepTuple& rho, double tol = kDefaultTol);

/// Largest |difference| over the names of `a` (both must share a system).
double record_distance(const InvariantRecord& a, const InvariantRecord& b);

}  // namespace charvar
