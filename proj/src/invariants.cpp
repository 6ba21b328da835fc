#include "charvar/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace charvar {

// ---------------------------------------------------------------------------
// Words

std::string Word::str() const {
  if (letters.empty()) return "1";
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(l.generator);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
      throw Error(ErrorKind::Parse, "bad word token '" + tok + "'");
    const auto caret = tok.find('^');
    const std::string index = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    int exponent = 1;
    if (caret != std::string::npos) {
      const std::string e = tok.substr(caret + 1);
      if (e == "-1") exponent = -1;
      else if (e == "1") exponent = 1;
      else throw Error(ErrorKind::Parse, "exponent must be 1 or -1 in '" + tok + "'");
    }
    if (index.empty() || !std::all_of(index.begin(), index.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::Parse, "bad generator index in '" + tok + "'");
    const auto g = static_cast<std::size_t>(std::stoul(index));
    if (g == 0) throw Error(ErrorKind::IndexOutOfRange, "generators are numbered from 1");
    w.letters.push_back({g, exponent});
  }
  return w;
}

namespace {

int code(const Letter& l) { return static_cast<int>(2 * l.generator) + (l.exponent < 0 ? 1 : 0); }

std::vector<int> rotation_key(const Word& w) {
  std::vector<int> codes;
  for (const auto& l : w.letters) codes.push_back(code(l));
  std::vector<int> best = codes;
  for (std::size_t s = 1; s < codes.size(); ++s) {
    std::rotate(codes.begin(), codes.begin() + 1, codes.end());
    best = std::min(best, codes);
  }
  return best;
}

}  // namespace

std::vector<Word> enumerate_words(std::size_t r, std::size_t max_len) {
  std::vector<Word> out;
  std::set<std::vector<int>> seen;
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (std::size_t g = 1; g <= r; ++g) {
        for (int e : {1, -1}) {
          if (!w.letters.empty() && w.letters.back().generator == g && w.letters.back().exponent == -e) continue;
          Word ext = w;
          ext.letters.push_back({g, e});
          if (seen.insert(rotation_key(ext)).second) out.push_back(ext);
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

CMat evaluate_word(const RepTuple& rho, const Word& w) {
  CMat acc = CMat::identity(rho.dim());
  std::vector<std::optional<CMat>> inverses(rho.rank());
  for (const auto& l : w.letters) {
    if (l.generator == 0 || l.generator > rho.rank())
      throw Error(ErrorKind::IndexOutOfRange, "word uses generator x" + std::to_string(l.generator) +
                                                  " but the tuple has rank " + std::to_string(rho.rank()));
    const std::size_t i = l.generator - 1;
    if (l.exponent > 0) {
      acc = acc * rho.mats[i];
    } else {
      if (!inverses[i]) inverses[i] = rho.mats[i].inverse();
      acc = acc * *inverses[i];
    }
  }
  return acc;
}

Complex trace_word(const RepTuple& rho, const Word& w) { return evaluate_word(rho, w).trace(); }

// ---------------------------------------------------------------------------
// SU(2)

double quaternion_real(const CMat& x) { return 0.5 * x.trace().real(); }

namespace {

// For X in SU(2), X^{-1} = X*.
double re_inv_product(const CMat& x, const CMat& y) { return quaternion_real(x.adjoint() * y); }

}  // namespace

SU2Rank2Coords su2_rank2_coords(const RepTuple& rho, double tol) {
  require_shape(rho, Family::SU, 2, 2, tol);
  return {quaternion_real(rho[0]), quaternion_real(rho[1]), re_inv_product(rho[0], rho[1])};
}

FrickeCheck fricke_check(const RepTuple& rho, double tol) {
  const SU2Rank2Coords a = su2_rank2_coords(rho, tol);
  const CMat& x1 = rho[0];
  const CMat& x2 = rho[1];
  const double lhs = quaternion_real(x1 * x2 * x1.adjoint() * x2.adjoint());
  const double rhs = 2.0 * (a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3) - 4.0 * a.a1 * a.a2 * a.a3 - 1.0;
  return {lhs, rhs};
}

double SU2Rank3Coords::single(std::size_t j) const {
  switch (j) {
    case 1: return a1;
    case 2: return a2;
    case 3: return a3;
  }
  throw Error(ErrorKind::IndexOutOfRange, "rank-3 index must be 1..3");
}

double SU2Rank3Coords::pair(std::size_t j, std::size_t k) const {
  if (j > k) std::swap(j, k);
  if (j == 1 && k == 2) return a12;
  if (j == 1 && k == 3) return a13;
  if (j == 2 && k == 3) return a23;
  throw Error(ErrorKind::IndexOutOfRange, "rank-3 pair must be two distinct indices in 1..3");
}

SU2Rank3Coords su2_rank3_coords(const RepTuple& rho, double tol) {
  require_shape(rho, Family::SU, 2, 3, tol);
  return {quaternion_real(rho[0]),           quaternion_real(rho[1]),           quaternion_real(rho[2]),
          re_inv_product(rho[0], rho[1]), re_inv_product(rho[0], rho[2]), re_inv_product(rho[1], rho[2])};
}

double RSTInvariants::s(std::size_t j, std::size_t k) const {
  if (j > k) std::swap(j, k);
  if (j == 1 && k == 2) return s12;
  if (j == 1 && k == 3) return s13;
  if (j == 2 && k == 3) return s23;
  throw Error(ErrorKind::IndexOutOfRange, "s_jk needs two distinct indices in 1..3");
}

double RSTInvariants::gram_det() const {
  return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
         r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

RSTInvariants rst(const SU2Rank3Coords& c, double tol) {
  RSTInvariants out;
  for (std::size_t j = 0; j < 3; ++j) {
    const double aj = c.single(j + 1);
    out.r[j][j] = 1.0 - aj * aj;
    for (std::size_t k = j + 1; k < 3; ++k) {
      const double v = c.pair(j + 1, k + 1) - aj * c.single(k + 1);
      out.r[j][k] = v;
      out.r[k][j] = v;
    }
  }
  out.s12 = cayley(c.a1, c.a2, c.a12);
  out.s13 = cayley(c.a1, c.a3, c.a13);
  out.s23 = cayley(c.a2, c.a3, c.a23);

  auto cosine = [&](std::size_t j, std::size_t k) -> std::optional<double> {
    const double den = std::sqrt(std::max(out.r[j][j], 0.0) * std::max(out.r[k][k], 0.0));
    if (den <= tol) return std::nullopt;
    return out.r[j][k] / den;
  };
  out.l12 = cosine(0, 1);
  out.l13 = cosine(0, 2);
  out.l23 = cosine(1, 2);
  if (out.l12 && out.l13 && out.l23) {
    out.t123 = cayley(*out.l12, *out.l13, *out.l23);
  } else {
    // Some imaginary part vanishes: the three are coplanar.
    out.t123 = 0.0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// SU(3) rank 2

SU3Rank2Traces su3_traces(const RepTuple& rho, double tol) {
  if (rho.dim() != 3 || rho.rank() != 2) throw Error(ErrorKind::NotInGroup, "su3_traces needs a pair of 3x3 matrices");
  require_valid(rho, tol);
  const CMat& x1 = rho[0];
  const CMat& x2 = rho[1];
  const CMat y1 = x1.inverse();
  const CMat y2 = x2.inverse();
  SU3Rank2Traces t;
  t.pos = {x1.trace(), x2.trace(), (x1 * x2).trace(), (x1 * y2).trace(), (x1 * x2 * y1 * y2).trace()};
  t.neg = {y1.trace(), y2.trace(), (y1 * y2).trace(), (y1 * x2).trace(), (x2 * x1 * y2 * y1).trace()};
  return t;
}

bool UCoords::is_real() const {
  auto zero_imag = [](const Complex& z) { return z.imag() == 0.0; };
  return std::all_of(re.begin(), re.end(), zero_imag) && std::all_of(im.begin(), im.end(), zero_imag) && zero_imag(u5);
}

UCoords u_coords(const SU3Rank2Traces& t) {
  const Complex two_i(0.0, 2.0);
  UCoords u;
  for (std::size_t k = 0; k < 4; ++k) {
    u.re[k] = 0.5 * (t.pos[k] + t.neg[k]);
    u.im[k] = (t.pos[k] - t.neg[k]) / two_i;
  }
  u.u5 = (t.pos[4] - t.neg[4]) / two_i;
  return u;
}

namespace {

Complex realified(const Complex& z, double tol, const char* what) {
  if (std::abs(z.imag()) > tol)
    throw Error(ErrorKind::DataIntegrity, std::string(what) + " has imaginary part " + std::to_string(z.imag()) +
                                              "; the input is not unitary");
  return {z.real(), 0.0};
}

}  // namespace

UCoords realify(const UCoords& u, double tol) {
  UCoords out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.re[k] = realified(u.re[k], tol, "u coordinate");
    out.im[k] = realified(u.im[k], tol, "u coordinate");
  }
  out.u5 = realified(u.u5, tol, "u5");
  return out;
}

PQRecord pq(const SU3Rank2Traces& t) {
  return {t.pos[4] + t.neg[4], t.pos[4] * t.neg[4], t.pos[4]};
}

PQRecord realify(const PQRecord& r, double tol) {
  return {realified(r.P, tol, "P"), realified(r.Q, tol, "Q"), r.tau};
}

RepTuple transpose_tuple(const RepTuple& rho) {
  RepTuple out{rho.group, {}};
  out.mats.reserve(rho.rank());
  for (const auto& m : rho.mats) out.mats.push_back(m.transpose());
  return out;
}

MinorsRecord su3_minors(const CMat& x) {
  if (x.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "minors are defined for 3x3 matrices");
  auto e = [&](int i, int j) { return x(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };
  return {e(1, 1),
          e(2, 2),
          e(3, 3),
          e(2, 2) * e(3, 3) - e(2, 3) * e(3, 2),
          e(1, 1) * e(3, 3) - e(1, 3) * e(3, 1),
          e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1),
          e(1, 2) * e(2, 3) * e(3, 1)};
}

Complex relation_residual(const MinorsRecord& m) {
  const Complex &m1 = m.m1, &m2 = m.m2, &m3 = m.m3, &n1 = m.mm1, &n2 = m.mm2, &n3 = m.mm3, &m4 = m.m4;
  // Transcribed term by term; n_k stands for m_{-k}.
  return -m2 * m2 * m3 * m3 * m1 * m1 + n1 * m2 * m3 * m1 * m1 + n3 * m2 * m3 * m3 * m1 - n2 * n1 * m2 * m1 +
         n2 * m2 * m2 * m3 * m1 - n3 * n1 * m3 * m1 - n1 * m4 * m1 + 2.0 * m2 * m3 * m4 * m1 - m4 * m4 +
         n3 * n2 * n1 - n3 * n2 * m2 * m3 - n2 * m2 * m4 - n3 * m3 * m4 + m4;
}

// ---------------------------------------------------------------------------
// Dispatch

std::optional<Complex> InvariantRecord::get(std::string_view name) const {
  for (const auto& [k, v] : values)
    if (k == name) return v;
  return std::nullopt;
}

namespace {

Complex half_trace(const CMat& m) { return 0.5 * m.trace(); }

Complex cayley_c(Complex x, Complex y, Complex z) { return 1.0 - x * x - y * y - z * z + 2.0 * x * y * z; }

}  // namespace

InvariantRecord invariant_record(const RepTuple& rho, double tol) {
  require_valid(rho, tol);
  const bool unitary = rho.group.family == Family::SU;
  InvariantRecord rec;
  rec.real_valued = unitary;
  const std::size_t n = rho.dim();
  const std::size_t r = rho.rank();

  if (n == 2 && (r == 2 || r == 3)) {
    // Real parts via half traces; X^{-1} Y traced directly so SL input works.
    std::vector<Complex> a;
    for (const auto& m : rho.mats) a.push_back(half_trace(m));
    auto pair = [&](std::size_t j, std::size_t k) { return half_trace(rho[j].inverse() * rho[k]); };
    if (r == 2) {
      rec.system = "su2-rank2";
      const Complex a3 = pair(0, 1);
      rec.values = {{"a1", a[0]}, {"a2", a[1]}, {"a3", a3}, {"sigma", cayley_c(a[0], a[1], a3)}};
    } else {
      rec.system = "su2-rank3";
      const Complex a12 = pair(0, 1), a13 = pair(0, 2), a23 = pair(1, 2);
      rec.values = {{"a1", a[0]},   {"a2", a[1]},   {"a3", a[2]},
                    {"a12", a12},   {"a13", a13},   {"a23", a23},
                    {"s12", cayley_c(a[0], a[1], a12)}, {"s13", cayley_c(a[0], a[2], a13)},
                    {"s23", cayley_c(a[1], a[2], a23)}};
      if (unitary) {
        const RSTInvariants inv = rst(su2_rank3_coords(rho, tol), tol);
        rec.values.emplace_back("t123", inv.t123);
      }
    }
  } else if (n == 3 && r == 2) {
    rec.system = "su3-rank2";
    const SU3Rank2Traces t = su3_traces(rho, tol);
    UCoords u = u_coords(t);
    PQRecord p = pq(t);
    if (unitary) {
      u = realify(u);
      p = realify(p);
    }
    for (int k = 1; k <= 5; ++k) {
      rec.values.emplace_back("t" + std::to_string(k), t.t(k));
      rec.values.emplace_back("t-" + std::to_string(k), t.t(-k));
    }
    for (std::size_t k = 0; k < 4; ++k) {
      rec.values.emplace_back("u" + std::to_string(k + 1), u.re[k]);
      rec.values.emplace_back("u-" + std::to_string(k + 1), u.im[k]);
    }
    rec.values.emplace_back("u5", u.u5);
    rec.values.emplace_back("P", p.P);
    rec.values.emplace_back("Q", p.Q);
    const Complex delta = p.Q * p.Q + 12.0 * p.P * p.Q + 18.0 * p.Q - 4.0 * p.P * p.P * p.P - 27.0;
    rec.values.emplace_back("Delta", delta);
    rec.real_valued = false;  // the t's stay complex
  } else {
    rec.system = "word-traces";
    for (const auto& w : enumerate_words(r, 3)) rec.values.emplace_back(w.str(), trace_word(rho, w));
    rec.real_valued = false;
  }
  return rec;
}

double record_distance(const InvariantRecord& a, const InvariantRecord& b) {
  if (a.system != b.system) throw Error(ErrorKind::DimensionMismatch, "invariant records use different coordinate systems");
  double worst = 0.0;
  for (const auto& [name, v] : a.values)
    if (auto w = b.get(name)) worst = std::max(worst, std::abs(v - *w));
  return worst;
}

}  // namespace charvar
