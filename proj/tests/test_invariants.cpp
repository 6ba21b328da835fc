#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include <algorithm>
#include <set>

#include "charvar/invariants.hpp"

using namespace charvar;
using namespace charvar::testing;

namespace {

const double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

CMat quat_i() { return CMat::diag({kI, -kI}); }
CMat quat_j() { return CMat{{0.0, 1.0}, {-1.0, 0.0}}; }
CMat quat_k() { return CMat{{0.0, kI}, {kI, 0.0}}; }

// X1 cycles the basis, X2 = diag(w^-1, w, 1) with w = exp(2 pi i / 3).
RepTuple su3_example() {
  const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
  return su_pair(CMat{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}}, CMat::diag({std::conj(w), w, 1.0}));
}

// Independent rotation-class count by brute force over strings.
std::size_t brute_force_classes(std::size_t r, std::size_t max_len) {
  std::vector<std::vector<int>> words{{}};
  std::set<std::vector<int>> classes;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      for (int g = 1; g <= static_cast<int>(r); ++g)
        for (int s : {g, -g}) {
          if (!w.empty() && w.back() == -s) continue;
          auto e = w;
          e.push_back(s);
          std::vector<std::vector<int>> rots;
          auto rot = e;
          for (std::size_t i = 0; i < e.size(); ++i) {
            rots.push_back(rot);
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
          }
          classes.insert(*std::min_element(rots.begin(), rots.end()));
          next.push_back(e);
        }
    words = std::move(next);
  }
  return classes.size();
}

SU2Rank3Coords random_admissible_coords(Rng& rng) {
  return su2_rank3_coords(sample_tuple({Family::SU, 2}, 3, rng));
}

}  // namespace

TEST_CASE("words parse and print") {
  const Word w = parse_word("x1 x2^-1 x1");
  REQUIRE(w.letters.size() == 3);
  CHECK(w.letters[1] == Letter{2, -1});
  CHECK(w.str() == "x1 x2^-1 x1");
  CHECK(parse_word("x3^1").str() == "x3");
  CHECK(Word{}.str() == "1");
  check_throws_kind([] { parse_word("y1"); }, ErrorKind::Parse);
  check_throws_kind([] { parse_word("x1^2"); }, ErrorKind::Parse);
}

TEST_CASE("trace_word examples") {
  Rng rng(1);
  const RepTuple rho = sample_tuple({Family::SL, 3}, 2, rng);
  CHECK(std::abs(trace_word(rho, parse_word("x1 x1^-1")) - 3.0) < 1e-12);
  CHECK(trace_word(rho, Word{}) == Complex(3.0));
  CHECK(std::abs(trace_word(su_pair(quat_i(), quat_j()), parse_word("x1"))) < 1e-15);
  check_throws_kind([&] { trace_word(rho, parse_word("x3")); }, ErrorKind::IndexOutOfRange);
}

TEST_CASE("trace_word is invariant under cyclic shifts") {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const RepTuple rho = sample_tuple({Family::SL, 3}, 3, rng, 0.5);
    Word w;
    for (int i = 0; i < 6; ++i) w.letters.push_back({static_cast<std::size_t>(rng.uniform(1.0, 3.999)), rng.uniform() < 0.5 ? 1 : -1});
    Word shifted = w;
    std::rotate(shifted.letters.begin(), shifted.letters.begin() + 2, shifted.letters.end());
    const Complex a = trace_word(rho, w);
    CHECK(std::abs(a - trace_word(rho, shifted)) < 1e-12 * (1.0 + std::abs(a)) * 100.0);
  }
}

TEST_CASE("enumerate_words lists one word per rotation class") {
  for (std::size_t r : {1, 2, 3})
    for (std::size_t len : {1, 2, 3, 4}) CHECK(enumerate_words(r, len).size() == brute_force_classes(r, len));
  CHECK(enumerate_words(1, 3).size() == 6);
}

TEST_CASE("su2_rank2_coords examples") {
  const auto id = su2_rank2_coords(su_pair(CMat::identity(2), CMat::identity(2)));
  CHECK(id.a1 == doctest::Approx(1.0));
  CHECK(id.a2 == doctest::Approx(1.0));
  CHECK(id.a3 == doctest::Approx(1.0));
  const auto ij = su2_rank2_coords(su_pair(quat_i(), quat_j()));
  CHECK(std::abs(ij.a1) + std::abs(ij.a2) + std::abs(ij.a3) < 1e-15);
  check_throws_kind([] { su2_rank2_coords(su_pair(CMat{{1.0, 1.0}, {0.0, 1.0}}, CMat::identity(2))); }, ErrorKind::NotInGroup);
}

TEST_CASE("SU(2) coordinates are conjugation invariant") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const RepTuple rho = sample_tuple({Family::SU, 2}, 3, rng);
    const RepTuple c = conjugate_tuple(haar_su(2, rng), rho);
    const auto a = su2_rank3_coords(rho).as_array();
    const auto b = su2_rank3_coords(c).as_array();
    for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
    const RepTuple pair{rho.group, {rho[0], rho[1]}};
    const RepTuple cpair{rho.group, {c[0], c[1]}};
    CHECK(std::abs(su2_rank2_coords(pair).a3 - su2_rank2_coords(cpair).a3) < 1e-12);
    CHECK(std::abs(quaternion_real(rho[0].inverse()) - quaternion_real(rho[0])) < 1e-12);
  }
}

TEST_CASE("fricke_check") {
  const auto id = fricke_check(su_pair(CMat::identity(2), CMat::identity(2)));
  CHECK(id.lhs == doctest::Approx(1.0));
  CHECK(id.rhs == doctest::Approx(1.0));
  const auto ij = fricke_check(su_pair(quat_i(), quat_j()));
  CHECK(ij.lhs == doctest::Approx(-1.0));
  CHECK(ij.rhs == doctest::Approx(-1.0));

  Rng rng(4);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto f = fricke_check(sample_tuple({Family::SU, 2}, 2, rng));
    worst = std::max(worst, std::abs(f.lhs - f.rhs));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("su2_rank3_coords examples") {
  const auto id = su2_rank3_coords({{Family::SU, 2}, {CMat::identity(2), CMat::identity(2), CMat::identity(2)}});
  for (double v : id.as_array()) CHECK(v == doctest::Approx(1.0));
  const auto ijk = su2_rank3_coords({{Family::SU, 2}, {quat_i(), quat_j(), quat_k()}});
  for (double v : ijk.as_array()) CHECK(std::abs(v) < 1e-15);
  CHECK(ijk.pair(3, 1) == ijk.a13);
}

TEST_CASE("rst examples") {
  const RSTInvariants z = rst(SU2Rank3Coords{0, 0, 0, 0, 0, 0});
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k) CHECK(z.r[j][k] == (j == k ? 1.0 : 0.0));
  CHECK(z.s12 == 1.0);
  CHECK(z.s13 == 1.0);
  CHECK(z.s23 == 1.0);
  CHECK(z.t123 == doctest::Approx(1.0));
  REQUIRE(z.l12);
  CHECK(*z.l12 == 0.0);

  const RSTInvariants one = rst(SU2Rank3Coords{});
  CHECK(one.r[0][0] == 0.0);
  CHECK_FALSE(one.l12.has_value());
  CHECK(one.s12 == 0.0);
}

TEST_CASE("rst determinant identity") {
  Rng rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const RSTInvariants inv = rst(random_admissible_coords(rng));
    REQUIRE(inv.l12);
    REQUIRE(inv.l13);
    REQUIRE(inv.l23);
    const double via_l = 1.0 - *inv.l12 * *inv.l12 - *inv.l13 * *inv.l13 - *inv.l23 * *inv.l23 + 2.0 * *inv.l12 * *inv.l13 * *inv.l23;
    const double via_det = inv.gram_det() / (inv.r[0][0] * inv.r[1][1] * inv.r[2][2]);
    CHECK(std::abs(via_l - via_det) < 1e-12);
    CHECK(std::abs(inv.t123 - via_l) < 1e-12);
  }
}

TEST_CASE("su3_traces examples") {
  const auto id = su3_traces(su_pair(CMat::identity(3), CMat::identity(3)));
  for (int k = 1; k <= 5; ++k) {
    CHECK(std::abs(id.t(k) - 3.0) < 1e-15);
    CHECK(std::abs(id.t(-k) - 3.0) < 1e-15);
  }

  // Hand computation: X1 X2 X1^{-1} = diag(w, 1, w^-1), so the commutator is
  // diag(w^2, w^-1, w^-1) = w^-1 I and t5 = 3 exp(-2 pi i / 3).
  const auto ex = su3_traces(su3_example());
  for (int k = 1; k <= 4; ++k) {
    CHECK(std::abs(ex.t(k)) < 1e-15);
    CHECK(std::abs(ex.t(-k)) < 1e-15);
  }
  CHECK(std::abs(ex.t(5) - 3.0 * std::polar(1.0, -2.0 * kPi / 3.0)) < 1e-14);
  CHECK(std::abs(ex.t(-5) - 3.0 * std::polar(1.0, 2.0 * kPi / 3.0)) < 1e-14);

  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = su3_traces(sample_tuple({Family::SU, 3}, 2, rng));
    for (int k = 1; k <= 5; ++k) CHECK(std::abs(t.t(-k) - std::conj(t.t(k))) < 1e-12);
  }
}

TEST_CASE("u coordinates and P, Q") {
  const auto ex = su3_traces(su3_example());
  const UCoords u = realify(u_coords(ex));
  CHECK(u.is_real());
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(u.re[k]) < 1e-15);
    CHECK(std::abs(u.im[k]) < 1e-15);
  }
  CHECK(u.u5.real() == doctest::Approx(-1.5 * std::sqrt(3.0)));
  const PQRecord p = realify(pq(ex));
  CHECK(p.P.real() == doctest::Approx(-3.0));
  CHECK(p.Q.real() == doctest::Approx(9.0));
  CHECK((p.P * p.P - 4.0 * p.Q).real() == doctest::Approx(-27.0));

  const auto id = su3_traces(su_pair(CMat::identity(3), CMat::identity(3)));
  const UCoords ui = realify(u_coords(id));
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(ui.re[k].real() == doctest::Approx(3.0));
    CHECK(ui.im[k] == Complex(0.0));
  }
  CHECK(ui.u5 == Complex(0.0));
  const PQRecord pi = pq(id);
  CHECK(pi.P.real() == doctest::Approx(6.0));
  CHECK(pi.Q.real() == doctest::Approx(9.0));

  Rng rng(7);
  const double box_re = 3.0;
  const double box_im = 1.5 * std::sqrt(3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = su3_traces(sample_tuple({Family::SU, 3}, 2, rng));
    const UCoords raw = u_coords(t);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(std::abs(raw.re[k].imag()) < 1e-10);
      CHECK(std::abs(raw.im[k].imag()) < 1e-10);
      CHECK(raw.re[k].real() >= -1.5 - 1e-12);
      CHECK(raw.re[k].real() <= box_re + 1e-12);
      CHECK(std::abs(raw.im[k].real()) <= box_im + 1e-12);
    }
    CHECK(std::abs(raw.u5.imag()) < 1e-10);
    CHECK(std::abs(raw.u5.real() - t.t(5).imag()) < 1e-12);
    const PQRecord p = pq(t);
    CHECK(std::abs(t.t(5) * t.t(5) - p.P * t.t(5) + p.Q) < 1e-10);
    CHECK(std::abs(p.P - 2.0 * t.t(5).real()) < 1e-12);
    CHECK(std::abs(p.Q - std::norm(t.t(5))) < 1e-12);
  }
}

TEST_CASE("realify rejects non-real data") {
  UCoords u;
  u.u5 = Complex(1.0, 1e-3);
  check_throws_kind([&] { realify(u); }, ErrorKind::DataIntegrity);
  PQRecord p{Complex(1.0, 1e-3), 1.0, 1.0};
  check_throws_kind([&] { realify(p); }, ErrorKind::DataIntegrity);
}

TEST_CASE("transpose_tuple") {
  const RepTuple sym = su_pair(CMat{{0.0, 1.0}, {-1.0, 0.0}} * Complex(0.0, 1.0), CMat::diag({kI, -kI}));
  const RepTuple st = transpose_tuple(sym);
  for (std::size_t i = 0; i < 2; ++i) CHECK(st[i] == sym[i].transpose());
  const RepTuple diag = su_pair(CMat::diag({kI, -kI}), CMat::identity(2));
  CHECK(transpose_tuple(diag)[0] == diag[0]);

  const UCoords before = realify(u_coords(su3_traces(su3_example())));
  const UCoords after = realify(u_coords(su3_traces(transpose_tuple(su3_example()))));
  CHECK(after.u5.real() == doctest::Approx(1.5 * std::sqrt(3.0)));
  CHECK(after.u5.real() == doctest::Approx(-before.u5.real()));

  Rng rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const RepTuple rho = sample_tuple({Family::SU, 3}, 2, rng);
    const RepTuple tt = transpose_tuple(transpose_tuple(rho));
    for (std::size_t i = 0; i < 2; ++i) CHECK(tt[i] == rho[i]);
    const auto a = su3_traces(rho);
    const auto b = su3_traces(transpose_tuple(rho));
    for (int k = 1; k <= 4; ++k) {
      CHECK(std::abs(a.t(k) - b.t(k)) < 1e-12);
      CHECK(std::abs(a.t(-k) - b.t(-k)) < 1e-12);
    }
    CHECK(std::abs(a.t(5) - b.t(-5)) < 1e-12);
    CHECK(std::abs(a.t(-5) - b.t(5)) < 1e-12);
    const UCoords ua = realify(u_coords(a));
    const UCoords ub = realify(u_coords(b));
    CHECK(std::abs(ua.u5 + ub.u5) < 1e-10);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(std::abs(ua.re[k] - ub.re[k]) < 1e-10);
      CHECK(std::abs(ua.im[k] - ub.im[k]) < 1e-10);
    }
  }
}

TEST_CASE("minors at the identity") {
  const MinorsRecord m = su3_minors(CMat::identity(3));
  CHECK(m.m1 == Complex(1.0));
  CHECK(m.m2 == Complex(1.0));
  CHECK(m.m3 == Complex(1.0));
  // Principal cofactors of I.
  CHECK(m.mm1 == Complex(1.0));
  CHECK(m.mm2 == Complex(1.0));
  CHECK(m.mm3 == Complex(1.0));
  CHECK(m.m4 == Complex(0.0));
  CHECK(relation_residual(m) == Complex(0.0));
  check_throws_kind([] { su3_minors(CMat::identity(2)); }, ErrorKind::DimensionMismatch);
}

TEST_CASE("minors relation holds on SL(3)") {
  Rng rng(9);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const CMat x = sample_tuple({Family::SL, 3}, 1, rng, 0.5)[0];
    const MinorsRecord m = su3_minors(x);
    worst = std::max(worst, std::abs(relation_residual(m)));
    if (trial < 100) {
      // m_{-k}(X) = m_k(X^{-1}) when det X = 1.
      const MinorsRecord inv = su3_minors(x.inverse());
      CHECK(std::abs(m.mm1 - inv.m1) < 1e-10);
      CHECK(std::abs(m.mm2 - inv.m2) < 1e-10);
      CHECK(std::abs(m.mm3 - inv.m3) < 1e-10);
    }
  }
  CHECK(worst < 1e-9);
  // Off SL(3) the relation fails; diagonal matrices satisfy it for any det.
  const CMat y = sample_tuple({Family::SL, 3}, 1, rng, 0.5)[0] * Complex(1.1);
  CHECK(std::abs(relation_residual(su3_minors(y))) > 1e-3);
}

TEST_CASE("minors are torus invariant") {
  Rng rng(10);
  for (int trial = 0; trial < 500; ++trial) {
    const CMat x = sample_tuple({Family::SL, 3}, 1, rng, 0.5)[0];
    const Complex a = std::polar(std::exp(rng.gaussian()), rng.uniform(0.0, 6.0));
    const Complex b = std::polar(std::exp(rng.gaussian()), rng.uniform(0.0, 6.0));
    const CMat mu = CMat::diag({a, b, 1.0 / (a * b)});
    const MinorsRecord m = su3_minors(x);
    const MinorsRecord t = su3_minors(mu * x * mu.inverse());
    const double s = 1.0 + x.max_abs() * x.max_abs() * x.max_abs();
    CHECK(std::abs(m.m1 - t.m1) < 1e-12 * s);
    CHECK(std::abs(m.mm1 - t.mm1) < 1e-12 * s);
    CHECK(std::abs(m.mm3 - t.mm3) < 1e-12 * s);
    CHECK(std::abs(m.m4 - t.m4) < 1e-12 * s);
  }
}

TEST_CASE("invariant records dispatch by shape") {
  Rng rng(11);
  CHECK(invariant_record(sample_tuple({Family::SU, 2}, 2, rng)).system == "su2-rank2");
  const auto r3 = invariant_record(sample_tuple({Family::SU, 2}, 3, rng));
  CHECK(r3.system == "su2-rank3");
  CHECK(r3.real_valued);
  CHECK(r3.get("t123").has_value());
  CHECK(invariant_record(sample_tuple({Family::SL, 3}, 2, rng)).system == "su3-rank2");
  const auto words = invariant_record(sample_tuple({Family::SU, 2}, 4, rng));
  CHECK(words.system == "word-traces");
  CHECK(words.values.size() == enumerate_words(4, 3).size());
  CHECK_FALSE(words.get("nothing").has_value());
}

TEST_CASE("unitary coordinate systems are conjugation invariant") {
  Rng rng(12);
  const std::vector<std::pair<GroupDescriptor, std::size_t>> shapes{
      {{Family::SU, 2}, 2}, {{Family::SU, 2}, 3}, {{Family::SU, 3}, 2}, {{Family::SU, 2}, 4}, {{Family::SU, 3}, 3}};
  for (const auto& [d, r] : shapes) {
    for (int trial = 0; trial < 200; ++trial) {
      const RepTuple rho = sample_tuple(d, r, rng);
      const auto a = invariant_record(rho);
      const auto b = invariant_record(conjugate_tuple(haar_su(d.n, rng), rho));
      CHECK(record_distance(a, b) < 1e-10);
    }
  }
}

namespace {

// Rounding scale of a trace word: the product of the letters' norms.
double word_scale(const RepTuple& rho, const Word& w) {
  double s = static_cast<double>(rho.dim());
  for (const auto& l : w.letters) {
    const CMat& x = rho[l.generator - 1];
    s *= (l.exponent > 0 ? x : x.inverse()).frobenius();
  }
  return s;
}

// Rounding scale of each named coordinate: the size of the terms that are
// summed to produce it, rather than of the (possibly cancelling) result.
double coordinate_scale(const RepTuple& rho, const InvariantRecord& rec, const std::string& name) {
  if (rec.system == "word-traces") return word_scale(rho, parse_word(name));
  const std::array<const char*, 5> words{"x1", "x2", "x1 x2", "x1 x2^-1", "x1 x2 x1^-1 x2^-1"};
  const std::array<const char*, 5> inverse_words{"x1^-1", "x2^-1", "x2^-1 x1^-1", "x2 x1^-1", "x2 x1 x2^-1 x1^-1"};
  auto t_scale = [&](int k) {
    return std::max(word_scale(rho, parse_word(words[static_cast<std::size_t>(k - 1)])),
                    word_scale(rho, parse_word(inverse_words[static_cast<std::size_t>(k - 1)])));
  };
  if (rec.system == "su3-rank2") {
    const double p = 2.0 * t_scale(5);
    const double q = t_scale(5) * t_scale(5);
    if (name == "P") return p;
    if (name == "Q") return q;
    if (name == "Delta") return q * q + 12.0 * p * q + 18.0 * q + 4.0 * p * p * p + 27.0;
    const std::size_t digit = name.find_first_of("12345");
    return t_scale(name[digit] - '0');
  }
  // SU(2)-style records on SL(2): half traces and cayley combinations.
  double a = 1.0;
  for (const auto& m : rho.mats) a = std::max({a, m.frobenius(), m.inverse().frobenius()});
  return 6.0 * a * a * a * a * a * a;
}

}  // namespace

TEST_CASE("coordinate systems are invariant under general conjugation") {
  Rng rng(13);
  const std::vector<std::pair<GroupDescriptor, std::size_t>> shapes{
      {{Family::SL, 2}, 2}, {{Family::SL, 2}, 3}, {{Family::SL, 3}, 2}, {{Family::SL, 3}, 3}, {{Family::SL, 2}, 4}};
  for (const auto& [d, r] : shapes) {
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const RepTuple rho = sample_tuple(d, r, rng, 0.5);
      const CMat g = sample_tuple(d, 1, rng, 0.5)[0];
      const auto a = invariant_record(rho);
      const auto b = invariant_record(conjugate_tuple(g, rho), 1e-8);
      for (const auto& [name, v] : a.values) worst = std::max(worst, std::abs(v - *b.get(name)) / coordinate_scale(rho, a, name));
    }
    CHECK(worst < 1e-10);
  }
}
