#include "charvar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <thread>

#include "charvar/figures.hpp"
#include "charvar/poincare.hpp"
#include "charvar/retraction.hpp"

namespace charvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// SL test matrices use exp(0.5 H): validity is an absolute det test and
// several relations are high degree, so entries must stay moderate.
constexpr double kSpread = 0.5;

// Order-independent reductions over samples: maxima and counters.
struct Stats {
  std::map<std::string, double> max;
  std::map<std::string, std::size_t> count;

  void hi(const std::string& key, double x) {
    if (std::isnan(x)) x = kInf;
    auto [it, fresh] = max.emplace(key, x);
    if (!fresh) it->second = std::max(it->second, x);
  }
  void inc(const std::string& key, std::size_t by = 1) { count[key] += by; }
  double get(const std::string& key) const {
    const auto it = max.find(key);
    return it == max.end() ? 0.0 : it->second;
  }
  std::size_t n(const std::string& key) const {
    const auto it = count.find(key);
    return it == count.end() ? 0 : it->second;
  }
  void merge(const Stats& o) {
    for (const auto& [k, v] : o.max) hi(k, v);
    for (const auto& [k, v] : o.count) inc(k, v);
  }
};

// Splits [0, total) into fixed chunks, each with its own substream of
// `seed`; the merged result does not depend on the thread count.
template <class Fn>
Stats fan_out(std::size_t total, std::uint64_t seed, unsigned threads, Fn fn) {
  if (total == 0) return {};
  const std::size_t chunks = std::min<std::size_t>(total, 256);
  std::vector<Stats> partial(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      Rng rng = Rng::substream(seed, c);
      const std::size_t begin = c * total / chunks;
      const std::size_t end = (c + 1) * total / chunks;
      for (std::size_t i = begin; i < end; ++i) fn(rng, i, partial[c]);
    }
  };
  unsigned count = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::size_t>(count, chunks));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  Stats out;
  for (const auto& s : partial) out.merge(s);
  return out;
}

Check at_most(std::string name, double value, double bound) { return {std::move(name), value, bound, value <= bound}; }
Check below(std::string name, double value, double bound) { return {std::move(name), value, bound, value < bound}; }
Check none(std::string name, std::size_t failures) {
  const double v = static_cast<double>(failures);
  return {std::move(name), v, 0.0, failures == 0};
}

double unitarity_error(const CMat& k) {
  const std::size_t n = k.dim();
  return std::max(distance(k * k.adjoint(), CMat::identity(n)), std::abs(k.det() - 1.0));
}

// --- suites ----------------------------------------------------------------

SuiteReport retraction_suite(const VerifyConfig& cfg) {
  const std::size_t total = cfg.samples.value_or(1000);
  const std::array<double, 5> times{0.0, 0.25, 0.5, 0.75, 1.0};
  const Stats s = fan_out(total, cfg.seed, cfg.threads, [&](Rng& rng, std::size_t, Stats& st) {
    for (std::size_t n : {2, 3}) {
      const RepTuple g = sample_tuple({Family::SL, n}, 2, rng);
      const RepTuple u = sample_tuple({Family::SU, n}, 2, rng);
      const CMat k = haar_su(n, rng);
      for (const auto& x : g.mats) st.hi("phi1_su_error", unitarity_error(phi(x, 1.0, cfg.tol)));
      for (double t : times) {
        for (const auto& x : g.mats)
          st.hi("equivariance", distance(phi(k * x * k.adjoint(), t, cfg.tol), k * phi(x, t, cfg.tol) * k.adjoint()));
        for (const auto& x : u.mats) st.hi("su_fixed", distance(phi(x, t, cfg.tol), x));
      }
    }
  });
  SuiteReport r{"retraction", total, {}, Json::object(), 0.0};
  r.checks = {at_most("phi1_su_error", s.get("phi1_su_error"), 1e-10), below("equivariance", s.get("equivariance"), 1e-9),
              at_most("su_fixed", s.get("su_fixed"), 1e-12)};
  return r;
}

SuiteReport fricke_suite(const VerifyConfig& cfg) {
  const std::size_t total = cfg.samples.value_or(10000);
  const Stats s = fan_out(total, cfg.seed, cfg.threads, [&](Rng& rng, std::size_t, Stats& st) {
    const FrickeCheck f = fricke_check(sample_tuple({Family::SU, 2}, 2, rng), cfg.tol);
    st.hi("max_residual", std::abs(f.lhs - f.rhs));
  });
  SuiteReport r{"fricke", total, {}, Json::object(), 0.0};
  r.checks = {below("max_residual", s.get("max_residual"), 1e-12)};
  return r;
}

SuiteReport sigma_suite(const VerifyConfig& cfg) {
  const std::size_t total = cfg.samples.value_or(100000);
  const std::size_t lifts = std::max<std::size_t>(1, total / 10);
  const Stats s = fan_out(total, cfg.seed, cfg.threads, [&](Rng& rng, std::size_t i, Stats& st) {
    const double sg = sigma(su2_rank2_coords(sample_tuple({Family::SU, 2}, 2, rng), cfg.tol));
    st.hi("sigma_below_0", -sg);
    st.hi("sigma_above_1", sg - 1.0);
    if (i >= lifts) return;
    SU2Rank2Coords a;
    do {
      a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    } while (!in_su2_rank2_image(a, 0.0).inside);
    const RepTuple rho = su2_rank2_lift(a, cfg.tol).tuples.front();
    const SU2Rank2Coords back = su2_rank2_coords(rho, 1e-8);
    st.hi("lift_round_trip", std::max({std::abs(back.a1 - a.a1), std::abs(back.a2 - a.a2), std::abs(back.a3 - a.a3)}));
    for (const auto& x : rho.mats) st.hi("lift_su_error", unitarity_error(x));
  });
  SuiteReport r{"sigma", total, {}, Json::object(), 0.0};
  r.details["lift_samples"] = lifts;
  r.checks = {at_most("sigma_below_0", s.get("sigma_below_0"), 1e-9), at_most("sigma_above_1", s.get("sigma_above_1"), 1e-9),
              below("lift_round_trip", s.get("lift_round_trip"), 1e-10), below("lift_su_error", s.get("lift_su_error"), 1e-10)};
  return r;
}

CMat su2_unit(double alpha, double beta) {
  return from_quaternion({std::cos(alpha), std::sin(alpha) * std::cos(beta), std::sin(alpha) * std::sin(beta), 0.0});
}

SuiteReport rank3_suite(const VerifyConfig& cfg) {
  const std::size_t total = cfg.samples.value_or(10000);
  const std::size_t coplanar = std::max<std::size_t>(1, std::min<std::size_t>(total, 100));
  const Stats s = fan_out(total, cfg.seed, cfg.threads, [&](Rng& rng, std::size_t i, Stats& st) {
    const RepTuple rho = sample_tuple({Family::SU, 2}, 3, rng);
    const SU2Rank3Coords c = su2_rank3_coords(rho, cfg.tol);
    try {
      const LiftResult lift = su2_rank3_lift(c, std::nullopt, cfg.tol);
      double best = kInf;
      bool matched = false;
      for (const auto& t : lift.tuples) {
        const auto back = su2_rank3_coords(t, 1e-8).as_array();
        const auto want = c.as_array();
        double e = 0.0;
        for (std::size_t q = 0; q < 6; ++q) e = std::max(e, std::abs(back[q] - want[q]));
        best = std::min(best, e);
        matched = matched || unitary_conjugacy(rho, t, 1e-7).has_value();
      }
      st.hi("round_trip_best_sign", best);
      if (lift.t123 > 1e-4) {
        // Near t123 = 0 the coordinates fix the orbit only to about sqrt(tol).
        if (!matched) st.inc("sample_not_conjugate_to_a_lift");
        st.inc("two_sheet_samples");
        if (lift.tuples.size() != 2 || unitary_conjugacy(lift.tuples[0], lift.tuples[1], cfg.tol))
          st.inc("sheets_conjugate");
      }
    } catch (const Error&) {
      st.inc("lift_errors");
    }

    if (i >= coplanar) return;
    // Coplanar imaginary parts, in general position after a random rotation.
    RepTuple flat{{Family::SU, 2}, {}};
    for (int j = 0; j < 3; ++j) flat.mats.push_back(su2_unit(rng.uniform(0.2, 2.9), rng.uniform(0.0, 2.0 * std::numbers::pi)));
    flat = conjugate_tuple(haar_su(2, rng), flat);
    try {
      const SU2Rank3Coords fc = su2_rank3_coords(flat, cfg.tol);
      const RepTuple plus = su2_rank3_lift(fc, 1, cfg.tol).tuples.front();
      const RepTuple minus = su2_rank3_lift(fc, -1, cfg.tol).tuples.front();
      const auto k = unitary_conjugacy(plus, minus, 1e-9);
      if (!k) {
        st.inc("coplanar_sheets_not_conjugate");
      } else {
        for (std::size_t j = 0; j < 3; ++j) st.hi("coplanar_conjugacy_residual", distance(*k * plus[j] * k->adjoint(), minus[j]));
      }
      if (!unitary_conjugacy(flat, plus, 1e-7)) st.inc("coplanar_sample_not_conjugate_to_lift");
    } catch (const Error&) {
      st.inc("lift_errors");
    }
  });
  SuiteReport r{"rank3", total, {}, Json::object(), 0.0};
  r.details["two_sheet_samples"] = s.n("two_sheet_samples");
  r.details["coplanar_samples"] = coplanar;
  r.checks = {none("lift_errors", s.n("lift_errors")),
              below("round_trip_best_sign", s.get("round_trip_best_sign"), 1e-9),
              none("sheets_conjugate", s.n("sheets_conjugate")),
              none("sample_not_conjugate_to_a_lift", s.n("sample_not_conjugate_to_a_lift")),
              none("coplanar_sheets_not_conjugate", s.n("coplanar_sheets_not_conjugate")),
              at_most("coplanar_conjugacy_residual", s.get("coplanar_conjugacy_residual"), 1e-8),
              none("coplanar_sample_not_conjugate_to_lift", s.n("coplanar_sample_not_conjugate_to_lift"))};
  return r;
}

SuiteReport su3_membership_suite(const VerifyConfig& cfg) {
  const std::size_t total = cfg.samples.value_or(100000);
  const double h = 1.5 * std::numbers::sqrt3;
  const Stats s = fan_out(total, cfg.seed, cfg.threads, [&](Rng& rng, std::size_t, Stats& st) {
    const SU3Rank2Traces t = su3_traces(sample_tuple({Family::SU, 3}, 2, rng), cfg.tol);
    const UCoords u = realify(u_coords(t));
    const PQRecord p = realify(pq(t));
    for (std::size_t k = 0; k < 4; ++k) {
      const double x = u.re[k].real();
      const double y = u.im[k].real();
      st.hi("alcove_margin", su3_alcove_margin({x, y}));
      st.hi("box_excess", std::max({-1.5 - x, x - 3.0, std::abs(y) - h}));
    }
    st.hi("Delta", su3_delta(p.P.real(), p.Q.real()));
    st.hi("u5_excess", std::abs(u.u5.real()) - h);
  });
  SuiteReport r{"su3-membership", total, {}, Json::object(), 0.0};
  r.checks = {at_most("alcove_margin", s.get("alcove_margin"), 1e-9), at_most("Delta", s.get("Delta"), 1e-9),
              at_most("box_excess", s.get("box_excess"), 0.0), at_most("u5_excess", s.get("u5_excess"), 0.0)};
  return r;
}

SuiteReport example_suite(const VerifyConfig& cfg) {
  const double c = 2.0 * std::numbers::pi / 3.0;
  const CMat x1{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}};
  const CMat x2 = CMat::diag({std::polar(1.0, -c), std::polar(1.0, c), Complex(1.0)});
  const RepTuple rho{{Family::SU, 3}, {x1, x2}};
  const SU3Rank2Traces t = su3_traces(rho, cfg.tol);
  const UCoords u = u_coords(t);
  const PQRecord p = pq(t);
  double first_eight = 0.0;
  for (std::size_t k = 0; k < 4; ++k) first_eight = std::max({first_eight, std::abs(u.re[k]), std::abs(u.im[k])});
  const Complex branch = p.P * p.P - 4.0 * p.Q;
  const Complex delta = p.Q * p.Q + 12.0 * p.P * p.Q + 18.0 * p.Q - 4.0 * p.P * p.P * p.P - 27.0;

  SuiteReport r{"example", 1, {}, Json::object(), 0.0};
  r.details["u5"] = complex_json(u.u5);
  r.details["P"] = complex_json(p.P);
  r.details["Q"] = complex_json(p.Q);
  r.details["B_class"] = to_string(classify_B(rho, cfg.tol));
  r.checks = {below("first_eight_u", first_eight, 1e-12), below("u5_error", std::abs(u.u5 - 1.5 * std::numbers::sqrt3), 1e-12),
              below("branch_error", std::abs(branch + 27.0), 1e-12), below("Delta", std::abs(delta), 1e-12)};
  return r;
}

SuiteReport transpose_suite(const VerifyConfig& cfg) {
  const std::size_t total = cfg.samples.value_or(10000);
  const Stats s = fan_out(total, cfg.seed, cfg.threads, [&](Rng& rng, std::size_t, Stats& st) {
    const RepTuple rho = sample_tuple({Family::SU, 3}, 2, rng);
    const UCoords u = u_coords(su3_traces(rho, cfg.tol));
    const UCoords v = u_coords(su3_traces(transpose_tuple(rho), cfg.tol));
    for (std::size_t k = 0; k < 4; ++k) st.hi("first_eight_change", std::max(std::abs(u.re[k] - v.re[k]), std::abs(u.im[k] - v.im[k])));
    st.hi("u5_not_negated", std::abs(u.u5 + v.u5));
  });
  SuiteReport r{"transpose", total, {}, Json::object(), 0.0};
  r.checks = {below("first_eight_change", s.get("first_eight_change"), 1e-10), below("u5_not_negated", s.get("u5_not_negated"), 1e-10)};
  return r;
}

SuiteReport minors_suite(const VerifyConfig& cfg) {
  const std::size_t total = cfg.samples.value_or(10000);
  const Stats s = fan_out(total, cfg.seed, cfg.threads, [&](Rng& rng, std::size_t, Stats& st) {
    const CMat x = sample_tuple({Family::SL, 3}, 1, rng, kSpread)[0];
    st.hi("max_residual", std::abs(relation_residual(su3_minors(x))));
  });
  const Complex at_identity = relation_residual(su3_minors(CMat::identity(3)));
  SuiteReport r{"minors", total, {}, Json::object(), 0.0};
  r.checks = {below("max_residual", s.get("max_residual"), 1e-9),
              {"identity_residual", std::abs(at_identity), 0.0, at_identity == Complex(0.0)}};
  return r;
}

SuiteReport kempf_ness_suite(const VerifyConfig& cfg) {
  const std::size_t total = cfg.samples.value_or(10000);
  const std::size_t small = std::min<std::size_t>(total, 100);
  constexpr double h = 1e-5;

  const Stats critical = fan_out(total, cfg.seed, cfg.threads, [&](Rng& rng, std::size_t i, Stats& st) {
    const std::size_t n = 2 + i % 2;
    const std::size_t rank = 1 + (i / 2) % 3;
    st.hi("su_residual", moment_residual(sample_tuple({Family::SU, n}, rank, rng), cfg.tol).norm);
  });

  const Stats gradient = fan_out(small, cfg.seed + 1, cfg.threads, [&](Rng& rng, std::size_t i, Stats& st) {
    const std::size_t n = 2 + i % 2;
    const RepTuple rho = sample_tuple({Family::SL, n}, 2, rng, kSpread);
    const CMat hh = random_traceless_hermitian(n, rng);
    const double analytic = 2.0 * (hh * moment_residual(rho, cfg.tol).M).trace().real();
    auto moved = [&](double s) {
      const CMat left = exp_herm(hh, s);
      const CMat right = exp_herm(hh, -s);
      RepTuple out{rho.group, {}};
      for (const auto& x : rho.mats) out.mats.push_back(left * x * right);
      return kn_functional(out, 1e-6);
    };
    const double up = moved(h);
    const double central = (up - moved(-h)) / (2.0 * h);
    const double forward = (up - kn_functional(rho, cfg.tol)) / h;
    st.hi("gradient_relative_error", std::abs(central - analytic) / std::abs(analytic));
    st.hi("forward_relative_error", std::abs(forward - analytic) / std::abs(analytic));
  });

  const Stats flow = fan_out(small, cfg.seed + 2, cfg.threads, [&](Rng& rng, std::size_t i, Stats& st) {
    const std::size_t n = 2 + i % 2;
    const RepTuple k = sample_tuple({Family::SU, n}, 2, rng);
    const CMat g = sample_tuple({Family::SL, n}, 1, rng, kSpread)[0];
    RepTuple rho = conjugate_tuple(g, k);
    rho.group.family = Family::SL;
    const FlowResult res = kn_flow(rho, 100000, cfg.tol);
    if (!res.trace.converged) st.inc("not_converged");
    for (std::size_t q = 1; q < res.trace.steps.size(); ++q)
      if (res.trace.steps[q].p > res.trace.steps[q - 1].p) st.inc("functional_increases");
    st.hi("functional_error", std::abs(kn_functional(res.rho, 1e-8) - static_cast<double>(2 * n)));
    for (const auto& w : enumerate_words(2, 3)) st.hi("word_trace_change", std::abs(trace_word(res.rho, w) - trace_word(rho, w)));
    for (const auto& x : res.rho.mats) st.hi("final_unitarity", distance(x * x.adjoint(), CMat::identity(n)));
    st.hi("iterations", static_cast<double>(res.trace.steps.size() - 1));
  });

  SuiteReport r{"kempf-ness", total, {}, Json::object(), 0.0};
  r.details["gradient_samples"] = small;
  r.details["flow_samples"] = small;
  r.details["max_flow_iterations"] = flow.get("iterations");
  // Forward differences carry an O(h) truncation term; reported, not checked.
  r.details["forward_difference_relative_error"] = gradient.get("forward_relative_error");
  r.checks = {below("su_residual", critical.get("su_residual"), 1e-12),
              below("gradient_relative_error", gradient.get("gradient_relative_error"), 1e-3),
              none("not_converged", flow.n("not_converged")),
              none("functional_increases", flow.n("functional_increases")),
              at_most("functional_error", flow.get("functional_error"), 1e-6),
              at_most("word_trace_change", flow.get("word_trace_change"), 1e-8),
              at_most("final_unitarity", flow.get("final_unitarity"), 1e-5)};
  return r;
}

SuiteReport baird_suite(const VerifyConfig& cfg) {
  const std::size_t max_r = cfg.samples.value_or(10);
  std::size_t remainder = 0, low_terms = 0, degree = 0;
  Json polys = Json::array();
  std::vector<IntPolynomial> got;
  for (std::size_t r = 1; r <= max_r; ++r) {
    IntPolynomial p;
    try {
      p = baird_poly(static_cast<int>(r));
    } catch (const Error&) {
      ++remainder;
      got.emplace_back();
      continue;
    }
    if (p.coefficient(0) != 1 || (r >= 2 && p.coefficient(1) != 0)) ++low_terms;
    if (r >= 3 && p.degree() != static_cast<int>(3 * r - 3)) ++degree;
    polys.push_back({{"r", r}, {"coefficients", Json::parse(p.json())}, {"polynomial", p.str()}});
    got.push_back(std::move(p));
  }
  const std::array<IntPolynomial, 3> expected{IntPolynomial{1}, IntPolynomial{1}, IntPolynomial{1, 0, 0, 0, 0, 0, 1}};
  std::size_t small_ranks = 0;
  for (std::size_t i = 0; i < std::min<std::size_t>(3, got.size()); ++i)
    if (!(got[i] == expected[i])) ++small_ranks;

  const SurfacePolys sp = surface_counterexample_polys();
  std::size_t surface = sp.differ ? 0 : 1;
  for (std::size_t i = 0; i <= 6; ++i) {
    const bool differs = sp.fixed_determinant.coefficient(i) != sp.character_variety.coefficient(i);
    if (differs != (i >= 4)) ++surface;
  }

  SuiteReport r{"baird", max_r, {}, Json::object(), 0.0};
  r.details["polynomials"] = std::move(polys);
  r.details["surface"] = {{"fixed_determinant", Json::parse(sp.fixed_determinant.json())},
                          {"character_variety", Json::parse(sp.character_variety.json())}};
  r.checks = {none("nonzero_remainder", remainder), none("rank_1_2_3_mismatch", small_ranks),
              none("constant_or_linear_term", low_terms), none("degree_not_3r_minus_3", degree),
              none("surface_difference_pattern", surface)};
  return r;
}

SuiteReport figures_suite(const VerifyConfig& cfg) {
  const std::size_t res = cfg.samples.value_or(64);
  const double h = 1.5 * std::numbers::sqrt3;
  const RegionGrid alcove = region_grid("su3-alcove", res);
  const std::array<std::array<double, 2>, 3> corners{{{3.0, 0.0}, {-1.5, h}, {-1.5, -h}}};
  double corner_margin = 0.0;
  for (const auto& c : corners) {
    double m = kInf;
    for (const auto& row : alcove.rows)
      if (row[0] == c[0] && row[1] == c[1]) m = std::abs(row[2]);
    corner_margin = std::max(corner_margin, m);
  }

  const RegionGrid tet = region_grid("su2-tetrahedron-boundary", res);
  const std::array<std::array<double, 3>, 4> points{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  std::size_t missing = 0;
  for (const auto& p : points)
    if (std::none_of(tet.rows.begin(), tet.rows.end(), [&](const auto& row) { return row[0] == p[0] && row[1] == p[1] && row[2] == p[2]; }))
      ++missing;
  double boundary_sigma = 0.0;
  for (const auto& row : tet.rows) boundary_sigma = std::max(boundary_sigma, std::abs(cayley(row[0], row[1], row[2])));

  SuiteReport r{"figures", res, {}, Json::object(), 0.0};
  r.details["alcove_rows"] = alcove.rows.size();
  r.details["boundary_rows"] = tet.rows.size();
  r.checks = {below("alcove_corner_margin", corner_margin, 1e-9), none("alcove_row_count", alcove.rows.size() == res * res ? 0 : 1),
              none("missing_tetrahedron_vertices", missing), below("boundary_sigma", boundary_sigma, 1e-12)};
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Json SuiteReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["samples"] = samples;
  j["seconds"] = seconds;
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json v = std::isfinite(c.value) ? Json(c.value) : Json("inf");
    cs.push_back({{"name", c.name}, {"value", v}, {"bound", c.bound}, {"passed", c.passed}});
  }
  j["checks"] = std::move(cs);
  j["details"] = details;
  return j;
}

std::vector<std::string> suite_names() {
  return {"fricke", "su3-membership", "baird", "retraction", "sigma", "rank3",
          "example", "transpose", "minors", "kempf-ness", "figures"};
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& config) {
  using Runner = SuiteReport (*)(const VerifyConfig&);
  static const std::map<std::string, Runner> runners{
      {"fricke", fricke_suite},       {"su3-membership", su3_membership_suite}, {"baird", baird_suite},
      {"retraction", retraction_suite}, {"sigma", sigma_suite},               {"rank3", rank3_suite},
      {"example", example_suite},     {"transpose", transpose_suite},           {"minors", minors_suite},
      {"kempf-ness", kempf_ness_suite}, {"figures", figures_suite}};
  const auto it = runners.find(name);
  if (it == runners.end()) throw Error(ErrorKind::BadParameter, "unknown verify suite '" + name + "'");
  if (config.samples && *config.samples == 0) throw Error(ErrorKind::BadParameter, "samples must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report = it->second(config);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace charvar
