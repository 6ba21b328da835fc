#include "charvar/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "charvar/figures.hpp"
#include "charvar/json_io.hpp"
#include "charvar/poincare.hpp"
#include "charvar/retraction.hpp"
#include "charvar/verify.hpp"

namespace charvar {

namespace {

struct Options {
  std::string group = "SU";
  std::size_t n = 2;
  std::size_t r = 2;
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;
  std::optional<double> tol;
  std::string format = "json";
  std::string out;
  double t = 1.0;
  std::optional<int> sign;
  std::size_t max_iter = 100000;
  std::size_t resolution = 64;
  unsigned threads = 0;
  bool composite = false;
  bool surface = false;
  std::vector<std::string> inputs;
  std::string name;
};

double effective_tol(const Options& o) {
  if (o.tol) {
    if (!(*o.tol > 0.0)) throw Error(ErrorKind::BadParameter, "--tol must be positive");
    return *o.tol;
  }
  if (const char* env = std::getenv("CHARVAR_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) throw Error(ErrorKind::BadParameter, "CHARVAR_TOL must be a positive number");
    return v;
  }
  return kDefaultTol;
}

Json read_json(const std::string& path, std::istream& in) {
  std::stringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string input_at(const Options& o, std::size_t i) { return i < o.inputs.size() ? o.inputs[i] : std::string(); }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw Error(ErrorKind::BadParameter, "unsupported --format '" + o.format + "' for this command");
}

void emit_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

// --- commands ----------------------------------------------------------------

int cmd_sample(const Options& o, std::istream&, std::ostream& os) {
  require_format(o, {"json"});
  Rng rng(o.seed);
  const std::size_t count = o.samples.value_or(1);
  const GroupDescriptor d{parse_family(o.group), o.n};
  if (count == 1) {
    emit_json(os, to_json(sample_tuple(d, o.r, rng)));
  } else {
    Json all = Json::array();
    for (std::size_t i = 0; i < count; ++i) all.push_back(to_json(sample_tuple(d, o.r, rng)));
    emit_json(os, all);
  }
  return 0;
}

int cmd_invariants(const Options& o, std::istream& in, std::ostream& os) {
  require_format(o, {"json", "csv"});
  const InvariantRecord rec = invariant_record(tuple_from_json(read_json(input_at(o, 0), in)), effective_tol(o));
  if (o.format == "json") {
    emit_json(os, to_json(rec));
  } else {
    os.imbue(std::locale::classic());
    os.precision(17);
    os << "name,re,im\n";
    for (const auto& [name, z] : rec.values) os << name << ',' << z.real() << ',' << z.imag() << '\n';
  }
  return 0;
}

int cmd_region(const Options& o, std::istream&, std::ostream& os) {
  require_format(o, {"csv", "json"});
  const RegionGrid grid = region_grid(o.name, o.resolution);
  if (o.format == "csv") {
    write_csv(os, grid);
  } else {
    emit_json(os, {{"region", o.name}, {"columns", grid.columns}, {"rows", grid.rows}});
  }
  return 0;
}

int cmd_verify(const Options& o, std::istream&, std::ostream& os) {
  require_format(o, {"json"});
  VerifyConfig cfg;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.tol = effective_tol(o);
  cfg.threads = o.threads;
  // The baird suite prints ranks 1..8 unless --samples says otherwise.
  if (o.name == "baird" && !cfg.samples) cfg.samples = 8;
  std::vector<std::string> names = o.name == "all" ? suite_names() : std::vector<std::string>{o.name};
  Json reports = Json::array();
  bool ok = true;
  for (const auto& name : names) {
    const SuiteReport rep = run_suite(name, cfg);
    ok = ok && rep.passed();
    reports.push_back(rep.to_json());
  }
  emit_json(os, names.size() == 1 ? reports[0] : Json{{"passed", ok}, {"suites", reports}});
  return ok ? 0 : 1;
}

int cmd_retract(const Options& o, std::istream& in, std::ostream& os) {
  require_format(o, {"json"});
  const double tol = effective_tol(o);
  const RepTuple rho = tuple_from_json(read_json(input_at(o, 0), in));
  if (!o.composite) {
    emit_json(os, to_json(retract_tuple(rho, o.t, tol)));
    return 0;
  }
  const CompositeResult c = composite_retraction(rho, o.t, o.max_iter, tol);
  Json j = to_json(c.rho_t);
  j["before"] = to_json(c.before);
  j["after"] = to_json(c.after);
  j["flow_converged"] = c.flow.converged;
  j["flow_iterations"] = c.flow.steps.size() - 1;
  emit_json(os, j);
  return 0;
}

int cmd_flow(const Options& o, std::istream& in, std::ostream& os) {
  require_format(o, {"json", "csv"});
  const RepTuple rho = tuple_from_json(read_json(input_at(o, 0), in));
  const FlowResult res = kn_flow(rho, o.max_iter, effective_tol(o));
  if (o.format == "csv") {
    write_csv(os, res.trace);
    return 0;
  }
  Json j = to_json(res.rho);
  j["converged"] = res.trace.converged;
  j["trace"] = to_json(res.trace)["steps"];
  emit_json(os, j);
  return 0;
}

int cmd_lift(const Options& o, std::istream& in, std::ostream& os) {
  require_format(o, {"json"});
  const double tol = effective_tol(o);
  const Json input = read_json(input_at(o, 0), in);
  const Json& values = input.contains("values") ? input["values"] : input;
  const bool rank3 = values.is_object() && values.contains("a12");
  LiftResult lift = rank3 ? su2_rank3_lift(rank3_coords_from_json(input), o.sign, tol)
                          : su2_rank2_lift(rank2_coords_from_json(input), tol);
  Json j = to_json(lift.tuples.front());
  if (rank3) {
    j["sign"] = lift.signs.front();
    j["unique"] = lift.unique;
    j["t123"] = lift.t123;
    if (lift.tuples.size() > 1) {
      Json alt = to_json(lift.tuples[1]);
      alt["sign"] = lift.signs[1];
      j["alternate"] = std::move(alt);
    }
  }
  emit_json(os, j);
  return 0;
}

int cmd_conjugacy(const Options& o, std::istream& in, std::ostream& os) {
  require_format(o, {"json"});
  if (o.inputs.size() != 2) throw Error(ErrorKind::BadParameter, "conjugacy needs two tuple files ('-' for standard input)");
  const RepTuple a = tuple_from_json(read_json(o.inputs[0], in));
  const RepTuple b = tuple_from_json(read_json(o.inputs[1], in));
  const auto k = unitary_conjugacy(a, b, effective_tol(o));
  Json j{{"conjugate", k.has_value()}};
  if (k) j["k"] = to_json(*k);
  emit_json(os, j);
  return 0;
}

int cmd_poincare(const Options& o, std::istream&, std::ostream& os) {
  require_format(o, {"json"});
  if (o.surface) {
    const SurfacePolys s = surface_counterexample_polys();
    emit_json(os, {{"fixed_determinant", Json::parse(s.fixed_determinant.json())},
                   {"character_variety", Json::parse(s.character_variety.json())},
                   {"differ", s.differ}});
    return 0;
  }
  const IntPolynomial p = baird_poly(static_cast<int>(o.r));
  emit_json(os, {{"r", o.r}, {"coefficients", Json::parse(p.json())}, {"polynomial", p.str()}});
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character varieties of free groups: retractions, invariants and membership tests", "charvar"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "tolerance (default 1e-9, or CHARVAR_TOL)");
    sub->add_option("--format", o.format, "json or csv");
    sub->add_option("--out", o.out, "output path (default standard output)");
  };
  auto input = [&](CLI::App* sub, const char* what) { sub->add_option("input", o.inputs, what); };

  auto* sample = app.add_subcommand("sample", "sample a tuple");
  sample->add_option("--group", o.group, "SU or SL");
  sample->add_option("--n", o.n, "matrix size")->check(CLI::PositiveNumber);
  sample->add_option("--r", o.r, "rank");
  sample->add_option("--seed", o.seed, "random seed");
  sample->add_option("--samples", o.samples, "number of tuples")->check(CLI::PositiveNumber);
  common(sample);

  auto* invariants = app.add_subcommand("invariants", "invariant coordinates of a tuple");
  input(invariants, "tuple JSON file (default standard input)");
  common(invariants);

  auto* region = app.add_subcommand("region", "figure data grids");
  region->add_option("name", o.name, "su3-alcove or su2-tetrahedron-boundary")->required();
  region->add_option("--resolution", o.resolution, "grid resolution (>= 16)");
  common(region);

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", o.name, "suite name or 'all'")->required();
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--samples", o.samples, "sample count")->check(CLI::PositiveNumber);
  verify->add_option("--threads", o.threads, "worker threads (0: all cores)");
  common(verify);

  auto* retract = app.add_subcommand("retract", "retract a tuple for time t");
  input(retract, "tuple JSON file (default standard input)");
  retract->add_option("--t", o.t, "retraction time in [0, 1]");
  retract->add_flag("--composite", o.composite, "flow to the critical set first and report invariants");
  retract->add_option("--max-iter", o.max_iter, "flow iteration limit");
  common(retract);

  auto* flow = app.add_subcommand("flow", "Kempf-Ness descent");
  input(flow, "tuple JSON file (default standard input)");
  flow->add_option("--max-iter", o.max_iter, "iteration limit");
  common(flow);

  auto* lift = app.add_subcommand("lift", "SU(2) tuple from rank-2 or rank-3 coordinates");
  input(lift, "invariants JSON file (default standard input)");
  lift->add_option("--sign", o.sign, "sheet, +1 or -1 (rank 3)");
  common(lift);

  auto* conj = app.add_subcommand("conjugacy", "search k with k rho1 k^-1 = rho2");
  conj->add_option("inputs", o.inputs, "two tuple JSON files")->expected(2);
  common(conj);

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomials");
  poincare->add_option("--r", o.r, "rank")->check(CLI::PositiveNumber);
  poincare->add_flag("--surface", o.surface, "the two surface-group polynomials");
  common(poincare);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    // region defaults to csv unless asked otherwise.
    bool format_given = std::find(args.begin(), args.end(), "--format") != args.end() ||
                        std::any_of(args.begin(), args.end(), [](const std::string& a) { return a.rfind("--format=", 0) == 0; });
    app.parse(rev);
    if (region->parsed() && !format_given) o.format = "csv";
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ofstream file;
    std::ostream* os = &out;
    if (!o.out.empty()) {
      file.open(o.out);
      if (!file) throw Error(ErrorKind::BadParameter, "cannot write '" + o.out + "'");
      os = &file;
    }
    int code = 0;
    if (sample->parsed()) code = cmd_sample(o, in, *os);
    else if (invariants->parsed()) code = cmd_invariants(o, in, *os);
    else if (region->parsed()) code = cmd_region(o, in, *os);
    else if (verify->parsed()) code = cmd_verify(o, in, *os);
    else if (retract->parsed()) code = cmd_retract(o, in, *os);
    else if (flow->parsed()) code = cmd_flow(o, in, *os);
    else if (lift->parsed()) code = cmd_lift(o, in, *os);
    else if (conj->parsed()) code = cmd_conjugacy(o, in, *os);
    else if (poincare->parsed()) code = cmd_poincare(o, in, *os);
    os->flush();
    return code;
  } catch (const Error& e) {
    err << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
}

}  // namespace charvar
