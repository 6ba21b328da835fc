#include "charvar/json_io.hpp"

namespace charvar {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RepTuple& rho) {
  Json j;
  j["family"] = rho.group.family == Family::SU ? "SU" : "SL";
  j["n"] = rho.dim();
  j["r"] = rho.rank();
  Json mats = Json::array();
  for (const auto& m : rho.mats) mats.push_back(to_json(m));
  j["matrices"] = std::move(mats);
  return j;
}

namespace {

Complex complex_from_json(const Json& z) {
  if (z.is_number()) return {z.get<double>(), 0.0};
  if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number())
    return {z[0].get<double>(), z[1].get<double>()};
  throw Error(ErrorKind::Parse, "expected a number or a [re, im] pair");
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(ErrorKind::Parse, std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t size_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw Error(ErrorKind::Parse, std::string("'") + name + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

const Json& values_of(const Json& j) {
  if (j.is_object() && j.contains("values")) return j.at("values");
  return j;
}

double real_value(const Json& values, const char* name) {
  const Complex z = complex_from_json(field(values, name));
  if (std::abs(z.imag()) > 1e-10) throw Error(ErrorKind::ComplexInput, std::string("'") + name + "' must be real");
  return z.real();
}

}  // namespace

CMat matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix must have n rows");
  CMat m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix rows must have n entries");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

RepTuple tuple_from_json(const Json& j) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) throw Error(ErrorKind::Parse, "'family' must be a string");
  RepTuple rho;
  try {
    rho.group.family = parse_family(fam.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  rho.group.n = size_field(j, "n");
  if (rho.group.n == 0) throw Error(ErrorKind::Parse, "'n' must be positive");
  const Json& mats = field(j, "matrices");
  if (!mats.is_array()) throw Error(ErrorKind::Parse, "'matrices' must be an array");
  if (j.contains("r") && size_field(j, "r") != mats.size())
    throw Error(ErrorKind::DimensionMismatch, "'r' disagrees with the number of matrices");
  for (const auto& m : mats) rho.mats.push_back(matrix_from_json(m, rho.group.n));
  return rho;
}

Json to_json(const RegionVerdict& v) {
  Json j;
  j["inside"] = v.inside;
  j["on_boundary"] = v.on_boundary;
  Json margins = Json::object();
  for (const auto& m : v.margins) margins[m.name] = m.value;
  j["margins"] = std::move(margins);
  return j;
}

Json to_json(const InvariantRecord& rec) {
  Json j;
  j["system"] = rec.system;
  Json values = Json::object();
  for (const auto& [name, z] : rec.values) {
    if (rec.real_valued) values[name] = z.real();
    else values[name] = complex_json(z);
  }
  j["values"] = std::move(values);
  return j;
}

InvariantRecord record_from_json(const Json& j) {
  InvariantRecord rec;
  const Json& sys = field(j, "system");
  if (!sys.is_string()) throw Error(ErrorKind::Parse, "'system' must be a string");
  rec.system = sys.get<std::string>();
  const Json& values = field(j, "values");
  if (!values.is_object()) throw Error(ErrorKind::Parse, "'values' must be an object");
  rec.real_valued = true;
  for (const auto& [name, v] : values.items()) {
    if (!v.is_number()) rec.real_valued = false;
    rec.values.emplace_back(name, complex_from_json(v));
  }
  return rec;
}

SU2Rank2Coords rank2_coords_from_json(const Json& j) {
  const Json& v = values_of(j);
  return {real_value(v, "a1"), real_value(v, "a2"), real_value(v, "a3")};
}

SU2Rank3Coords rank3_coords_from_json(const Json& j) {
  const Json& v = values_of(j);
  return {real_value(v, "a1"),  real_value(v, "a2"),  real_value(v, "a3"),
          real_value(v, "a12"), real_value(v, "a13"), real_value(v, "a23")};
}

Json to_json(const FlowTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) steps.push_back({{"iter", s.iter}, {"p", s.p}, {"residual", s.residual}, {"step", s.step}});
  return {{"converged", trace.converged}, {"steps", std::move(steps)}};
}

}  // namespace charvar
