#include "charvar/figures.hpp"

#include <cmath>
#include <locale>
#include <numbers>
#include <ostream>
#include <set>

#include "charvar/error.hpp"
#include "charvar/semialgebraic.hpp"

namespace charvar {

namespace {

constexpr std::size_t kMinResolution = 16;

double node(double lo, double hi, std::size_t i, std::size_t count) {
  if (i + 1 == count) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

}  // namespace

RegionGrid su3_alcove_grid(std::size_t resolution) {
  if (resolution < 2) throw Error(ErrorKind::BadParameter, "resolution must be at least 2");
  const double h = 1.5 * std::numbers::sqrt3;
  std::vector<double> p2(resolution);
  std::size_t nearest = 0;
  for (std::size_t j = 0; j < resolution; ++j) {
    p2[j] = node(-h, h, j, resolution);
    if (std::abs(p2[j]) < std::abs(p2[nearest])) nearest = j;
  }
  p2[nearest] = 0.0;

  RegionGrid grid{{"p1", "p2", "margin"}, {}};
  grid.rows.reserve(resolution * resolution);
  for (std::size_t i = 0; i < resolution; ++i) {
    const double p1 = node(-1.5, 3.0, i, resolution);
    for (double y : p2) grid.rows.push_back({p1, y, su3_alcove_margin({p1, y})});
  }
  return grid;
}

RegionGrid su2_tetrahedron_boundary(std::size_t resolution) {
  if (resolution < 2) throw Error(ErrorKind::BadParameter, "resolution must be at least 2");
  using IVec = std::array<long, 3>;
  constexpr std::array<IVec, 4> vertices{{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
  const long m = static_cast<long>(resolution) - 1;

  // Points are kept as m * theta so shared edges dedupe exactly.
  std::set<IVec> seen;
  RegionGrid grid{{"a1", "a2", "a3"}, {}};
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::array<IVec, 3> face{};
    std::size_t f = 0;
    for (std::size_t v = 0; v < 4; ++v)
      if (v != skip) face[f++] = vertices[v];
    for (long i = 0; i <= m; ++i)
      for (long j = 0; i + j <= m; ++j) {
        const long k = m - i - j;
        IVec p{};
        for (std::size_t c = 0; c < 3; ++c) p[c] = i * face[0][c] + j * face[1][c] + k * face[2][c];
        if (!seen.insert(p).second) continue;
        std::vector<double> row(3);
        for (std::size_t c = 0; c < 3; ++c) {
          // cos is evaluated exactly at the vertices.
          if (p[c] == 0) row[c] = 1.0;
          else if (p[c] == m) row[c] = -1.0;
          else row[c] = std::cos(std::numbers::pi * static_cast<double>(p[c]) / static_cast<double>(m));
        }
        grid.rows.push_back(std::move(row));
      }
  }
  return grid;
}

std::vector<std::string> region_names() { return {"su3-alcove", "su2-tetrahedron-boundary"}; }

RegionGrid region_grid(const std::string& name, std::size_t resolution) {
  if (name != "su3-alcove" && name != "su2-tetrahedron-boundary") throw Error(ErrorKind::UnknownRegion, "unknown region '" + name + "'");
  if (resolution < kMinResolution) throw Error(ErrorKind::BadParameter, "resolution must be at least 16");
  return name == "su3-alcove" ? su3_alcove_grid(resolution) : su2_tetrahedron_boundary(resolution);
}

void write_csv(std::ostream& os, const RegionGrid& grid) {
  const auto old_locale = os.imbue(std::locale::classic());
  const auto flags = os.flags();
  const auto precision = os.precision(17);
  for (std::size_t i = 0; i < grid.columns.size(); ++i) os << (i ? "," : "") << grid.columns[i];
  os << '\n';
  for (const auto& row : grid.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
  os.flags(flags);
  os.precision(precision);
  os.imbue(old_locale);
}

}  // namespace charvar
