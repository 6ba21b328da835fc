#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace charvar {

/// Rows of a figure grid; `columns` names the entries of each row.
struct RegionGrid {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// (p1, p2, margin) with margin the quartic alcove margin at tau = p1 + i p2,
/// on a resolution x resolution grid of [-3/2, 3] x [-3 sqrt3/2, 3 sqrt3/2].
/// For even resolutions the p2 node nearest zero is moved to zero so the grid
/// always meets the real axis.
RegionGrid su3_alcove_grid(std::size_t resolution);

/// (a1, a2, a3) = cos(pi theta) for theta on the boundary of the tetrahedron
/// with vertices (0,0,0), (1,1,0), (1,0,1), (0,1,1): barycentric grids with
/// resolution - 1 subdivisions per edge on each face, shared points listed once.
RegionGrid su2_tetrahedron_boundary(std::size_t resolution);

/// Dispatch by name ("su3-alcove", "su2-tetrahedron-boundary"). Throws
/// UnknownRegion, or BadParameter if resolution < 16.
RegionGrid region_grid(const std::string& name, std::size_t resolution);

std::vector<std::string> region_names();

/// Comma separated, '.' decimal, 17 significant digits.
void write_csv(std::ostream& os, const RegionGrid& grid);

}  // namespace charvar
