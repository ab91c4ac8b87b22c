#pragma once

#include <optional>
#include <string>

#include "tiling/geometry.hpp"

namespace tiling {

struct SvgOptions {
  int pixels_per_unit = 16;
  bool punctures = true;
  std::optional<Coordinate> origin;  // drawn as a ring
  std::vector<Cell> highlight;       // extra cells stroked in red
};

// Planar or linear patches only; throws GeometryError for d = 3. The
// viewBox is the bounding box of the patch in lattice units.
std::string export_svg(const ShapeTable& shapes, const Patch& patch, const SvgOptions& opt = {});

// Cells of dimension j on the boundary of both supports.
std::vector<Cell> common_boundary_cells(const ShapeTable& shapes, const Patch& inner, const Patch& outer, int j);

}  // namespace tiling
