#pragma once

#include <string>
#include <vector>

#include "tiling/geometry.hpp"

namespace tiling {

// A decorated j-face (p, q): support = closed complex of the intersection of
// the tiles of p, q = every tile meeting the support.
struct Face {
  int j = 0;
  Patch p, q;
  std::vector<Cell> support;  // full closed complex, sorted
  IVec ref{};                 // anchor of the least j-cell of the support
  Coordinate puncture;

  bool operator==(const Face& o) const { return j == o.j && p == o.p && q == o.q; }
};

Face translate_face(const Face& f, const IVec& v);
// Translate so that ref sits at the origin.
Face canonical_face(const Face& f);

// Maximal cells of a closed complex.
std::vector<Cell> maximal_cells(const std::vector<Cell>& complex);

// Every j-face of p whose collar is determined inside p. j = -1 extracts all
// dimensions. Supports that are disconnected or of mixed dimension are
// skipped and described in *rejections when given.
std::vector<Face> extract_faces(const ShapeTable& shapes, const Patch& p, int j,
                                std::vector<std::string>* rejections = nullptr);

// f lies on the boundary of g: p_g strictly inside p_f and q_f strictly inside q_g.
bool on_boundary(const Face& f, const Face& g);
// Intersecting faces: p_f inside q_g and p_g inside q_f.
bool faces_intersect(const Face& f, const Face& g);
// Exact max-metric distance between supports.
std::int64_t face_distance(const Face& f, const Face& g, int dim);

struct Adjacency {
  bool boundary = false;           // first argument on the boundary of the second
  std::vector<Face> intersection;  // maximal common lower-dimensional faces
};

// Throws GeometryError when q_f and q_g do not fit in one patch.
Adjacency face_adjacency(const ShapeTable& shapes, const Face& f, const Face& g);

std::string describe_face(const ShapeTable& shapes, const Face& f);

}  // namespace tiling
