#pragma once

// Exact lattice geometry for polycube tiles.
//
// Every tile is a finite union of closed unit d-cubes with integer anchors.
// Tiles of a patch always sit at integer translates of their prototile, so
// cell bookkeeping is plain integer arithmetic. Punctures and translation
// vectors between tilings are lambda-adic points (Coordinate).

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tiling {

inline constexpr int kMaxDim = 3;

using IVec = std::array<std::int64_t, kMaxDim>;

inline IVec operator+(IVec a, const IVec& b) {
  for (int i = 0; i < kMaxDim; ++i) a[i] += b[i];
  return a;
}
inline IVec operator-(IVec a, const IVec& b) {
  for (int i = 0; i < kMaxDim; ++i) a[i] -= b[i];
  return a;
}
inline IVec operator-(IVec a) {
  for (auto& x : a) x = -x;
  return a;
}
inline IVec operator*(std::int64_t k, IVec a) {
  for (auto& x : a) x *= k;
  return a;
}

std::int64_t ipow(std::int64_t base, int exp);
std::int64_t norm_inf(const IVec& v);
std::string to_string(const IVec& v, int dim);

// Thrown on malformed geometric input (bad dimension, non-lattice data).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lambda-adic point numerator / lambda^exponent in Z^d.
// Canonical: exponent > 0 implies some numerator component is not divisible
// by lambda. A Coordinate of dimension 1 doubles as an exact scalar.
class Coordinate {
 public:
  Coordinate() = default;
  Coordinate(int dim, int lambda, IVec numerator, int exponent);

  static Coordinate integral(int dim, int lambda, const IVec& v) {
    return Coordinate(dim, lambda, v, 0);
  }
  static Coordinate scalar(int lambda, std::int64_t numerator, int exponent = 0) {
    return Coordinate(1, lambda, IVec{numerator, 0, 0}, exponent);
  }

  int dim() const { return dim_; }
  int lambda() const { return lambda_; }
  int exponent() const { return exp_; }
  const IVec& numerator() const { return num_; }

  Coordinate operator+(const Coordinate& o) const;
  Coordinate operator-(const Coordinate& o) const;
  Coordinate operator-() const;
  Coordinate operator+(const IVec& v) const { return *this + integral(dim_, lambda_, v); }
  Coordinate operator-(const IVec& v) const { return *this - integral(dim_, lambda_, v); }

  // Multiply by lambda^k; k may be negative.
  Coordinate scaled(int k) const;

  bool is_integral() const { return exp_ == 0; }
  // Throws GeometryError when the point is not on the integer lattice.
  IVec to_ivec() const;
  double component(int i) const;

  // Max-metric norm as a 1-dimensional coordinate.
  Coordinate norm_inf() const;

  std::string str() const;

  bool operator==(const Coordinate&) const = default;
  auto operator<=>(const Coordinate&) const = default;

 private:
  void canonicalize();

  int dim_ = 0;
  int lambda_ = 2;
  IVec num_{};
  int exp_ = 0;
};

// Exact comparison of two scalars (dimension 1 coordinates) by value.
std::strong_ordering compare_scalar(const Coordinate& a, const Coordinate& b);

std::ostream& operator<<(std::ostream& os, const Coordinate& c);

// A closed unit cube face: anchor + sum over free axes of [0,1] e_i.
struct Cell {
  IVec anchor{};
  std::uint8_t axes = 0;

  int dim() const { return __builtin_popcount(axes); }
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

// All faces of a cell including itself (3^dim cells).
std::vector<Cell> closure(const Cell& c, int ambient_dim);

// Chebyshev distance between two closed cells, exact on the lattice.
std::int64_t cell_distance(const Cell& a, const Cell& b, int dim);

// Point-set containment of a unit cell in lambda * big (big a unit cell).
bool cell_in_scaled(const Cell& small, const Cell& big, std::int64_t lambda, int dim);

struct Prototile {
  std::string label;
  std::vector<IVec> cells;  // anchors of unit d-cubes
  Coordinate puncture;
};

// The shape table every geometric operation refers to.
struct ShapeTable {
  int dim = 1;
  int lambda = 2;
  std::vector<Prototile> protos;
};

struct Tile {
  int proto = 0;
  IVec shift{};  // translation applied to the prototile's canonical cells

  bool operator==(const Tile&) const = default;
  auto operator<=>(const Tile&) const = default;
};

Coordinate puncture(const ShapeTable& shapes, const Tile& t);
std::vector<Cell> tile_cells(const ShapeTable& shapes, const Tile& t);  // d-cells
// Every cell of the closed complex of the tile, sorted and deduplicated.
std::vector<Cell> tile_complex(const ShapeTable& shapes, const Tile& t);

// A finite set of tiles, kept sorted and duplicate free.
class Patch {
 public:
  Patch() = default;
  explicit Patch(std::vector<Tile> tiles);

  const std::vector<Tile>& tiles() const { return tiles_; }
  std::size_t size() const { return tiles_.size(); }
  bool empty() const { return tiles_.empty(); }
  bool contains(const Tile& t) const;
  bool includes(const Patch& other) const;  // other is a subpatch

  bool operator==(const Patch&) const = default;
  auto operator<=>(const Patch&) const = default;

 private:
  std::vector<Tile> tiles_;
};

Patch translate_patch(const Patch& p, const IVec& v);
// Translation by a lambda-adic vector; only lattice vectors move tiles onto
// tiles, so a non-integral v raises GeometryError.
Patch translate_patch(const Patch& p, const Coordinate& v);

Patch patch_union(const Patch& a, const Patch& b);

// All j-cells of the closed cell complex of p, deduplicated and sorted.
std::vector<Cell> patch_cells(const ShapeTable& shapes, const Patch& p, int j);

// Interior-disjointness check. Intersections of lattice polycubes are always
// lattice subcomplexes, so this is the whole cellularity condition here.
bool is_cellular(const ShapeTable& shapes, const Patch& p);

// Whether the point lies in the interior of the union of the given unit cubes.
bool point_in_interior(const std::vector<IVec>& cubes, const Coordinate& point, int dim);

// Bounding box of the support, as [lo, hi] integer corners.
std::pair<IVec, IVec> bounding_box(const ShapeTable& shapes, const Patch& p);

}  // namespace tiling
