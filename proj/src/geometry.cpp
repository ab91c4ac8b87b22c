#include "tiling/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace tiling {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t norm_inf(const IVec& v) {
  std::int64_t m = 0;
  for (auto x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

std::string to_string(const IVec& v, int dim) {
  std::ostringstream os;
  for (int i = 0; i < dim; ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

Coordinate::Coordinate(int dim, int lambda, IVec numerator, int exponent)
    : dim_(dim), lambda_(lambda), num_(numerator), exp_(exponent) {
  if (dim < 0 || dim > kMaxDim) throw GeometryError("coordinate dimension out of range");
  if (lambda < 2) throw GeometryError("lambda must be at least 2");
  for (int i = dim; i < kMaxDim; ++i) num_[i] = 0;
  canonicalize();
}

void Coordinate::canonicalize() {
  if (exp_ < 0) {
    num_ = ipow(lambda_, -exp_) * num_;
    exp_ = 0;
  }
  while (exp_ > 0 &&
         std::all_of(num_.begin(), num_.end(), [&](std::int64_t x) { return x % lambda_ == 0; })) {
    for (auto& x : num_) x /= lambda_;
    --exp_;
  }
}

Coordinate Coordinate::operator+(const Coordinate& o) const {
  if (o.dim_ != dim_ || o.lambda_ != lambda_) throw GeometryError("incompatible coordinates");
  int e = std::max(exp_, o.exp_);
  IVec n = ipow(lambda_, e - exp_) * num_ + ipow(lambda_, e - o.exp_) * o.num_;
  return Coordinate(dim_, lambda_, n, e);
}

Coordinate Coordinate::operator-(const Coordinate& o) const { return *this + (-o); }

Coordinate Coordinate::operator-() const {
  Coordinate c = *this;
  c.num_ = -num_;
  return c;
}

Coordinate Coordinate::scaled(int k) const { return Coordinate(dim_, lambda_, num_, exp_ - k); }

IVec Coordinate::to_ivec() const {
  if (exp_ != 0) throw GeometryError("coordinate " + str() + " is not a lattice point");
  return num_;
}

double Coordinate::component(int i) const {
  return static_cast<double>(num_[i]) / static_cast<double>(ipow(lambda_, exp_));
}

Coordinate Coordinate::norm_inf() const {
  return Coordinate(1, lambda_, IVec{tiling::norm_inf(num_), 0, 0}, exp_);
}

std::string Coordinate::str() const {
  std::ostringstream os;
  std::int64_t den = ipow(lambda_, exp_);
  if (dim_ != 1) os << '(';
  for (int i = 0; i < dim_; ++i) {
    if (i) os << ',';
    std::int64_t n = num_[i];
    std::int64_t g = std::gcd(n < 0 ? -n : n, den);
    if (g == 0) g = 1;
    if (den / g == 1) {
      os << n / g;
    } else {
      os << n / g << '/' << den / g;
    }
  }
  if (dim_ != 1) os << ')';
  return os.str();
}

std::strong_ordering compare_scalar(const Coordinate& a, const Coordinate& b) {
  if (a.lambda() != b.lambda()) throw GeometryError("incompatible scalars");
  int e = std::max(a.exponent(), b.exponent());
  std::int64_t x = a.numerator()[0] * ipow(a.lambda(), e - a.exponent());
  std::int64_t y = b.numerator()[0] * ipow(b.lambda(), e - b.exponent());
  return x <=> y;
}

std::ostream& operator<<(std::ostream& os, const Coordinate& c) { return os << c.str(); }

std::vector<Cell> closure(const Cell& c, int ambient_dim) {
  std::vector<Cell> out{Cell{c.anchor, 0}};
  for (int i = 0; i < ambient_dim; ++i) {
    if (!(c.axes & (1u << i))) continue;
    std::vector<Cell> next;
    next.reserve(out.size() * 3);
    for (const Cell& x : out) {
      next.push_back(x);
      Cell up = x;
      up.anchor[i] += 1;
      next.push_back(up);
      Cell fr = x;
      fr.axes |= static_cast<std::uint8_t>(1u << i);
      next.push_back(fr);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t cell_distance(const Cell& a, const Cell& b, int dim) {
  std::int64_t d = 0;
  for (int i = 0; i < dim; ++i) {
    std::int64_t a0 = a.anchor[i], a1 = a0 + ((a.axes >> i) & 1);
    std::int64_t b0 = b.anchor[i], b1 = b0 + ((b.axes >> i) & 1);
    d = std::max({d, b0 - a1, a0 - b1});
  }
  return d;
}

bool cell_in_scaled(const Cell& small, const Cell& big, std::int64_t lambda, int dim) {
  for (int i = 0; i < dim; ++i) {
    std::int64_t s0 = small.anchor[i], s1 = s0 + ((small.axes >> i) & 1);
    std::int64_t b0 = lambda * big.anchor[i], b1 = b0 + lambda * ((big.axes >> i) & 1);
    if (s0 < b0 || s1 > b1) return false;
  }
  return true;
}

Coordinate puncture(const ShapeTable& shapes, const Tile& t) {
  return shapes.protos.at(t.proto).puncture + t.shift;
}

std::vector<Cell> tile_cells(const ShapeTable& shapes, const Tile& t) {
  const auto& proto = shapes.protos.at(t.proto);
  std::uint8_t full = static_cast<std::uint8_t>((1u << shapes.dim) - 1);
  std::vector<Cell> out;
  out.reserve(proto.cells.size());
  for (const auto& c : proto.cells) out.push_back(Cell{c + t.shift, full});
  return out;
}

std::vector<Cell> tile_complex(const ShapeTable& shapes, const Tile& t) {
  std::vector<Cell> out;
  for (const Cell& c : tile_cells(shapes, t)) {
    auto cl = closure(c, shapes.dim);
    out.insert(out.end(), cl.begin(), cl.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Patch::Patch(std::vector<Tile> tiles) : tiles_(std::move(tiles)) {
  std::sort(tiles_.begin(), tiles_.end());
  tiles_.erase(std::unique(tiles_.begin(), tiles_.end()), tiles_.end());
}

bool Patch::contains(const Tile& t) const {
  return std::binary_search(tiles_.begin(), tiles_.end(), t);
}

bool Patch::includes(const Patch& other) const {
  return std::includes(tiles_.begin(), tiles_.end(), other.tiles_.begin(), other.tiles_.end());
}

Patch translate_patch(const Patch& p, const IVec& v) {
  std::vector<Tile> out = p.tiles();
  for (auto& t : out) t.shift = t.shift + v;
  return Patch(std::move(out));
}

Patch translate_patch(const Patch& p, const Coordinate& v) { return translate_patch(p, v.to_ivec()); }

Patch patch_union(const Patch& a, const Patch& b) {
  std::vector<Tile> all = a.tiles();
  all.insert(all.end(), b.tiles().begin(), b.tiles().end());
  return Patch(std::move(all));
}

std::vector<Cell> patch_cells(const ShapeTable& shapes, const Patch& p, int j) {
  if (j < 0 || j > shapes.dim) throw GeometryError("cell dimension out of range");
  std::vector<Cell> out;
  for (const Tile& t : p.tiles()) {
    for (const Cell& c : tile_complex(shapes, t)) {
      if (c.dim() == j) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_cellular(const ShapeTable& shapes, const Patch& p) {
  std::set<IVec> seen;
  for (const Tile& t : p.tiles()) {
    for (const Cell& c : tile_cells(shapes, t)) {
      if (!seen.insert(c.anchor).second) return false;
    }
  }
  return true;
}

bool point_in_interior(const std::vector<IVec>& cubes, const Coordinate& point, int dim) {
  // Collect, per axis, the cube anchors whose closed extent contains the point.
  std::int64_t den = ipow(point.lambda(), point.exponent());
  std::vector<std::vector<std::int64_t>> choices(dim);
  for (int i = 0; i < dim; ++i) {
    std::int64_t n = point.numerator()[i];
    std::int64_t fl = n >= 0 ? n / den : -((-n + den - 1) / den);
    choices[i].push_back(fl);
    if (fl * den == n) choices[i].push_back(fl - 1);
  }
  std::set<IVec> have(cubes.begin(), cubes.end());
  std::vector<IVec> combos{IVec{}};
  for (int i = 0; i < dim; ++i) {
    std::vector<IVec> next;
    for (const auto& c : combos) {
      for (auto v : choices[i]) {
        IVec x = c;
        x[i] = v;
        next.push_back(x);
      }
    }
    combos = std::move(next);
  }
  return std::all_of(combos.begin(), combos.end(), [&](const IVec& c) { return have.count(c) > 0; });
}

std::pair<IVec, IVec> bounding_box(const ShapeTable& shapes, const Patch& p) {
  IVec lo{}, hi{};
  bool first = true;
  for (const Tile& t : p.tiles()) {
    for (const Cell& c : tile_cells(shapes, t)) {
      for (int i = 0; i < shapes.dim; ++i) {
        if (first || c.anchor[i] < lo[i]) lo[i] = c.anchor[i];
        if (first || c.anchor[i] + 1 > hi[i]) hi[i] = c.anchor[i] + 1;
      }
      first = false;
    }
  }
  return {lo, hi};
}

}  // namespace tiling
