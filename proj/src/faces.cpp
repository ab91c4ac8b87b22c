#include "tiling/faces.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tiling {

namespace {

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    std::size_t h = c.axes;
    for (auto x : c.anchor) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
    return h;
  }
};

struct IVecHash {
  std::size_t operator()(const IVec& v) const {
    std::size_t h = 0;
    for (auto x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
    return h;
  }
};

Coordinate cell_barycenter(const Cell& c, int dim, int lambda) {
  // lambda odd: 1/2 is not lambda-adic, fall back to the anchor.
  if (lambda % 2 != 0) return Coordinate::integral(dim, lambda, c.anchor);
  IVec n = static_cast<std::int64_t>(lambda) * c.anchor;
  for (int i = 0; i < dim; ++i) {
    if (c.axes & (1u << i)) n[i] += lambda / 2;
  }
  return Coordinate(dim, lambda, n, 1);
}

bool connected(const std::vector<Cell>& complex, int dim) {
  if (complex.empty()) return false;
  std::map<Cell, int> idx;
  for (std::size_t i = 0; i < complex.size(); ++i) idx[complex[i]] = static_cast<int>(i);
  std::vector<int> parent(complex.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < complex.size(); ++i) {
    for (const Cell& f : closure(complex[i], dim)) {
      auto it = idx.find(f);
      if (it != idx.end()) parent[find(it->second)] = find(static_cast<int>(i));
    }
  }
  int root = find(0);
  for (std::size_t i = 0; i < complex.size(); ++i) {
    if (find(static_cast<int>(i)) != root) return false;
  }
  return true;
}

std::string tiles_str(const ShapeTable& shapes, const Patch& p) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& t : p.tiles()) {
    os << (first ? "" : " ") << shapes.protos.at(t.proto).label << "@" << to_string(t.shift, shapes.dim);
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace

std::vector<Cell> maximal_cells(const std::vector<Cell>& complex) {
  if (complex.empty()) return {};
  int dim = 0;
  for (const auto& c : complex) {
    for (int i = 0; i < kMaxDim; ++i) {
      if (c.axes & (1u << i)) dim = std::max(dim, i + 1);
    }
  }
  std::set<Cell> lower;
  for (const auto& c : complex) {
    if (c.dim() == 0) continue;
    for (const auto& f : closure(c, dim)) {
      if (!(f == c)) lower.insert(f);
    }
  }
  std::vector<Cell> out;
  for (const auto& c : complex) {
    if (!lower.count(c)) out.push_back(c);
  }
  return out;
}

Face translate_face(const Face& f, const IVec& v) {
  Face g = f;
  g.p = translate_patch(f.p, v);
  g.q = translate_patch(f.q, v);
  for (auto& c : g.support) c.anchor = c.anchor + v;
  g.ref = f.ref + v;
  g.puncture = f.puncture + v;
  return g;
}

Face canonical_face(const Face& f) { return translate_face(f, -f.ref); }

std::vector<Face> extract_faces(const ShapeTable& shapes, const Patch& patch, int j,
                                std::vector<std::string>* rejections) {
  const int d = shapes.dim;
  const auto& tiles = patch.tiles();
  std::vector<std::vector<Cell>> complexes(tiles.size());
  std::unordered_map<Cell, std::vector<int>, CellHash> cell_tiles;
  std::unordered_set<IVec, IVecHash> cubes;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    complexes[i] = tile_complex(shapes, tiles[i]);
    for (const auto& c : complexes[i]) cell_tiles[c].push_back(static_cast<int>(i));
    for (const auto& c : tile_cells(shapes, tiles[i])) cubes.insert(c.anchor);
  }

  // Candidate p-sets: the star of each cell.
  std::set<std::vector<int>> stars;
  for (auto& [cell, ts] : cell_tiles) stars.insert(ts);

  std::vector<IVec> around;  // offsets of the 2^d cubes sharing a vertex
  for (int mask = 0; mask < (1 << d); ++mask) {
    IVec o{};
    for (int i = 0; i < d; ++i) o[i] = -((mask >> i) & 1);
    around.push_back(o);
  }

  std::vector<Face> out;
  for (const auto& star : stars) {
    std::vector<Cell> K = complexes[star[0]];
    for (std::size_t k = 1; k < star.size(); ++k) {
      std::vector<Cell> next;
      const auto& other = complexes[star[k]];
      std::set_intersection(K.begin(), K.end(), other.begin(), other.end(), std::back_inserter(next));
      K = std::move(next);
    }
    bool determined = true;
    std::vector<int> q;
    for (const auto& c : K) {
      if (c.dim() != 0) continue;
      for (const auto& o : around) {
        if (!cubes.count(c.anchor + o)) {
          determined = false;
          break;
        }
      }
      if (!determined) break;
      const auto& ts = cell_tiles[c];
      q.insert(q.end(), ts.begin(), ts.end());
    }
    if (!determined) continue;

    auto maxc = maximal_cells(K);
    int fj = maxc.front().dim();
    bool pure = std::all_of(maxc.begin(), maxc.end(), [&](const Cell& c) { return c.dim() == fj; });
    if (!pure || !connected(K, d)) {
      if (rejections) {
        std::vector<Tile> pt;
        for (int i : star) pt.push_back(tiles[i]);
        rejections->push_back(std::string(pure ? "disconnected" : "mixed-dimension") +
                              " support for p = " + tiles_str(shapes, Patch(pt)));
      }
      continue;
    }
    if (j >= 0 && fj != j) continue;

    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    Face f;
    f.j = fj;
    std::vector<Tile> pt, qt;
    for (int i : star) pt.push_back(tiles[i]);
    for (int i : q) qt.push_back(tiles[i]);
    f.p = Patch(pt);
    f.q = Patch(qt);
    f.support = std::move(K);
    f.ref = maxc.front().anchor;
    f.puncture = cell_barycenter(maxc.front(), d, shapes.lambda);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.j != b.j) return a.j < b.j;
    if (a.ref != b.ref) return a.ref < b.ref;
    return a.p < b.p;
  });
  return out;
}

bool on_boundary(const Face& f, const Face& g) {
  return f.p.includes(g.p) && f.p.size() > g.p.size() && g.q.includes(f.q) && g.q.size() > f.q.size();
}

bool faces_intersect(const Face& f, const Face& g) { return g.q.includes(f.p) && f.q.includes(g.p); }

std::int64_t face_distance(const Face& f, const Face& g, int dim) {
  std::int64_t best = -1;
  for (const auto& a : f.support) {
    if (a.dim() != 0 && a.dim() != f.j) continue;
    for (const auto& b : g.support) {
      if (b.dim() != 0 && b.dim() != g.j) continue;
      auto dist = cell_distance(a, b, dim);
      if (best < 0 || dist < best) best = dist;
      if (best == 0) return 0;
    }
  }
  return best;
}

Adjacency face_adjacency(const ShapeTable& shapes, const Face& f, const Face& g) {
  Patch ambient = patch_union(f.q, g.q);
  if (!is_cellular(shapes, ambient)) throw GeometryError("faces come from incompatible patches");
  Adjacency adj;
  adj.boundary = on_boundary(f, g);
  if (!faces_intersect(f, g)) return adj;
  std::vector<Face> common;
  for (auto& h : extract_faces(shapes, ambient, -1)) {
    if (h.j < std::min(f.j, g.j) && on_boundary(h, f) && on_boundary(h, g)) common.push_back(std::move(h));
  }
  for (const auto& h : common) {
    bool maximal = std::none_of(common.begin(), common.end(), [&](const Face& o) { return on_boundary(h, o); });
    if (maximal) adj.intersection.push_back(h);
  }
  return adj;
}

std::string describe_face(const ShapeTable& shapes, const Face& f) {
  std::ostringstream os;
  os << "j=" << f.j << " p=" << tiles_str(shapes, f.p) << " q=" << tiles_str(shapes, f.q)
     << " puncture=" << f.puncture.str();
  return os.str();
}

}  // namespace tiling
