#include "tiling/render.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace tiling {

namespace {

const char* const kPalette[] = {"#e8c170", "#7fb3d5", "#a9d18e", "#e59c9c", "#c3a6de", "#f2d16b", "#8fd1c4", "#d9a27e"};

std::string num(const Coordinate& c, int i) {
  std::ostringstream os;
  os.precision(10);
  os << c.component(i);
  return os.str();
}

using Pt = std::pair<std::int64_t, std::int64_t>;

// Outline loops of a union of unit squares, y already flipped.
std::vector<std::vector<Pt>> outline(const std::set<IVec>& squares) {
  std::multimap<Pt, Pt> edges;
  std::set<std::pair<Pt, Pt>> all;
  for (const auto& s : squares) {
    Pt p[4] = {{s[0], -s[1]}, {s[0] + 1, -s[1]}, {s[0] + 1, -s[1] - 1}, {s[0], -s[1] - 1}};
    for (int k = 0; k < 4; ++k) all.insert({p[k], p[(k + 1) % 4]});
  }
  for (const auto& [a, b] : all)
    if (!all.count({b, a})) edges.emplace(a, b);
  std::vector<std::vector<Pt>> loops;
  while (!edges.empty()) {
    auto it = edges.begin();
    Pt start = it->first, cur = it->second;
    edges.erase(it);
    std::vector<Pt> loop{start};
    while (cur != start) {
      loop.push_back(cur);
      auto nx = edges.find(cur);
      if (nx == edges.end()) break;
      cur = nx->second;
      edges.erase(nx);
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

}  // namespace

std::string export_svg(const ShapeTable& shapes, const Patch& patch, const SvgOptions& opt) {
  const int d = shapes.dim;
  if (d > 2) throw GeometryError("svg output needs dimension 1 or 2");
  auto [lo, hi] = bounding_box(shapes, patch);
  if (d == 1) {
    lo[1] = 0;
    hi[1] = 1;
  }
  const std::int64_t w = hi[0] - lo[0], h = hi[1] - lo[1];
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * opt.pixels_per_unit << "\" height=\""
     << h * opt.pixels_per_unit << "\" viewBox=\"" << lo[0] << ' ' << -hi[1] << ' ' << w << ' ' << h << "\">\n";
  os << "<g stroke=\"#222\" stroke-width=\"0.06\" stroke-linejoin=\"round\" fill-rule=\"evenodd\">\n";
  for (const auto& t : patch.tiles()) {
    std::set<IVec> sq;
    for (const auto& c : tile_cells(shapes, t)) sq.insert(c.anchor);
    os << "<path data-proto=\"" << shapes.protos.at(t.proto).label << "\" fill=\""
       << kPalette[t.proto % std::size(kPalette)] << "\" d=\"";
    for (const auto& loop : outline(sq)) {
      for (std::size_t k = 0; k < loop.size(); ++k)
        os << (k ? " L" : "M") << loop[k].first << ' ' << loop[k].second;
      os << " Z ";
    }
    os << "\"/>\n";
  }
  os << "</g>\n";
  if (opt.punctures) {
    os << "<g fill=\"#222\">\n";
    for (const auto& t : patch.tiles()) {
      Coordinate p = puncture(shapes, t);
      os << "<circle cx=\"" << num(p, 0) << "\" cy=\"" << (d == 1 ? std::string("-0.5") : "-" + num(p, 1))
         << "\" r=\"0.08\"/>\n";
    }
    os << "</g>\n";
  }
  if (!opt.highlight.empty()) {
    os << "<g stroke=\"#d00\" stroke-width=\"0.18\" fill=\"#d00\" stroke-linecap=\"round\">\n";
    for (const auto& c : opt.highlight) {
      const std::int64_t x = c.anchor[0], y = d == 1 ? 0 : c.anchor[1];
      switch (std::popcount(static_cast<unsigned>(c.axes))) {
        case 0:
          os << "<circle cx=\"" << x << "\" cy=\"" << -y << "\" r=\"0.16\"/>\n";
          break;
        case 1: {
          bool horiz = c.axes & 1;
          os << "<line x1=\"" << x << "\" y1=\"" << -y << "\" x2=\"" << x + (horiz ? 1 : 0) << "\" y2=\""
             << -(y + (horiz ? 0 : 1)) << "\"/>\n";
          break;
        }
        default:
          os << "<rect x=\"" << x << "\" y=\"" << -(y + 1) << "\" width=\"1\" height=\"1\" fill-opacity=\"0.35\"/>\n";
      }
    }
    os << "</g>\n";
  }
  if (opt.origin) {
    os << "<circle cx=\"" << num(*opt.origin, 0) << "\" cy=\""
       << (d == 1 ? std::string("-0.5") : "-" + num(*opt.origin, 1))
       << "\" r=\"0.22\" fill=\"none\" stroke=\"#d00\" stroke-width=\"0.08\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<Cell> common_boundary_cells(const ShapeTable& shapes, const Patch& inner, const Patch& outer, int j) {
  const int d = shapes.dim;
  auto cubes_of = [&](const Patch& p) {
    std::set<IVec> s;
    for (const auto& t : p.tiles())
      for (const auto& c : tile_cells(shapes, t)) s.insert(c.anchor);
    return s;
  };
  auto ci = cubes_of(inner), co = cubes_of(outer);
  auto on_boundary = [&](const std::set<IVec>& cubes, const Cell& cell) {
    bool in = false, out = false;
    const int free = d - std::popcount(static_cast<unsigned>(cell.axes));
    for (int m = 0; m < (1 << free); ++m) {
      IVec c = cell.anchor;
      for (int i = 0, b = 0; i < d; ++i) {
        if (cell.axes & (1u << i)) continue;
        if (m & (1 << b++)) c[i] -= 1;
      }
      (cubes.count(c) ? in : out) = true;
    }
    return in && out;
  };
  std::set<Cell> out;
  for (const auto& t : inner.tiles()) {
    for (const auto& cell : tile_complex(shapes, t)) {
      if (std::popcount(static_cast<unsigned>(cell.axes)) != j) continue;
      if (on_boundary(ci, cell) && on_boundary(co, cell)) out.insert(cell);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace tiling
