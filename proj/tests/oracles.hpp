#pragma once

// Independent reference computations for the test suite. Nothing here calls
// the face extraction, the diagram walkers or the Robinson map.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tiling/multidiagram.hpp"
#include "tiling/paths.hpp"
#include "tiling/rule.hpp"

namespace oracle {

using namespace tiling;

// omega(a) = ab, omega(b) = aa applied n times to "a".
inline std::string pd_word(int n) {
  std::string w = "a";
  for (int i = 0; i < n; ++i) {
    std::string next;
    for (char c : w) next += c == 'a' ? "ab" : "aa";
    w = next;
  }
  return w;
}

inline std::set<std::string> factors(const std::string& w, std::size_t len) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + len <= w.size(); ++i) out.insert(w.substr(i, len));
  return out;
}

// Counts of collared j-faces in omega^depth of every prototile of a planar
// rule, found on a pixel grid. A face is the common closed set of the star of
// a cell, kept when every support vertex has all four surrounding squares
// covered, and when its support is connected and of pure dimension.
inline std::vector<int> planar_face_counts(const tiling::SubstitutionRule& rule, int depth) {
  const auto& S = rule.shapes;
  std::set<std::pair<int, std::pair<std::vector<std::array<std::int64_t, 3>>, std::vector<std::array<std::int64_t, 3>>>>>
      keys;
  for (int p0 = 0; p0 < rule.size(); ++p0) {
    std::vector<std::pair<int, IVec>> tiles{{p0, IVec{}}};
    for (int k = 0; k < depth; ++k) {
      std::vector<std::pair<int, IVec>> next;
      for (auto& [p, s] : tiles)
        for (const auto& ch : rule.children[p]) next.push_back({ch.proto, rule.lambda() * s + ch.offset});
      tiles = std::move(next);
    }
    std::map<std::pair<std::int64_t, std::int64_t>, int> owner;  // square -> tile index
    for (int i = 0; i < static_cast<int>(tiles.size()); ++i)
      for (const auto& c : S.protos[tiles[i].first].cells) {
        IVec a = c + tiles[i].second;
        owner[{a[0], a[1]}] = i;
      }
    auto own = [&](std::int64_t x, std::int64_t y) {
      auto it = owner.find({x, y});
      return it == owner.end() ? -1 : it->second;
    };
    // Tiles containing each vertex / edge / square, as sorted lists.
    auto vstar = [&](std::int64_t x, std::int64_t y) {
      std::set<int> s;
      for (int dx = -1; dx <= 0; ++dx)
        for (int dy = -1; dy <= 0; ++dy)
          if (int t = own(x + dx, y + dy); t >= 0) s.insert(t);
      return s;
    };
    // Edge (x,y)-(x+1,y) is horizontal (axis 0), (x,y)-(x,y+1) vertical.
    auto estar = [&](std::int64_t x, std::int64_t y, int axis) {
      std::set<int> s;
      int a = axis == 0 ? own(x, y - 1) : own(x - 1, y);
      int b = own(x, y);
      if (a >= 0) s.insert(a);
      if (b >= 0) s.insert(b);
      return s;
    };
    std::set<std::vector<int>> stars;
    std::set<std::pair<std::int64_t, std::int64_t>> pts;
    for (auto& [sq, t] : owner)
      for (int dx = 0; dx <= 1; ++dx)
        for (int dy = 0; dy <= 1; ++dy) pts.insert({sq.first + dx, sq.second + dy});
    for (auto& [x, y] : pts) {
      auto s = vstar(x, y);
      stars.insert({s.begin(), s.end()});
      for (int ax = 0; ax < 2; ++ax) {
        auto e = estar(x, y, ax);
        if (!e.empty()) stars.insert({e.begin(), e.end()});
      }
    }
    for (auto& [sq, t] : owner) stars.insert({t});

    for (const auto& star : stars) {
      auto inside = [&](const std::set<int>& s) {
        return std::includes(s.begin(), s.end(), star.begin(), star.end());
      };
      // Support vertices and edges, searched near the first tile.
      std::vector<std::pair<std::int64_t, std::int64_t>> V;
      std::vector<std::array<std::int64_t, 3>> E;  // x, y, axis
      std::int64_t lo[2] = {INT64_MAX, INT64_MAX}, hi[2] = {INT64_MIN, INT64_MIN};
      for (const auto& c : S.protos[tiles[star[0]].first].cells) {
        IVec a = c + tiles[star[0]].second;
        for (int i = 0; i < 2; ++i) lo[i] = std::min(lo[i], a[i]), hi[i] = std::max(hi[i], a[i] + 1);
      }
      for (auto x = lo[0]; x <= hi[0]; ++x)
        for (auto y = lo[1]; y <= hi[1]; ++y) {
          if (inside(vstar(x, y))) V.push_back({x, y});
          for (int ax = 0; ax < 2; ++ax)
            if (inside(estar(x, y, ax))) E.push_back({x, y, ax});
        }
      int dim = star.size() == 1 ? 2 : (!E.empty() ? 1 : 0);
      if (V.empty()) continue;
      bool determined = true;
      for (auto& [x, y] : V)
        for (int dx = -1; dx <= 0; ++dx)
          for (int dy = -1; dy <= 0; ++dy)
            if (own(x + dx, y + dy) < 0) determined = false;
      if (!determined) continue;
      if (dim == 0 && V.size() != 1) continue;
      if (dim == 1) {
        // Pure: every vertex ends an edge. Connected: union-find over edges.
        std::map<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, std::int64_t>> par;
        for (auto& v : V) par[v] = v;
        std::function<std::pair<std::int64_t, std::int64_t>(std::pair<std::int64_t, std::int64_t>)> find =
            [&](auto v) { return par[v] == v ? v : par[v] = find(par[v]); };
        std::set<std::pair<std::int64_t, std::int64_t>> touched;
        for (auto& e : E) {
          std::pair<std::int64_t, std::int64_t> a{e[0], e[1]}, b{e[0] + (e[2] == 0), e[1] + (e[2] == 1)};
          touched.insert(a);
          touched.insert(b);
          par[find(a)] = find(b);
        }
        if (touched.size() != V.size()) continue;
        std::set<std::pair<std::int64_t, std::int64_t>> roots;
        for (auto& v : V) roots.insert(find(v));
        if (roots.size() != 1) continue;
      }
      // Collar: every tile touching a support vertex.
      std::set<int> q;
      for (auto& [x, y] : V) {
        auto s = vstar(x, y);
        q.insert(s.begin(), s.end());
      }
      auto ref = *std::min_element(V.begin(), V.end());
      auto enc = [&](auto begin, auto end) {
        std::vector<std::array<std::int64_t, 3>> out;
        for (auto it = begin; it != end; ++it)
          out.push_back({tiles[*it].first, tiles[*it].second[0] - ref.first, tiles[*it].second[1] - ref.second});
        std::sort(out.begin(), out.end());
        return out;
      };
      keys.insert({dim, {enc(star.begin(), star.end()), enc(q.begin(), q.end())}});
    }
  }
  std::vector<int> counts(3, 0);
  for (auto& k : keys) ++counts[k.first];
  return counts;
}

struct Profile {
  std::int64_t boundary = 0;  // gap from the origin tile to the complement of the depth-n support
  std::int64_t corner = 0;    // gap from the origin tile to the nearest 0-face of the supertiling on that support
  std::int64_t bend = 0;      // gap to the nearest point where the support boundary is not straight
};

// Geometry of phi_n of a rooted top-level path from the vertex data alone:
// the depth-n supertile is lambda^(n-1) times the support of its class, and
// the origin tile sits at sum_{k<n} lambda^(k-1) off(x_k) inside it.
inline Profile profile(const tiling::SubstitutionRule& rule, const tiling::ProtofaceTable& table,
                       const tiling::MultiDiagram& g, const tiling::PathSpec& x, int n) {
  const int d = rule.dim();
  const std::int64_t lam = rule.lambda();
  IVec pos{};
  std::int64_t scale = 1;
  for (int k = 1; k < n; ++k) {
    pos = pos + scale * g.V[d][x.at(k)].offset;
    scale *= lam;
  }
  auto cubes = [&](int cls) {
    std::vector<IVec> out;
    for (const auto& c : table.classes[d][cls].support)
      if (c.dim() == d) out.push_back(c.anchor);
    return out;
  };
  std::vector<IVec> tile;
  for (const auto& c : cubes(g.V[d][x.at(1)].child)) tile.push_back(c + pos);
  const auto big = cubes(g.V[d][x.at(n)].child);
  std::set<IVec> bigset(big.begin(), big.end());

  auto gap_box = [&](const IVec& c, const IVec& lo, std::int64_t side) {
    std::int64_t m = 0;
    for (int i = 0; i < d; ++i) m = std::max({m, lo[i] - (c[i] + 1), c[i] - (lo[i] + side)});
    return m;
  };
  auto gap_point = [&](const IVec& c, const IVec& p) {
    std::int64_t m = 0;
    for (int i = 0; i < d; ++i) m = std::max({m, p[i] - (c[i] + 1), c[i] - p[i]});
    return m;
  };
  std::vector<IVec> offs{IVec{}};
  for (int i = 0; i < d; ++i) {
    std::vector<IVec> next;
    for (const auto& o : offs)
      for (int s = -1; s <= 1; ++s) {
        IVec w = o;
        w[i] = s;
        next.push_back(w);
      }
    offs = std::move(next);
  }
  Profile pr{INT64_MAX, INT64_MAX, INT64_MAX};
  for (const auto& b : big)
    for (const auto& o : offs) {
      IVec nb = b + o;
      if (bigset.count(nb)) continue;
      for (const auto& c : tile) pr.boundary = std::min(pr.boundary, gap_box(c, scale * nb, scale));
    }
  // Corners: vertices of the supertile where the supertiles of its collar
  // that contain the vertex share no edge, i.e. 0-faces of the supertiling.
  // Scaling commutes with this, so it is decided on the unscaled collar.
  const auto& cls = table.classes[d][g.V[d][x.at(n)].child];
  std::vector<std::set<IVec>> qcubes;
  for (const auto& t : cls.q.tiles()) {
    std::set<IVec> s;
    for (const auto& c : rule.shapes.protos[t.proto].cells) s.insert(c + t.shift);
    qcubes.push_back(std::move(s));
  }
  std::set<IVec> pts;
  for (const auto& b : big)
    for (int mask = 0; mask < (1 << d); ++mask) {
      IVec p = b;
      for (int i = 0; i < d; ++i) p[i] += (mask >> i) & 1;
      pts.insert(p);
    }
  for (const auto& p : pts) {
    // in[mask]: the cube p - mask lies in the support.
    std::vector<int> in(1 << d);
    for (int mask = 0; mask < (1 << d); ++mask) {
      IVec c = p;
      for (int k = 0; k < d; ++k) c[k] -= (mask >> k) & 1;
      in[mask] = bigset.count(c) ? 1 : 0;
    }
    const int inside = static_cast<int>(std::count(in.begin(), in.end(), 1));
    bool straight = false;
    for (int i = 0; i < d && d > 1; ++i) {
      bool split = in[0] != in[1 << i];
      for (int mask = 0; mask < (1 << d); ++mask) split &= in[mask] == in[mask & (1 << i)];
      straight |= split;
    }
    if (inside > 0 && inside < (1 << d) && !straight)
      for (const auto& c : tile) pr.bend = std::min(pr.bend, gap_point(c, scale * p));
    auto around = [&](const std::set<IVec>& s, int fixed_axis, std::int64_t fixed) {
      for (int mask = 0; mask < (1 << d); ++mask) {
        IVec c = p;
        for (int i = 0; i < d; ++i) c[i] -= (mask >> i) & 1;
        if (fixed_axis >= 0 && c[fixed_axis] != fixed) continue;
        if (s.count(c)) return true;
      }
      return false;
    };
    std::vector<const std::set<IVec>*> star;
    for (const auto& s : qcubes)
      if (around(s, -1, 0)) star.push_back(&s);
    if (star.size() < 2) continue;
    bool point = true;
    for (int i = 0; i < d && point; ++i)
      for (std::int64_t side : {p[i], p[i] - 1}) {
        bool shared = std::all_of(star.begin(), star.end(), [&](auto* s) { return around(*s, i, side); });
        if (d > 1 && shared) point = false;
      }
    if (d == 1) point = star.size() >= 2;
    if (!point) continue;
    for (const auto& c : tile) pr.corner = std::min(pr.corner, gap_point(c, scale * p));
  }
  return pr;
}

// Border dimension from growth of the profile over whole cycles, up to depth
// top: d when the boundary gap grows, 0 when a corner stays near, d-1 otherwise
// (exact for d <= 2).
inline int bd_from_profile(const tiling::SubstitutionRule& rule, const tiling::ProtofaceTable& table,
                           const tiling::MultiDiagram& g, const tiling::PathSpec& x, int top) {
  const int L = static_cast<int>(x.cycle.size());
  const int a = top - L;
  auto p1 = profile(rule, table, g, x, a), p2 = profile(rule, table, g, x, top);
  if (p2.boundary > p1.boundary) return rule.dim();
  if (p2.corner > p1.corner) return rule.dim() - 1;
  return 0;
}

}  // namespace oracle
