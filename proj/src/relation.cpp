#include "tiling/relation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "tiling/state_graph.hpp"

namespace tiling {

namespace {

// A joint border state: a face seen by both x and y (wb < 0), or a sibling
// pair with x on member xm and y on member ym. Shifts place the seen face
// relative to the top-level tile of x (sx) and of y (sy).
struct JState {
  int level = 0;
  int w = 0, wb = -1;
  int xm = 0, ym = 0;
  IVec sx{}, sy{};
  auto operator<=>(const JState&) const = default;
  bool pair() const { return wb >= 0; }
  int member(int k) const { return k ? wb : w; }
};

struct Step {
  JState to;
  int via = -1;
};

class Joint {
 public:
  using Path = std::function<int(int)>;

  Joint(const SubstitutionRule& rule, const MultiDiagram& g, Path xv, Path yv)
      : g_(g), lam_(rule.lambda()), d_(g.dim), xv_(std::move(xv)), yv_(std::move(yv)) {
    for (int e = 0; e < static_cast<int>(g.S.size()); ++e) {
      const auto& s = g.S[e];
      if (s.src.size() == 1) {
        vsrc_[{s.j, s.src[0]}].push_back(e);
      } else {
        psrc_[{s.j, std::min(s.src[0], s.src[1]), std::max(s.src[0], s.src[1])}].push_back(e);
      }
      auto key = std::make_tuple(s.k, s.tgt_a, s.tgt_b);
      if (pair_seen_.insert(key).second) {
        pairs_of_[{s.k, s.tgt_a}].push_back(key);
        pairs_of_[{s.k, s.tgt_b}].push_back(key);
      }
    }
  }

  std::vector<JState> states_at(int i) const {
    const int X = xv_(i), Y = yv_(i);
    std::set<JState> out;
    for (const auto& a : g_.D[d_][X]) {
      for (const auto& b : g_.D[d_][Y]) {
        if (a.level == b.level && a.w == b.w) out.insert(JState{a.level, a.w, -1, 0, 0, a.shift, b.shift});
      }
      auto it = pairs_of_.find({a.level, a.w});
      if (it == pairs_of_.end()) continue;
      for (const auto& [k, ta, tb] : it->second) {
        int xm = a.w == ta ? 0 : 1;
        for (const auto& b : g_.D[d_][Y]) {
          if (b.level != k || (b.w != ta && b.w != tb)) continue;
          out.insert(JState{k, ta, tb, xm, b.w == ta ? 0 : 1, a.shift, b.shift});
        }
      }
    }
    return {out.begin(), out.end()};
  }

  std::vector<Step> steps(const JState& s, int i) const {
    const int X = xv_(i), Y = yv_(i);
    std::vector<Step> out;
    auto px = up(X, s.level, s.member(s.xm), s.sx);
    auto py = up(Y, s.level, s.member(s.ym), s.sy);
    if (!px || !py) return out;
    if (!s.pair()) {
      for (int w2 : g_.E[s.level][s.w])
        if (incident(xv_(i + 1), s.level, w2, *px) && incident(yv_(i + 1), s.level, w2, *py))
          out.push_back(Step{JState{s.level, w2, -1, 0, 0, *px, *py}, -1});
      auto it = vsrc_.find({s.level, s.w});
      if (it != vsrc_.end())
        for (int e : it->second) escape(e, *px, *py, i, out);
    } else {
      int parent = g_.V[s.level][s.w].parent;
      for (int w2 : g_.by_child[s.level][parent])
        if (incident(xv_(i + 1), s.level, w2, *px) && incident(yv_(i + 1), s.level, w2, *py))
          out.push_back(Step{JState{s.level, w2, -1, 0, 0, *px, *py}, -1});
      auto it = psrc_.find({s.level, s.w, s.wb});
      if (it != psrc_.end())
        for (int e : it->second) escape(e, *px, *py, i, out);
    }
    return out;
  }

  // Position of y's tile relative to x's tile, at the scale of the depth.
  IVec delta(const JState& s) const {
    if (!s.pair()) return s.sx - s.sy;
    return s.sx + g_.V[s.level][s.member(s.ym)].offset - g_.V[s.level][s.member(s.xm)].offset - s.sy;
  }

  GEntry entry(const JState& s, int via) const {
    GEntry e{s.level, {s.w}, via};
    if (s.pair()) e.verts.push_back(s.wb);
    return e;
  }

 private:
  bool incident(int v, int level, int w, const IVec& s) const {
    for (const auto& inc : g_.D[d_][v])
      if (inc.level == level && inc.w == w && inc.shift == s) return true;
    return false;
  }

  // Parent of the face (level, w) at shift s from the tile of v, relative to
  // the parent tile of v.
  std::optional<IVec> up(int v, int level, int w, const IVec& s) const {
    IVec n = g_.V[d_][v].offset + s - g_.V[level][w].offset;
    for (int k = 0; k < d_; ++k)
      if (n[k] % lam_ != 0) return std::nullopt;
    IVec r{};
    for (int k = 0; k < d_; ++k) r[k] = n[k] / lam_;
    return r;
  }

  void escape(int e, const IVec& cx, const IVec& cy, int i, std::vector<Step>& out) const {
    const auto& s = g_.S[e];
    const int X = xv_(i + 1), Y = yv_(i + 1);
    for (int xm = 0; xm < 2; ++xm) {
      IVec sx = cx - (xm ? s.beta_b : s.beta_a);
      if (!incident(X, s.k, xm ? s.tgt_b : s.tgt_a, sx)) continue;
      for (int ym = 0; ym < 2; ++ym) {
        IVec sy = cy - (ym ? s.beta_b : s.beta_a);
        if (!incident(Y, s.k, ym ? s.tgt_b : s.tgt_a, sy)) continue;
        out.push_back(Step{JState{s.k, s.tgt_a, s.tgt_b, xm, ym, sx, sy}, e});
      }
    }
  }

  const MultiDiagram& g_;
  std::int64_t lam_;
  int d_;
  Path xv_, yv_;
  std::map<std::pair<int, int>, std::vector<int>> vsrc_;
  std::map<std::tuple<int, int, int>, std::vector<int>> psrc_;
  std::set<std::tuple<int, int, int>> pair_seen_;
  std::map<std::pair<int, int>, std::vector<std::tuple<int, int, int>>> pairs_of_;
};

// sum_{k < m} lambda^(k-1) off(x_k)
IVec frame_offset(const MultiDiagram& g, const std::function<int(int)>& xv, int m, std::int64_t lam) {
  IVec r{};
  std::int64_t p = 1;
  for (int k = 1; k < m; ++k) {
    r = r + p * g.V[g.dim][xv(k)].offset;
    p *= lam;
  }
  return r;
}

Coordinate translation(const SubstitutionRule& rule, const ProtofaceTable& table, const MultiDiagram& g,
                       const std::function<int(int)>& xv, const std::function<int(int)>& yv, int m,
                       const IVec& delta) {
  const int d = g.dim;
  const std::int64_t lam = rule.lambda();
  IVec v = ipow(lam, m - 1) * delta + frame_offset(g, yv, m, lam) - frame_offset(g, xv, m, lam);
  Coordinate py = class_puncture(table, d, g.V[d][yv(1)].child);
  Coordinate px = class_puncture(table, d, g.V[d][xv(1)].child);
  return py - px + v;
}

void check_rooted(const MultiDiagram& g, const PathSpec& x) {
  if (x.level != g.dim || x.start != 0) throw PathError("expected a rooted top-level path");
}

}  // namespace

Coordinate translation_bound(const SubstitutionRule& rule, int m) {
  Coordinate r = rule.outer_radius + rule.outer_radius;
  return r.scaled(m);
}

RelationWitness border_equivalent(const SubstitutionRule& rule, const ProtofaceTable& table, const MultiDiagram& g,
                                  const PathSpec& x0, const PathSpec& y0) {
  PathSpec x = validate_path(g, x0), y = validate_path(g, y0);
  check_rooted(g, x);
  check_rooted(g, y);
  RelationWitness out;
  const int bx = border_dimension(g, x), by = border_dimension(g, y);
  if (bx != by) {
    out.reason = "border dimensions differ (" + std::to_string(bx) + " vs " + std::to_string(by) + ")";
    return out;
  }
  out.j = bx;
  auto xv = [&](int i) { return x.at(i); };
  auto yv = [&](int i) { return y.at(i); };
  Joint joint(rule, g, xv, yv);

  const int P = std::max(x.periodic_from(), y.periodic_from());
  const int L = std::lcm(static_cast<int>(x.cycle.size()), static_cast<int>(y.cycle.size()));
  const int T = P + L - 1;
  std::vector<std::pair<int, JState>> nodes;
  std::map<std::pair<int, JState>, int> id;
  for (int dep = 1; dep <= T; ++dep) {
    for (auto& s : joint.states_at(dep)) {
      id.emplace(std::make_pair(dep, s), static_cast<int>(nodes.size()));
      nodes.push_back({dep, s});
    }
  }
  Succ succ(nodes.size());
  std::vector<std::vector<int>> via(nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const auto& [dep, s] = nodes[n];
    const int nd = dep + 1 <= T ? dep + 1 : P;
    for (const auto& st : joint.steps(s, dep)) {
      auto it = id.find({nd, st.to});
      if (it == id.end()) throw ConsistencyError("joint border state missing from its depth");
      succ[n].push_back(it->second);
      via[n].push_back(st.via);
    }
  }
  auto alive = infinite_from(succ);
  int start = -1;
  for (std::size_t n = 0; n < nodes.size() && start < 0; ++n)
    if (alive[n]) start = static_cast<int>(n);
  if (start < 0) {
    out.reason = "no shared generalized path";
    return out;
  }
  // Nodes are in (depth, state) order, so `start` is the least alive state at the least depth.
  out.equivalent = true;
  out.m = nodes[start].first;
  std::vector<GEntry> entries;
  std::map<int, int> seen;
  int cur = start;
  while (!seen.count(cur)) {
    seen[cur] = static_cast<int>(entries.size());
    int pick = -1;
    for (std::size_t k = 0; k < succ[cur].size(); ++k) {
      int t = succ[cur][k];
      if (alive[t] && (pick < 0 || t < succ[cur][pick])) pick = static_cast<int>(k);
    }
    entries.push_back(joint.entry(nodes[cur].second, via[cur][pick]));
    cur = succ[cur][pick];
  }
  const int c0 = seen[cur];
  out.z.start = out.m;
  out.z.prefix.assign(entries.begin(), entries.begin() + c0);
  out.z.cycle.assign(entries.begin() + c0, entries.end());
  out.a = translation(rule, table, g, xv, yv, out.m, joint.delta(nodes[start].second));
  return out;
}

std::string format_witness(const RelationWitness& w) {
  std::ostringstream os;
  if (!w.equivalent) {
    os << "not equivalent: " << w.reason << "\n";
    return os.str();
  }
  os << "equivalent: yes\n"
     << "j: " << w.j << "\n"
     << "m: " << w.m << "\n"
     << "z: " << format_generalized(w.z) << "\n"
     << "a: " << w.a.str() << "\n";
  return os.str();
}

namespace {

std::map<IVec, Tile> cube_owner(const ShapeTable& shapes, const Patch& p) {
  std::map<IVec, Tile> out;
  for (const auto& t : p.tiles())
    for (const auto& c : tile_cells(shapes, t)) out.emplace(c.anchor, t);
  return out;
}

bool covers_origin_tile(const ShapeTable& shapes, const std::map<IVec, Tile>& own, const Coordinate& origin,
                        const std::map<IVec, Tile>& other) {
  for (const auto& [cube, t] : own) {
    std::vector<IVec> cubes;
    for (const auto& c : tile_cells(shapes, t)) cubes.push_back(c.anchor);
    if (!point_in_interior(cubes, origin, shapes.dim)) continue;
    for (const auto& c : cubes)
      if (!other.count(c)) return false;
    return true;
  }
  return false;
}

}  // namespace

bool geometric_oracle(const SubstitutionRule& rule, const ProtofaceTable& table, const MultiDiagram& g,
                      const PathSpec& x, const PathSpec& y, const Coordinate& a, int N) {
  if (N < 1) throw std::invalid_argument("oracle depth must be positive");
  for (int n = 1; n <= N; ++n) {
    PlacedPatch px = robinson_patch(rule, table, g, x, n, PatchMode::collared);
    PlacedPatch py = robinson_patch(rule, table, g, y, n, PatchMode::collared);
    Coordinate shift = px.origin - py.origin + a;
    if (!shift.is_integral()) return false;
    Patch moved = translate_patch(py.patch, shift.to_ivec());
    auto ox = cube_owner(rule.shapes, px.patch);
    auto oy = cube_owner(rule.shapes, moved);
    for (const auto& [cube, t] : oy) {
      auto it = ox.find(cube);
      if (it != ox.end() && !(it->second == t)) return false;
    }
    if (n == N) {
      if (!covers_origin_tile(rule.shapes, ox, px.origin, oy)) return false;
      if (!covers_origin_tile(rule.shapes, oy, px.origin - a, ox)) return false;
    }
  }
  return true;
}

bool forcing_holds(const SubstitutionRule& rule, const ProtofaceTable& table, int k) {
  const int d = rule.dim();
  const std::int64_t lam = rule.lambda();
  std::vector<IVec> nbhd{IVec{}};
  for (int i = 0; i < d; ++i) {
    std::vector<IVec> next;
    for (const auto& v : nbhd)
      for (int s = -1; s <= 1; ++s) {
        IVec w = v;
        w[i] = s;
        next.push_back(w);
      }
    nbhd = std::move(next);
  }
  for (int j = 0; j <= d; ++j) {
    for (int id = 0; id < table.count(j); ++id) {
      std::set<IVec> cubes;
      const Patch big = iterate(rule, table.classes[j][id].q, k);
      for (const auto& t : big.tiles())
        for (const auto& c : tile_cells(rule.shapes, t)) cubes.insert(c.anchor);
      std::set<Placed> desc{Placed{id, IVec{}}};
      for (int s = 0; s < k; ++s) {
        std::set<Placed> next;
        for (const auto& pl : desc)
          for (const auto& ch : table.induced[j][pl.cls]) next.insert(Placed{ch.cls, lam * pl.pos + ch.pos});
        desc = std::move(next);
      }
      for (const auto& pl : desc) {
        for (const auto& t : table.classes[j][pl.cls].q.tiles()) {
          for (const auto& c : tile_cells(rule.shapes, Tile{t.proto, t.shift + pl.pos})) {
            for (const auto& o : nbhd)
              if (!cubes.count(c.anchor + o)) return false;
          }
        }
      }
    }
  }
  return true;
}

int forcing_constant(const SubstitutionRule& rule, const ProtofaceTable& table, int cap) {
  for (int k = 0; k <= cap; ++k)
    if (forcing_holds(rule, table, k)) return k;
  throw ConsistencyError("border forcing constant exceeds cap " + std::to_string(cap));
}

std::vector<RSet> rset_enumerate(const SubstitutionRule& rule, const ProtofaceTable& table, const MultiDiagram& g,
                                 const std::vector<int>& gamma, const std::vector<int>& gamma_prime, int m, int k) {
  if (m <= k) throw std::invalid_argument("rset depth m must exceed the forcing constant k");
  const int d = g.dim;
  for (const auto* p : {&gamma, &gamma_prime}) {
    if (static_cast<int>(p->size()) != m) throw std::invalid_argument("prefix length must equal m");
    for (int i = 0; i < m; ++i) {
      if ((*p)[i] < 0 || (*p)[i] >= g.count(d)) throw std::invalid_argument("unknown vertex in prefix");
      if (i + 1 < m && !g.has_edge(d, (*p)[i], (*p)[i + 1])) throw std::invalid_argument("prefix is not a path");
    }
  }
  auto xv = [&](int i) { return gamma.at(i - 1); };
  auto yv = [&](int i) { return gamma_prime.at(i - 1); };
  Joint joint(rule, g, xv, yv);
  std::map<Coordinate, RSet> by_print;
  std::vector<GEntry> stack;
  std::function<void(const JState&, int)> walk = [&](const JState& s, int dep) {
    if (dep == m) {
      GeneralizedPathSpec eta;
      eta.start = m - k;
      eta.prefix = stack;
      eta.prefix.push_back(joint.entry(s, -1));
      Coordinate fp = translation(rule, table, g, xv, yv, m, joint.delta(s));
      auto& r = by_print[fp];
      if (r.etas.empty()) {
        r.gamma = gamma;
        r.gamma_prime = gamma_prime;
        r.m = m;
        r.fingerprint = fp;
      }
      r.etas.push_back(std::move(eta));
      return;
    }
    for (const auto& st : joint.steps(s, dep)) {
      stack.push_back(joint.entry(s, st.via));
      walk(st.to, dep + 1);
      stack.pop_back();
    }
  };
  for (const auto& s : joint.states_at(m - k)) walk(s, m - k);
  std::vector<RSet> out;
  for (auto& [fp, r] : by_print) out.push_back(std::move(r));
  return out;
}

}  // namespace tiling
