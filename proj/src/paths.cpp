#include "tiling/paths.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <cctype>
#include <set>
#include <sstream>

namespace tiling {

int PathSpec::at(int depth) const {
  int k = depth - first_depth();
  if (k < 0) throw PathError("depth " + std::to_string(depth) + " precedes the path start");
  if (k < static_cast<int>(prefix.size())) return prefix[k];
  return cycle[(k - prefix.size()) % cycle.size()];
}

PathSpec validate_path(const MultiDiagram& g, const PathSpec& x) {
  if (x.cycle.empty()) throw PathError("empty cycle");
  if (x.level < 0 || x.level > g.dim) throw PathError("level out of range");
  if (x.start < 0) throw PathError("negative start depth");
  if (x.start == 0 && x.level != g.dim) throw PathError("only top-level paths can be rooted");
  std::vector<int> seq = x.prefix;
  seq.insert(seq.end(), x.cycle.begin(), x.cycle.end());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] < 0 || seq[k] >= g.count(x.level))
      throw PathError("unknown vertex v" + std::to_string(seq[k]), static_cast<int>(k));
  }
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (!g.has_edge(x.level, seq[k], seq[k + 1]))
      throw PathError("no edge v" + std::to_string(seq[k]) + " -> v" + std::to_string(seq[k + 1]),
                      static_cast<int>(k + 1));
  }
  if (!g.has_edge(x.level, x.cycle.back(), x.cycle.front()))
    throw PathError("cycle does not close: no edge v" + std::to_string(x.cycle.back()) + " -> v" +
                        std::to_string(x.cycle.front()),
                    static_cast<int>(x.prefix.size()));

  PathSpec c = x;
  const int L = static_cast<int>(c.cycle.size());
  for (int p = 1; p <= L; ++p) {
    if (L % p) continue;
    bool ok = true;
    for (int i = p; i < L && ok; ++i) ok = c.cycle[i] == c.cycle[i - p];
    if (ok) {
      c.cycle.resize(p);
      break;
    }
  }
  while (!c.prefix.empty() && c.prefix.back() == c.cycle.back()) {
    c.prefix.pop_back();
    std::rotate(c.cycle.begin(), c.cycle.end() - 1, c.cycle.end());
  }
  const int P = static_cast<int>(c.cycle.size());
  int best = 0;
  for (int r = 1; r < P; ++r) {
    for (int i = 0; i < P; ++i) {
      int a = c.cycle[(r + i) % P], b = c.cycle[(best + i) % P];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  c.prefix.insert(c.prefix.end(), c.cycle.begin(), c.cycle.begin() + best);
  std::rotate(c.cycle.begin(), c.cycle.begin() + best, c.cycle.end());
  return c;
}

std::optional<int> tail_equivalent(const PathSpec& x, const PathSpec& y) {
  if (x.level != y.level) return std::nullopt;
  const int lo = std::max(x.first_depth(), y.first_depth());
  const int T = std::max(x.periodic_from(), y.periodic_from());
  const int lc = std::lcm(static_cast<int>(x.cycle.size()), static_cast<int>(y.cycle.size()));
  for (int i = T; i < T + lc; ++i) {
    if (x.at(i) != y.at(i)) return std::nullopt;
  }
  int m = T;
  while (m > lo && x.at(m - 1) == y.at(m - 1)) --m;
  return m;
}

std::vector<int> derived_set(const MultiDiagram& g, int j, const std::vector<int>& F) {
  if (j < 1 || j > g.dim) throw PathError("derived sets need a level j >= 1");
  std::vector<int> out;
  for (int v : F) {
    if (v < 0 || v >= g.count(j)) throw PathError("vertex v" + std::to_string(v) + " is not in level " + std::to_string(j));
    out.insert(out.end(), g.H[j][v].begin(), g.H[j][v].end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string vlist(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << 'v' << v[i];
  os << ']';
  return os.str();
}

struct Scanner {
  const std::string& t;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw PathSyntaxError("column " + std::to_string(i + 1) + ": expected " + what, static_cast<int>(i) + 1);
  }
  void ws() {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  }
  void lit(const std::string& s) {
    if (t.compare(i, s.size(), s) != 0) fail("'" + s + "'");
    i += s.size();
  }
  int num() {
    std::size_t b = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (b == i || i - b > 9) {
      i = b;
      fail("a number");
    }
    return std::stoi(t.substr(b, i - b));
  }
  std::vector<int> vlist() {
    std::vector<int> out;
    lit("[");
    ws();
    if (i < t.size() && t[i] == ']') {
      ++i;
      return out;
    }
    for (;;) {
      ws();
      lit("v");
      out.push_back(num());
      ws();
      if (i < t.size() && t[i] == ']') {
        ++i;
        return out;
      }
      lit(",");
    }
  }
};

}  // namespace

std::string format_path(const PathSpec& x) {
  std::ostringstream os;
  os << "level:" << x.level << " start:" << x.start << " prefix:" << vlist(x.prefix) << " cycle:" << vlist(x.cycle);
  return os.str();
}

PathSpec parse_path(const std::string& text) {
  Scanner sc{text};
  PathSpec x;
  sc.ws();
  sc.lit("level:");
  x.level = sc.num();
  sc.ws();
  sc.lit("start:");
  x.start = sc.num();
  sc.ws();
  sc.lit("prefix:");
  x.prefix = sc.vlist();
  sc.ws();
  sc.lit("cycle:");
  std::size_t at = sc.i;
  x.cycle = sc.vlist();
  sc.ws();
  if (sc.i != text.size()) sc.fail("end of literal");
  if (x.cycle.empty()) {
    sc.i = at;
    sc.fail("a non-empty cycle");
  }
  return x;
}

const GEntry& GeneralizedPathSpec::at(int depth) const {
  int k = depth - start;
  if (k < 0) throw PathError("depth " + std::to_string(depth) + " precedes the path start");
  if (k < static_cast<int>(prefix.size())) return prefix[k];
  return cycle[(k - prefix.size()) % cycle.size()];
}

GeneralizedPathSpec from_path(const PathSpec& x) {
  GeneralizedPathSpec z;
  z.start = x.first_depth();
  for (int v : x.prefix) z.prefix.push_back(GEntry{x.level, {v}, -1});
  for (int v : x.cycle) z.cycle.push_back(GEntry{x.level, {v}, -1});
  return z;
}

namespace {

void check_step(const MultiDiagram& g, const GEntry& a, const GEntry& b, int index) {
  auto fail = [&](const std::string& why) { throw PathError(why, index); };
  for (const auto* e : {&a, &b}) {
    if (e->level < 0 || e->level > g.dim || e->verts.empty() || e->verts.size() > 2) fail("malformed entry");
    for (int v : e->verts)
      if (v < 0 || v >= g.count(e->level)) fail("unknown vertex");
    if (e->verts.size() == 2 && g.V[e->level][e->verts[0]].parent != g.V[e->level][e->verts[1]].parent)
      fail("pair members have different parents");
  }
  if (a.via >= 0) {
    if (a.via >= static_cast<int>(g.S.size())) fail("unknown escaping edge");
    const auto& e = g.S[a.via];
    std::vector<int> src = e.src;
    std::vector<int> av = a.verts;
    std::sort(src.begin(), src.end());
    std::sort(av.begin(), av.end());
    if (e.j != a.level || src != av || e.k != b.level || b.verts.size() != 2 || b.verts[0] != e.tgt_a ||
        b.verts[1] != e.tgt_b)
      fail("escaping edge does not connect these entries");
    return;
  }
  if (a.level != b.level || b.verts.size() != 1) fail("no edge between entries");
  for (int v : a.verts)
    if (!g.has_edge(a.level, v, b.verts[0])) fail("no edge between entries");
}

}  // namespace

void validate_generalized(const MultiDiagram& g, const GeneralizedPathSpec& z) {
  if (z.cycle.empty()) throw PathError("empty cycle");
  std::vector<GEntry> seq = z.prefix;
  seq.insert(seq.end(), z.cycle.begin(), z.cycle.end());
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) check_step(g, seq[k], seq[k + 1], static_cast<int>(k + 1));
  check_step(g, z.cycle.back(), z.cycle.front(), static_cast<int>(z.prefix.size()));
}

std::string format_generalized(const GeneralizedPathSpec& z) {
  auto entry = [](const GEntry& e) {
    std::ostringstream os;
    os << e.level << ':';
    if (e.verts.size() == 1) {
      os << 'v' << e.verts[0];
    } else {
      os << "{v" << e.verts[0] << ",v" << e.verts[1] << '}';
    }
    if (e.via >= 0) os << "~s" << e.via;
    return os.str();
  };
  std::ostringstream os;
  os << "start:" << z.start << " prefix:[";
  for (std::size_t i = 0; i < z.prefix.size(); ++i) os << (i ? "," : "") << entry(z.prefix[i]);
  os << "] cycle:[";
  for (std::size_t i = 0; i < z.cycle.size(); ++i) os << (i ? "," : "") << entry(z.cycle[i]);
  os << ']';
  return os.str();
}

Coordinate class_puncture(const ProtofaceTable& table, int j, int cls) {
  const Face& f = table.classes.at(j).at(cls);
  if (j == table.shapes.dim) return puncture(table.shapes, f.p.tiles().front());
  return f.puncture;
}

PlacedPatch robinson_patch(const SubstitutionRule& rule, const ProtofaceTable& table, const MultiDiagram& g,
                           const GeneralizedPathSpec& z, int n, PatchMode mode) {
  const int m = z.start;
  if (n < m) throw PathError("depth " + std::to_string(n) + " precedes the path start");
  if (n > 14) throw PathError("depth " + std::to_string(n) + " is beyond the represented range");
  const std::int64_t lam = rule.lambda();
  // Anchor of each depth: the child class of a vertex entry, or the common
  // parent of a pair entry, at its frame position.
  IVec pos{};
  for (int i = n - 1; i >= m; --i) {
    const GEntry& a = z.at(i);
    if (a.via >= 0) {
      const auto& e = g.S.at(a.via);
      IVec created = lam * pos + g.V[e.k][e.tgt_a].offset + e.beta_a;
      pos = a.verts.size() == 1 ? lam * created + g.V[a.level][a.verts[0]].offset : created;
    } else if (a.verts.size() == 1) {
      pos = lam * pos + g.V[a.level][a.verts[0]].offset;
    }
    // a pair closing onto a vertex: the common parent is the next child, same position
  }
  const GEntry& first = z.at(m);
  const GEntry& top = z.at(n);
  auto face_patch = [&](int j, int cls) -> const Patch& {
    const Face& f = table.classes.at(j).at(cls);
    return mode == PatchMode::plain ? f.p : f.q;
  };
  PlacedPatch out;
  if (top.verts.size() == 1) {
    out.patch = iterate(rule, face_patch(top.level, g.V[top.level][top.verts[0]].child), n - 1);
  } else {
    out.patch = iterate(rule, face_patch(top.level, g.V[top.level][top.verts[0]].parent), n);
  }
  int j = first.level;
  if (first.verts.size() == 1) {
    int cls = g.V[j][first.verts[0]].child;
    out.origin = (class_puncture(table, j, cls) + pos).scaled(m - 1);
  } else {
    int cls = g.V[j][first.verts[0]].parent;
    out.origin = (class_puncture(table, j, cls) + pos).scaled(m);
  }
  return out;
}

PlacedPatch robinson_patch(const SubstitutionRule& rule, const ProtofaceTable& table, const MultiDiagram& g,
                           const PathSpec& x, int n, PatchMode mode) {
  return robinson_patch(rule, table, g, from_path(x), n, mode);
}

}  // namespace tiling

namespace tiling {

std::vector<PathSpec> periodic_paths(const MultiDiagram& g, int max_cycle) {
  const int d = g.dim;
  std::set<std::vector<int>> seen;
  std::vector<PathSpec> out;
  std::vector<int> cyc;
  std::function<void()> grow = [&]() {
    if (g.has_edge(d, cyc.back(), cyc.front())) {
      PathSpec x = validate_path(g, PathSpec{d, 0, {}, cyc});
      // Other rotations canonicalize with a prefix and are skipped.
      if (x.prefix.empty() && x.cycle.size() == cyc.size() && seen.insert(x.cycle).second) out.push_back(x);
    }
    if (static_cast<int>(cyc.size()) == max_cycle) return;
    for (int w : g.E[d][cyc.back()]) {
      cyc.push_back(w);
      grow();
      cyc.pop_back();
    }
  };
  for (int v = 0; v < g.count(d); ++v) {
    cyc = {v};
    grow();
  }
  std::sort(out.begin(), out.end(), [](const PathSpec& a, const PathSpec& b) {
    return std::make_pair(a.cycle.size(), a.cycle) < std::make_pair(b.cycle.size(), b.cycle);
  });
  return out;
}

IVec frame_shift(const PlacedPatch& from, const PlacedPatch& to) { return (to.origin - from.origin).to_ivec(); }

std::int64_t origin_boundary_distance(const ShapeTable& shapes, const PlacedPatch& p) {
  const int d = shapes.dim;
  std::set<IVec> cubes;
  for (const auto& t : p.patch.tiles())
    for (const auto& c : tile_cells(shapes, t)) cubes.insert(c.anchor);
  std::vector<IVec> origin;
  for (const auto& t : p.patch.tiles()) {
    std::vector<IVec> cs;
    for (const auto& c : tile_cells(shapes, t)) cs.push_back(c.anchor);
    if (point_in_interior(cs, p.origin, d)) {
      origin = std::move(cs);
      break;
    }
  }
  if (origin.empty()) throw GeometryError("origin is not interior to a tile of the patch");
  std::vector<IVec> around{IVec{}};
  for (int i = 0; i < d; ++i) {
    std::vector<IVec> next;
    for (const auto& v : around)
      for (int s = -1; s <= 1; ++s) {
        IVec w = v;
        w[i] = s;
        next.push_back(w);
      }
    around = std::move(next);
  }
  const auto full = static_cast<std::uint8_t>((1u << d) - 1);
  std::int64_t best = -1;
  for (const auto& c : cubes) {
    for (const auto& o : around) {
      IVec z = c + o;
      if (cubes.count(z)) continue;
      for (const auto& a : origin) {
        auto dist = cell_distance(Cell{a, full}, Cell{z, full}, d);
        if (best < 0 || dist < best) best = dist;
      }
    }
  }
  return best;
}

}  // namespace tiling
