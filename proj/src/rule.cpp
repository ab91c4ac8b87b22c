#include "tiling/rule.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tiling {

int SubstitutionRule::find_proto(const std::string& id) const {
  for (int i = 0; i < size(); ++i) {
    if (shapes.protos[i].label == id) return i;
  }
  return -1;
}

namespace {

bool face_connected(const std::vector<IVec>& cells, int dim) {
  if (cells.empty()) return false;
  std::set<IVec> all(cells.begin(), cells.end());
  std::set<IVec> seen{cells.front()};
  std::vector<IVec> stack{cells.front()};
  while (!stack.empty()) {
    IVec c = stack.back();
    stack.pop_back();
    for (int i = 0; i < dim; ++i) {
      for (int s : {-1, 1}) {
        IVec n = c;
        n[i] += s;
        if (all.count(n) && seen.insert(n).second) stack.push_back(n);
      }
    }
  }
  return seen.size() == all.size();
}

// Distance from p to the closed unit cube at c, scaled by den = lambda^e.
std::int64_t scaled_cube_distance(const IVec& pnum, std::int64_t den, const IVec& c, int dim) {
  std::int64_t d = 0;
  for (int i = 0; i < dim; ++i) {
    std::int64_t lo = c[i] * den, hi = (c[i] + 1) * den;
    d = std::max({d, lo - pnum[i], pnum[i] - hi});
  }
  return d;
}

void compute_radii(SubstitutionRule& rule) {
  const int d = rule.dim();
  bool first = true;
  Coordinate rmin, rmax;
  for (const auto& proto : rule.shapes.protos) {
    const auto& pc = proto.puncture;
    std::int64_t den = ipow(pc.lambda(), pc.exponent());
    std::set<IVec> cells(proto.cells.begin(), proto.cells.end());
    IVec lo = proto.cells.front(), hi = proto.cells.front();
    for (const auto& c : proto.cells) {
      for (int i = 0; i < d; ++i) {
        lo[i] = std::min(lo[i], c[i]);
        hi[i] = std::max(hi[i], c[i]);
      }
    }
    // Inscribed: nearest complementary cube, searched on the box grown by one.
    std::int64_t inner = -1;
    IVec c{};
    std::vector<IVec> grid{IVec{}};
    for (int i = 0; i < d; ++i) {
      std::vector<IVec> next;
      for (const auto& g : grid) {
        for (auto v = lo[i] - 1; v <= hi[i] + 1; ++v) {
          IVec x = g;
          x[i] = v;
          next.push_back(x);
        }
      }
      grid = std::move(next);
    }
    for (const auto& g : grid) {
      if (cells.count(g)) continue;
      auto dist = scaled_cube_distance(pc.numerator(), den, g, d);
      if (inner < 0 || dist < inner) inner = dist;
    }
    // Circumscribed: farthest corner.
    std::int64_t outer = 0;
    for (const auto& cell : proto.cells) {
      for (int mask = 0; mask < (1 << d); ++mask) {
        std::int64_t m = 0;
        for (int i = 0; i < d; ++i) {
          c[i] = (cell[i] + ((mask >> i) & 1)) * den;
          m = std::max(m, c[i] > pc.numerator()[i] ? c[i] - pc.numerator()[i] : pc.numerator()[i] - c[i]);
        }
        outer = std::max(outer, m);
      }
    }
    Coordinate ri = Coordinate::scalar(rule.lambda(), inner, pc.exponent());
    Coordinate ro = Coordinate::scalar(rule.lambda(), outer, pc.exponent());
    if (first || compare_scalar(ri, rmin) < 0) rmin = ri;
    if (first || compare_scalar(ro, rmax) > 0) rmax = ro;
    first = false;
  }
  rule.inner_radius = rmin;
  rule.outer_radius = rmax;
}

}  // namespace

void validate_rule(SubstitutionRule& rule) {
  const int d = rule.dim();
  const int lam = rule.lambda();
  if (d < 1 || d > kMaxDim) throw InvariantError("dimension must be between 1 and 3");
  if (lam < 2) throw InvariantError("lambda must be an integer >= 2");
  if (rule.shapes.protos.empty()) throw InvariantError("rule has no prototiles");
  if (static_cast<int>(rule.children.size()) != rule.size())
    throw InvariantError("children table size does not match prototile count");

  std::set<std::string> labels;
  for (int t = 0; t < rule.size(); ++t) {
    auto& proto = rule.shapes.protos[t];
    if (!labels.insert(proto.label).second) throw InvariantError("duplicate prototile id " + proto.label, t);
    if (proto.cells.empty()) throw InvariantError("prototile " + proto.label + " has no cells", t);
    std::set<IVec> uniq;
    for (auto& c : proto.cells) {
      for (int i = d; i < kMaxDim; ++i) {
        if (c[i] != 0) throw InvariantError("cell outside the ambient dimension", t);
      }
      if (!uniq.insert(c).second) throw InvariantError("prototile " + proto.label + " repeats a cell", t);
    }
    std::sort(proto.cells.begin(), proto.cells.end());
    if (!face_connected(proto.cells, d))
      throw InvariantError("prototile " + proto.label + " is not connected", t);
    if (proto.puncture.dim() != d || proto.puncture.lambda() != lam)
      throw InvariantError("puncture of " + proto.label + " has the wrong dimension or base", t);
    if (!point_in_interior(proto.cells, proto.puncture, d))
      throw InvariantError("puncture of " + proto.label + " is not interior", t);
  }

  for (int t = 0; t < rule.size(); ++t) {
    const auto& proto = rule.shapes.protos[t];
    std::set<IVec> target;
    for (const auto& c : proto.cells) {
      std::vector<IVec> block{lam * c};
      for (int i = 0; i < d; ++i) {
        std::vector<IVec> next;
        for (const auto& b : block) {
          for (int k = 0; k < lam; ++k) {
            IVec x = b;
            x[i] += k;
            next.push_back(x);
          }
        }
        block = std::move(next);
      }
      target.insert(block.begin(), block.end());
    }
    std::set<IVec> covered;
    for (const auto& ch : rule.children[t]) {
      if (ch.proto < 0 || ch.proto >= rule.size())
        throw InvariantError("child of " + proto.label + " names an unknown prototile", t);
      for (const auto& c : rule.shapes.protos[ch.proto].cells) {
        IVec x = c + ch.offset;
        if (!covered.insert(x).second)
          throw InvariantError("children of " + proto.label + " overlap at cell " + to_string(x, d), t);
        if (!target.count(x))
          throw InvariantError("children of " + proto.label + " leave lambda*spt at cell " + to_string(x, d), t);
      }
    }
    if (covered.size() != target.size())
      throw InvariantError("children of " + proto.label + " do not cover lambda*spt", t);
  }
  compute_radii(rule);
}

std::vector<Tile> substitute_tile(const SubstitutionRule& rule, const Tile& t) {
  if (t.proto < 0 || t.proto >= rule.size()) throw InvariantError("unknown prototile id");
  std::vector<Tile> out;
  IVec base = static_cast<std::int64_t>(rule.lambda()) * t.shift;
  for (const auto& ch : rule.children[t.proto]) out.push_back(Tile{ch.proto, base + ch.offset});
  return out;
}

Patch substitute(const SubstitutionRule& rule, const Patch& p) {
  std::vector<Tile> out;
  for (const auto& t : p.tiles()) {
    auto c = substitute_tile(rule, t);
    out.insert(out.end(), c.begin(), c.end());
  }
  return Patch(std::move(out));
}

Patch iterate(const SubstitutionRule& rule, const Patch& p, int n) {
  Patch cur = p;
  for (int i = 0; i < n; ++i) cur = substitute(rule, cur);
  return cur;
}

Patch iterate(const SubstitutionRule& rule, const Tile& t, int n) {
  return iterate(rule, Patch({t}), n);
}

Abelianization abelianization_and_primitivity(const SubstitutionRule& rule) {
  const int s = rule.size();
  Abelianization ab;
  ab.matrix.assign(s, std::vector<std::int64_t>(s, 0));
  for (int j = 0; j < s; ++j) {
    for (const auto& ch : rule.children[j]) ab.matrix[ch.proto][j] += 1;
  }
  // Positivity pattern only; entries are irrelevant past being non-zero.
  std::vector<std::vector<bool>> base(s, std::vector<bool>(s)), pw;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) base[i][j] = ab.matrix[i][j] > 0;
  pw = base;
  const int bound = (s - 1) * (s - 1) + 1;
  for (int n = 1; n <= bound; ++n) {
    bool all = true;
    for (int i = 0; i < s && all; ++i)
      for (int j = 0; j < s && all; ++j) all = pw[i][j];
    if (all) {
      ab.primitive = true;
      ab.witness = n;
      return ab;
    }
    std::vector<std::vector<bool>> next(s, std::vector<bool>(s, false));
    for (int i = 0; i < s; ++i)
      for (int k = 0; k < s; ++k)
        if (pw[i][k])
          for (int j = 0; j < s; ++j)
            if (base[k][j]) next[i][j] = true;
    pw = std::move(next);
  }
  return ab;
}

}  // namespace tiling
