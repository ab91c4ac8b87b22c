#include "tiling/protofaces.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tiling {

int ProtofaceTable::total() const {
  int n = 0;
  for (const auto& c : classes) n += static_cast<int>(c.size());
  return n;
}

Placed ProtofaceTable::classify(const Face& f) const {
  Face c = canonical_face(f);
  if (f.j < 0 || f.j >= static_cast<int>(index.size())) return Placed{-1, f.ref};
  auto it = index[f.j].find({c.p.tiles(), c.q.tiles()});
  if (it == index[f.j].end()) return Placed{-1, f.ref};
  return Placed{it->second, f.ref};
}

Placed ProtofaceTable::classify_or_throw(const Face& f) const {
  Placed pl = classify(f);
  if (pl.cls < 0) throw ConsistencyError("face has no protoface class: " + describe_face(shapes, f));
  return pl;
}

int ProtofaceTable::add(const Face& f) {
  if (index.size() <= static_cast<std::size_t>(f.j)) {
    index.resize(f.j + 1);
    classes.resize(f.j + 1);
  }
  auto key = std::make_pair(f.p.tiles(), f.q.tiles());
  auto it = index[f.j].find(key);
  if (it != index[f.j].end()) return it->second;
  int id = static_cast<int>(classes[f.j].size());
  index[f.j].emplace(key, id);
  classes[f.j].push_back(f);
  return id;
}

std::vector<Face> induced_faces(const SubstitutionRule& rule, const Face& f) {
  Patch wq = substitute(rule, f.q);
  Patch wp = substitute(rule, f.p);
  auto big = maximal_cells(f.support);
  std::vector<Face> out;
  for (auto& g : extract_faces(rule.shapes, wq, f.j)) {
    if (!wp.includes(g.p)) continue;
    bool inside = true;
    for (const auto& c : maximal_cells(g.support)) {
      bool any = std::any_of(big.begin(), big.end(),
                             [&](const Cell& b) { return cell_in_scaled(c, b, rule.lambda(), rule.dim()); });
      if (!any) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Placed> induced_substitution(const SubstitutionRule& rule, const ProtofaceTable& table, int j,
                                         int id) {
  if (j < 0 || j >= static_cast<int>(table.classes.size()) || id < 0 || id >= table.count(j))
    throw std::out_of_range("face not in table");
  std::vector<Placed> out;
  for (const auto& g : induced_faces(rule, table.classes[j][id])) out.push_back(table.classify_or_throw(g));
  return out;
}

namespace {

bool closed_under_induction(const SubstitutionRule& rule, const ProtofaceTable& table) {
  for (std::size_t j = 0; j < table.classes.size(); ++j) {
    for (const auto& f : table.classes[j]) {
      for (const auto& g : induced_faces(rule, f)) {
        if (table.classify(g).cls < 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

ProtofaceTable enumerate_protofaces(const SubstitutionRule& rule, int cap) {
  ProtofaceTable table;
  table.shapes = rule.shapes;
  table.classes.resize(rule.dim() + 1);
  table.index.resize(rule.dim() + 1);
  std::vector<int> history;
  bool done = false;
  for (int n = 1; n <= cap && !done; ++n) {
    std::set<std::string> rejected;
    for (int t = 0; t < rule.size(); ++t) {
      Patch big = iterate(rule, Tile{t, IVec{}}, n);
      std::vector<std::string> rej;
      for (const auto& f : extract_faces(rule.shapes, big, -1, &rej)) table.add(canonical_face(f));
      rejected.insert(rej.begin(), rej.end());
    }
    history.push_back(table.total());
    std::ostringstream os;
    os << "round " << n << ": " << table.total() << " classes";
    if (!rejected.empty()) os << ", " << rejected.size() << " supports rejected";
    table.log.push_back(os.str());
    for (const auto& r : rejected) table.log.push_back("  rejected " + r);
    std::size_t h = history.size();
    if (h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3] &&
        closed_under_induction(rule, table)) {
      table.closure_depth = n;
      done = true;
    }
  }
  if (!done) throw ClosureError("closure cap exceeded (" + std::to_string(cap) + ")");

  const int d = rule.dim();
  table.induced.resize(d + 1);
  table.boundary.resize(d + 1);
  for (int j = 0; j <= d; ++j) {
    table.induced[j].resize(table.count(j));
    table.boundary[j].resize(table.count(j));
    for (int id = 0; id < table.count(j); ++id) {
      table.induced[j][id] = induced_substitution(rule, table, j, id);
      const Face& g = table.classes[j][id];
      if (j == 0) continue;
      for (const auto& f : extract_faces(rule.shapes, g.q, -1)) {
        if (f.j < j && on_boundary(f, g)) table.boundary[j][id].push_back(BoundaryEntry{f.j, table.classify_or_throw(f)});
      }
      std::sort(table.boundary[j][id].begin(), table.boundary[j][id].end());
    }
  }
  return table;
}

Rho compute_rho(const SubstitutionRule& rule, const ProtofaceTable& table) {
  const int d = rule.dim();
  const std::uint8_t full = static_cast<std::uint8_t>((1u << d) - 1);
  std::int64_t margin = -1;
  for (const auto& level : table.classes) {
    for (const auto& f : level) {
      std::set<IVec> cubes;
      for (const auto& t : f.q.tiles())
        for (const auto& c : tile_cells(rule.shapes, t)) cubes.insert(c.anchor);
      auto [lo, hi] = bounding_box(rule.shapes, f.q);
      auto kmax = maximal_cells(f.support);
      std::vector<IVec> grid{IVec{}};
      for (int i = 0; i < d; ++i) {
        std::vector<IVec> next;
        for (const auto& g : grid) {
          for (auto v = lo[i] - 1; v <= hi[i]; ++v) {
            IVec x = g;
            x[i] = v;
            next.push_back(x);
          }
        }
        grid = std::move(next);
      }
      for (const auto& g : grid) {
        if (cubes.count(g)) continue;
        for (const auto& c : kmax) {
          auto dist = cell_distance(c, Cell{g, full}, d);
          if (margin < 0 || dist < margin) margin = dist;
        }
      }
    }
  }
  std::int64_t sep = -1;
  for (int t = 0; t < rule.size(); ++t) {
    auto faces = extract_faces(rule.shapes, iterate(rule, Tile{t, IVec{}}, 3), -1);
    for (std::size_t a = 0; a < faces.size(); ++a) {
      for (std::size_t b = a + 1; b < faces.size(); ++b) {
        if (faces_intersect(faces[a], faces[b])) continue;
        auto dist = face_distance(faces[a], faces[b], d);
        if (sep < 0 || dist < sep) sep = dist;
      }
    }
  }
  if (margin <= 0 || sep <= 0) throw ConsistencyError("rho is not positive; collaring is inconsistent");
  Rho r;
  r.collar_margin = margin;
  r.separation = sep;
  r.rho = Coordinate::scalar(rule.lambda(), std::min(margin, sep));
  return r;
}

std::string table_listing(const ProtofaceTable& table, int j) {
  std::ostringstream os;
  for (int k = 0; k < static_cast<int>(table.classes.size()); ++k) {
    if (j >= 0 && k != j) continue;
    os << "# F^" << k << ": " << table.count(k) << " classes\n";
    for (int id = 0; id < table.count(k); ++id) {
      os << "F" << k << "." << id << " " << describe_face(table.shapes, table.classes[k][id]) << "\n";
    }
  }
  return os.str();
}

}  // namespace tiling
