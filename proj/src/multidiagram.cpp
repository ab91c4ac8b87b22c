#include "tiling/multidiagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tiling {

bool MultiDiagram::has_edge(int j, int v, int w) const {
  const auto& s = E.at(j).at(v);
  return std::binary_search(s.begin(), s.end(), w);
}

namespace {

bool in_boundary(const ProtofaceTable& t, int j, int cls, int fj, int fcls, const IVec& pos) {
  const auto& b = t.boundary[j][cls];
  return std::binary_search(b.begin(), b.end(), BoundaryEntry{fj, Placed{fcls, pos}});
}

// Whether the placed face (fj, f) lies inside lambda times the placed face (hj, h).
bool inside_scaled(const ProtofaceTable& t, int fj, const Placed& f, int hj, const Placed& h) {
  auto small = maximal_cells(t.placed_face(fj, f).support);
  auto big = maximal_cells(t.placed_face(hj, h).support);
  for (const auto& c : small) {
    bool any = std::any_of(big.begin(), big.end(),
                           [&](const Cell& b) { return cell_in_scaled(c, b, t.shapes.lambda, t.shapes.dim); });
    if (!any) return false;
  }
  return true;
}

}  // namespace

MultiDiagram build_multidiagram(const SubstitutionRule& rule, const ProtofaceTable& table) {
  if (table.induced.empty()) throw ConsistencyError("protoface table missing");
  const int d = rule.dim();
  const std::int64_t lam = rule.lambda();
  MultiDiagram g;
  g.dim = d;
  g.V.resize(d + 1);
  g.E.resize(d + 1);
  g.Ein.resize(d + 1);
  g.H.resize(d + 1);
  g.D.resize(d + 1);
  g.by_parent.resize(d + 1);
  g.by_child.resize(d + 1);

  for (int j = 0; j <= d; ++j) {
    g.by_parent[j].resize(table.count(j));
    g.by_child[j].resize(table.count(j));
    for (int par = 0; par < table.count(j); ++par) {
      const auto& kids = table.induced[j][par];
      for (int r = 0; r < static_cast<int>(kids.size()); ++r) {
        int id = static_cast<int>(g.V[j].size());
        g.V[j].push_back(Vertex{kids[r].cls, par, kids[r].pos, r});
        g.by_parent[j][par].push_back(id);
        g.by_child[j][kids[r].cls].push_back(id);
      }
    }
    const int n = g.count(j);
    g.E[j].assign(n, {});
    g.Ein[j].assign(n, {});
    for (int v = 0; v < n; ++v) {
      for (int w : g.by_child[j][g.V[j][v].parent]) {
        g.E[j][v].push_back(w);
        g.Ein[j][w].push_back(v);
      }
      std::sort(g.E[j][v].begin(), g.E[j][v].end());
      if (j == d && g.E[j][v].empty())
        throw ConsistencyError("vertex v" + std::to_string(v) + " of level " + std::to_string(j) +
                               " has no outgoing edge");
    }
  }

  // Incidence: faces of lower levels on the boundary, with parents compatible.
  for (int j = 0; j <= d; ++j) {
    g.D[j].assign(g.count(j), {});
    g.H[j].assign(g.count(j), {});
    for (int v = 0; v < g.count(j); ++v) {
      const Vertex& vx = g.V[j][v];
      g.D[j][v].push_back(Incidence{j, v, IVec{}, IVec{}});
      for (const auto& be : table.boundary[j][vx.parent]) {
        const int i = be.j;
        for (int w : g.by_parent[i][be.face.cls]) {
          const Vertex& wx = g.V[i][w];
          IVec s = lam * be.face.pos + wx.offset - vx.offset;
          if (in_boundary(table, j, vx.child, i, wx.child, s)) {
            g.D[j][v].push_back(Incidence{i, w, s, be.face.pos});
            if (i == j - 1) g.H[j][v].push_back(w);
          }
        }
      }
      std::sort(g.H[j][v].begin(), g.H[j][v].end());
      g.H[j][v].erase(std::unique(g.H[j][v].begin(), g.H[j][v].end()), g.H[j][v].end());
    }
  }

  // Escaping edges.
  std::set<std::string> warned;
  for (int k = 1; k <= d; ++k) {
    for (int gpp = 0; gpp < table.count(k); ++gpp) {
      const auto& kids = table.induced[k][gpp];
      const auto& verts = g.by_parent[k][gpp];
      // Created faces in omega(g''), keyed by placement, with the children containing them.
      std::map<std::pair<int, Placed>, std::vector<std::pair<int, IVec>>> created;
      for (int a = 0; a < static_cast<int>(kids.size()); ++a) {
        for (const auto& be : table.boundary[k][kids[a].cls]) {
          Placed at{be.face.cls, kids[a].pos + be.face.pos};
          bool from_super = false;
          for (const auto& hb : table.boundary[k][gpp]) {
            if (hb.j >= be.j && inside_scaled(table, be.j, at, hb.j, hb.face)) {
              from_super = true;
              break;
            }
          }
          if (!from_super) created[{be.j, at}].push_back({a, be.face.pos});
        }
      }
      for (const auto& [key, owners] : created) {
        const auto [j, at] = key;
        if (owners.size() >= 3) {
          std::ostringstream os;
          os << owners.size() << " children of F" << k << "." << gpp << " meet at a created " << j
             << "-face (F" << j << "." << at.cls << " at " << to_string(at.pos, d) << "); only pairs are encoded";
          if (warned.insert(os.str()).second) g.warnings.push_back(os.str());
        } else if (owners.size() == 1) {
          std::ostringstream os;
          os << "created " << j << "-face F" << j << "." << at.cls << " in omega(F" << k << "." << gpp
             << ") lies on a single child; no escaping edge";
          if (warned.insert(os.str()).second) g.warnings.push_back(os.str());
        }
        for (std::size_t x = 0; x < owners.size(); ++x) {
          for (std::size_t y = x + 1; y < owners.size(); ++y) {
            int a = owners[x].first, b = owners[y].first;
            EscapingEdge base;
            base.j = j;
            base.k = k;
            base.tgt_a = verts[a];
            base.tgt_b = verts[b];
            base.created = at.cls;
            base.beta_a = owners[x].second;
            base.beta_b = owners[y].second;
            for (int v : g.by_parent[j][at.cls]) {
              EscapingEdge e = base;
              e.src = {v};
              g.S.push_back(e);
            }
            // Pair source: only when this face is the whole intersection of a and b.
            bool maximal = true;
            for (const auto& [okey, oown] : created) {
              if (okey.first <= j) continue;
              bool has_a = false, has_b = false;
              for (const auto& o : oown) {
                has_a |= o.first == a;
                has_b |= o.first == b;
              }
              if (has_a && has_b &&
                  in_boundary(table, okey.first, okey.second.cls, j, at.cls, at.pos - okey.second.pos)) {
                maximal = false;
                break;
              }
            }
            if (!maximal) continue;
            const auto& sib = g.by_parent[j][at.cls];
            for (std::size_t p = 0; p < sib.size(); ++p) {
              for (std::size_t q = p + 1; q < sib.size(); ++q) {
                EscapingEdge e = base;
                e.src = {sib[p], sib[q]};
                g.S.push_back(e);
              }
            }
          }
        }
      }
    }
  }
  // Below the top level a parent class may only ever be created, never
  // inherited; such vertices must leave through an escaping edge instead.
  std::vector<std::set<int>> escapes(d + 1);
  for (const auto& e : g.S)
    if (e.src.size() == 1) escapes[e.j].insert(e.src[0]);
  for (int j = 0; j < d; ++j) {
    for (int v = 0; v < g.count(j); ++v) {
      if (g.E[j][v].empty() && !escapes[j].count(v))
        throw ConsistencyError("vertex v" + std::to_string(v) + " of level " + std::to_string(j) +
                               " has neither an outgoing nor an escaping edge");
    }
  }
  return g;
}

std::string export_dot(const MultiDiagram& g, const DotOptions& opt) {
  std::ostringstream os;
  const int d = g.dim;
  auto selected = [&](int j) { return opt.level < 0 || opt.level == j; };
  auto label = [&](int j, int v) {
    const Vertex& x = g.V[j][v];
    std::ostringstream l;
    l << "v" << v << "\\n(" << j << ", F" << j << "." << x.child << ", F" << j << "." << x.parent << ", "
      << to_string(x.offset, d) << ")";
    return l.str();
  };
  os << "digraph multidiagram {\n  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
  if (opt.unroll > 0) {
    if (opt.root && selected(d)) os << "  root [shape=circle, label=\"o\"];\n";
    for (int j = 0; j <= d; ++j) {
      if (!selected(j)) continue;
      os << "  subgraph cluster_level" << j << " {\n    label=\"level " << j << "\";\n";
      for (int n = 1; n <= opt.unroll; ++n) {
        for (int v = 0; v < g.count(j); ++v)
          os << "    n" << n << "_j" << j << "_v" << v << " [label=\"" << label(j, v) << "\"];\n";
      }
      os << "  }\n";
      if (opt.root && j == d) {
        for (int v = 0; v < g.count(j); ++v) os << "  root -> n1_j" << j << "_v" << v << ";\n";
      }
      for (int n = 1; n < opt.unroll; ++n) {
        for (int v = 0; v < g.count(j); ++v)
          for (int w : g.E[j][v])
            os << "  n" << n << "_j" << j << "_v" << v << " -> n" << n + 1 << "_j" << j << "_v" << w << ";\n";
      }
    }
    os << "}\n";
    return os.str();
  }
  for (int j = 0; j <= d; ++j) {
    if (!selected(j)) continue;
    os << "  subgraph cluster_level" << j << " {\n    label=\"level " << j << "\";\n";
    for (int v = 0; v < g.count(j); ++v) os << "    j" << j << "_v" << v << " [label=\"" << label(j, v) << "\"];\n";
    os << "  }\n";
  }
  if (opt.root && selected(d)) {
    os << "  root [shape=circle, label=\"o\"];\n";
    for (int v = 0; v < g.count(d); ++v) os << "  root -> j" << d << "_v" << v << ";\n";
  }
  for (int j = 0; j <= d; ++j) {
    if (!selected(j)) continue;
    for (int v = 0; v < g.count(j); ++v)
      for (int w : g.E[j][v]) os << "  j" << j << "_v" << v << " -> j" << j << "_v" << w << " [style=solid];\n";
  }
  if (opt.level < 0) {
    for (int j = 1; j <= d; ++j)
      for (int v = 0; v < g.count(j); ++v)
        for (int w : g.H[j][v])
          os << "  j" << j << "_v" << v << " -> j" << j - 1 << "_v" << w << " [style=dashed];\n";
    for (std::size_t i = 0; i < g.S.size(); ++i) {
      const auto& e = g.S[i];
      os << "  s" << i << " [shape=point];\n";
      for (int v : e.src) os << "  j" << e.j << "_v" << v << " -> s" << i << " [style=dotted];\n";
      os << "  s" << i << " -> j" << e.k << "_v" << e.tgt_a << " [style=dotted];\n";
      os << "  s" << i << " -> j" << e.k << "_v" << e.tgt_b << " [style=dotted];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tiling
