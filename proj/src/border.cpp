#include "tiling/border.hpp"

#include <algorithm>
#include <set>

#include "tiling/state_graph.hpp"

namespace tiling {

std::vector<Incidence> incidences_at(const MultiDiagram& g, const PathSpec& x, int depth, int j) {
  std::vector<Incidence> out;
  for (const auto& inc : g.D[x.level][x.at(depth)])
    if (inc.level == j) out.push_back(inc);
  return out;
}

namespace {

// Whether incidence b at depth i+1 continues incidence a at depth i.
bool continues(const MultiDiagram& g, int j, const Incidence& a, const Incidence& b) {
  return b.shift == a.parent_shift && g.has_edge(j, a.w, b.w);
}

struct Periodic {
  std::vector<std::pair<int, int>> nodes;  // (phase, index into layer)
  std::vector<std::vector<Incidence>> layer;
  Succ succ;
};

Periodic periodic_graph(const MultiDiagram& g, const PathSpec& x, int j) {
  Periodic p;
  const int P = x.periodic_from();
  const int L = static_cast<int>(x.cycle.size());
  std::vector<int> base(L + 1, 0);
  for (int ph = 0; ph < L; ++ph) {
    p.layer.push_back(incidences_at(g, x, P + ph, j));
    base[ph + 1] = base[ph] + static_cast<int>(p.layer[ph].size());
    for (int k = 0; k < static_cast<int>(p.layer[ph].size()); ++k) p.nodes.push_back({ph, k});
  }
  p.succ.assign(p.nodes.size(), {});
  for (int ph = 0; ph < L; ++ph) {
    int nx = (ph + 1) % L;
    for (int a = 0; a < static_cast<int>(p.layer[ph].size()); ++a)
      for (int b = 0; b < static_cast<int>(p.layer[nx].size()); ++b)
        if (continues(g, j, p.layer[ph][a], p.layer[nx][b])) p.succ[base[ph] + a].push_back(base[nx] + b);
  }
  return p;
}

}  // namespace

BorderSet border_paths(const MultiDiagram& g, const PathSpec& x0, int horizon, int max_tails) {
  PathSpec x = validate_path(g, x0);
  if (x.level != g.dim) throw PathError("border paths need a top-level path");
  if (horizon < x.periodic_from() + static_cast<int>(x.cycle.size()) - 1)
    throw PathError("horizon " + std::to_string(horizon) + " does not cover prefix and one cycle");
  const int d = g.dim;
  BorderSet out;
  out.owner = x;
  out.horizon = horizon;
  out.nonempty.assign(d + 1, false);
  out.tails.assign(d + 1, {});
  out.truncated.assign(d + 1, false);
  out.chains.assign(d + 1, 0);
  const int P = x.periodic_from();
  for (int j = 0; j <= d; ++j) {
    Periodic p = periodic_graph(g, x, j);
    auto alive = infinite_from(p.succ);
    out.nonempty[j] = std::find(alive.begin(), alive.end(), true) != alive.end();

    bool cut = false;
    std::set<std::vector<int>> seen;
    for (const auto& cyc : simple_cycles(p.succ, max_tails, &cut)) {
      PathSpec t;
      t.level = j;
      t.start = P + p.nodes[cyc[0]].first;
      for (int node : cyc) t.cycle.push_back(p.layer[p.nodes[node].first][p.nodes[node].second].w);
      t = validate_path(g, t);
      std::vector<int> key{t.start};
      key.insert(key.end(), t.prefix.begin(), t.prefix.end());
      key.push_back(-1);
      key.insert(key.end(), t.cycle.begin(), t.cycle.end());
      if (seen.insert(key).second) out.tails[j].push_back(t);
    }
    out.truncated[j] = cut;

    // Chains over [first depth, horizon], counted with saturation.
    const std::int64_t sat = std::int64_t{1} << 60;
    auto layer = incidences_at(g, x, x.first_depth(), j);
    std::vector<std::int64_t> cnt(layer.size(), 1);
    for (int i = x.first_depth(); i < horizon; ++i) {
      auto next = incidences_at(g, x, i + 1, j);
      std::vector<std::int64_t> nc(next.size(), 0);
      for (std::size_t a = 0; a < layer.size(); ++a)
        for (std::size_t b = 0; b < next.size(); ++b)
          if (cnt[a] && continues(g, j, layer[a], next[b])) nc[b] = std::min(sat, nc[b] + cnt[a]);
      layer = std::move(next);
      cnt = std::move(nc);
    }
    for (auto c : cnt) out.chains[j] = std::min(sat, out.chains[j] + c);
  }
  return out;
}

int border_dimension(const MultiDiagram& g, const PathSpec& x0) {
  PathSpec x = validate_path(g, x0);
  if (x.level != g.dim) throw PathError("border dimension needs a top-level path");
  for (int j = 0; j <= g.dim; ++j) {
    auto alive = infinite_from(periodic_graph(g, x, j).succ);
    if (std::find(alive.begin(), alive.end(), true) != alive.end()) return j;
  }
  throw ConsistencyError("path has no border in any dimension");
}

}  // namespace tiling
