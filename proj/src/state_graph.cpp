#include "tiling/state_graph.hpp"

#include <algorithm>
#include <functional>

namespace tiling {

std::vector<bool> infinite_from(const Succ& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<std::vector<int>> pred(n);
  std::vector<int> live(n);
  for (int v = 0; v < n; ++v) {
    live[v] = static_cast<int>(succ[v].size());
    for (int w : succ[v]) pred[w].push_back(v);
  }
  std::vector<bool> alive(n, true);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (live[v] == 0) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    for (int u : pred[v])
      if (alive[u] && --live[u] == 0) queue.push_back(u);
  }
  return alive;
}

std::vector<std::vector<int>> simple_cycles(const Succ& succ, int cap, bool* truncated) {
  const int n = static_cast<int>(succ.size());
  std::vector<std::vector<int>> out;
  bool cut = false;
  std::vector<int> stack;
  std::vector<bool> on(n, false);
  long budget = 2000000;
  // Plain backtracking restricted to nodes >= start; fine for the small graphs here.
  std::function<void(int, int)> dfs = [&](int start, int v) {
    if (cut) return;
    if (--budget < 0) {
      cut = true;
      return;
    }
    for (int w : succ[v]) {
      if (w < start) continue;
      if (w == start) {
        if (static_cast<int>(out.size()) >= cap) {
          cut = true;
          return;
        }
        out.push_back(stack);
      } else if (!on[w]) {
        on[w] = true;
        stack.push_back(w);
        dfs(start, w);
        stack.pop_back();
        on[w] = false;
      }
      if (cut) return;
    }
  };
  for (int s = 0; s < n && !cut; ++s) {
    stack = {s};
    on[s] = true;
    dfs(s, s);
    on[s] = false;
  }
  if (truncated) *truncated = cut;
  return out;
}

}  // namespace tiling
