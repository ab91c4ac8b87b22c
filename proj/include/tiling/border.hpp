#pragma once

#include <cstdint>
#include <vector>

#include "tiling/paths.hpp"

namespace tiling {

// Border of a top-level path, per dimension j. A border chain at level j is a
// sequence of incidences (w_i, s_i) in D(x_i), nested across depths: the
// parent of w_i is w_{i+1}, placed at s_{i+1}.
struct BorderSet {
  PathSpec owner;
  int horizon = 0;
  std::vector<bool> nonempty;                 // [j], exact
  std::vector<std::vector<PathSpec>> tails;   // [j], periodic survivors in canonical form
  std::vector<bool> truncated;                // [j], survivor list hit the cap
  std::vector<std::int64_t> chains;           // [j], chains spanning [first depth, horizon], saturating
};

// Throws PathError when the horizon does not cover prefix + one cycle.
BorderSet border_paths(const MultiDiagram& g, const PathSpec& x, int horizon, int max_tails = 64);

int border_dimension(const MultiDiagram& g, const PathSpec& x);

// Incidences of level j in D(x_depth).
std::vector<Incidence> incidences_at(const MultiDiagram& g, const PathSpec& x, int depth, int j);

}  // namespace tiling
