#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tiling/multidiagram.hpp"

namespace tiling {

class PathError : public std::runtime_error {
 public:
  PathError(const std::string& msg, int index = -1) : std::runtime_error(msg), index(index) {}
  int index;  // offending position in prefix + cycle, or -1
};

// Malformed path literal; column is 1-based.
class PathSyntaxError : public PathError {
 public:
  using PathError::PathError;
};

// prefix . cycle^infinity in level `level`. start = 0 means rooted (level d
// only); the first vertex then sits at depth 1, otherwise at depth start.
struct PathSpec {
  int level = 0;
  int start = 0;
  std::vector<int> prefix;
  std::vector<int> cycle;

  int first_depth() const { return start == 0 ? 1 : start; }
  int periodic_from() const { return first_depth() + static_cast<int>(prefix.size()); }
  int at(int depth) const;
  bool operator==(const PathSpec&) const = default;
};

// Checks adjacency and returns the canonical form: primitive cycle, rotated
// to its lexicographically least rotation, shortest prefix for that rotation.
PathSpec validate_path(const MultiDiagram& g, const PathSpec& x);

// Least depth m with x_i = y_i for all i >= m.
std::optional<int> tail_equivalent(const PathSpec& x, const PathSpec& y);

// H-targets of a vertex set of level j >= 1.
std::vector<int> derived_set(const MultiDiagram& g, int j, const std::vector<int>& F);

std::string format_path(const PathSpec& x);
// "level:j start:n prefix:[v3,v7] cycle:[v7]"
PathSpec parse_path(const std::string& text);

// One entry of a generalized path: a vertex or a pair of siblings.
struct GEntry {
  int level = 0;
  std::vector<int> verts;  // size 1 or 2
  int via = -1;            // escaping edge used to reach the next entry, if any
  bool operator==(const GEntry&) const = default;
  auto operator<=>(const GEntry&) const = default;
};

struct GeneralizedPathSpec {
  int start = 1;
  std::vector<GEntry> prefix;
  std::vector<GEntry> cycle;

  const GEntry& at(int depth) const;
  bool operator==(const GeneralizedPathSpec&) const = default;
};

GeneralizedPathSpec from_path(const PathSpec& x);
// Throws PathError when a transition matches neither kind of step.
void validate_generalized(const MultiDiagram& g, const GeneralizedPathSpec& z);
std::string format_generalized(const GeneralizedPathSpec& z);

// A placed patch: tiles in an integer frame, plus the frame position of the
// Robinson origin.
struct PlacedPatch {
  Patch patch;
  Coordinate origin;
};

enum class PatchMode { plain, collared };

// phi_n / phi^c_n with the depth-n entry inflated lambda^(n-1) times (a pair
// entry lambda^n times, through its common parent).
PlacedPatch robinson_patch(const SubstitutionRule& rule, const ProtofaceTable& table, const MultiDiagram& g,
                           const GeneralizedPathSpec& z, int n, PatchMode mode);
PlacedPatch robinson_patch(const SubstitutionRule& rule, const ProtofaceTable& table, const MultiDiagram& g,
                           const PathSpec& x, int n, PatchMode mode);

// The puncture used as origin for a class: the tile puncture at the top
// level, the face puncture below, relative to the class frame.
Coordinate class_puncture(const ProtofaceTable& table, int j, int cls);

}  // namespace tiling

namespace tiling {

// Rooted top-level paths that are pure cycles of length <= max_cycle, in
// canonical form, ordered by cycle.
std::vector<PathSpec> periodic_paths(const MultiDiagram& g, int max_cycle);

// Translation carrying the frame of `from` onto the frame of `to`, aligning origins.
IVec frame_shift(const PlacedPatch& from, const PlacedPatch& to);

// L-infinity gap between the tile at the origin and the complement of the support.
std::int64_t origin_boundary_distance(const ShapeTable& shapes, const PlacedPatch& p);

}  // namespace tiling
