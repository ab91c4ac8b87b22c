#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tiling/faces.hpp"
#include "tiling/rule.hpp"

namespace tiling {

// A face class placed at a position: the canonical representative
// translated by pos.
struct Placed {
  int cls = 0;
  IVec pos{};
  bool operator==(const Placed&) const = default;
  auto operator<=>(const Placed&) const = default;
};

struct BoundaryEntry {
  int j = 0;  // dimension of the boundary face
  Placed face;
  bool operator==(const BoundaryEntry&) const = default;
  auto operator<=>(const BoundaryEntry&) const = default;
};

class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal inconsistency, such as a face that no class matches.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProtofaceTable {
  ShapeTable shapes;
  std::vector<std::vector<Face>> classes;                // [j][id], ref at the origin
  std::vector<std::vector<std::vector<Placed>>> induced;  // [j][id]: omega_j children
  std::vector<std::vector<std::vector<BoundaryEntry>>> boundary;  // [j][id]
  int closure_depth = 0;
  std::vector<std::string> log;

  int count(int j) const { return static_cast<int>(classes.at(j).size()); }
  int total() const;
  // Class id and position of a face, or cls = -1 when no class matches.
  Placed classify(const Face& f) const;
  Placed classify_or_throw(const Face& f) const;
  Face placed_face(int j, const Placed& pl) const { return translate_face(classes.at(j).at(pl.cls), pl.pos); }

  std::vector<std::map<std::pair<std::vector<Tile>, std::vector<Tile>>, int>> index;
  int add(const Face& canonical);  // returns the id; no-op if present
};

// Faces of omega(q) that sit inside lambda * spt(f) with p_i inside omega(p).
std::vector<Face> induced_faces(const SubstitutionRule& rule, const Face& f);

// Grows omega^n(t) until the table is stable for two rounds and closed
// under the induced substitutions. Throws ClosureError past cap.
ProtofaceTable enumerate_protofaces(const SubstitutionRule& rule, int cap = 8);

// omega_j of a table entry, classified. Throws ConsistencyError when a
// child has no class.
std::vector<Placed> induced_substitution(const SubstitutionRule& rule, const ProtofaceTable& table, int j,
                                         int id);

struct Rho {
  Coordinate rho;
  std::int64_t collar_margin = 0;  // condition (i) bound
  std::int64_t separation = 0;     // condition (ii) bound
};

// Throws ConsistencyError if rho would not be positive.
Rho compute_rho(const SubstitutionRule& rule, const ProtofaceTable& table);

// Text listing, one class per line; j = -1 lists every dimension.
std::string table_listing(const ProtofaceTable& table, int j = -1);

}  // namespace tiling
