#pragma once

#include <string>
#include <vector>

#include "tiling/border.hpp"

namespace tiling {

struct RelationWitness {
  bool equivalent = false;
  std::string reason;  // why not, when not equivalent
  int j = -1;          // common border dimension, when both are known
  int m = 0;           // start depth of z
  GeneralizedPathSpec z;
  Coordinate a;        // T_x = T_y + a
};

// Exact for eventually periodic rooted x, y.
RelationWitness border_equivalent(const SubstitutionRule& rule, const ProtofaceTable& table, const MultiDiagram& g,
                                  const PathSpec& x, const PathSpec& y);

// Text record: "equivalent: yes\nj: ..\nm: ..\nz: ..\na: ..\n" or "not equivalent: <reason>\n".
std::string format_witness(const RelationWitness& w);

// 2 R lambda^m, with R the outer radius.
Coordinate translation_bound(const SubstitutionRule& rule, int m);

// Places phi^c_n(y) + a against phi^c_n(x) for n <= N; yes iff tiles agree
// wherever both cover a cube, and at depth N each origin tile is covered by
// the other patch.
bool geometric_oracle(const SubstitutionRule& rule, const ProtofaceTable& table, const MultiDiagram& g,
                      const PathSpec& x, const PathSpec& y, const Coordinate& a, int N);

// Least k such that the k-fold substitute of every collared face covers the
// full neighbourhood of every tile in the collar of each k-fold descendant.
int forcing_constant(const SubstitutionRule& rule, const ProtofaceTable& table, int cap = 8);
// The defining property for one k.
bool forcing_holds(const SubstitutionRule& rule, const ProtofaceTable& table, int k);

struct RSet {
  std::vector<int> gamma, gamma_prime;  // rooted, depths 1..m
  int m = 0;
  std::vector<GeneralizedPathSpec> etas;  // finite (cycle empty), depths m-k..m, all with this fingerprint
  Coordinate fingerprint;                 // placement of phi_m(gamma') relative to phi_m(gamma)
};

// Throws std::invalid_argument when m <= k or the prefixes are not rooted paths of depth m.
std::vector<RSet> rset_enumerate(const SubstitutionRule& rule, const ProtofaceTable& table, const MultiDiagram& g,
                                 const std::vector<int>& gamma, const std::vector<int>& gamma_prime, int m, int k);

}  // namespace tiling
