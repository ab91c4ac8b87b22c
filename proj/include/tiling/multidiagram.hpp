#pragma once

#include <string>
#include <vector>

#include "tiling/protofaces.hpp"

namespace tiling {

// Occurrence of the face class `child` inside omega_j(parent) at offset.
// rank is the index of the occurrence in the parent's child list.
struct Vertex {
  int child = 0;
  int parent = 0;
  IVec offset{};
  int rank = 0;
};

// w (a vertex one or more levels down) is incident to v: the face of w sits
// on the boundary of the face of v at `shift`, and the parent of w sits on
// the boundary of the parent of v at `parent_shift`.
struct Incidence {
  int level = 0;
  int w = 0;
  IVec shift{};
  IVec parent_shift{};
};

// An escaping edge. The source is a vertex (src.size() == 1) or a pair at
// level j; the target is a pair of siblings at level k > j one depth up.
// beta_a / beta_b place the created face relative to the two target faces.
struct EscapingEdge {
  int j = 0;
  std::vector<int> src;
  int k = 0;
  int tgt_a = 0, tgt_b = 0;
  int created = 0;  // class of the created j-face (the parent of the source)
  IVec beta_a{}, beta_b{};
};

struct MultiDiagram {
  int dim = 0;
  std::vector<std::vector<Vertex>> V;               // [j]
  std::vector<std::vector<std::vector<int>>> E;     // [j][v] successors
  std::vector<std::vector<std::vector<int>>> Ein;   // [j][v] predecessors
  std::vector<std::vector<std::vector<int>>> H;     // [j][v] targets in V^{j-1}
  std::vector<std::vector<std::vector<Incidence>>> D;  // [j][v], includes (j, v, 0, 0)
  std::vector<EscapingEdge> S;
  std::vector<std::vector<std::vector<int>>> by_parent;  // [j][class] -> vertices in rank order
  std::vector<std::vector<std::vector<int>>> by_child;   // [j][class] -> vertices
  std::vector<std::string> warnings;

  int count(int j) const { return static_cast<int>(V.at(j).size()); }
  bool has_edge(int j, int v, int w) const;
};

MultiDiagram build_multidiagram(const SubstitutionRule& rule, const ProtofaceTable& table);

struct DotOptions {
  int level = -1;   // -1: every level
  int unroll = 0;   // > 0: acyclic unrolling to this depth, with root
  bool root = true;
};

std::string export_dot(const MultiDiagram& g, const DotOptions& opt = {});

}  // namespace tiling
