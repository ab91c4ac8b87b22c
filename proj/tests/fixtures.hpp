#pragma once

#include "tiling/paths.hpp"
#include "tiling/protofaces.hpp"
#include "tiling/rule.hpp"

// Built-in rules with their tables and diagrams, computed once per process.
struct Fixture {
  tiling::SubstitutionRule rule;
  tiling::ProtofaceTable table;
  tiling::MultiDiagram g;
};

inline const Fixture& fixture(const std::string& name) {
  static const Fixture pd = [] {
    Fixture f{tiling::builtin_rule("pd"), {}, {}};
    f.table = tiling::enumerate_protofaces(f.rule);
    f.g = tiling::build_multidiagram(f.rule, f.table);
    return f;
  }();
  static const Fixture chair = [] {
    Fixture f{tiling::builtin_rule("chair"), {}, {}};
    f.table = tiling::enumerate_protofaces(f.rule);
    f.g = tiling::build_multidiagram(f.rule, f.table);
    return f;
  }();
  return name == "pd" ? pd : chair;
}

inline tiling::PathSpec fixed(int level, std::vector<int> cycle) { return tiling::PathSpec{level, 0, {}, std::move(cycle)}; }

// Pure rooted cycles up to max_cycle, plus each with a one-step prefix from
// every predecessor of its first vertex.
inline std::vector<tiling::PathSpec> generated_paths(const tiling::MultiDiagram& g, int max_cycle) {
  std::vector<tiling::PathSpec> out;
  for (const auto& x : tiling::periodic_paths(g, max_cycle)) {
    out.push_back(x);
    for (int u : g.Ein[x.level][x.cycle.front()]) {
      auto y = tiling::validate_path(g, tiling::PathSpec{x.level, 0, {u}, x.cycle});
      if (y != x) out.push_back(y);
    }
  }
  return out;
}
