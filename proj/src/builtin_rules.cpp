#include <algorithm>
#include <stdexcept>

#include "tiling/rule.hpp"

namespace tiling {

namespace {

IVec v2(std::int64_t x, std::int64_t y) { return IVec{x, y, 0}; }

// Quarter turn inside an s x s box: (x, y) -> (s-1-y, x).
std::vector<IVec> rotate(const std::vector<IVec>& cells, std::int64_t s) {
  std::vector<IVec> out;
  for (const auto& c : cells) out.push_back(v2(s - 1 - c[1], c[0]));
  return out;
}

std::pair<std::vector<IVec>, IVec> normalize(std::vector<IVec> cells) {
  IVec lo = cells.front();
  for (const auto& c : cells) {
    lo[0] = std::min(lo[0], c[0]);
    lo[1] = std::min(lo[1], c[1]);
  }
  for (auto& c : cells) c = c - lo;
  std::sort(cells.begin(), cells.end());
  return {cells, lo};
}

// The cell of an L-tromino touching both others.
IVec corner_cell(const std::vector<IVec>& cells) {
  for (const auto& c : cells) {
    int n = 0;
    for (const auto& o : cells) n += (norm_inf(o - c) == 1 && (o[0] == c[0] || o[1] == c[1]));
    if (n == 2) return c;
  }
  throw std::logic_error("not an L-tromino");
}

}  // namespace

SubstitutionRule chair_rule() {
  SubstitutionRule rule;
  rule.name = "chair";
  rule.shapes.dim = 2;
  rule.shapes.lambda = 2;
  rule.aperiodic_asserted = true;
  const char* labels[4] = {"A", "B", "C", "D"};
  std::vector<std::vector<IVec>> shapes = {
      {v2(0, 0), v2(1, 0), v2(0, 1)},
      {v2(0, 0), v2(1, 0), v2(1, 1)},
      {v2(0, 0), v2(0, 1), v2(1, 1)},
      {v2(1, 0), v2(0, 1), v2(1, 1)},
  };
  for (int i = 0; i < 4; ++i) {
    std::sort(shapes[i].begin(), shapes[i].end());
    IVec c = corner_cell(shapes[i]);
    Coordinate punc(2, 2, IVec{2 * c[0] + 1, 2 * c[1] + 1, 0}, 1);
    rule.shapes.protos.push_back(Prototile{labels[i], shapes[i], punc});
  }
  auto find_shape = [&](const std::vector<IVec>& norm) {
    for (int i = 0; i < 4; ++i) {
      if (normalize(shapes[i]).first == norm) return i;
    }
    throw std::logic_error("rotated chair not found");
  };

  // omega(A); the other three orientations are quarter turns of it.
  std::vector<Child> base = {{0, v2(0, 0)}, {0, v2(1, 1)}, {1, v2(2, 0)}, {2, v2(0, 2)}};
  rule.children.assign(4, {});
  int proto = 0;
  std::vector<Child> cur = base;
  for (int turn = 0; turn < 4; ++turn) {
    rule.children[proto] = cur;
    // Rotate the parent and every child inside the 4x4 inflated box.
    int next_proto = find_shape(normalize(rotate(shapes[proto], 2)).first);
    std::vector<Child> next;
    for (const auto& ch : cur) {
      std::vector<IVec> cells;
      for (const auto& c : shapes[ch.proto]) cells.push_back(c + ch.offset);
      auto [norm, lo] = normalize(rotate(cells, 4));
      int p = find_shape(norm);
      IVec plo = normalize(shapes[p]).second;
      next.push_back(Child{p, lo - plo});
    }
    // Offsets are relative to the parent's canonical position.
    IVec shift = normalize(rotate(shapes[proto], 2)).second - normalize(shapes[next_proto]).second;
    for (auto& ch : next) ch.offset = ch.offset - 2 * shift;
    proto = next_proto;
    cur = next;
  }
  validate_rule(rule);
  return rule;
}

SubstitutionRule period_doubling_rule() {
  SubstitutionRule rule;
  rule.name = "pd";
  rule.shapes.dim = 1;
  rule.shapes.lambda = 2;
  rule.aperiodic_asserted = true;
  Coordinate half(1, 2, IVec{1, 0, 0}, 1);
  rule.shapes.protos.push_back(Prototile{"a", {IVec{0, 0, 0}}, half});
  rule.shapes.protos.push_back(Prototile{"b", {IVec{0, 0, 0}}, half});
  rule.children = {
      {{0, IVec{0, 0, 0}}, {1, IVec{1, 0, 0}}},
      {{0, IVec{0, 0, 0}}, {0, IVec{1, 0, 0}}},
  };
  validate_rule(rule);
  return rule;
}

SubstitutionRule builtin_rule(const std::string& name) {
  if (name == "chair") return chair_rule();
  if (name == "pd" || name == "period-doubling") return period_doubling_rule();
  throw std::invalid_argument("unknown built-in rule: " + name);
}

}  // namespace tiling
