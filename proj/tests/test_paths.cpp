#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"

using namespace tiling;

namespace {

std::string letters(const ShapeTable& s, const Patch& p) {
  auto ts = p.tiles();
  std::sort(ts.begin(), ts.end(), [](const Tile& a, const Tile& b) { return a.shift < b.shift; });
  std::string w;
  for (const auto& t : ts) w += s.protos[t.proto].label;
  return w;
}

std::set<IVec> cubes(const ShapeTable& s, const Patch& p) {
  std::set<IVec> out;
  for (const auto& t : p.tiles())
    for (const auto& c : tile_cells(s, t)) out.insert(c.anchor);
  return out;
}

}  // namespace

TEST_CASE("pure cycles validate and canonicalize") {
  const auto& g = fixture("pd").g;
  // The collared pd diagram has no loops: every cycle has even length.
  for (int v = 0; v < g.count(1); ++v) CHECK_FALSE(g.has_edge(1, v, v));
  auto x = validate_path(g, fixed(1, {1, 7}));
  CHECK(x == fixed(1, {1, 7}));
  CHECK(validate_path(g, x) == x);
  // Rooted: a rotated cycle is a different path; the least rotation moves into the prefix.
  CHECK(validate_path(g, fixed(1, {7, 1})) == PathSpec{1, 0, {7}, {1, 7}});
  CHECK(validate_path(g, PathSpec{1, 0, {1, 7, 1}, {7, 1, 7, 1}}) == x);
  CHECK(validate_path(g, PathSpec{1, 0, {0, 3}, {0, 3}}) == fixed(1, {0, 3}));
  auto odd = validate_path(g, PathSpec{1, 0, {}, {3, 0}});
  CHECK(odd == PathSpec{1, 0, {3}, {0, 3}});
  CHECK(validate_path(g, odd) == odd);
}

TEST_CASE("adjacency errors name the junction") {
  const auto& g = fixture("pd").g;
  try {
    validate_path(g, PathSpec{1, 0, {2}, {1, 7}});
    FAIL("expected a path error");
  } catch (const PathError& e) {
    CHECK(e.index == 1);
  }
  CHECK_THROWS_AS(validate_path(g, PathSpec{1, 0, {}, {0, 5}}), PathError);
  CHECK_THROWS_AS(validate_path(g, PathSpec{1, 0, {}, {99}}), PathError);
  CHECK_THROWS_AS(validate_path(g, PathSpec{0, 0, {}, {1, 2}}), PathError);
  CHECK_NOTHROW(validate_path(g, PathSpec{0, 3, {}, {1, 2}}));
}

TEST_CASE("tail equivalence") {
  const auto& g = fixture("pd").g;
  auto x = fixed(1, {1, 7});
  CHECK(tail_equivalent(x, x) == 1);
  // v6 also feeds v1.
  PathSpec y{1, 0, {6}, {1, 7}};
  REQUIRE_NOTHROW(validate_path(g, y));
  CHECK(tail_equivalent(PathSpec{1, 0, {7}, {1, 7}}, y) == 2);
  CHECK_FALSE(tail_equivalent(fixed(1, {1, 7}), fixed(1, {4, 8})).has_value());
  CHECK_FALSE(tail_equivalent(fixed(1, {1, 7}), PathSpec{0, 1, {}, {1, 2}}).has_value());
}

TEST_CASE("derived sets") {
  const auto& g = fixture("pd").g;
  CHECK(derived_set(g, 1, {}).empty());
  std::vector<int> all(g.count(1));
  for (int v = 0; v < g.count(1); ++v) all[v] = v;
  std::set<int> reached;
  for (int v = 0; v < g.count(1); ++v) reached.insert(g.H[1][v].begin(), g.H[1][v].end());
  auto everything = derived_set(g, 1, all);
  CHECK(std::set<int>(everything.begin(), everything.end()) == reached);
  // A letter keeps exactly one endpoint of its parent (offset 0 keeps the
  // left end, offset 1 the right end); the other endpoint is created inside.
  for (int v = 0; v < g.count(1); ++v) {
    auto one = derived_set(g, 1, {v});
    REQUIRE(one.size() == 1);
    CHECK(g.V[0][one[0]].offset[0] == 0);
  }
  CHECK_THROWS_AS(derived_set(g, 0, {0}), PathError);
}

TEST_CASE("path literals") {
  PathSpec x{2, 0, {3, 7}, {7}};
  CHECK(format_path(x) == "level:2 start:0 prefix:[v3,v7] cycle:[v7]");
  CHECK(parse_path(format_path(x)) == x);
  CHECK(parse_path("  level:1 start:4 prefix:[ ] cycle:[ v1 , v2 ]") == PathSpec{1, 4, {}, {1, 2}});
  try {
    parse_path("level:2 start:0 prefix:[] cycle:[v1 v2]");
    FAIL("expected a syntax error");
  } catch (const PathSyntaxError& e) {
    CHECK(e.index == 37);
  }
  CHECK_THROWS_AS(parse_path("level:2 start:0 prefix:[] cycle:[]"), PathSyntaxError);
  CHECK_THROWS_AS(parse_path("level:2 prefix:[] cycle:[v1]"), PathSyntaxError);
}

TEST_CASE("Robinson patch at depth one is the first tile") {
  for (const char* name : {"pd", "chair"}) {
    const auto& f = fixture(name);
    for (const auto& x : periodic_paths(f.g, 2)) {
      auto p = robinson_patch(f.rule, f.table, f.g, x, 1, PatchMode::plain);
      REQUIRE(p.patch.size() == 1);
      CHECK(puncture(f.table.shapes, p.patch.tiles()[0]) == p.origin);
    }
  }
}

TEST_CASE("pd Robinson patches along a path of first letters") {
  const auto& f = fixture("pd");
  auto x = fixed(1, {4, 8});
  auto p2 = robinson_patch(f.rule, f.table, f.g, x, 2, PatchMode::plain);
  auto p3 = robinson_patch(f.rule, f.table, f.g, x, 3, PatchMode::plain);
  CHECK(letters(f.table.shapes, p2.patch) == "ab");
  CHECK(letters(f.table.shapes, p3.patch) == "abaa");
  auto first = *std::min_element(p3.patch.tiles().begin(), p3.patch.tiles().end(),
                                 [](const Tile& a, const Tile& b) { return a.shift < b.shift; });
  CHECK(puncture(f.table.shapes, first) == p3.origin);
}

TEST_CASE("Robinson patches nest and the collared patch is a neighbourhood") {
  for (const char* name : {"pd", "chair"}) {
    const auto& f = fixture(name);
    const int d = f.rule.dim();
    const auto rho = compute_rho(f.rule, f.table).rho.to_ivec()[0];
    for (const auto& x : periodic_paths(f.g, 2)) {
      for (int n = 1; n <= 4; ++n) {
        auto a = robinson_patch(f.rule, f.table, f.g, x, n, PatchMode::plain);
        auto b = robinson_patch(f.rule, f.table, f.g, x, n + 1, PatchMode::plain);
        CHECK(b.patch.includes(translate_patch(a.patch, frame_shift(a, b))));
        CHECK(cubes(f.table.shapes, a.patch).size() * static_cast<std::size_t>(ipow(f.rule.lambda(), d)) ==
              cubes(f.table.shapes, b.patch).size());

        auto c = robinson_patch(f.rule, f.table, f.g, x, n, PatchMode::collared);
        CHECK(c.origin == a.origin);
        CHECK(c.patch.includes(a.patch));
        const auto r = rho * ipow(f.rule.lambda(), n - 1);
        auto inner = cubes(f.table.shapes, a.patch), outer = cubes(f.table.shapes, c.patch);
        bool ok = true;
        for (const auto& q : inner)
          for (auto dx = -r; dx <= r && ok; ++dx)
            for (auto dy = (d > 1 ? -r : 0); dy <= (d > 1 ? r : 0) && ok; ++dy)
              ok = outer.count(q + IVec{dx, dy, 0}) > 0;
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("Robinson depth limits") {
  const auto& f = fixture("pd");
  CHECK_THROWS_AS(robinson_patch(f.rule, f.table, f.g, fixed(1, {1, 7}), 0, PatchMode::plain), PathError);
  CHECK_THROWS_AS(robinson_patch(f.rule, f.table, f.g, fixed(1, {1, 7}), 15, PatchMode::plain), PathError);
}

TEST_CASE("generalized paths") {
  const auto& f = fixture("chair");
  auto x = fixed(2, {167});
  auto z = from_path(x);
  CHECK_NOTHROW(validate_generalized(f.g, z));
  CHECK(format_generalized(z) == "start:1 prefix:[] cycle:[2:v167]");
  for (int n = 1; n <= 3; ++n) {
    auto a = robinson_patch(f.rule, f.table, f.g, z, n, PatchMode::plain);
    auto b = robinson_patch(f.rule, f.table, f.g, x, n, PatchMode::plain);
    CHECK(a.patch == b.patch);
    CHECK(a.origin == b.origin);
  }
  GeneralizedPathSpec bad{1, {}, {GEntry{2, {0}, -1}, GEntry{2, {1, 2}, -1}}};
  CHECK_THROWS_AS(validate_generalized(f.g, bad), PathError);
}

TEST_CASE("periodic path pools are canonical and ordered") {
  const auto& g = fixture("chair").g;
  auto pool = periodic_paths(g, 2);
  CHECK(pool.size() == 20);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    CHECK(validate_path(g, pool[i]) == pool[i]);
    if (i) CHECK(pool[i - 1].cycle.size() <= pool[i].cycle.size());
  }
}
