#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tiling/rule.hpp"

using namespace tiling;

namespace {

std::string word(const SubstitutionRule& r, const Patch& p) {
  auto ts = p.tiles();
  std::sort(ts.begin(), ts.end(), [](const Tile& a, const Tile& b) { return a.shift < b.shift; });
  std::string w;
  for (const auto& t : ts) w += r.shapes.protos[t.proto].label;
  return w;
}

std::set<IVec> cubes(const SubstitutionRule& r, const Patch& p) {
  std::set<IVec> s;
  for (const auto& t : p.tiles())
    for (const auto& c : tile_cells(r.shapes, t)) s.insert(c.anchor);
  return s;
}

SubstitutionRule from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_rule(in);
}

const char* kSplit = R"(name split
dimension 1
lambda 2
prototile a cells=(0) puncture=1/2
prototile b cells=(0) puncture=1/2
child a -> a @ 0
child a -> a @ 1
child b -> b @ 0
child b -> b @ 1
)";

}  // namespace

TEST_CASE("period doubling substitutes letters") {
  auto pd = builtin_rule("pd");
  auto one = substitute(pd, Patch({Tile{0, IVec{}}}));
  CHECK(word(pd, one) == "ab");
  CHECK(one.tiles()[1].shift[0] == 1);
  CHECK(word(pd, iterate(pd, Tile{0, IVec{}}, 2)) == "abaa");
  CHECK(word(pd, iterate(pd, Tile{0, IVec{}}, 8)) == oracle::pd_word(8));
  CHECK(iterate(pd, Tile{1, IVec{3, 0, 0}}, 0) == Patch({Tile{1, IVec{3, 0, 0}}}));
}

TEST_CASE("chair tiles split into four chairs filling the doubled support") {
  auto chair = builtin_rule("chair");
  for (int p = 0; p < chair.size(); ++p) {
    Tile t{p, IVec{}};
    auto kids = substitute(chair, Patch({t}));
    CHECK(kids.size() == 4);
    std::set<IVec> doubled;
    for (const auto& c : tile_cells(chair.shapes, t))
      for (int dx = 0; dx < 2; ++dx)
        for (int dy = 0; dy < 2; ++dy) doubled.insert(IVec{2 * c.anchor[0] + dx, 2 * c.anchor[1] + dy, 0});
    CHECK(cubes(chair, kids) == doubled);
    CHECK(iterate(chair, t, 2).size() == 16);
  }
}

TEST_CASE("substitution is equivariant") {
  auto chair = builtin_rule("chair");
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-9, 9), proto(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Patch p({Tile{proto(rng), IVec{coord(rng), coord(rng), 0}}, Tile{proto(rng), IVec{coord(rng), coord(rng), 0}}});
    IVec v{coord(rng), coord(rng), 0};
    CHECK(substitute(chair, translate_patch(p, v)) == translate_patch(substitute(chair, p), 2 * v));
  }
}

TEST_CASE("abelianization and primitivity") {
  auto a = abelianization_and_primitivity(builtin_rule("pd"));
  CHECK(a.matrix == std::vector<std::vector<std::int64_t>>{{1, 2}, {1, 0}});
  CHECK(a.primitive);
  CHECK(a.witness == 2);

  auto c = abelianization_and_primitivity(builtin_rule("chair"));
  CHECK(c.primitive);
  for (int j = 0; j < 4; ++j) {
    std::int64_t col = 0;
    for (int i = 0; i < 4; ++i) col += c.matrix[i][j];
    CHECK(col == 4);
  }

  auto split = abelianization_and_primitivity(from_text(kSplit));
  CHECK_FALSE(split.primitive);
  CHECK(split.witness == 0);
}

TEST_CASE("rule text round-trips") {
  for (const char* name : {"pd", "chair"}) {
    auto r = builtin_rule(name);
    auto back = from_text(write_rule(r));
    CHECK(write_rule(back) == write_rule(r));
    CHECK(back.outer_radius == r.outer_radius);
  }
  CHECK(builtin_rule("chair").outer_radius.str() == "3/2");
  CHECK_THROWS_AS(builtin_rule("penrose"), std::invalid_argument);
}

TEST_CASE("malformed rule text names the line") {
  std::string bad = kSplit;
  bad.replace(bad.find("lambda 2"), 8, "lambda x");
  try {
    from_text(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(from_text("dimension 1\nlambda 2\nchild a -> a @ 0\n"), ParseError);
}

TEST_CASE("invariant violations are reported") {
  std::string overlap = kSplit;
  overlap.replace(overlap.find("child b -> b @ 1"), 16, "child b -> b @ 0");
  CHECK_THROWS_AS(from_text(overlap), InvariantError);

  std::string gap = kSplit;
  gap.replace(gap.find("child a -> a @ 1"), 16, "child a -> a @ 2");
  CHECK_THROWS_AS(from_text(gap), InvariantError);
}
