#include "tiling/verify.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "tiling/relation.hpp"

namespace tiling {

namespace {

std::set<IVec> cubes_of(const ShapeTable& shapes, const Patch& p) {
  std::set<IVec> s;
  for (const auto& t : p.tiles())
    for (const auto& c : tile_cells(shapes, t)) s.insert(c.anchor);
  return s;
}

// Whether every cube within L-infinity gap < r of `inner` lies in `outer`.
bool contains_neighbourhood(const std::set<IVec>& inner, const std::set<IVec>& outer, std::int64_t r, int d) {
  for (const auto& c : inner) {
    IVec o{};
    std::vector<IVec> offs{o};
    for (int i = 0; i < d; ++i) {
      std::vector<IVec> next;
      for (const auto& v : offs)
        for (auto s = -r; s <= r; ++s) {
          IVec w = v;
          w[i] = s;
          next.push_back(w);
        }
      offs = std::move(next);
    }
    for (const auto& v : offs)
      if (!outer.count(c + v)) return false;
  }
  return true;
}

}  // namespace

std::vector<CheckResult> verify_rule(const SubstitutionRule& rule, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back(CheckResult{std::move(name), ok, std::move(detail)});
  };
  const int d = rule.dim();
  const std::int64_t lam = rule.lambda();

  auto ab = abelianization_and_primitivity(rule);
  add("primitive", ab.primitive, ab.primitive ? "witness n = " + std::to_string(ab.witness) : "not primitive");

  ProtofaceTable table;
  try {
    table = enumerate_protofaces(rule);
  } catch (const std::exception& e) {
    add("closure", false, e.what());
    return out;
  }
  {
    std::ostringstream os;
    for (int j = 0; j <= d; ++j) os << "F^" << j << " = " << table.count(j) << ", ";
    os << "stable at round " << table.closure_depth;
    add("closure", true, os.str());
  }

  std::int64_t rho = 0;
  try {
    Rho r = compute_rho(rule, table);
    rho = r.collar_margin < r.separation ? r.collar_margin : r.separation;
    add("rho", true, "rho = " + r.rho.str());
  } catch (const std::exception& e) {
    add("rho", false, e.what());
  }

  MultiDiagram g;
  try {
    g = build_multidiagram(rule, table);
    add("diagram", true,
        "vertices per level " + [&] {
          std::string s;
          for (int j = 0; j <= d; ++j) s += (j ? "/" : "") + std::to_string(g.count(j));
          return s;
        }() + ", " + std::to_string(g.S.size()) + " escaping edges, " + std::to_string(g.warnings.size()) + " warnings");
  } catch (const std::exception& e) {
    add("diagram", false, e.what());
    return out;
  }

  auto pool = periodic_paths(g, opt.max_cycle);

  {
    bool ok = true;
    std::string why;
    for (const auto& x : pool) {
      for (int n = 1; n < opt.patch_depth && ok; ++n) {
        auto a = robinson_patch(rule, table, g, x, n, PatchMode::plain);
        auto b = robinson_patch(rule, table, g, x, n + 1, PatchMode::plain);
        if (!b.patch.includes(translate_patch(a.patch, frame_shift(a, b)))) {
          ok = false;
          why = format_path(x) + " at depth " + std::to_string(n);
        }
      }
    }
    add("robinson_nesting", ok, ok ? std::to_string(pool.size()) + " paths" : why);
  }

  if (rho > 0) {
    bool ok = true, sharper = true;
    std::string why;
    for (const auto& x : pool) {
      for (int n = 1; n <= opt.patch_depth && ok; ++n) {
        auto plain = cubes_of(rule.shapes, robinson_patch(rule, table, g, x, n, PatchMode::plain).patch);
        auto col = cubes_of(rule.shapes, robinson_patch(rule, table, g, x, n, PatchMode::collared).patch);
        if (!contains_neighbourhood(plain, col, rho * ipow(lam, n - 1), d)) {
          ok = false;
          why = format_path(x) + " at depth " + std::to_string(n);
        }
        if (sharper && !contains_neighbourhood(plain, col, rho * ipow(lam, n), d)) sharper = false;
      }
    }
    add("collar_neighbourhood", ok,
        ok ? std::string("rho lambda^(n-1) holds; rho lambda^n ") + (sharper ? "holds" : "fails") : why);
  }

  {
    bool ok = true;
    std::string why;
    for (const auto& x : pool) {
      const int bd = border_dimension(g, x);
      auto bs = border_paths(g, x, x.periodic_from() + 2 * static_cast<int>(x.cycle.size()) + 4);
      const auto& tails = bs.tails[bd];
      for (std::size_t a = 0; a < tails.size() && ok; ++a)
        for (std::size_t b = a + 1; b < tails.size() && ok; ++b)
          if (!tail_equivalent(tails[a], tails[b])) {
            ok = false;
            why = format_path(x) + ": " + format_path(tails[a]) + " vs " + format_path(tails[b]);
          }
      // bd < d exactly when the boundary distance settles.
      std::vector<std::int64_t> dist;
      const int top = opt.patch_depth + 2;
      for (int n = 1; n <= top; ++n)
        dist.push_back(origin_boundary_distance(rule.shapes, robinson_patch(rule, table, g, x, n, PatchMode::plain)));
      const int L = static_cast<int>(x.cycle.size());
      bool settled = true, growing = true;
      for (int k = top - L; k < top; ++k) {
        settled &= dist[k] == dist[k - 1];
        growing &= dist[k] > dist[k - L];
      }
      if (ok && (bd < d ? !settled : !growing)) {
        ok = false;
        why = format_path(x) + ": bd " + std::to_string(bd) + " disagrees with boundary distances";
      }
    }
    add("border_dimension", ok, ok ? std::to_string(pool.size()) + " paths" : why);
  }

  {
    int pairs = 0;
    bool ok = true;
    std::string why;
    for (const auto& x : pool) {
      for (const auto& y : pool) {
        auto w = border_equivalent(rule, table, g, x, y);
        if (!w.equivalent) continue;
        ++pairs;
        bool bound = compare_scalar(w.a.norm_inf(), translation_bound(rule, w.m)) <= 0;
        if (ok && (!bound || !geometric_oracle(rule, table, g, x, y, w.a, opt.oracle_depth))) {
          ok = false;
          why = format_path(x) + " ~ " + format_path(y) + " with a = " + w.a.str();
        }
      }
    }
    add("equivalence_witnesses", ok, ok ? std::to_string(pairs) + " witnesses confirmed" : why);
  }

  try {
    int k = forcing_constant(rule, table);
    bool minimal = k == 0 || !forcing_holds(rule, table, k - 1);
    add("forcing_constant", minimal, "k = " + std::to_string(k));
  } catch (const std::exception& e) {
    add("forcing_constant", false, e.what());
  }
  return out;
}

std::string verify_report_json(const std::string& rule_name, const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json j;
  j["rule"] = rule_name;
  bool all = true;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    all &= c.ok;
    j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  }
  j["ok"] = all;
  return j.dump(2) + "\n";
}

}  // namespace tiling
