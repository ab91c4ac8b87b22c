#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tiling/border.hpp"
#include "tiling/relation.hpp"
#include "tiling/render.hpp"
#include "tiling/verify.hpp"

using namespace tiling;

namespace {

// Exit statuses.
constexpr int kParse = 2, kInvariant = 1, kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SubstitutionRule load_rule(const std::string& source) {
  if (source == "chair" || source == "pd") return builtin_rule(source);
  if (!std::filesystem::is_regular_file(source))
    throw UsageError("rule '" + source + "' is neither a built-in (chair, pd) nor a readable file");
  return load_rule_file(source);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct Context {
  SubstitutionRule rule;
  ProtofaceTable table;
  MultiDiagram g;
};

Context prepare(const std::string& source, bool with_diagram = true) {
  Context c{load_rule(source), {}, {}};
  c.table = enumerate_protofaces(c.rule);
  if (with_diagram) c.g = build_multidiagram(c.rule, c.table);
  return c;
}

PathSpec rooted(const Context& c, const std::string& literal) {
  PathSpec x = validate_path(c.g, parse_path(literal));
  if (x.start != 0) throw PathError("expected a rooted path (start:0)");
  return x;
}

int cmd_validate(const std::string& file) {
  auto rule = load_rule(file);
  auto ab = abelianization_and_primitivity(rule);
  std::cout << "rule " << rule.name << ": ok\n"
            << "dimension " << rule.dim() << ", lambda " << rule.lambda() << ", " << rule.size() << " prototiles\n"
            << "r = " << rule.inner_radius.str() << ", R = " << rule.outer_radius.str() << "\n"
            << "primitive: " << (ab.primitive ? "yes (n = " + std::to_string(ab.witness) + ")" : "no") << "\n";
  return ab.primitive ? 0 : kInvariant;
}

int cmd_faces(const std::string& source, int dim) {
  auto c = prepare(source, false);
  const int d = c.rule.dim();
  for (int j = 0; j <= d; ++j) {
    if (dim >= 0 && j != dim) continue;
    std::cout << "F^" << j << ": " << c.table.count(j) << " classes\n";
    for (int id = 0; id < c.table.count(j); ++id) {
      std::cout << "  F" << j << "." << id << " " << describe_face(c.table.shapes, c.table.classes[j][id]) << "\n";
      std::cout << "    children:";
      for (const auto& pl : c.table.induced[j][id]) std::cout << " F" << j << "." << pl.cls << "@" << to_string(pl.pos, d);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_diagram(const std::string& source, const std::string& out, int level, int unroll) {
  auto c = prepare(source);
  if (level > c.rule.dim()) throw UsageError("--level exceeds the dimension");
  DotOptions opt;
  opt.level = level;
  opt.unroll = unroll;
  write_file(out, export_dot(c.g, opt));
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_robinson(const std::string& source, const std::string& literal, int depth, const std::string& out,
                 bool collared, int highlight) {
  auto c = prepare(source);
  PathSpec x = rooted(c, literal);
  auto mode = collared ? PatchMode::collared : PatchMode::plain;
  auto placed = robinson_patch(c.rule, c.table, c.g, x, depth, mode);
  SvgOptions opt;
  opt.origin = placed.origin;
  if (highlight >= 0) {
    if (highlight >= c.rule.dim()) throw UsageError("--highlight-border must be below the dimension");
    if (depth > 1) {
      auto inner = robinson_patch(c.rule, c.table, c.g, x, depth - 1, mode);
      auto moved = translate_patch(inner.patch, frame_shift(inner, placed));
      opt.highlight = common_boundary_cells(c.table.shapes, moved, placed.patch, highlight);
    }
  }
  write_file(out, export_svg(c.table.shapes, placed.patch, opt));
  std::cout << "wrote " << out << " (" << placed.patch.tiles().size() << " tiles)\n";
  return 0;
}

int cmd_border(const std::string& source, const std::string& literal) {
  auto c = prepare(source);
  PathSpec x = rooted(c, literal);
  const int bd = border_dimension(c.g, x);
  const int horizon = x.periodic_from() + 2 * static_cast<int>(x.cycle.size()) + 4;
  auto bs = border_paths(c.g, x, horizon);
  std::cout << "bd = " << bd << "\n";
  std::cout << "path " << format_path(x) << "\n";
  for (int j = 0; j < static_cast<int>(bs.nonempty.size()); ++j) {
    std::cout << "bo^" << j << ": " << (bs.nonempty[j] ? "nonempty" : "empty") << ", " << bs.chains[j]
              << " chains to depth " << horizon << ", " << bs.tails[j].size()
              << (bs.truncated[j] ? "+" : "") << " periodic tails\n";
    for (const auto& t : bs.tails[j]) std::cout << "  " << format_path(t) << "\n";
  }
  return 0;
}

int cmd_equiv(const std::string& source, const std::string& lx, const std::string& ly) {
  auto c = prepare(source);
  auto w = border_equivalent(c.rule, c.table, c.g, rooted(c, lx), rooted(c, ly));
  std::cout << format_witness(w);
  return 0;
}

int cmd_verify(const std::string& source) {
  auto rule = load_rule(source);
  auto checks = verify_rule(rule);
  std::cout << verify_report_json(rule.name, checks);
  for (const auto& ch : checks)
    if (!ch.ok) return kInvariant;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bratteli multi-diagrams and border equivalence of substitution tilings", "tilebrat"};
  app.require_subcommand(1);

  std::string file, source, out, px, py;
  int dim = -1, level = -1, unroll = 0, depth = 1, highlight = -1;
  bool collared = false;

  auto* rules = app.add_subcommand("rules", "Rule file operations");
  rules->require_subcommand(1);
  auto* validate = rules->add_subcommand("validate", "Parse and validate a rule file");
  validate->add_option("file", file, "Rule file")->required();

  auto* faces = app.add_subcommand("faces", "List the collared protoface classes");
  faces->add_option("rule", source, "Built-in name or rule file")->required();
  faces->add_option("--dim", dim, "Only this dimension");

  auto* diagram = app.add_subcommand("diagram", "Write the multi-diagram as DOT");
  diagram->add_option("rule", source, "Built-in name or rule file")->required();
  diagram->add_option("--dot", out, "Output file")->required();
  diagram->add_option("--level", level, "Only this level");
  diagram->add_option("--unroll", unroll, "Unroll to this depth")->check(CLI::Range(0, 12));

  auto* robinson = app.add_subcommand("robinson", "Draw the Robinson patch of a path as SVG");
  robinson->add_option("rule", source, "Built-in name or rule file")->required();
  robinson->add_option("--path", px, "Path literal")->required();
  robinson->add_option("--depth", depth, "Depth n")->required()->check(CLI::PositiveNumber);
  robinson->add_option("--svg", out, "Output file")->required();
  robinson->add_flag("--collared", collared, "Draw the collared patch");
  robinson->add_option("--highlight-border", highlight, "Highlight carried-over boundary cells of this dimension");

  auto* border = app.add_subcommand("border", "Border dimension and border summary of a path");
  border->add_option("rule", source, "Built-in name or rule file")->required();
  border->add_option("--path", px, "Path literal")->required();

  auto* equiv = app.add_subcommand("equiv", "Decide border equivalence of two paths");
  equiv->add_option("rule", source, "Built-in name or rule file")->required();
  equiv->add_option("--x", px, "Path literal")->required();
  equiv->add_option("--y", py, "Path literal")->required();

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("rule", source, "Built-in name or rule file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kParse;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*faces) return cmd_faces(source, dim);
    if (*diagram) return cmd_diagram(source, out, level, unroll);
    if (*robinson) return cmd_robinson(source, px, depth, out, collared, highlight);
    if (*border) return cmd_border(source, px);
    if (*equiv) return cmd_equiv(source, px, py);
    if (*verify) return cmd_verify(source);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PathSyntaxError& e) {
    std::cerr << "parse error: path literal " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const PathError& e) {
    std::cerr << "invalid path: " << e.what() << "\n";
    return kInvariant;
  } catch (const ClosureError& e) {
    std::cerr << "collaring closure: " << e.what() << "\n";
    return kInvariant;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency: " << e.what() << "\n";
    return kInternal;
  } catch (const GeometryError& e) {
    std::cerr << "internal geometry: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
