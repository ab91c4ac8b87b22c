#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tiling/geometry.hpp"

namespace tiling {

struct Child {
  int proto = 0;
  IVec offset{};  // in the lambda-inflated frame of the parent
};

struct SubstitutionRule {
  std::string name;
  ShapeTable shapes;
  std::vector<std::vector<Child>> children;  // indexed by parent prototile
  bool aperiodic_asserted = false;

  // Filled by validate_rule.
  Coordinate inner_radius;  // r
  Coordinate outer_radius;  // R

  int dim() const { return shapes.dim; }
  int lambda() const { return shapes.lambda; }
  int size() const { return static_cast<int>(shapes.protos.size()); }
  int find_proto(const std::string& id) const;
};

// A rule that violates one of the structural invariants. proto is the
// offending prototile index, or -1 if the violation is global.
class InvariantError : public std::runtime_error {
 public:
  InvariantError(const std::string& msg, int proto = -1) : std::runtime_error(msg), proto(proto) {}
  int proto;
};

// Malformed rule text; line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

// Checks shapes, punctures, support equality and disjointness of children.
// Computes the radii. Throws InvariantError.
void validate_rule(SubstitutionRule& rule);

SubstitutionRule chair_rule();
SubstitutionRule period_doubling_rule();
// "chair" or "pd"; throws std::invalid_argument otherwise.
SubstitutionRule builtin_rule(const std::string& name);

SubstitutionRule parse_rule(std::istream& in);
SubstitutionRule load_rule_file(const std::string& path);
std::string write_rule(const SubstitutionRule& rule);

std::vector<Tile> substitute_tile(const SubstitutionRule& rule, const Tile& t);
Patch substitute(const SubstitutionRule& rule, const Patch& p);
Patch iterate(const SubstitutionRule& rule, const Tile& t, int n);
Patch iterate(const SubstitutionRule& rule, const Patch& p, int n);

struct Abelianization {
  std::vector<std::vector<std::int64_t>> matrix;  // matrix[i][j]: copies of i in omega(j)
  bool primitive = false;
  int witness = 0;  // least n with matrix^n > 0, 0 if none
};

Abelianization abelianization_and_primitivity(const SubstitutionRule& rule);

}  // namespace tiling
