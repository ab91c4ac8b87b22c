// Line-based rule files:
//
//   # comment
//   name chair
//   dimension 2
//   lambda 2
//   aperiodic asserted
//   prototile A cells=(0,0);(1,0);(0,1) puncture=1/2,1/2
//   child A -> B @ 2,0
//
// dimension and lambda must precede the first prototile; children may
// reference prototiles declared later.

#include <fstream>
#include <map>
#include <sstream>

#include "tiling/rule.hpp"

namespace tiling {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::int64_t parse_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

IVec parse_ivec(const std::string& s, int dim, int line) {
  auto parts = split(s, ',');
  if (static_cast<int>(parts.size()) != dim)
    throw ParseError(line, "expected " + std::to_string(dim) + " components in '" + s + "'");
  IVec v{};
  for (int i = 0; i < dim; ++i) v[i] = parse_int(parts[i], line);
  return v;
}

Coordinate parse_point(const std::string& s, int dim, int lambda, int line) {
  auto parts = split(s, ',');
  if (static_cast<int>(parts.size()) != dim)
    throw ParseError(line, "expected " + std::to_string(dim) + " components in '" + s + "'");
  Coordinate acc = Coordinate::integral(dim, lambda, IVec{});
  for (int i = 0; i < dim; ++i) {
    auto slash = parts[i].find('/');
    std::int64_t num = parse_int(parts[i].substr(0, slash), line);
    int exp = 0;
    if (slash != std::string::npos) {
      std::int64_t den = parse_int(parts[i].substr(slash + 1), line);
      std::int64_t p = 1;
      while (p < den) {
        p *= lambda;
        ++exp;
      }
      if (p != den || den <= 0)
        throw ParseError(line, "denominator " + std::to_string(den) + " is not a power of lambda");
    }
    IVec n{};
    n[i] = num;
    acc = acc + Coordinate(dim, lambda, n, exp);
  }
  return acc;
}

struct PendingChild {
  std::string parent, child;
  IVec offset;
  int line;
};

}  // namespace

SubstitutionRule parse_rule(std::istream& in) {
  SubstitutionRule rule;
  rule.name = "custom";
  int dim = 0, lambda = 0;
  std::vector<int> proto_line;
  std::vector<PendingChild> pending;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    if (key == "name") {
      if (rest.empty()) throw ParseError(line, "name needs a value");
      rule.name = rest;
    } else if (key == "dimension") {
      dim = static_cast<int>(parse_int(rest, line));
      if (dim < 1 || dim > kMaxDim) throw ParseError(line, "dimension must be 1, 2 or 3");
    } else if (key == "lambda") {
      lambda = static_cast<int>(parse_int(rest, line));
      if (lambda < 2) throw ParseError(line, "lambda must be >= 2");
    } else if (key == "aperiodic") {
      if (rest != "asserted" && rest != "unknown") throw ParseError(line, "aperiodic takes 'asserted' or 'unknown'");
      rule.aperiodic_asserted = rest == "asserted";
    } else if (key == "prototile") {
      if (dim == 0 || lambda == 0) throw ParseError(line, "dimension and lambda must come before prototiles");
      std::istringstream ps(rest);
      Prototile proto;
      ps >> proto.label;
      if (proto.label.empty()) throw ParseError(line, "prototile needs an id");
      bool have_cells = false, have_punc = false;
      std::string field;
      while (ps >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + field + "'");
        std::string k = field.substr(0, eq), v = field.substr(eq + 1);
        if (k == "cells") {
          for (const auto& c : split(v, ';')) {
            if (c.size() < 2 || c.front() != '(' || c.back() != ')')
              throw ParseError(line, "cell must look like (x,y): '" + c + "'");
            proto.cells.push_back(parse_ivec(c.substr(1, c.size() - 2), dim, line));
          }
          have_cells = true;
        } else if (k == "puncture") {
          proto.puncture = parse_point(v, dim, lambda, line);
          have_punc = true;
        } else {
          throw ParseError(line, "unknown prototile field '" + k + "'");
        }
      }
      if (!have_cells) throw ParseError(line, "prototile " + proto.label + " has no cells=");
      if (!have_punc) throw ParseError(line, "prototile " + proto.label + " has no puncture=");
      rule.shapes.protos.push_back(proto);
      proto_line.push_back(line);
    } else if (key == "child") {
      // child P -> C @ x,y
      auto arrow = rest.find("->");
      auto at = rest.find('@');
      if (arrow == std::string::npos || at == std::string::npos || at < arrow)
        throw ParseError(line, "expected 'child <parent> -> <child> @ <offset>'");
      if (dim == 0) throw ParseError(line, "dimension must come before children");
      PendingChild pc;
      pc.parent = trim(rest.substr(0, arrow));
      pc.child = trim(rest.substr(arrow + 2, at - arrow - 2));
      pc.offset = parse_ivec(trim(rest.substr(at + 1)), dim, line);
      pc.line = line;
      pending.push_back(pc);
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  if (dim == 0) throw ParseError(line, "missing dimension");
  if (lambda == 0) throw ParseError(line, "missing lambda");
  if (rule.shapes.protos.empty()) throw ParseError(line, "no prototiles");
  rule.shapes.dim = dim;
  rule.shapes.lambda = lambda;
  rule.children.assign(rule.size(), {});
  for (const auto& pc : pending) {
    int p = rule.find_proto(pc.parent), c = rule.find_proto(pc.child);
    if (p < 0) throw ParseError(pc.line, "unknown prototile '" + pc.parent + "'");
    if (c < 0) throw ParseError(pc.line, "unknown prototile '" + pc.child + "'");
    rule.children[p].push_back(Child{c, pc.offset});
  }
  try {
    validate_rule(rule);
  } catch (const InvariantError& e) {
    int at = e.proto >= 0 && e.proto < static_cast<int>(proto_line.size()) ? proto_line[e.proto] : 1;
    throw InvariantError("line " + std::to_string(at) + ": " + e.what(), e.proto);
  }
  return rule;
}

SubstitutionRule load_rule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rule file " + path);
  return parse_rule(in);
}

std::string write_rule(const SubstitutionRule& rule) {
  std::ostringstream os;
  const int d = rule.dim();
  os << "name " << rule.name << "\n";
  os << "dimension " << d << "\n";
  os << "lambda " << rule.lambda() << "\n";
  os << "aperiodic " << (rule.aperiodic_asserted ? "asserted" : "unknown") << "\n";
  for (const auto& p : rule.shapes.protos) {
    os << "prototile " << p.label << " cells=";
    for (std::size_t i = 0; i < p.cells.size(); ++i) os << (i ? ";" : "") << "(" << to_string(p.cells[i], d) << ")";
    std::string punc = p.puncture.str();
    if (!punc.empty() && punc.front() == '(') punc = punc.substr(1, punc.size() - 2);
    os << " puncture=" << punc << "\n";
  }
  for (int t = 0; t < rule.size(); ++t) {
    for (const auto& ch : rule.children[t]) {
      os << "child " << rule.shapes.protos[t].label << " -> " << rule.shapes.protos[ch.proto].label << " @ "
         << to_string(ch.offset, d) << "\n";
    }
  }
  return os.str();
}

}  // namespace tiling
