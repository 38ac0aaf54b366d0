#include "r2i/derivation.hpp"

#include <sstream>
#include <stdexcept>

namespace r2i {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Var: return "VAR";
    case Rule::ArrowElim: return "E_ARROW";
    case Rule::ArrowIntro: return "I_ARROW";
    case Rule::InterElimL: return "E_INTER_L";
    case Rule::InterElimR: return "E_INTER_R";
    case Rule::InterIntro: return "I_INTER";
  }
  return "?";
}

bool rule_from_name(std::string_view name, Rule& out) {
  static const std::pair<std::string_view, Rule> table[] = {
      {"VAR", Rule::Var},           {"E_ARROW", Rule::ArrowElim},
      {"I_ARROW", Rule::ArrowIntro}, {"E_INTER_L", Rule::InterElimL},
      {"E_INTER_R", Rule::InterElimR}, {"I_INTER", Rule::InterIntro},
  };
  for (const auto& [n, r] : table) {
    if (n == name) {
      out = r;
      return true;
    }
  }
  return false;
}

namespace {

class DerivChecker {
public:
  std::vector<RuleViolation> run(const Derivation& d) {
    check(d, "root");
    return std::move(violations_);
  }

private:
  void fail(const Derivation& d, const std::string& path, std::string reason) {
    violations_.push_back(RuleViolation{path, d.rule, std::move(reason)});
  }

  bool expect_premises(const Derivation& d, const std::string& path, std::size_t n) {
    if (d.premises.size() != n) {
      fail(d, path,
           "expected " + std::to_string(n) + " premises, found " +
               std::to_string(d.premises.size()));
      return false;
    }
    return true;
  }

  void check(const Derivation& d, const std::string& path) {
    for (std::size_t i = 0; i < d.premises.size(); ++i)
      check(d.premises[i], path == "root" ? std::to_string(i)
                                          : path + "." + std::to_string(i));
    switch (d.rule) {
      case Rule::Var: {
        if (!expect_premises(d, path, 0)) return;
        if (!d.term.is_var()) {
          fail(d, path, "term is not a variable");
          return;
        }
        const TypeExpr* declared = d.env.lookup(d.term.name());
        if (!declared) {
          fail(d, path, "variable " + d.term.name() + " not declared");
          return;
        }
        if (*declared != d.type)
          fail(d, path, "declared type differs from the conclusion type");
        return;
      }
      case Rule::ArrowElim: {
        if (!expect_premises(d, path, 2)) return;
        const Derivation& pf = d.premises[0];
        const Derivation& pa = d.premises[1];
        if (!d.term.is_app()) {
          fail(d, path, "term is not an application");
          return;
        }
        if (pf.env != d.env || pa.env != d.env)
          fail(d, path, "premise environments differ from the conclusion");
        if (pf.term != d.term.fun())
          fail(d, path, "function premise term mismatch");
        if (pa.term != d.term.arg())
          fail(d, path, "argument premise term mismatch");
        if (!pf.type.is_arrow()) {
          fail(d, path, "function premise type is not an arrow");
          return;
        }
        if (pf.type.left() != pa.type)
          fail(d, path, "argument type differs from the arrow's domain");
        if (pf.type.right() != d.type)
          fail(d, path, "conclusion type differs from the arrow's codomain");
        return;
      }
      case Rule::ArrowIntro: {
        if (!expect_premises(d, path, 1)) return;
        const Derivation& p = d.premises[0];
        if (!d.term.is_lam()) {
          fail(d, path, "term is not an abstraction");
          return;
        }
        if (!d.type.is_arrow()) {
          fail(d, path, "conclusion type is not an arrow");
          return;
        }
        if (p.term != d.term.body())
          fail(d, path, "premise term is not the abstraction body");
        if (p.type != d.type.right())
          fail(d, path, "premise type differs from the arrow's codomain");
        Env expected = d.env;
        if (expected.contains(d.term.name())) {
          fail(d, path, "binder " + d.term.name() + " already declared");
          return;
        }
        expected.declare(d.term.name(), d.type.left());
        if (p.env != expected)
          fail(d, path, "premise environment is not the conclusion's plus the binder");
        return;
      }
      case Rule::InterElimL:
      case Rule::InterElimR: {
        if (!expect_premises(d, path, 1)) return;
        const Derivation& p = d.premises[0];
        if (p.env != d.env)
          fail(d, path, "premise environment differs from the conclusion");
        if (p.term != d.term) fail(d, path, "premise term differs from the conclusion");
        if (!p.type.is_inter()) {
          fail(d, path, "premise type is not an intersection");
          return;
        }
        bool found = false;
        for (const auto& part : p.type.parts())
          if (part == d.type) found = true;
        if (!found)
          fail(d, path, "conclusion type is not a part of the premise intersection");
        return;
      }
      case Rule::InterIntro: {
        if (!expect_premises(d, path, 2)) return;
        const Derivation& p0 = d.premises[0];
        const Derivation& p1 = d.premises[1];
        if (p0.env != d.env || p1.env != d.env)
          fail(d, path, "premise environments differ from the conclusion");
        if (p0.term != d.term || p1.term != d.term)
          fail(d, path, "premise terms differ from the conclusion");
        TypeExpr combined = TypeExpr::inter({p0.type, p1.type});
        if (combined != d.type)
          fail(d, path, "conclusion is not the intersection of the premise types");
        return;
      }
    }
  }

  std::vector<RuleViolation> violations_;
};

void write_node(const Derivation& d, std::size_t depth, std::string& out) {
  out.append(depth * 2, ' ');
  out += rule_name(d.rule);
  out += " | ";
  out += to_string(d.term);
  out += " | ";
  out += to_string(d.type);
  out += '\n';
  for (const auto& p : d.premises) write_node(p, depth + 1, out);
}

struct Line {
  std::size_t depth;
  Rule rule;
  Term term;
  TypeExpr type;
};

std::vector<Line> parse_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t indent = 0;
    while (indent < raw.size() && raw[indent] == ' ') ++indent;
    if (indent % 2 != 0)
      throw std::runtime_error("line " + std::to_string(lineno) + ": odd indentation");
    auto sep1 = raw.find(" | ", indent);
    if (sep1 == std::string::npos)
      throw std::runtime_error("line " + std::to_string(lineno) + ": missing separators");
    auto sep2 = raw.find(" | ", sep1 + 3);
    if (sep2 == std::string::npos)
      throw std::runtime_error("line " + std::to_string(lineno) + ": missing type field");
    Line l;
    l.depth = indent / 2;
    std::string rname = raw.substr(indent, sep1 - indent);
    if (!rule_from_name(rname, l.rule))
      throw std::runtime_error("line " + std::to_string(lineno) + ": unknown rule " + rname);
    l.term = parse_term(raw.substr(sep1 + 3, sep2 - sep1 - 3));
    l.type = parse_type(raw.substr(sep2 + 3));
    lines.push_back(std::move(l));
  }
  if (lines.empty()) throw std::runtime_error("empty derivation");
  if (lines.front().depth != 0) throw std::runtime_error("root must not be indented");
  return lines;
}

// Builds the subtree rooted at lines[i], then reconstructs environments
// top-down (root environment empty, I_ARROW extends by its binder).
std::size_t build_tree(const std::vector<Line>& lines, std::size_t i, Derivation& out) {
  out.rule = lines[i].rule;
  out.term = lines[i].term;
  out.type = lines[i].type;
  std::size_t j = i + 1;
  while (j < lines.size() && lines[j].depth > lines[i].depth) {
    if (lines[j].depth != lines[i].depth + 1)
      throw std::runtime_error("premise indented by more than one level");
    Derivation child;
    j = build_tree(lines, j, child);
    out.premises.push_back(std::move(child));
  }
  return j;
}

void assign_envs(Derivation& d, const Env& env) {
  d.env = env;
  if (d.rule == Rule::ArrowIntro && d.term.is_lam() && d.type.is_arrow() &&
      !env.contains(d.term.name())) {
    Env inner = env;
    inner.declare(d.term.name(), d.type.left());
    for (auto& p : d.premises) assign_envs(p, inner);
  } else {
    for (auto& p : d.premises) assign_envs(p, env);
  }
}

} // namespace

std::vector<RuleViolation> check_derivation(const Derivation& d) {
  return DerivChecker().run(d);
}

std::string to_text(const Derivation& d) {
  std::string out;
  write_node(d, 0, out);
  return out;
}

Derivation parse_derivation(std::string_view text) {
  std::vector<Line> lines = parse_lines(text);
  Derivation root;
  std::size_t consumed = build_tree(lines, 0, root);
  if (consumed != lines.size())
    throw std::runtime_error("multiple roots in derivation file");
  assign_envs(root, Env{});
  return root;
}

} // namespace r2i
