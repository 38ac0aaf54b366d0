#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "r2i/term.hpp"
#include "r2i/types.hpp"

namespace r2i {

// The five typing rules; intersection elimination is split into a left and
// a right tag, both of which accept any part of an n-ary intersection.
enum class Rule { Var, ArrowElim, ArrowIntro, InterElimL, InterElimR, InterIntro };

const char* rule_name(Rule r);
bool rule_from_name(std::string_view name, Rule& out);

struct Derivation {
  Rule rule;
  Env env;
  Term term;
  TypeExpr type;
  std::vector<Derivation> premises;
};

struct RuleViolation {
  std::string path; // premise indices from the root, e.g. "0.1"
  Rule rule;
  std::string reason;
};

// Validates that every node instantiates its rule schema exactly, with
// canonical type equality wherever the rules demand equal types. An empty
// result means the derivation is well-formed.
std::vector<RuleViolation> check_derivation(const Derivation& d);

// Text format: one node per line, `rule | term | type`, premises indented
// by two spaces per level. Environments are not serialized; they are
// reconstructed top-down from an empty root environment, so the format
// covers derivations of closed judgments.
std::string to_text(const Derivation& d);
Derivation parse_derivation(std::string_view text);

} // namespace r2i
