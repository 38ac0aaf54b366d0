#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "r2i/derivation.hpp"
#include "r2i/term.hpp"
#include "r2i/types.hpp"

namespace r2i {

// One problem of a task: find M with env |- M : target. The target is never
// an intersection (Rem strips those), and every declared type has rank <= 1
// while the goal has rank <= 2.
struct Judgment {
  Env env;
  TypeExpr target;

  friend bool operator==(const Judgment& a, const Judgment& b) {
    return a.target == b.target && a.env == b.env;
  }
};

// A set of parallel judgments constraining one unknown term. Rows are kept
// in construction order and deduplicated; all rows declare the same variable
// names in the same order.
struct Task {
  std::vector<Judgment> rows;
};

class RankError : public std::runtime_error {
public:
  explicit RankError(unsigned r)
      : std::runtime_error("goal has rank " + std::to_string(r) +
                           "; the procedure only covers rank <= 2"),
        rank_(r) {}
  unsigned goal_rank() const { return rank_; }

private:
  unsigned rank_;
};

// Splits an intersection target into one judgment per component, all
// sharing env. Non-intersections pass through as a singleton.
std::vector<Judgment> rem(const Env& env, const TypeExpr& target);

// Rem(0 |- M : goal). Throws RankError when rank(goal) > 2.
Task initial_task(const TypeExpr& goal);

// Case 1 of the procedure: every target is an arrow a_i -> b_i; binds
// `fresh : a_i` in each row and continues with the rem-split bodies.
// row_children[i] lists the (deduplicated) child rows produced by row i.
struct Expansion {
  Task task;
  std::vector<std::vector<std::size_t>> row_children;
};
Expansion expand_abstraction(const Task& task, const std::string& fresh);
Task abstraction_step(const Task& task, const std::string& fresh);

// Case 2 candidate: head variable applied to k arguments, one component
// choice per row; arg_matrix[i] holds row i's k argument types.
struct Candidate {
  std::string var;
  std::size_t var_index = 0;
  std::size_t k = 0;
  std::vector<std::size_t> component_choice; // per row, index into components
  std::vector<std::vector<TypeExpr>> arg_matrix;
};

// Every (variable, k, component combination) such that in each row some
// component of the variable's declared type splits into exactly k arguments
// with tail equal to that row's target. Enumerated in declaration order,
// then ascending k, then lexicographic component choice. An empty list
// means case 3 ("empty type").
std::vector<Candidate> candidate_heads(const Task& task);

// The j-th argument subtask of a candidate; row_map[i] gives the child row
// index carrying parent row i's argument judgment.
struct Subtask {
  Task task;
  std::vector<std::size_t> row_map;
};
Subtask argument_subtask(const Task& task, const Candidate& c, std::size_t j);

// Canonical fingerprint: the ordered target vector plus the set of declared
// type-vectors across environments, deduplicated and sorted, independent of
// variable names. Tasks equal up to renaming (and duplicate-typed
// variables) map to the same key.
std::string config_key(const Task& task);

struct SolveLimits {
  std::size_t max_configs = std::numeric_limits<std::size_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
};

struct SolveStats {
  std::size_t configs_created = 0;
  std::size_t tasks_expanded = 0;
  std::size_t memo_hits = 0;
  std::size_t width_violations = 0;    // rows exceeding size(goal)
  std::size_t env_rank_violations = 0; // declared types of rank > 1
  double seconds = 0.0;
};

enum class Verdict { Inhabited, Empty, ResourceExceeded };

const char* verdict_name(Verdict v);

struct SolveResult {
  Verdict verdict = Verdict::Empty;
  std::optional<Term> witness;          // Inhabited only; a long solution
  std::optional<Derivation> derivation; // Inhabited only; closed, checkable
  SolveStats stats;
};

// Decides inhabitation of a canonical rank <= 2 goal. Returns a long
// solution minimal under (witness depth, then candidate order) together
// with its derivation, or Empty, or ResourceExceeded when a limit hits.
// Throws RankError for goals of rank > 2.
SolveResult solve(const TypeExpr& goal, const SolveLimits& limits = {});

// Number of nested head-variable expansions of a long solution: variables
// count 1, abstractions are free, an application spine costs 1 plus the
// deepest argument. This is the depth measure shared with enumerate_long.
std::size_t spine_depth(const Term& t);

} // namespace r2i
