#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "r2i/types.hpp"

namespace r2i {

enum class TermKind { Var, Lam, App };

// Immutable lambda term. Printed binders along any root-to-leaf path are
// kept pairwise distinct by the producers (solver, enumerator).
class Term {
public:
  Term() = default;

  static Term var(std::string name);
  static Term lam(std::string binder, Term body);
  static Term app(Term fun, Term arg);

  explicit operator bool() const { return node_ != nullptr; }

  TermKind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == TermKind::Var; }
  bool is_lam() const { return node_->kind == TermKind::Lam; }
  bool is_app() const { return node_->kind == TermKind::App; }

  const std::string& name() const;   // Var and Lam binder
  const Term& body() const;          // Lam
  const Term& fun() const;           // App
  const Term& arg() const;           // App

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
  struct Node {
    TermKind kind;
    std::string name;
    Term child0, child1; // Lam: child0 = body; App: child0 = fun, child1 = arg
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermSize {
  std::size_t applications = 0;
  std::size_t total_nodes = 0;
};

TermSize term_size(const Term& t);

// Equality up to consistent binder renaming.
bool alpha_equal(const Term& s, const Term& t);

// Syntax: `\x1 x2. body` for abstraction, juxtaposition (left-associative)
// for application, parentheses allowed. Names are [A-Za-z0-9_]+.
Term parse_term(std::string_view text);

std::string to_string(const Term& t);

// Ordered typing environment with distinct names.
class Env {
public:
  struct Decl {
    std::string name;
    TypeExpr type;
  };

  Env() = default;

  // Throws std::invalid_argument on duplicate names.
  void declare(std::string name, TypeExpr type);

  const TypeExpr* lookup(std::string_view name) const;
  bool contains(std::string_view name) const { return lookup(name) != nullptr; }

  const std::vector<Decl>& decls() const { return decls_; }
  std::size_t size() const { return decls_.size(); }
  bool empty() const { return decls_.empty(); }

  friend bool operator==(const Env& a, const Env& b);
  friend bool operator!=(const Env& a, const Env& b) { return !(a == b); }

private:
  std::vector<Decl> decls_;
};

} // namespace r2i
