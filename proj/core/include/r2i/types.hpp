#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace r2i {

enum class TypeKind { Atom, Arrow, Inter };

// Immutable intersection-type tree. Canonical form: intersections are
// flattened, duplicate-free and sorted under the structural order below;
// an intersection never has fewer than two parts. All factory functions
// except raw_inter() produce canonical nodes from canonical children.
class TypeExpr {
public:
  TypeExpr() = default;

  static TypeExpr atom(std::string name);
  static TypeExpr arrow(TypeExpr left, TypeExpr right);
  // Canonicalizing: flattens nested intersections, deduplicates, sorts,
  // and collapses a single remaining part to that part.
  static TypeExpr inter(std::vector<TypeExpr> parts);
  // Verbatim intersection node, possibly non-canonical. Exists so that
  // normalize() has something to normalize; not used by regular code.
  static TypeExpr raw_inter(std::vector<TypeExpr> parts);

  explicit operator bool() const { return node_ != nullptr; }

  TypeKind kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == TypeKind::Atom; }
  bool is_arrow() const { return node_->kind == TypeKind::Arrow; }
  bool is_inter() const { return node_->kind == TypeKind::Inter; }

  const std::string& name() const;              // Atom
  const TypeExpr& left() const;                 // Arrow
  const TypeExpr& right() const;                // Arrow
  const std::vector<TypeExpr>& parts() const;   // Inter

  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);
  friend bool operator!=(const TypeExpr& a, const TypeExpr& b) { return !(a == b); }

private:
  struct Node {
    TypeKind kind;
    std::string name;            // Atom
    TypeExpr lhs, rhs;           // Arrow
    std::vector<TypeExpr> parts; // Inter
    std::size_t hash = 0;
  };

  explicit TypeExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Structural total order: Atom < Arrow < Inter, lexicographic within.
// Returns <0, 0 or >0.
int compare(const TypeExpr& a, const TypeExpr& b);

struct TypeExprHash {
  std::size_t operator()(const TypeExpr& t) const { return t.hash(); }
};

// Rebuilds a possibly non-canonical tree into canonical form. Idempotent;
// invariant under permutation/duplication of intersection parts.
TypeExpr normalize(const TypeExpr& raw);

// Leivant's rank. 0 for intersection-free types; max(1, ranks) for an
// intersection; max(1+rank(left), rank(right)) for an arrow whose sides
// are not both rank 0.
unsigned rank(const TypeExpr& t);

// Atom occurrences plus connective occurrences; a k-part intersection
// counts k-1 connectives.
std::size_t type_size(const TypeExpr& t);

// Top-level intersection parts, or the singleton {t}.
std::vector<TypeExpr> components(const TypeExpr& t);

struct ArrowSpine {
  std::vector<TypeExpr> args;
  TypeExpr tail;
};

// Decomposes a non-intersection type as b1 -> ... -> bk -> tail, if it has
// at least k top-level arrows.
std::optional<ArrowSpine> arrow_spine(const TypeExpr& t, std::size_t k);

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Grammar: Type := Arrow ; Arrow := Inter ("->" Arrow)? ;
// Inter := Atomic ("&" Atomic)* ; Atomic := atom | "(" Type ")" ;
// atom := [A-Za-z0-9_]+. Whitespace insignificant. Result is canonical.
TypeExpr parse_type(std::string_view text);

// Canonical printing; round-trips through parse_type. Intersections under
// arrows are always parenthesized.
std::string to_string(const TypeExpr& t);

// Applies an injective atom renaming and re-canonicalizes (the renaming can
// change the canonical part order). Atoms missing from the map are kept.
TypeExpr rename_atoms(const TypeExpr& t,
                      const std::vector<std::pair<std::string, std::string>>& mapping);

} // namespace r2i
