#include "r2i/types.hpp"

#include <algorithm>
#include <cctype>

namespace r2i {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

const std::string& TypeExpr::name() const { return node_->name; }
const TypeExpr& TypeExpr::left() const { return node_->lhs; }
const TypeExpr& TypeExpr::right() const { return node_->rhs; }
const std::vector<TypeExpr>& TypeExpr::parts() const { return node_->parts; }

TypeExpr TypeExpr::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = TypeKind::Atom;
  n->name = std::move(name);
  n->hash = mix(0x01, std::hash<std::string>{}(n->name));
  return TypeExpr(std::move(n));
}

TypeExpr TypeExpr::arrow(TypeExpr left, TypeExpr right) {
  auto n = std::make_shared<Node>();
  n->kind = TypeKind::Arrow;
  n->lhs = std::move(left);
  n->rhs = std::move(right);
  n->hash = mix(mix(0x02, n->lhs.hash()), n->rhs.hash());
  return TypeExpr(std::move(n));
}

TypeExpr TypeExpr::raw_inter(std::vector<TypeExpr> parts) {
  auto n = std::make_shared<Node>();
  n->kind = TypeKind::Inter;
  n->parts = std::move(parts);
  std::size_t h = 0x03;
  for (const auto& p : n->parts) h = mix(h, p.hash());
  n->hash = h;
  return TypeExpr(std::move(n));
}

TypeExpr TypeExpr::inter(std::vector<TypeExpr> parts) {
  std::vector<TypeExpr> flat;
  flat.reserve(parts.size());
  for (auto& p : parts) {
    if (p.is_inter()) {
      for (const auto& q : p.parts()) flat.push_back(q);
    } else {
      flat.push_back(std::move(p));
    }
  }
  std::sort(flat.begin(), flat.end(),
            [](const TypeExpr& a, const TypeExpr& b) { return compare(a, b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const TypeExpr& a, const TypeExpr& b) { return a == b; }),
             flat.end());
  if (flat.empty()) throw std::invalid_argument("intersection of zero types");
  if (flat.size() == 1) return flat.front();
  return raw_inter(std::move(flat));
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

int compare(const TypeExpr& a, const TypeExpr& b) {
  auto order = [](TypeKind k) {
    switch (k) {
      case TypeKind::Atom: return 0;
      case TypeKind::Arrow: return 1;
      case TypeKind::Inter: return 2;
    }
    return 3;
  };
  if (order(a.kind()) != order(b.kind())) return order(a.kind()) - order(b.kind());
  switch (a.kind()) {
    case TypeKind::Atom:
      return a.name().compare(b.name());
    case TypeKind::Arrow: {
      int c = compare(a.left(), b.left());
      if (c != 0) return c;
      return compare(a.right(), b.right());
    }
    case TypeKind::Inter: {
      const auto& pa = a.parts();
      const auto& pb = b.parts();
      std::size_t n = std::min(pa.size(), pb.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = compare(pa[i], pb[i]);
        if (c != 0) return c;
      }
      if (pa.size() == pb.size()) return 0;
      return pa.size() < pb.size() ? -1 : 1;
    }
  }
  return 0;
}

TypeExpr normalize(const TypeExpr& raw) {
  switch (raw.kind()) {
    case TypeKind::Atom:
      return raw;
    case TypeKind::Arrow:
      return TypeExpr::arrow(normalize(raw.left()), normalize(raw.right()));
    case TypeKind::Inter: {
      std::vector<TypeExpr> parts;
      parts.reserve(raw.parts().size());
      for (const auto& p : raw.parts()) parts.push_back(normalize(p));
      return TypeExpr::inter(std::move(parts));
    }
  }
  throw std::logic_error("normalize: bad kind");
}

unsigned rank(const TypeExpr& t) {
  switch (t.kind()) {
    case TypeKind::Atom:
      return 0;
    case TypeKind::Arrow: {
      unsigned rl = rank(t.left());
      unsigned rr = rank(t.right());
      if (rl == 0 && rr == 0) return 0;
      return std::max(1 + rl, rr);
    }
    case TypeKind::Inter: {
      unsigned r = 1;
      for (const auto& p : t.parts()) r = std::max(r, rank(p));
      return r;
    }
  }
  throw std::logic_error("rank: bad kind");
}

std::size_t type_size(const TypeExpr& t) {
  switch (t.kind()) {
    case TypeKind::Atom:
      return 1;
    case TypeKind::Arrow:
      return type_size(t.left()) + type_size(t.right()) + 1;
    case TypeKind::Inter: {
      std::size_t s = t.parts().size() - 1;
      for (const auto& p : t.parts()) s += type_size(p);
      return s;
    }
  }
  throw std::logic_error("type_size: bad kind");
}

std::vector<TypeExpr> components(const TypeExpr& t) {
  if (t.is_inter()) return t.parts();
  return {t};
}

std::optional<ArrowSpine> arrow_spine(const TypeExpr& t, std::size_t k) {
  ArrowSpine spine;
  spine.tail = t;
  for (std::size_t i = 0; i < k; ++i) {
    if (!spine.tail.is_arrow()) return std::nullopt;
    spine.args.push_back(spine.tail.left());
    spine.tail = spine.tail.right();
  }
  return spine;
}

namespace {

class TypeParser {
public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  TypeExpr run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty input", pos_);
    TypeExpr t = parse_arrow();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return normalize(t);
  }

private:
  TypeExpr parse_arrow() {
    TypeExpr lhs = parse_inter();
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
      pos_ += 2;
      skip_ws();
      TypeExpr rhs = parse_arrow();
      return TypeExpr::arrow(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  TypeExpr parse_inter() {
    std::vector<TypeExpr> parts;
    parts.push_back(parse_atomic());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '&') {
      ++pos_;
      skip_ws();
      parts.push_back(parse_atomic());
      skip_ws();
    }
    if (parts.size() == 1) return parts.front();
    return TypeExpr::raw_inter(std::move(parts));
  }

  TypeExpr parse_atomic() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected type", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      TypeExpr t = parse_arrow();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError("expected ')'", pos_);
      ++pos_;
      return t;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
    if (pos_ == start) throw ParseError("expected atom or '('", pos_);
    return TypeExpr::atom(std::string(text_.substr(start, pos_ - start)));
  }

  static bool is_atom_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const TypeExpr& t, std::string& out) {
  switch (t.kind()) {
    case TypeKind::Atom:
      out += t.name();
      return;
    case TypeKind::Arrow: {
      const TypeExpr& l = t.left();
      if (l.is_atom()) {
        print_into(l, out);
      } else {
        out += '(';
        print_into(l, out);
        out += ')';
      }
      out += "->";
      print_into(t.right(), out);
      return;
    }
    case TypeKind::Inter: {
      bool first = true;
      for (const auto& p : t.parts()) {
        if (!first) out += '&';
        first = false;
        if (p.is_atom()) {
          print_into(p, out);
        } else {
          out += '(';
          print_into(p, out);
          out += ')';
        }
      }
      return;
    }
  }
}

} // namespace

TypeExpr parse_type(std::string_view text) { return TypeParser(text).run(); }

std::string to_string(const TypeExpr& t) {
  std::string out;
  print_into(t, out);
  return out;
}

TypeExpr rename_atoms(const TypeExpr& t,
                      const std::vector<std::pair<std::string, std::string>>& mapping) {
  switch (t.kind()) {
    case TypeKind::Atom: {
      for (const auto& [from, to] : mapping)
        if (from == t.name()) return TypeExpr::atom(to);
      return t;
    }
    case TypeKind::Arrow:
      return TypeExpr::arrow(rename_atoms(t.left(), mapping),
                             rename_atoms(t.right(), mapping));
    case TypeKind::Inter: {
      std::vector<TypeExpr> parts;
      parts.reserve(t.parts().size());
      for (const auto& p : t.parts()) parts.push_back(rename_atoms(p, mapping));
      return TypeExpr::inter(std::move(parts));
    }
  }
  throw std::logic_error("rename_atoms: bad kind");
}

} // namespace r2i
