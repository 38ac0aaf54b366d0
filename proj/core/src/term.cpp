#include "r2i/term.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace r2i {

const std::string& Term::name() const { return node_->name; }
const Term& Term::body() const { return node_->child0; }
const Term& Term::fun() const { return node_->child0; }
const Term& Term::arg() const { return node_->child1; }

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Var;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::lam(std::string binder, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Lam;
  n->name = std::move(binder);
  n->child0 = std::move(body);
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::App;
  n->child0 = std::move(fun);
  n->child1 = std::move(arg);
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var:
      return a.name() == b.name();
    case TermKind::Lam:
      return a.name() == b.name() && a.body() == b.body();
    case TermKind::App:
      return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

TermSize term_size(const Term& t) {
  TermSize s;
  s.total_nodes = 1;
  switch (t.kind()) {
    case TermKind::Var:
      return s;
    case TermKind::Lam: {
      TermSize b = term_size(t.body());
      s.applications = b.applications;
      s.total_nodes += b.total_nodes;
      return s;
    }
    case TermKind::App: {
      TermSize f = term_size(t.fun());
      TermSize a = term_size(t.arg());
      s.applications = 1 + f.applications + a.applications;
      s.total_nodes += f.total_nodes + a.total_nodes;
      return s;
    }
  }
  return s;
}

namespace {

bool alpha_eq(const Term& s, const Term& t,
              std::unordered_map<std::string, int>& sm,
              std::unordered_map<std::string, int>& tm, int depth) {
  if (s.kind() != t.kind()) return false;
  switch (s.kind()) {
    case TermKind::Var: {
      auto si = sm.find(s.name());
      auto ti = tm.find(t.name());
      if (si != sm.end() || ti != tm.end()) {
        // Bound occurrences must refer to the same binder level.
        return si != sm.end() && ti != tm.end() && si->second == ti->second;
      }
      return s.name() == t.name(); // both free
    }
    case TermKind::Lam: {
      auto restore_s = sm.find(s.name()) != sm.end()
                           ? std::optional<int>(sm[s.name()])
                           : std::nullopt;
      auto restore_t = tm.find(t.name()) != tm.end()
                           ? std::optional<int>(tm[t.name()])
                           : std::nullopt;
      sm[s.name()] = depth;
      tm[t.name()] = depth;
      bool ok = alpha_eq(s.body(), t.body(), sm, tm, depth + 1);
      if (restore_s) sm[s.name()] = *restore_s; else sm.erase(s.name());
      if (restore_t) tm[t.name()] = *restore_t; else tm.erase(t.name());
      return ok;
    }
    case TermKind::App:
      return alpha_eq(s.fun(), t.fun(), sm, tm, depth) &&
             alpha_eq(s.arg(), t.arg(), sm, tm, depth);
  }
  return false;
}

} // namespace

bool alpha_equal(const Term& s, const Term& t) {
  std::unordered_map<std::string, int> sm, tm;
  return alpha_eq(s, t, sm, tm, 0);
}

namespace {

class TermParser {
public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term run() {
    Term t = parse_term();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

private:
  Term parse_term() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '\\') {
      ++pos_;
      std::vector<std::string> binders;
      while (true) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '.') break;
        binders.push_back(parse_name());
      }
      if (binders.empty()) throw ParseError("expected binder", pos_);
      ++pos_; // '.'
      Term body = parse_term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = Term::lam(*it, std::move(body));
      return body;
    }
    return parse_apps();
  }

  Term parse_apps() {
    Term t = parse_atomic();
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c == ')' || c == '.') break;
      if (c == '\\') {
        t = Term::app(std::move(t), parse_term());
        continue;
      }
      t = Term::app(std::move(t), parse_atomic());
    }
    return t;
  }

  Term parse_atomic() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected term", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      Term t = parse_term();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError("expected ')'", pos_);
      ++pos_;
      return t;
    }
    return Term::var(parse_name());
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) throw ParseError("expected name", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::Lam: {
      out += '\\';
      const Term* cur = &t;
      while (cur->is_lam()) {
        out += cur->name();
        cur = &cur->body();
        if (cur->is_lam()) out += ' ';
      }
      out += ". ";
      print_term(*cur, out);
      return;
    }
    case TermKind::App: {
      const Term& f = t.fun();
      if (f.is_lam()) {
        out += '(';
        print_term(f, out);
        out += ')';
      } else {
        print_term(f, out);
      }
      out += ' ';
      const Term& a = t.arg();
      if (a.is_var()) {
        print_term(a, out);
      } else {
        out += '(';
        print_term(a, out);
        out += ')';
      }
      return;
    }
  }
}

} // namespace

Term parse_term(std::string_view text) { return TermParser(text).run(); }

std::string to_string(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

void Env::declare(std::string name, TypeExpr type) {
  if (contains(name))
    throw std::invalid_argument("duplicate declaration of " + name);
  decls_.push_back(Decl{std::move(name), std::move(type)});
}

const TypeExpr* Env::lookup(std::string_view name) const {
  for (const auto& d : decls_)
    if (d.name == name) return &d.type;
  return nullptr;
}

bool operator==(const Env& a, const Env& b) {
  if (a.decls_.size() != b.decls_.size()) return false;
  for (std::size_t i = 0; i < a.decls_.size(); ++i) {
    if (a.decls_[i].name != b.decls_[i].name) return false;
    if (a.decls_[i].type != b.decls_[i].type) return false;
  }
  return true;
}

} // namespace r2i
