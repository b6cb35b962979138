// SPDX-License-Identifier: Apache-2.0
#include "nestlp/expression.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace nestlp {

// ---------------------------------------------------------------------------
// Atom
// ---------------------------------------------------------------------------

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!valid_name(name_)) throw std::invalid_argument("invalid atom name '" + name_ + "'");
}

Atom Atom::label(std::size_t index) { return Atom("l_" + std::to_string(index)); }

Atom Atom::bar(const Atom& of) { return Atom("n_" + of.name()); }

bool Atom::valid_name(std::string_view name) noexcept {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

bool Atom::reserved(std::string_view name) noexcept {
  return name.starts_with("l_") || name.starts_with("n_");
}

AtomKind Atom::kind() const noexcept {
  if (name_.starts_with("n_")) return AtomKind::bar;
  if (name_.starts_with("l_") && name_.size() > 2 &&
      std::all_of(name_.begin() + 2, name_.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    return AtomKind::label;
  return AtomKind::user;
}

// ---------------------------------------------------------------------------
// Expression
// ---------------------------------------------------------------------------

struct Expression::Node {
  Connective op;
  std::optional<Atom> atom;
  std::vector<Expression> kids;
  std::size_t size = 1;
  std::size_t depth = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Expression Expression::top() {
  static const Expression t(std::make_shared<const Node>(Node{Connective::top, {}, {}, 1, 1, 0x5eed0001}));
  return t;
}

Expression Expression::bottom() {
  static const Expression b(std::make_shared<const Node>(Node{Connective::bottom, {}, {}, 1, 1, 0x5eed0002}));
  return b;
}

Expression Expression::var(Atom a) {
  auto h = mix(0x5eed0003, std::hash<std::string>{}(a.name()));
  return Expression(std::make_shared<const Node>(Node{Connective::atom, std::move(a), {}, 1, 1, h}));
}

Expression Expression::negate(Expression e) {
  Node n{Connective::negation, {}, {}, e.size() + 1, e.depth() + 1, mix(0x5eed0004, e.hash())};
  n.kids.push_back(std::move(e));
  return Expression(std::make_shared<const Node>(std::move(n)));
}

Expression Expression::conj(Expression lhs, Expression rhs) {
  Node n{Connective::conjunction, {}, {}, lhs.size() + rhs.size() + 1,
         std::max(lhs.depth(), rhs.depth()) + 1, mix(mix(0x5eed0005, lhs.hash()), rhs.hash())};
  n.kids.push_back(std::move(lhs));
  n.kids.push_back(std::move(rhs));
  return Expression(std::make_shared<const Node>(std::move(n)));
}

Expression Expression::disj(Expression lhs, Expression rhs) {
  Node n{Connective::disjunction, {}, {}, lhs.size() + rhs.size() + 1,
         std::max(lhs.depth(), rhs.depth()) + 1, mix(mix(0x5eed0006, lhs.hash()), rhs.hash())};
  n.kids.push_back(std::move(lhs));
  n.kids.push_back(std::move(rhs));
  return Expression(std::make_shared<const Node>(std::move(n)));
}

Connective Expression::connective() const noexcept { return node_->op; }
std::size_t Expression::size() const noexcept { return node_->size; }
std::size_t Expression::depth() const noexcept { return node_->depth; }
std::size_t Expression::hash() const noexcept { return node_->hash; }

const Atom& Expression::atom() const {
  if (!is(Connective::atom)) throw std::logic_error("Expression::atom on a non-atom");
  return *node_->atom;
}

const Expression& Expression::operand() const {
  if (!is(Connective::negation)) throw std::logic_error("Expression::operand on a non-negation");
  return node_->kids[0];
}

const Expression& Expression::lhs() const {
  if (!is_binary()) throw std::logic_error("Expression::lhs on a non-binary node");
  return node_->kids[0];
}

const Expression& Expression::rhs() const {
  if (!is_binary()) throw std::logic_error("Expression::rhs on a non-binary node");
  return node_->kids[1];
}

bool Expression::is_literal() const noexcept {
  const Expression* e = this;
  if (e->is(Connective::negation)) e = &e->node_->kids[0];
  return e->is(Connective::atom) || e->is_constant();
}

bool Expression::is_ht_literal() const noexcept {
  if (is_literal()) return true;
  return is(Connective::negation) && node_->kids[0].is(Connective::negation) &&
         node_->kids[0].node_->kids[0].is_literal() && !node_->kids[0].node_->kids[0].is(Connective::negation);
}

bool Expression::is_ht_nnf() const noexcept {
  if (is_ht_literal()) return true;
  if (!is_binary()) return false;
  return node_->kids[0].is_ht_nnf() && node_->kids[1].is_ht_nnf();
}

bool Expression::negation_free() const noexcept {
  switch (connective()) {
    case Connective::negation: return false;
    case Connective::conjunction:
    case Connective::disjunction: return node_->kids[0].negation_free() && node_->kids[1].negation_free();
    default: return true;
  }
}

bool operator==(const Expression& a, const Expression& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.connective() != b.connective()) return false;
  switch (a.connective()) {
    case Connective::top:
    case Connective::bottom: return true;
    case Connective::atom: return *a.node_->atom == *b.node_->atom;
    case Connective::negation: return a.node_->kids[0] == b.node_->kids[0];
    default: return a.node_->kids[0] == b.node_->kids[0] && a.node_->kids[1] == b.node_->kids[1];
  }
}

std::strong_ordering operator<=>(const Expression& a, const Expression& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.connective() <=> b.connective(); c != 0) return c;
  switch (a.connective()) {
    case Connective::top:
    case Connective::bottom: return std::strong_ordering::equal;
    case Connective::atom: return *a.node_->atom <=> *b.node_->atom;
    case Connective::negation: return a.node_->kids[0] <=> b.node_->kids[0];
    default:
      if (auto c = a.node_->kids[0] <=> b.node_->kids[0]; c != 0) return c;
      return a.node_->kids[1] <=> b.node_->kids[1];
  }
}

}  // namespace nestlp
