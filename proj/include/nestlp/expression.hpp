// SPDX-License-Identifier: Apache-2.0
//
// Immutable expression trees over top, bottom, atoms, negation, conjunction
// and disjunction. Nodes are shared; equality is structural.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace nestlp {

enum class AtomKind : std::uint8_t { user, label, bar };

/// A propositional atom. Names follow [a-z][a-zA-Z0-9_]*; "l_<index>" names a
/// label and "n_<atom>" a bar atom.
class Atom {
 public:
  explicit Atom(std::string name);

  static Atom label(std::size_t index);
  static Atom bar(const Atom& of);

  const std::string& name() const noexcept { return name_; }
  AtomKind kind() const noexcept;

  static bool valid_name(std::string_view name) noexcept;
  static bool reserved(std::string_view name) noexcept;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

enum class Connective : std::uint8_t { top, bottom, atom, negation, conjunction, disjunction };

class Expression {
 public:
  static Expression top();
  static Expression bottom();
  static Expression var(Atom a);
  static Expression var(std::string name) { return var(Atom(std::move(name))); }
  static Expression negate(Expression e);
  static Expression conj(Expression lhs, Expression rhs);
  static Expression disj(Expression lhs, Expression rhs);

  Connective connective() const noexcept;
  bool is(Connective c) const noexcept { return connective() == c; }
  bool is_constant() const noexcept { return is(Connective::top) || is(Connective::bottom); }
  bool is_binary() const noexcept { return is(Connective::conjunction) || is(Connective::disjunction); }

  /// Only valid on atoms.
  const Atom& atom() const;
  /// Operand of a negation.
  const Expression& operand() const;
  const Expression& lhs() const;
  const Expression& rhs() const;

  /// Number of nodes in the tree.
  std::size_t size() const noexcept;
  /// Leaves have depth 1.
  std::size_t depth() const noexcept;
  std::size_t hash() const noexcept;

  /// v or not v, with v an atom or a constant.
  bool is_literal() const noexcept;
  /// v, not v, or not not v, with v an atom or a constant.
  bool is_ht_literal() const noexcept;
  /// Built from HT-literals with conjunction and disjunction only.
  bool is_ht_nnf() const noexcept;
  bool negation_free() const noexcept;

  friend bool operator==(const Expression& a, const Expression& b) noexcept;
  /// Structural total order; used for deterministic containers.
  friend std::strong_ordering operator<=>(const Expression& a, const Expression& b) noexcept;

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace nestlp

template <>
struct std::hash<nestlp::Expression> {
  std::size_t operator()(const nestlp::Expression& e) const noexcept { return e.hash(); }
};
template <>
struct std::hash<nestlp::Atom> {
  std::size_t operator()(const nestlp::Atom& a) const noexcept { return std::hash<std::string>{}(a.name()); }
};
