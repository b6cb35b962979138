// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nestlp/expression.hpp"

#include <cstddef>
#include <set>
#include <string_view>
#include <vector>

namespace nestlp {

using Alphabet = std::set<Atom>;

/// head <- body. Facts carry body = top, constraints head = bottom.
struct Rule {
  Expression head;
  Expression body;

  static Rule fact(Expression head) { return {std::move(head), Expression::top()}; }
  static Rule constraint(Expression body) { return {Expression::bottom(), std::move(body)}; }

  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule& a, const Rule& b) noexcept {
    if (auto c = a.head <=> b.head; c != 0) return c;
    return a.body <=> b.body;
  }
};

/// An ordered rule list over an alphabet. The alphabet always contains every
/// atom occurring in the rules; it may be larger. Duplicate rules are kept in
/// the list but carry no meaning for the semantics.
class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Rule> rules);
  Program(std::vector<Rule> rules, const Alphabet& extra);

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }

  void add(Rule r);
  void append(const Program& other);
  void extend_alphabet(const Alphabet& atoms);

  /// Rules as a set, ignoring order and duplicates.
  std::set<Rule> rule_set() const { return {rules_.begin(), rules_.end()}; }

  friend bool operator==(const Program&, const Program&) = default;

 private:
  std::vector<Rule> rules_;
  Alphabet alphabet_;
};

/// Set union of two programs (duplicates removed, first-occurrence order).
Program unite(const Program& a, const Program& b);

/// Atoms occurring in an expression / program.
Alphabet atoms_of(const Expression& e);
Alphabet atoms_of(const Program& p);

enum class ProgramClass { basic, disjunctive, generalized_disjunctive, gdlp_ht, nnf, nested };

std::string_view to_string(ProgramClass c) noexcept;

/// True if every program of class `inner` also belongs to `outer`.
constexpr bool included_in(ProgramClass inner, ProgramClass outer) noexcept {
  return static_cast<int>(inner) <= static_cast<int>(outer);
}

/// Syntactic membership tests for each class.
bool in_class(const Program& p, ProgramClass c);
bool in_class(const Rule& r, ProgramClass c);

/// The most specific class containing the program.
ProgramClass classify(const Program& p);

bool negation_free(const Program& p);

/// Distinct subexpressions, bottom-up and left to right, each listed once.
/// When `e` is in HT-NNF its HT-literals are treated as leaves.
std::vector<Expression> subformulas(const Expression& e);

/// Total node count over heads and bodies plus the number of rules.
std::size_t program_size(const Program& p);

/// Flattens nested conjunctions (resp. disjunctions) into their operands.
std::vector<Expression> conjuncts(const Expression& e);
std::vector<Expression> disjuncts(const Expression& e);

/// Left-associated folds; the empty conjunction is top and the empty disjunction bottom.
Expression make_conjunction(const std::vector<Expression>& parts);
Expression make_disjunction(const std::vector<Expression>& parts);

}  // namespace nestlp
