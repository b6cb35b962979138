// SPDX-License-Identifier: Apache-2.0
#include "nestlp/program.hpp"

#include <algorithm>
#include <unordered_set>

namespace nestlp {

Program::Program(std::vector<Rule> rules) {
  for (auto& r : rules) add(std::move(r));
}

Program::Program(std::vector<Rule> rules, const Alphabet& extra) : Program(std::move(rules)) {
  extend_alphabet(extra);
}

void Program::add(Rule r) {
  auto h = atoms_of(r.head);
  auto b = atoms_of(r.body);
  alphabet_.insert(h.begin(), h.end());
  alphabet_.insert(b.begin(), b.end());
  rules_.push_back(std::move(r));
}

void Program::append(const Program& other) {
  for (const auto& r : other.rules()) add(r);
  extend_alphabet(other.alphabet());
}

void Program::extend_alphabet(const Alphabet& atoms) { alphabet_.insert(atoms.begin(), atoms.end()); }

Program unite(const Program& a, const Program& b) {
  Program out;
  std::set<Rule> seen;
  for (const auto* p : {&a, &b})
    for (const auto& r : p->rules())
      if (seen.insert(r).second) out.add(r);
  out.extend_alphabet(a.alphabet());
  out.extend_alphabet(b.alphabet());
  return out;
}

namespace {

void collect_atoms(const Expression& e, Alphabet& out) {
  switch (e.connective()) {
    case Connective::atom: out.insert(e.atom()); break;
    case Connective::negation: collect_atoms(e.operand(), out); break;
    case Connective::conjunction:
    case Connective::disjunction:
      collect_atoms(e.lhs(), out);
      collect_atoms(e.rhs(), out);
      break;
    default: break;
  }
}

template <Connective Op>
void flatten(const Expression& e, std::vector<Expression>& out) {
  if (e.is(Op)) {
    flatten<Op>(e.lhs(), out);
    flatten<Op>(e.rhs(), out);
  } else {
    out.push_back(e);
  }
}

bool conjunction_of(const Expression& e, bool (Expression::*leaf)() const noexcept) {
  if (e.is(Connective::conjunction)) return conjunction_of(e.lhs(), leaf) && conjunction_of(e.rhs(), leaf);
  return (e.*leaf)();
}

bool disjunction_of(const Expression& e, bool (Expression::*leaf)() const noexcept) {
  if (e.is(Connective::disjunction)) return disjunction_of(e.lhs(), leaf) && disjunction_of(e.rhs(), leaf);
  return (e.*leaf)();
}

bool head_has_negation(const Expression& head) {
  auto ds = disjuncts(head);
  return std::any_of(ds.begin(), ds.end(), [](const Expression& d) { return d.is(Connective::negation); });
}

void subformulas_into(const Expression& e, bool ht_atomic, std::vector<Expression>& out,
                      std::unordered_set<Expression>& seen) {
  if (!(ht_atomic && e.is_ht_literal())) {
    switch (e.connective()) {
      case Connective::negation: subformulas_into(e.operand(), ht_atomic, out, seen); break;
      case Connective::conjunction:
      case Connective::disjunction:
        subformulas_into(e.lhs(), ht_atomic, out, seen);
        subformulas_into(e.rhs(), ht_atomic, out, seen);
        break;
      default: break;
    }
  }
  if (seen.insert(e).second) out.push_back(e);
}

}  // namespace

Alphabet atoms_of(const Expression& e) {
  Alphabet out;
  collect_atoms(e, out);
  return out;
}

Alphabet atoms_of(const Program& p) {
  Alphabet out;
  for (const auto& r : p.rules()) {
    collect_atoms(r.head, out);
    collect_atoms(r.body, out);
  }
  return out;
}

std::vector<Expression> conjuncts(const Expression& e) {
  std::vector<Expression> out;
  flatten<Connective::conjunction>(e, out);
  return out;
}

std::vector<Expression> disjuncts(const Expression& e) {
  std::vector<Expression> out;
  flatten<Connective::disjunction>(e, out);
  return out;
}

Expression make_conjunction(const std::vector<Expression>& parts) {
  if (parts.empty()) return Expression::top();
  Expression acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Expression::conj(acc, parts[i]);
  return acc;
}

Expression make_disjunction(const std::vector<Expression>& parts) {
  if (parts.empty()) return Expression::bottom();
  Expression acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Expression::disj(acc, parts[i]);
  return acc;
}

std::string_view to_string(ProgramClass c) noexcept {
  switch (c) {
    case ProgramClass::basic: return "basic";
    case ProgramClass::disjunctive: return "disjunctive";
    case ProgramClass::generalized_disjunctive: return "generalized_disjunctive";
    case ProgramClass::gdlp_ht: return "gdlp_ht";
    case ProgramClass::nnf: return "nnf";
    case ProgramClass::nested: return "nested";
  }
  return "?";
}

bool in_class(const Rule& r, ProgramClass c) {
  switch (c) {
    case ProgramClass::nested: return true;
    case ProgramClass::nnf: return r.head.is_ht_nnf() && r.body.is_ht_nnf();
    case ProgramClass::gdlp_ht:
      return disjunction_of(r.head, &Expression::is_ht_literal) && conjunction_of(r.body, &Expression::is_ht_literal);
    case ProgramClass::generalized_disjunctive:
      return disjunction_of(r.head, &Expression::is_literal) && conjunction_of(r.body, &Expression::is_literal);
    case ProgramClass::disjunctive:
      return in_class(r, ProgramClass::generalized_disjunctive) && !head_has_negation(r.head);
    case ProgramClass::basic:
      return in_class(r, ProgramClass::disjunctive) && r.head.negation_free() && r.body.negation_free();
  }
  return false;
}

bool in_class(const Program& p, ProgramClass c) {
  return std::all_of(p.rules().begin(), p.rules().end(), [c](const Rule& r) { return in_class(r, c); });
}

ProgramClass classify(const Program& p) {
  for (auto c : {ProgramClass::basic, ProgramClass::disjunctive, ProgramClass::generalized_disjunctive,
                 ProgramClass::gdlp_ht, ProgramClass::nnf})
    if (in_class(p, c)) return c;
  return ProgramClass::nested;
}

bool negation_free(const Program& p) {
  return std::all_of(p.rules().begin(), p.rules().end(),
                     [](const Rule& r) { return r.head.negation_free() && r.body.negation_free(); });
}

std::vector<Expression> subformulas(const Expression& e) {
  std::vector<Expression> out;
  std::unordered_set<Expression> seen;
  subformulas_into(e, e.is_ht_nnf(), out, seen);
  return out;
}

std::size_t program_size(const Program& p) {
  std::size_t n = p.size();
  for (const auto& r : p.rules()) n += r.head.size() + r.body.size();
  return n;
}

}  // namespace nestlp
