// SPDX-License-Identifier: Apache-2.0
#include "nestlp/translate.hpp"

#include "nestlp/errors.hpp"
#include "nestlp/text_io.hpp"

#include <stdexcept>
#include <unordered_set>

namespace nestlp {

std::string_view to_string(TranslationMode m) noexcept {
  switch (m) {
    case TranslationMode::structural: return "structural";
    case TranslationMode::distributive: return "distributive";
    case TranslationMode::polarity: return "polarity";
  }
  return "?";
}

TranslationMode parse_mode(std::string_view s) {
  if (s == "structural") return TranslationMode::structural;
  if (s == "distributive") return TranslationMode::distributive;
  if (s == "polarity") return TranslationMode::polarity;
  throw std::invalid_argument("unknown translation mode '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// AtomTable
// ---------------------------------------------------------------------------

const Atom& AtomTable::label(const Expression& phi) {
  auto it = labels_.find(phi);
  if (it == labels_.end()) {
    it = labels_.emplace(phi, Atom::label(labels_.size())).first;
    formulas_.emplace(it->second, phi);
  }
  return it->second;
}

const Atom& AtomTable::bar(const Atom& a) {
  auto it = bars_.find(a);
  if (it == bars_.end()) it = bars_.emplace(a, Atom::bar(a)).first;
  return it->second;
}

const Expression* AtomTable::formula_of(const Atom& label) const {
  auto it = formulas_.find(label);
  return it == formulas_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// tr1
// ---------------------------------------------------------------------------

Expression normalize_nnf(const Expression& e) {
  if (e.is_ht_literal()) return e;
  switch (e.connective()) {
    case Connective::conjunction: return Expression::conj(normalize_nnf(e.lhs()), normalize_nnf(e.rhs()));
    case Connective::disjunction: return Expression::disj(normalize_nnf(e.lhs()), normalize_nnf(e.rhs()));
    case Connective::negation: break;
    default: return e;
  }
  const Expression& inner = e.operand();
  auto neg = [](const Expression& x) { return normalize_nnf(Expression::negate(x)); };
  switch (inner.connective()) {
    case Connective::conjunction: return Expression::disj(neg(inner.lhs()), neg(inner.rhs()));
    case Connective::disjunction: return Expression::conj(neg(inner.lhs()), neg(inner.rhs()));
    case Connective::negation: {
      const Expression& core = inner.operand();
      switch (core.connective()) {
        // not not not phi
        case Connective::negation: return neg(core.operand());
        // not not (a & b), not not (a | b): push both negations inwards
        case Connective::conjunction:
          return Expression::conj(neg(Expression::negate(core.lhs())), neg(Expression::negate(core.rhs())));
        case Connective::disjunction:
          return Expression::disj(neg(Expression::negate(core.lhs())), neg(Expression::negate(core.rhs())));
        default: break;
      }
      break;
    }
    default: break;
  }
  throw std::logic_error("normalize_nnf: unreachable case for " + to_string(e));
}

Program tr1(const Program& p) {
  std::vector<Rule> out;
  out.reserve(p.size());
  for (const auto& r : p.rules()) out.push_back({normalize_nnf(r.head), normalize_nnf(r.body)});
  return Program(std::move(out), p.alphabet());
}

// ---------------------------------------------------------------------------
// tr2
// ---------------------------------------------------------------------------

namespace {

struct Occurrence {
  Expression formula;
  bool in_head = false;
  bool in_body = false;
};

Program label_program(const Program& p, AtomTable& table, const TranslateOptions& opts, bool by_polarity) {
  if (!in_class(p, ProgramClass::nnf)) throw PreconditionError("tr2: program is not in HT negation normal form");

  std::vector<Occurrence> occ;
  std::unordered_map<Expression, std::size_t> where;
  auto visit = [&](const Expression& root, bool head) {
    for (auto& phi : subformulas(root)) {
      auto [it, fresh] = where.emplace(phi, occ.size());
      if (fresh) occ.push_back({phi});
      (head ? occ[it->second].in_head : occ[it->second].in_body) = true;
    }
  };
  for (const auto& r : p.rules()) {
    visit(r.head, true);
    visit(r.body, false);
  }

  auto L = [&](const Expression& phi) {
    if (opts.simplify && phi.is_constant()) return phi;
    return Expression::var(table.label(phi));
  };
  for (const auto& o : occ) L(o.formula);  // number labels in first-occurrence order

  Program out;
  out.extend_alphabet(p.alphabet());
  for (const auto& r : p.rules()) out.add({L(r.head), L(r.body)});

  for (const auto& o : occ) {
    const Expression& phi = o.formula;
    if (opts.simplify && phi.is_constant()) continue;
    bool intro = !by_polarity || o.in_body;
    bool elim = !by_polarity || o.in_head;
    if (phi.is_ht_literal()) {
      if (intro) out.add({L(phi), phi});
      if (elim) out.add({phi, L(phi)});
    } else if (phi.is(Connective::conjunction)) {
      if (intro) out.add({L(phi), Expression::conj(L(phi.lhs()), L(phi.rhs()))});
      if (elim) {
        out.add({L(phi.lhs()), L(phi)});
        out.add({L(phi.rhs()), L(phi)});
      }
    } else {
      if (elim) out.add({Expression::disj(L(phi.lhs()), L(phi.rhs())), L(phi)});
      if (intro) {
        out.add({L(phi), L(phi.lhs())});
        out.add({L(phi), L(phi.rhs())});
      }
    }
  }
  return out;
}

bool double_negation(const Expression& e) { return e.is(Connective::negation) && e.operand().is(Connective::negation); }

}  // namespace

Program tr2(const Program& p, AtomTable& table, const TranslateOptions& opts) {
  return label_program(p, table, opts, false);
}

// ---------------------------------------------------------------------------
// tr3
// ---------------------------------------------------------------------------

Program tr3(const Program& p) {
  if (!in_class(p, ProgramClass::gdlp_ht)) throw PreconditionError("tr3: program is not in class gdlp_ht");
  Program out;
  out.extend_alphabet(p.alphabet());
  for (const auto& r : p.rules()) {
    auto head = disjuncts(r.head);
    auto body = conjuncts(r.body);
    bool touched = false;
    // phi | not not v :- psi   becomes   phi :- psi, not v
    for (auto it = head.begin(); it != head.end();) {
      if (double_negation(*it)) {
        body.push_back(it->operand());
        it = head.erase(it);
        touched = true;
      } else {
        ++it;
      }
    }
    // phi :- psi, not not v   becomes   phi | not v :- psi
    for (auto it = body.begin(); it != body.end();) {
      if (double_negation(*it)) {
        head.push_back(it->operand());
        it = body.erase(it);
        touched = true;
      } else {
        ++it;
      }
    }
    out.add(touched ? Rule{make_disjunction(head), make_conjunction(body)} : r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// tr4
// ---------------------------------------------------------------------------

Program tr4(const Program& p, AtomTable& table) {
  if (!in_class(p, ProgramClass::generalized_disjunctive))
    throw PreconditionError("tr4: program is not generalized disjunctive");
  Program out;
  out.extend_alphabet(p.alphabet());
  std::vector<Atom> negated;
  std::set<Atom> seen;
  for (const auto& r : p.rules()) {
    auto head = disjuncts(r.head);
    bool touched = false;
    for (auto& d : head) {
      if (!d.is(Connective::negation)) continue;
      const Expression& v = d.operand();
      touched = true;
      if (v.is(Connective::top)) {
        d = Expression::bottom();
      } else if (v.is(Connective::bottom)) {
        d = Expression::top();
      } else {
        if (seen.insert(v.atom()).second) negated.push_back(v.atom());
        d = Expression::var(table.bar(v.atom()));
      }
    }
    out.add(touched ? Rule{make_disjunction(head), r.body} : r);
  }
  for (const auto& a : negated) {
    auto atom = Expression::var(a);
    auto bar = Expression::var(table.bar(a));
    out.add(Rule::constraint(Expression::conj(atom, bar)));
    out.add({bar, Expression::negate(atom)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------

namespace {

void expect_class(const Program& p, ProgramClass c, const char* stage) {
  if (!in_class(p, c))
    throw std::logic_error(std::string(stage) + " output is not in class " + std::string(to_string(c)));
}

TranslationReport report_for(const Program& in, const Program& out, const AtomTable& table, TranslationMode mode) {
  return {program_size(in), program_size(out), in.size(), out.size(), table.label_count(), table.bar_count(), mode};
}

using Clauses = std::vector<std::vector<Expression>>;

std::size_t literal_count(const Clauses& cs) {
  std::size_t n = 0;
  for (const auto& c : cs) n += c.size();
  return n;
}

/// Pairwise concatenation, the distributive step.
Clauses product(const Clauses& a, const Clauses& b, std::size_t guard) {
  std::size_t lits = literal_count(a) * b.size() + literal_count(b) * a.size();
  if (lits > guard)
    throw ResourceError("distributive translation exceeds the size guard of " + std::to_string(guard) + " nodes");
  Clauses out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      auto c = x;
      c.insert(c.end(), y.begin(), y.end());
      out.push_back(std::move(c));
    }
  return out;
}

/// Normal form over HT-literals: `outer` joins groups, the other connective
/// is distributed. CNF uses outer = conjunction, DNF outer = disjunction.
Clauses normal_form(const Expression& e, Connective outer, std::size_t guard) {
  if (e.is_ht_literal()) return {{e}};
  auto a = normal_form(e.lhs(), outer, guard);
  auto b = normal_form(e.rhs(), outer, guard);
  if (e.is(outer)) {
    if (literal_count(a) + literal_count(b) > guard)
      throw ResourceError("distributive translation exceeds the size guard of " + std::to_string(guard) + " nodes");
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  return product(a, b, guard);
}

std::string hex(const std::string& s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char ch : s) {
    out += digits[ch >> 4];
    out += digits[ch & 15];
  }
  return out;
}

Expression rename(const Expression& e, const std::map<Atom, Atom>& names) {
  switch (e.connective()) {
    case Connective::atom: {
      auto it = names.find(e.atom());
      return it == names.end() ? e : Expression::var(it->second);
    }
    case Connective::negation: return Expression::negate(rename(e.operand(), names));
    case Connective::conjunction: return Expression::conj(rename(e.lhs(), names), rename(e.rhs(), names));
    case Connective::disjunction: return Expression::disj(rename(e.lhs(), names), rename(e.rhs(), names));
    default: return e;
  }
}

}  // namespace

Stages translate_stages(const Program& p, AtomTable& table, const TranslateOptions& opts) {
  Stages s;
  s.nnf = tr1(p);
  expect_class(s.nnf, ProgramClass::nnf, "tr1");
  s.labelled = tr2(s.nnf, table, opts);
  expect_class(s.labelled, ProgramClass::gdlp_ht, "tr2");
  s.double_negation_free = tr3(s.labelled);
  expect_class(s.double_negation_free, ProgramClass::generalized_disjunctive, "tr3");
  s.disjunctive = tr4(s.double_negation_free, table);
  expect_class(s.disjunctive, ProgramClass::disjunctive, "tr4");
  return s;
}

Translation translate_structural(const Program& p, AtomTable& table, const TranslateOptions& opts) {
  auto stages = translate_stages(p, table, opts);
  auto report = report_for(p, stages.disjunctive, table, TranslationMode::structural);
  return {std::move(stages.disjunctive), report};
}

Translation translate_structural(const Program& p, const TranslateOptions& opts) {
  AtomTable table(atoms_of(p));
  return translate_structural(p, table, opts);
}

Translation translate_polarity_variant(const Program& p, const TranslateOptions& opts) {
  AtomTable table(atoms_of(p));
  auto labelled = label_program(tr1(p), table, opts, true);
  auto out = tr4(tr3(labelled), table);
  expect_class(out, ProgramClass::disjunctive, "polarity variant");
  auto report = report_for(p, out, table, TranslationMode::polarity);
  return {std::move(out), report};
}

Translation translate_distributive(const Program& p, const TranslateOptions& opts) {
  Program nnf = tr1(p);
  Program split;
  split.extend_alphabet(p.alphabet());
  std::size_t budget = 0;
  for (const auto& r : nnf.rules()) {
    auto heads = normal_form(r.head, Connective::conjunction, opts.distributive_guard);
    auto bodies = normal_form(r.body, Connective::disjunction, opts.distributive_guard);
    budget += literal_count(heads) * bodies.size() + literal_count(bodies) * heads.size();
    if (budget > opts.distributive_guard)
      throw ResourceError("distributive translation exceeds the size guard of " +
                          std::to_string(opts.distributive_guard) + " nodes");
    for (const auto& c : heads)
      for (const auto& d : bodies) split.add({make_disjunction(c), make_conjunction(d)});
  }
  AtomTable table(atoms_of(p));
  auto out = tr4(tr3(split), table);
  expect_class(out, ProgramClass::disjunctive, "distributive translation");
  auto report = report_for(p, out, table, TranslationMode::distributive);
  return {std::move(out), report};
}

Translation translate(const Program& p, TranslationMode mode, const TranslateOptions& opts) {
  switch (mode) {
    case TranslationMode::structural: return translate_structural(p, opts);
    case TranslationMode::distributive: return translate_distributive(p, opts);
    case TranslationMode::polarity: return translate_polarity_variant(p, opts);
  }
  throw std::invalid_argument("unknown translation mode");
}

Program relabel_canonically(const Program& p, const AtomTable& table) {
  std::map<Atom, Atom> names;
  for (const auto& a : p.alphabet())
    if (const Expression* phi = table.formula_of(a)) names.emplace(a, Atom("lf_" + hex(to_string(*phi))));
  Program out;
  for (const auto& r : p.rules()) out.add({rename(r.head, names), rename(r.body, names)});
  return out;
}

}  // namespace nestlp
