// SPDX-License-Identifier: Apache-2.0
//
// Test-only brute-force semantics. Deliberately shares nothing with the
// library's search code: every subset (or HT pair) of the alphabet is
// visited and the definitions are evaluated directly on the trees.
#pragma once

#include "nestlp/program.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Names = std::set<std::string>;

inline bool holds(const nestlp::Expression& e, const Names& i) {
  using nestlp::Connective;
  switch (e.connective()) {
    case Connective::top: return true;
    case Connective::bottom: return false;
    case Connective::atom: return i.count(e.atom().name()) > 0;
    case Connective::negation: return !holds(e.operand(), i);
    case Connective::conjunction: return holds(e.lhs(), i) && holds(e.rhs(), i);
    case Connective::disjunction: return holds(e.lhs(), i) || holds(e.rhs(), i);
  }
  return false;
}

/// Truth of the reduct by `guess` evaluated in `j`: maximal negations are
/// decided by `guess`, everything else by `j`.
inline bool holds_reduct(const nestlp::Expression& e, const Names& guess, const Names& j) {
  using nestlp::Connective;
  switch (e.connective()) {
    case Connective::negation: return !holds(e.operand(), guess);
    case Connective::conjunction: return holds_reduct(e.lhs(), guess, j) && holds_reduct(e.rhs(), guess, j);
    case Connective::disjunction: return holds_reduct(e.lhs(), guess, j) || holds_reduct(e.rhs(), guess, j);
    default: return holds(e, j);
  }
}

/// Value at "here" (world 0) or "there" (world 1).
inline bool holds_ht(const nestlp::Expression& e, const Names& h, const Names& t, int world) {
  using nestlp::Connective;
  const Names& w = world == 0 ? h : t;
  switch (e.connective()) {
    case Connective::top: return true;
    case Connective::bottom: return false;
    case Connective::atom: return w.count(e.atom().name()) > 0;
    case Connective::negation:
      for (int u = world; u <= 1; ++u)
        if (holds_ht(e.operand(), h, t, u)) return false;
      return true;
    case Connective::conjunction: return holds_ht(e.lhs(), h, t, world) && holds_ht(e.rhs(), h, t, world);
    case Connective::disjunction: return holds_ht(e.lhs(), h, t, world) || holds_ht(e.rhs(), h, t, world);
  }
  return false;
}

inline bool rule_ht(const nestlp::Rule& r, const Names& h, const Names& t) {
  for (int u = 0; u <= 1; ++u)
    if (holds_ht(r.body, h, t, u) && !holds_ht(r.head, h, t, u)) return false;
  return true;
}

inline std::vector<Names> subsets(const std::vector<std::string>& atoms) {
  std::vector<Names> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms.size()); ++m) {
    Names s;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (m >> i & 1) s.insert(atoms[i]);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<std::string> names(const nestlp::Alphabet& a) {
  std::vector<std::string> out;
  for (const auto& x : a) out.push_back(x.name());
  return out;
}

inline bool proper_subset(const Names& a, const Names& b) {
  if (a.size() >= b.size()) return false;
  for (const auto& x : a)
    if (!b.count(x)) return false;
  return true;
}

inline std::set<Names> answer_sets(const nestlp::Program& p, const nestlp::Alphabet& alphabet) {
  auto all = subsets(names(alphabet));
  auto model = [&](const Names& guess, const Names& j) {
    for (const auto& r : p.rules())
      if (holds_reduct(r.body, guess, j) && !holds_reduct(r.head, guess, j)) return false;
    return true;
  };
  std::set<Names> out;
  for (const auto& i : all) {
    if (!model(i, i)) continue;
    bool minimal = true;
    for (const auto& j : all)
      if (proper_subset(j, i) && model(i, j)) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(i);
  }
  return out;
}

inline std::set<std::pair<Names, Names>> ht_models(const nestlp::Program& p, const nestlp::Alphabet& alphabet) {
  auto all = subsets(names(alphabet));
  std::set<std::pair<Names, Names>> out;
  for (const auto& t : all)
    for (const auto& h : all) {
      if (!(h == t || proper_subset(h, t))) continue;
      bool ok = true;
      for (const auto& r : p.rules()) ok = ok && rule_ht(r, h, t);
      if (ok) out.emplace(h, t);
    }
  return out;
}

inline std::set<std::pair<Names, Names>> ht_models(const nestlp::Expression& e, const nestlp::Alphabet& alphabet) {
  return oracle::ht_models(nestlp::Program({nestlp::Rule::fact(e)}, alphabet), alphabet);
}

template <class Set>
std::set<Names> to_names(const Set& sets) {
  std::set<Names> out;
  for (const auto& s : sets) {
    Names n;
    for (const auto& a : s) n.insert(a.name());
    out.insert(std::move(n));
  }
  return out;
}

}  // namespace oracle
