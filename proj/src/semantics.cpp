// SPDX-License-Identifier: Apache-2.0
#include "nestlp/semantics.hpp"

#include "nestlp/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace nestlp {

HTInterpretation::HTInterpretation(Interpretation here, Interpretation there)
    : here_(std::move(here)), there_(std::move(there)) {
  if (!std::includes(there_.begin(), there_.end(), here_.begin(), here_.end()))
    throw std::invalid_argument("HT-interpretation: here " + to_string(here_) + " is not a subset of there " +
                                to_string(there_));
}

// ---------------------------------------------------------------------------
// Direct evaluation on expression trees
// ---------------------------------------------------------------------------

bool eval_classical(const Expression& e, const Interpretation& i) {
  switch (e.connective()) {
    case Connective::top: return true;
    case Connective::bottom: return false;
    case Connective::atom: return i.contains(e.atom());
    case Connective::negation: return !eval_classical(e.operand(), i);
    case Connective::conjunction: return eval_classical(e.lhs(), i) && eval_classical(e.rhs(), i);
    case Connective::disjunction: return eval_classical(e.lhs(), i) || eval_classical(e.rhs(), i);
  }
  return false;
}

bool satisfies(const Interpretation& i, const Rule& r) { return !eval_classical(r.body, i) || eval_classical(r.head, i); }

bool satisfies(const Interpretation& i, const Program& p) {
  return std::all_of(p.rules().begin(), p.rules().end(), [&i](const Rule& r) { return satisfies(i, r); });
}

Expression reduct(const Expression& e, const Interpretation& i) {
  switch (e.connective()) {
    case Connective::negation: return eval_classical(e.operand(), i) ? Expression::bottom() : Expression::top();
    case Connective::conjunction: return Expression::conj(reduct(e.lhs(), i), reduct(e.rhs(), i));
    case Connective::disjunction: return Expression::disj(reduct(e.lhs(), i), reduct(e.rhs(), i));
    default: return e;
  }
}

Program reduct(const Program& p, const Interpretation& i) {
  std::vector<Rule> rules;
  rules.reserve(p.size());
  for (const auto& r : p.rules()) rules.push_back({reduct(r.head, i), reduct(r.body, i)});
  return Program(std::move(rules), p.alphabet());
}

namespace {

// Worlds ordered here <= there; `u >= w` ranges over {w, there}.
std::vector<World> successors(World w) {
  if (w == World::here) return {World::here, World::there};
  return {World::there};
}

}  // namespace

bool eval_ht(const Expression& e, const HTInterpretation& f, World w) {
  switch (e.connective()) {
    case Connective::top: return true;
    case Connective::bottom: return false;
    case Connective::atom: return f.at(w).contains(e.atom());
    case Connective::negation: {
      auto us = successors(w);
      return std::all_of(us.begin(), us.end(), [&](World u) { return !eval_ht(e.operand(), f, u); });
    }
    case Connective::conjunction: return eval_ht(e.lhs(), f, w) && eval_ht(e.rhs(), f, w);
    case Connective::disjunction: return eval_ht(e.lhs(), f, w) || eval_ht(e.rhs(), f, w);
  }
  return false;
}

bool eval_ht_rule(const Rule& r, const HTInterpretation& f, World w) {
  auto us = successors(w);
  return std::all_of(us.begin(), us.end(), [&](World u) { return !eval_ht(r.body, f, u) || eval_ht(r.head, f, u); });
}

bool is_ht_model(const Program& p, const HTInterpretation& f) {
  return std::all_of(p.rules().begin(), p.rules().end(),
                     [&f](const Rule& r) { return eval_ht_rule(r, f, World::here); });
}

InterpretationSet project(const InterpretationSet& sets, const Alphabet& keep) {
  InterpretationSet out;
  for (const auto& i : sets) {
    Interpretation j;
    std::set_intersection(i.begin(), i.end(), keep.begin(), keep.end(), std::inserter(j, j.end()));
    out.insert(std::move(j));
  }
  return out;
}

std::string to_string(const Interpretation& i) {
  std::string s = "{";
  bool first = true;
  for (const auto& a : i) {
    if (!first) s += ", ";
    s += a.name();
    first = false;
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Enumeration over bitsets
// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint64_t;

enum class Tri : std::uint8_t { no, yes, unknown };

Tri t_not(Tri a) { return a == Tri::unknown ? a : (a == Tri::yes ? Tri::no : Tri::yes); }
Tri t_and(Tri a, Tri b) {
  if (a == Tri::no || b == Tri::no) return Tri::no;
  return (a == Tri::yes && b == Tri::yes) ? Tri::yes : Tri::unknown;
}
Tri t_or(Tri a, Tri b) {
  if (a == Tri::yes || b == Tri::yes) return Tri::yes;
  return (a == Tri::no && b == Tri::no) ? Tri::no : Tri::unknown;
}

/// A partial assignment: bit i of `known` says whether atom i is decided.
struct Partial {
  Mask known = 0;
  Mask value = 0;

  Tri at(int i) const {
    Mask b = Mask{1} << i;
    if (!(known & b)) return Tri::unknown;
    return (value & b) ? Tri::yes : Tri::no;
  }
};

/// Atoms in search order: user atoms, then labels by index, then bar atoms.
class AtomIndex {
 public:
  AtomIndex(const Alphabet& alphabet, std::size_t cap) {
    if (cap > kMaxEnumerationCap) cap = kMaxEnumerationCap;
    if (alphabet.size() > cap)
      throw ResourceError("alphabet has " + std::to_string(alphabet.size()) + " atoms; enumeration cap is " +
                          std::to_string(cap));
    atoms_.assign(alphabet.begin(), alphabet.end());
    std::stable_sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) {
      auto key = [](const Atom& x) {
        std::size_t idx = x.kind() == AtomKind::label ? std::stoul(x.name().substr(2)) : 0;
        return std::make_pair(static_cast<int>(x.kind()), idx);
      };
      return key(a) < key(b);
    });
    for (std::size_t i = 0; i < atoms_.size(); ++i) index_.emplace(atoms_[i], static_cast<int>(i));
  }

  std::size_t size() const { return atoms_.size(); }
  int at(const Atom& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) throw std::invalid_argument("atom '" + a.name() + "' is not in the alphabet");
    return it->second;
  }
  Mask full() const { return atoms_.size() == 64 ? ~Mask{0} : ((Mask{1} << atoms_.size()) - 1); }

  Interpretation decode(Mask m) const {
    Interpretation out;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (m & (Mask{1} << i)) out.insert(atoms_[i]);
    return out;
  }

  Mask encode(const Interpretation& i) const {
    Mask m = 0;
    for (const auto& a : i) m |= Mask{1} << at(a);
    return m;
  }

 private:
  std::vector<Atom> atoms_;
  std::map<Atom, int> index_;
};

struct FlatNode {
  Connective op;
  int lhs = -1;
  int rhs = -1;
  int var = -1;
};

/// Postorder node array; the root is the last node.
using FlatExpr = std::vector<FlatNode>;

int flatten_into(const Expression& e, const AtomIndex& idx, FlatExpr& out) {
  FlatNode n{e.connective()};
  switch (e.connective()) {
    case Connective::atom: n.var = idx.at(e.atom()); break;
    case Connective::negation: n.lhs = flatten_into(e.operand(), idx, out); break;
    case Connective::conjunction:
    case Connective::disjunction:
      n.lhs = flatten_into(e.lhs(), idx, out);
      n.rhs = flatten_into(e.rhs(), idx, out);
      break;
    default: break;
  }
  out.push_back(n);
  return static_cast<int>(out.size()) - 1;
}

struct FlatRule {
  FlatExpr head;
  FlatExpr body;
};

std::vector<FlatRule> compile(const Program& p, const AtomIndex& idx) {
  std::vector<FlatRule> out;
  out.reserve(p.size());
  for (const auto& r : p.rules()) {
    FlatRule fr;
    flatten_into(r.head, idx, fr.head);
    flatten_into(r.body, idx, fr.body);
    out.push_back(std::move(fr));
  }
  return out;
}

/// Kleene evaluation of classical truth.
class ClassicalEvaluator {
 public:
  Tri eval(const FlatExpr& e, const Partial& p) {
    buf_.resize(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto& n = e[i];
      switch (n.op) {
        case Connective::top: buf_[i] = Tri::yes; break;
        case Connective::bottom: buf_[i] = Tri::no; break;
        case Connective::atom: buf_[i] = p.at(n.var); break;
        case Connective::negation: buf_[i] = t_not(buf_[n.lhs]); break;
        case Connective::conjunction: buf_[i] = t_and(buf_[n.lhs], buf_[n.rhs]); break;
        case Connective::disjunction: buf_[i] = t_or(buf_[n.lhs], buf_[n.rhs]); break;
      }
    }
    return buf_.back();
  }

  /// no as soon as some rule has a true body and a false head.
  Tri rules(const std::vector<FlatRule>& rs, const Partial& p) {
    Tri acc = Tri::yes;
    for (const auto& r : rs) {
      Tri b = eval(r.body, p);
      if (b == Tri::no) continue;
      Tri v = t_or(t_not(b), eval(r.head, p));
      if (v == Tri::no) return Tri::no;
      acc = t_and(acc, v);
    }
    return acc;
  }

 private:
  std::vector<Tri> buf_;
};

/// Kleene evaluation of the here-and-there valuation. Each node carries its
/// value at "here" and at "there"; there-values depend on `there` only.
class HTEvaluator {
 public:
  struct Pair {
    Tri here;
    Tri there;
  };

  Pair eval(const FlatExpr& e, const Partial& here, const Partial& there) {
    buf_.resize(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto& n = e[i];
      Pair& out = buf_[i];
      switch (n.op) {
        case Connective::top: out = {Tri::yes, Tri::yes}; break;
        case Connective::bottom: out = {Tri::no, Tri::no}; break;
        case Connective::atom: out = {here.at(n.var), there.at(n.var)}; break;
        case Connective::negation: {
          Pair c = buf_[n.lhs];
          // false at every successor world
          out = {t_and(t_not(c.here), t_not(c.there)), t_not(c.there)};
          break;
        }
        case Connective::conjunction: {
          Pair a = buf_[n.lhs], b = buf_[n.rhs];
          out = {t_and(a.here, b.here), t_and(a.there, b.there)};
          break;
        }
        case Connective::disjunction: {
          Pair a = buf_[n.lhs], b = buf_[n.rhs];
          out = {t_or(a.here, b.here), t_or(a.there, b.there)};
          break;
        }
      }
    }
    return buf_.back();
  }

  /// Implication body -> head at world "here" for every rule.
  Tri rules(const std::vector<FlatRule>& rs, const Partial& here, const Partial& there) {
    Tri acc = Tri::yes;
    for (const auto& r : rs) {
      Pair b = eval(r.body, here, there);
      Pair h = eval(r.head, here, there);
      Tri v = t_and(t_or(t_not(b.here), h.here), t_or(t_not(b.there), h.there));
      if (v == Tri::no) return Tri::no;
      acc = t_and(acc, v);
    }
    return acc;
  }

 private:
  std::vector<Pair> buf_;
};

/// Depth-first enumeration of all total assignments extending `start`,
/// false before true, cutting a branch once `status` reports no. `leaf`
/// returns false to stop the search. Returns false if stopped.
template <class Status, class Leaf>
bool enumerate(std::size_t n, Partial start, Status&& status, Leaf&& leaf) {
  struct Rec {
    std::size_t n;
    Status& status;
    Leaf& leaf;
    bool operator()(std::size_t pos, Partial p) {
      if (status(p) == Tri::no) return true;
      while (pos < n && (p.known & (Mask{1} << pos))) ++pos;
      if (pos == n) return leaf(p.value);
      Mask bit = Mask{1} << pos;
      p.known |= bit;
      if (!(*this)(pos + 1, p)) return false;
      p.value |= bit;
      return (*this)(pos + 1, p);
    }
  };
  Rec rec{n, status, leaf};
  return rec(0, start);
}

void check_alphabet(const Program& p, const Alphabet& alphabet) {
  for (const auto& a : atoms_of(p))
    if (!alphabet.contains(a)) throw std::invalid_argument("atom '" + a.name() + "' occurs in the program but not in the alphabet");
}

/// True if some model of the negation-free `rules` is a proper subset of `m`.
bool has_smaller_classical_model(const std::vector<FlatRule>& rules, const AtomIndex& idx, Mask m) {
  ClassicalEvaluator ev;
  bool found = false;
  Partial start{idx.full() & ~m, 0};
  enumerate(
      idx.size(), start, [&](const Partial& p) { return ev.rules(rules, p); },
      [&](Mask j) {
        if (j == m) return true;
        found = true;
        return false;
      });
  return found;
}

}  // namespace

InterpretationSet minimal_models(const Program& p, const Alphabet& alphabet, std::size_t cap) {
  if (!negation_free(p)) throw PreconditionError("minimal_models: program is not negation-free");
  check_alphabet(p, alphabet);
  AtomIndex idx(alphabet, cap);
  auto rules = compile(p, idx);
  ClassicalEvaluator ev;
  InterpretationSet out;
  enumerate(
      idx.size(), {}, [&](const Partial& q) { return ev.rules(rules, q); },
      [&](Mask m) {
        if (!has_smaller_classical_model(rules, idx, m)) out.insert(idx.decode(m));
        return true;
      });
  return out;
}

InterpretationSet answer_sets(const Program& p, const Alphabet& alphabet, std::size_t cap) {
  check_alphabet(p, alphabet);
  AtomIndex idx(alphabet, cap);
  auto rules = compile(p, idx);
  ClassicalEvaluator ev;
  InterpretationSet out;
  // An answer set satisfies its reduct, and I satisfies the reduct by I
  // exactly when it satisfies the program, so classical models are the only
  // candidates.
  enumerate(
      idx.size(), {}, [&](const Partial& q) { return ev.rules(rules, q); },
      [&](Mask m) {
        Interpretation i = idx.decode(m);
        Program red = reduct(p, i);
        if (!satisfies(i, red)) return true;
        if (!has_smaller_classical_model(compile(red, idx), idx, m)) out.insert(std::move(i));
        return true;
      });
  return out;
}

namespace {

/// Calls `visit(here, there)` for every HT-model over the index. With
/// `equilibrium_only`, reports just the total models <T, T> for which no
/// <H, T> with H a proper subset of T is a model.
template <class Visit>
void enumerate_ht(const std::vector<FlatRule>& rules, const AtomIndex& idx, bool equilibrium_only, Visit&& visit) {
  HTEvaluator ev;
  enumerate(
      idx.size(), {}, [&](const Partial& q) { return ev.rules(rules, q, q); },
      [&](Mask t) {
        Partial there{idx.full(), t};
        Partial start{idx.full() & ~t, 0};
        if (equilibrium_only) {
          bool smaller = false;
          enumerate(
              idx.size(), start, [&](const Partial& h) { return ev.rules(rules, h, there); },
              [&](Mask h) {
                if (h == t) return true;
                smaller = true;
                return false;
              });
          if (!smaller) visit(t, t);
        } else {
          enumerate(
              idx.size(), start, [&](const Partial& h) { return ev.rules(rules, h, there); },
              [&](Mask h) {
                visit(h, t);
                return true;
              });
        }
        return true;
      });
}

}  // namespace

std::set<HTInterpretation> ht_models(const Program& p, const Alphabet& alphabet, std::size_t cap) {
  check_alphabet(p, alphabet);
  AtomIndex idx(alphabet, cap);
  auto rules = compile(p, idx);
  std::set<HTInterpretation> out;
  enumerate_ht(rules, idx, false, [&](Mask h, Mask t) { out.emplace(idx.decode(h), idx.decode(t)); });
  return out;
}

bool ht_equivalent(const Program& a, const Program& b, const Alphabet& alphabet, std::size_t cap) {
  return ht_models(a, alphabet, cap) == ht_models(b, alphabet, cap);
}

InterpretationSet equilibrium_models(const Program& p, const Alphabet& alphabet, std::size_t cap) {
  check_alphabet(p, alphabet);
  AtomIndex idx(alphabet, cap);
  auto rules = compile(p, idx);
  InterpretationSet out;
  enumerate_ht(rules, idx, true, [&](Mask, Mask t) { out.insert(idx.decode(t)); });
  return out;
}

}  // namespace nestlp
