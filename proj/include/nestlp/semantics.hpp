// SPDX-License-Identifier: Apache-2.0
//
// Reference semantics by exhaustive enumeration: classical models, reducts,
// minimal models, answer sets, here-and-there valuation, HT-models and
// equilibrium models. The searches are complete; candidate assignments are
// pruned only once some rule is already decided false.
#pragma once

#include "nestlp/program.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace nestlp {

using Interpretation = std::set<Atom>;
using InterpretationSet = std::set<Interpretation>;

inline constexpr std::size_t kDefaultEnumerationCap = 20;
/// Hard ceiling imposed by the bitset representation used by the searches.
inline constexpr std::size_t kMaxEnumerationCap = 64;

enum class World { here, there };

/// <here, there> with here a subset of there.
class HTInterpretation {
 public:
  HTInterpretation(Interpretation here, Interpretation there);
  static HTInterpretation total(Interpretation i) { return {i, i}; }

  const Interpretation& here() const noexcept { return here_; }
  const Interpretation& there() const noexcept { return there_; }
  const Interpretation& at(World w) const noexcept { return w == World::here ? here_ : there_; }
  bool is_total() const noexcept { return here_ == there_; }

  friend bool operator==(const HTInterpretation&, const HTInterpretation&) = default;
  friend auto operator<=>(const HTInterpretation&, const HTInterpretation&) = default;

 private:
  Interpretation here_;
  Interpretation there_;
};

bool eval_classical(const Expression& e, const Interpretation& i);
bool satisfies(const Interpretation& i, const Rule& r);
bool satisfies(const Interpretation& i, const Program& p);

/// Replaces every negation not in the scope of another negation by bottom if
/// its operand is true under `i`, by top otherwise.
Expression reduct(const Expression& e, const Interpretation& i);
Program reduct(const Program& p, const Interpretation& i);

/// Minimal classical models over `alphabet` of a negation-free program.
InterpretationSet minimal_models(const Program& p, const Alphabet& alphabet,
                                 std::size_t cap = kDefaultEnumerationCap);

/// Subsets of `alphabet` that are minimal models of their own reduct.
InterpretationSet answer_sets(const Program& p, const Alphabet& alphabet,
                              std::size_t cap = kDefaultEnumerationCap);
inline InterpretationSet answer_sets(const Program& p, std::size_t cap = kDefaultEnumerationCap) {
  return answer_sets(p, p.alphabet(), cap);
}

bool eval_ht(const Expression& e, const HTInterpretation& f, World w);
/// Truth of body -> head under the implication clause.
bool eval_ht_rule(const Rule& r, const HTInterpretation& f, World w);
bool is_ht_model(const Program& p, const HTInterpretation& f);

/// All HT-models <H, T> with T a subset of `alphabet`.
std::set<HTInterpretation> ht_models(const Program& p, const Alphabet& alphabet,
                                     std::size_t cap = kDefaultEnumerationCap);

/// Same HT-models over `alphabet`; decides strong equivalence.
bool ht_equivalent(const Program& a, const Program& b, const Alphabet& alphabet,
                   std::size_t cap = kDefaultEnumerationCap);

/// I such that <I, I> is an HT-model and no <J, I> with J a proper subset of I is.
InterpretationSet equilibrium_models(const Program& p, const Alphabet& alphabet,
                                     std::size_t cap = kDefaultEnumerationCap);
inline InterpretationSet equilibrium_models(const Program& p, std::size_t cap = kDefaultEnumerationCap) {
  return equilibrium_models(p, p.alphabet(), cap);
}

/// {I & keep | I in sets}.
InterpretationSet project(const InterpretationSet& sets, const Alphabet& keep);

std::string to_string(const Interpretation& i);

}  // namespace nestlp
