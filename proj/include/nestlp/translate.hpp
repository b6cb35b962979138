// SPDX-License-Identifier: Apache-2.0
//
// Polynomial translation of nested programs into disjunctive programs:
//
//   tr1  rewrite heads and bodies into HT negation normal form
//   tr2  abbreviate every subformula by a label atom "l_<k>"
//   tr3  remove double negations by moving them across the arrow
//   tr4  replace negated head atoms by bar atoms "n_<atom>"
//
// plus the exponential distributive translation and a polarity-optimised
// labelling that is known to lose answer sets (kept as a negative control).
#pragma once

#include "nestlp/program.hpp"

#include <cstddef>
#include <map>
#include <string_view>
#include <unordered_map>
#include <utility>

namespace nestlp {

enum class TranslationMode { structural, distributive, polarity };

std::string_view to_string(TranslationMode m) noexcept;
TranslationMode parse_mode(std::string_view s);

/// Partitioned alphabet: user atoms, labels keyed by formula, bar atoms.
/// Labels are numbered in order of first request.
class AtomTable {
 public:
  AtomTable() = default;
  explicit AtomTable(Alphabet user) : user_(std::move(user)) {}

  /// Label for `phi`, created on first use.
  const Atom& label(const Expression& phi);
  const Atom& bar(const Atom& a);

  const Alphabet& user() const noexcept { return user_; }
  std::size_t label_count() const noexcept { return labels_.size(); }
  std::size_t bar_count() const noexcept { return bars_.size(); }

  /// Formula abbreviated by a label atom, if it is one of ours.
  const Expression* formula_of(const Atom& label) const;

 private:
  Alphabet user_;
  std::unordered_map<Expression, Atom> labels_;
  std::map<Atom, Expression> formulas_;
  std::map<Atom, Atom> bars_;
};

struct TranslationReport {
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::size_t rules_in = 0;
  std::size_t rules_out = 0;
  std::size_t labels_created = 0;
  std::size_t bars_created = 0;
  TranslationMode mode = TranslationMode::structural;

  friend bool operator==(const TranslationReport&, const TranslationReport&) = default;
};

struct TranslateOptions {
  /// Use top/bottom directly instead of labelling them.
  bool simplify = false;
  /// Node budget for the distributive translation.
  std::size_t distributive_guard = 1'000'000;
};

Expression normalize_nnf(const Expression& e);

Program tr1(const Program& p);
/// Input must be in HT-NNF.
Program tr2(const Program& p, AtomTable& table, const TranslateOptions& opts = {});
/// Input must be in class gdlp_ht.
Program tr3(const Program& p);
/// Input must be generalized disjunctive.
Program tr4(const Program& p, AtomTable& table);

using Translation = std::pair<Program, TranslationReport>;

/// Intermediate results of the structural pipeline.
struct Stages {
  Program nnf;
  Program labelled;
  Program double_negation_free;
  Program disjunctive;
};

/// Runs tr1..tr4 against `table`; every stage output is checked against its class.
Stages translate_stages(const Program& p, AtomTable& table, const TranslateOptions& opts = {});

Translation translate_structural(const Program& p, AtomTable& table, const TranslateOptions& opts = {});
Translation translate_structural(const Program& p, const TranslateOptions& opts = {});
Translation translate_distributive(const Program& p, const TranslateOptions& opts = {});
Translation translate_polarity_variant(const Program& p, const TranslateOptions& opts = {});
Translation translate(const Program& p, TranslationMode mode, const TranslateOptions& opts = {});

/// Renames every label in `p` to "lf_<hex of its formula>", so programs
/// translated against different tables can be compared rule by rule.
Program relabel_canonically(const Program& p, const AtomTable& table);

}  // namespace nestlp
