// SPDX-License-Identifier: Apache-2.0
//
// Empirical checks of the translation's guarantees against the reference
// semantics, and the seeded program generators that feed them.
#pragma once

#include "nestlp/semantics.hpp"
#include "nestlp/translate.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nestlp {

struct FaithfulnessVerdict {
  InterpretationSet input_answer_sets;
  InterpretationSet projected_translated_sets;
  bool equal = false;
  /// Distinct answer sets of the translation project to distinct sets.
  bool one_to_one = false;
  /// Present exactly when !equal: a set found on one side only.
  std::optional<Interpretation> witness;
};

struct VerifyOptions {
  TranslationMode mode = TranslationMode::structural;
  TranslateOptions translate;
  /// Applies to the translated side, which carries labels and bar atoms.
  std::size_t cap = kMaxEnumerationCap;
};

enum class Family { random, dnf_head, cnf_body };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view s);

struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::size_t max_atoms = 4;
  /// Expression height; atoms and constants have depth 1.
  std::size_t max_depth = 3;
  std::size_t max_rules = 3;
  /// For dnf_head / cnf_body, max_rules is the family parameter n.
  Family family = Family::random;
};

/// Compares AS(p) with the projection of AS(translate(p)) onto p's alphabet.
FaithfulnessVerdict check_faithful(const Program& p, const VerifyOptions& opts = {});

/// Same comparison for p extended by `context`: AS(p u context) against the
/// projection of AS(translate(p) u context).
FaithfulnessVerdict check_faithful_in_context(const Program& p, const Program& context, const VerifyOptions& opts = {});

/// Samples `contexts` programs over p's alphabet (seeds config.seed, config.seed + 1, ...).
std::vector<FaithfulnessVerdict> check_strongly_faithful(const Program& p, std::size_t contexts,
                                                         const GeneratorConfig& config, const VerifyOptions& opts = {});

/// translate(a u b) equals translate(a) u translate(b) as rule sets, with
/// labels compared by the formula they abbreviate.
bool check_modular(const Program& a, const Program& b, const TranslateOptions& opts = {});

/// Answer sets and equilibrium models coincide.
bool check_equilibrium_agreement(const Program& p, std::size_t cap = kDefaultEnumerationCap);

Program generate_program(const GeneratorConfig& config);
/// Random program over the given atoms only (constants if `pool` is empty).
Program generate_program(const GeneratorConfig& config, const std::vector<Atom>& pool);

/// { (a1 & b1) | ... | (an & bn). }  or  { p :- (a1 | b1), ..., (an | bn). }
Program family_program(Family family, std::size_t n);

struct GrowthRow {
  std::size_t n = 0;
  std::size_t structural_size = 0;
  std::size_t structural_rules = 0;
  std::size_t distributive_size = 0;
  std::size_t distributive_rules = 0;
  bool distributive_overflow = false;
};

std::vector<GrowthRow> measure_growth(Family family, std::size_t n_min, std::size_t n_max,
                                      const TranslateOptions& opts = {});

/// "n,structural_size,distributive_size,distributive_overflow" with LF line ends.
std::string growth_csv(const std::vector<GrowthRow>& rows);

}  // namespace nestlp
