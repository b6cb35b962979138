// SPDX-License-Identifier: Apache-2.0
#include "nestlp/verify.hpp"

#include "nestlp/errors.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace nestlp {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::random: return "random";
    case Family::dnf_head: return "dnf_head";
    case Family::cnf_body: return "cnf_body";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "random") return Family::random;
  if (s == "dnf_head") return Family::dnf_head;
  if (s == "cnf_body") return Family::cnf_body;
  throw std::invalid_argument("unknown program family '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Faithfulness
// ---------------------------------------------------------------------------

namespace {

FaithfulnessVerdict compare(InterpretationSet source, const InterpretationSet& translated, const Alphabet& keep) {
  FaithfulnessVerdict v;
  v.input_answer_sets = std::move(source);
  v.projected_translated_sets = project(translated, keep);
  v.equal = v.input_answer_sets == v.projected_translated_sets;
  v.one_to_one = v.projected_translated_sets.size() == translated.size();
  if (!v.equal) {
    for (const auto& i : v.input_answer_sets)
      if (!v.projected_translated_sets.contains(i)) {
        v.witness = i;
        break;
      }
    if (!v.witness)
      for (const auto& i : v.projected_translated_sets)
        if (!v.input_answer_sets.contains(i)) {
          v.witness = i;
          break;
        }
  }
  return v;
}

}  // namespace

FaithfulnessVerdict check_faithful(const Program& p, const VerifyOptions& opts) {
  return check_faithful_in_context(p, Program{}, opts);
}

FaithfulnessVerdict check_faithful_in_context(const Program& p, const Program& context, const VerifyOptions& opts) {
  Alphabet source_alphabet = p.alphabet();
  source_alphabet.insert(context.alphabet().begin(), context.alphabet().end());

  Program source = p;
  source.append(context);
  auto source_sets = answer_sets(source, source_alphabet, opts.cap);

  Program target = translate(p, opts.mode, opts.translate).first;
  target.append(context);
  Alphabet target_alphabet = target.alphabet();
  target_alphabet.insert(source_alphabet.begin(), source_alphabet.end());
  auto target_sets = answer_sets(target, target_alphabet, opts.cap);

  return compare(std::move(source_sets), target_sets, source_alphabet);
}

std::vector<FaithfulnessVerdict> check_strongly_faithful(const Program& p, std::size_t contexts,
                                                         const GeneratorConfig& config, const VerifyOptions& opts) {
  std::vector<Atom> pool(p.alphabet().begin(), p.alphabet().end());
  std::vector<FaithfulnessVerdict> out;
  out.reserve(contexts);
  for (std::size_t k = 0; k < contexts; ++k) {
    GeneratorConfig c = config;
    c.seed = config.seed + k;
    c.family = Family::random;
    out.push_back(check_faithful_in_context(p, generate_program(c, pool), opts));
  }
  return out;
}

bool check_modular(const Program& a, const Program& b, const TranslateOptions& opts) {
  AtomTable whole_table;
  auto whole = translate_structural(unite(a, b), whole_table, opts).first;
  AtomTable ta, tb;
  auto left = translate_structural(a, ta, opts).first;
  auto right = translate_structural(b, tb, opts).first;

  auto lhs = relabel_canonically(whole, whole_table).rule_set();
  auto rhs = relabel_canonically(left, ta).rule_set();
  auto r = relabel_canonically(right, tb).rule_set();
  rhs.insert(r.begin(), r.end());
  return lhs == rhs;
}

bool check_equilibrium_agreement(const Program& p, std::size_t cap) {
  return answer_sets(p, p.alphabet(), cap) == equilibrium_models(p, p.alphabet(), cap);
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

namespace {

// mt19937_64 is fully specified; plain modulo keeps streams identical across
// standard libraries, unlike the distribution classes.
class Dice {
 public:
  explicit Dice(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  bool percent(unsigned p) { return below(100) < p; }

 private:
  std::mt19937_64 rng_;
};

std::string pool_name(std::size_t i) {
  static const char* letters[] = {"p", "q", "r", "s", "t", "u", "w", "x", "y", "z"};
  if (i < std::size(letters)) return letters[i];
  return "a" + std::to_string(i);
}

Expression random_expression(Dice& dice, const std::vector<Atom>& pool, std::size_t depth) {
  if (depth <= 1 || dice.percent(30)) {
    if (!pool.empty() && dice.percent(92)) return Expression::var(pool[dice.below(pool.size())]);
    return dice.percent(50) ? Expression::top() : Expression::bottom();
  }
  auto roll = dice.below(100);
  if (roll < 30) return Expression::negate(random_expression(dice, pool, depth - 1));
  auto lhs = random_expression(dice, pool, depth - 1);
  auto rhs = random_expression(dice, pool, depth - 1);
  return roll < 65 ? Expression::conj(lhs, rhs) : Expression::disj(lhs, rhs);
}

}  // namespace

Program family_program(Family family, std::size_t n) {
  if (family == Family::random) throw std::invalid_argument("family_program: random is not a fixed family");
  if (n == 0) return {};
  std::vector<Expression> parts;
  for (std::size_t i = 1; i <= n; ++i) {
    auto a = Expression::var("a" + std::to_string(i));
    auto b = Expression::var("b" + std::to_string(i));
    parts.push_back(family == Family::dnf_head ? Expression::conj(a, b) : Expression::disj(a, b));
  }
  if (family == Family::dnf_head) return Program({Rule::fact(make_disjunction(parts))});
  return Program({{Expression::var("p"), make_conjunction(parts)}});
}

Program generate_program(const GeneratorConfig& config, const std::vector<Atom>& pool) {
  if (config.family != Family::random) return family_program(config.family, config.max_rules);
  Dice dice(config.seed);
  Program out;
  if (config.max_rules == 0) return out;
  std::size_t rules = 1 + dice.below(config.max_rules);
  for (std::size_t i = 0; i < rules; ++i) {
    Expression head = dice.percent(15) ? Expression::bottom() : random_expression(dice, pool, config.max_depth);
    Expression body = dice.percent(25) ? Expression::top() : random_expression(dice, pool, config.max_depth);
    out.add({std::move(head), std::move(body)});
  }
  return out;
}

Program generate_program(const GeneratorConfig& config) {
  std::vector<Atom> pool;
  for (std::size_t i = 0; i < config.max_atoms; ++i) pool.emplace_back(pool_name(i));
  return generate_program(config, pool);
}

// ---------------------------------------------------------------------------
// Growth measurements
// ---------------------------------------------------------------------------

std::vector<GrowthRow> measure_growth(Family family, std::size_t n_min, std::size_t n_max,
                                      const TranslateOptions& opts) {
  if (family == Family::random) throw std::invalid_argument("measure_growth needs dnf_head or cnf_body");
  std::vector<GrowthRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    Program p = family_program(family, n);
    GrowthRow row;
    row.n = n;
    auto structural = translate_structural(p, opts).first;
    row.structural_size = program_size(structural);
    row.structural_rules = structural.size();
    try {
      auto distributive = translate_distributive(p, opts).first;
      row.distributive_size = program_size(distributive);
      row.distributive_rules = distributive.size();
    } catch (const ResourceError&) {
      row.distributive_overflow = true;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream os;
  os << "n,structural_size,distributive_size,distributive_overflow\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.structural_size << ',';
    if (!r.distributive_overflow) os << r.distributive_size;
    os << ',' << (r.distributive_overflow ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace nestlp
