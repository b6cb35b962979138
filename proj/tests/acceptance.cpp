// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "nestlp/semantics.hpp"
#include "nestlp/text_io.hpp"
#include "nestlp/translate.hpp"
#include "nestlp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace nestlp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Interpretation I(std::initializer_list<const char*> names) {
  Interpretation out;
  for (const char* n : names) out.emplace(n);
  return out;
}

const char* const example = "p. q. r v (p, q).";

std::vector<Program> corpus(std::size_t n, std::uint64_t first_seed = 1) {
  std::vector<Program> out;
  for (std::uint64_t k = 0; k < n; ++k) {
    GeneratorConfig g;  // 4 atoms, 3 rules, depth 3
    g.seed = first_seed + k;
    out.push_back(generate_program(g));
  }
  return out;
}

InterpretationSet projected(const Program& translated, const Alphabet& keep) {
  Alphabet all = translated.alphabet();
  all.insert(keep.begin(), keep.end());
  return project(answer_sets(translated, all, kMaxEnumerationCap), keep);
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome c1() {
  auto t0 = Clock::now();
  auto input = parse(example);
  auto sets = projected(translate_structural(input).first, input.alphabet());
  double dt = seconds_since(t0);
  bool ok = sets == InterpretationSet{I({"p", "q"})} && dt < 1.0;
  std::ostringstream os;
  os << "projected answer sets";
  for (const auto& s : sets) os << ' ' << to_string(s);
  os << " in " << dt << " s";
  return {ok, os.str()};
}

Outcome c2() {
  auto input = parse(example);
  auto sets = projected(translate_polarity_variant(input).first, input.alphabet());
  std::ostringstream os;
  os << "projected answer sets";
  for (const auto& s : sets) os << ' ' << to_string(s);
  return {sets == InterpretationSet{I({"p", "q"}), I({"p", "q", "r"})}, os.str()};
}

Outcome c3() {
  auto t0 = Clock::now();
  std::size_t bad = 0;
  auto programs = corpus(200);
  for (const auto& p : programs)
    if (!check_equilibrium_agreement(p)) ++bad;
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << programs.size() << " programs, " << bad << " mismatches, " << dt << " s";
  return {bad == 0 && dt < 60.0, os.str()};
}

Outcome c4() {
  std::size_t bad = 0, not_injective = 0;
  auto programs = corpus(200);
  for (const auto& p : programs) {
    auto v = check_faithful(p);
    if (!v.equal) ++bad;
    if (!v.one_to_one) ++not_injective;
  }
  std::ostringstream os;
  os << programs.size() << " programs, " << bad << " unequal, " << not_injective << " not one-to-one";
  return {bad == 0 && not_injective == 0, os.str()};
}

Outcome c5() {
  std::size_t total = 0, bad = 0;
  GeneratorConfig contexts;
  contexts.seed = 100'000;
  for (const auto& p : corpus(50)) {
    for (const auto& v : check_strongly_faithful(p, 25, contexts)) {
      ++total;
      if (!v.equal) ++bad;
    }
    contexts.seed += 25;
  }
  std::ostringstream os;
  os << total << " verdicts, " << bad << " unequal";
  return {bad == 0 && total == 50 * 25, os.str()};
}

Outcome c6() {
  auto left = corpus(100, 1);
  auto right = corpus(100, 500);
  std::size_t bad = 0;
  for (std::size_t k = 0; k < left.size(); ++k)
    if (!check_modular(left[k], right[k])) ++bad;
  std::ostringstream os;
  os << left.size() << " pairs, " << bad << " not modular";
  return {bad == 0, os.str()};
}

Outcome c7() {
  auto rows = measure_growth(Family::dnf_head, 1, 10);
  bool ok = rows.size() == 10;
  for (const auto& r : rows) ok = ok && !r.distributive_overflow && r.distributive_rules == (std::size_t{1} << r.n);

  long long c1 = static_cast<long long>(rows[1].structural_size) - static_cast<long long>(rows[0].structural_size);
  long long c0 = static_cast<long long>(rows[0].structural_size) - c1;
  long long worst = 0;
  for (const auto& r : rows)
    worst = std::max(worst, std::llabs(static_cast<long long>(r.structural_size) - (c1 * static_cast<long long>(r.n) + c0)));
  ok = ok && worst == 0;

  // the CSV must carry the same numbers
  std::istringstream csv(growth_csv(rows));
  std::string line;
  std::getline(csv, line);
  ok = ok && line == "n,structural_size,distributive_size,distributive_overflow";
  for (const auto& r : rows) {
    std::getline(csv, line);
    ok = ok && line == std::to_string(r.n) + "," + std::to_string(r.structural_size) + "," +
                           std::to_string(r.distributive_size) + ",0";
  }
  ok = ok && !std::getline(csv, line);

  std::ostringstream os;
  os << "structural size = " << c1 << "n " << (c0 < 0 ? "- " : "+ ") << std::llabs(c0) << ", max residual " << worst << "; distributive rules at n=10: "
     << rows.back().distributive_rules;
  return {ok, os.str()};
}

std::vector<Expression> all_expressions(std::size_t depth) {
  std::vector<Expression> leaves{Expression::top(), Expression::bottom(), Expression::var("p"), Expression::var("q"),
                                 Expression::var("r")};
  if (depth <= 1) return leaves;
  auto smaller = all_expressions(depth - 1);
  auto out = leaves;
  for (const auto& e : smaller) out.push_back(Expression::negate(e));
  for (const auto& a : smaller)
    for (const auto& b : smaller) {
      out.push_back(Expression::conj(a, b));
      out.push_back(Expression::disj(a, b));
    }
  return out;
}

Outcome c8() {
  HTInterpretation f(I({}), I({"p"}));
  bool anchors = !eval_ht(parse_expression("p | not p"), f, World::here) &&
                 !eval_ht_rule(parse("p :- not not p.").rules()[0], f, World::here);

  std::vector<HTInterpretation> worlds;
  std::vector<Interpretation> subsets;
  for (unsigned m = 0; m < 8; ++m) {
    Interpretation s;
    if (m & 1) s.emplace("p");
    if (m & 2) s.emplace("q");
    if (m & 4) s.emplace("r");
    subsets.push_back(s);
  }
  for (const auto& t : subsets)
    for (const auto& h : subsets)
      if (std::includes(t.begin(), t.end(), h.begin(), h.end())) worlds.emplace_back(h, t);

  auto exprs = all_expressions(3);
  std::size_t violations = 0;
  for (const auto& e : exprs)
    for (const auto& w : worlds)
      if (eval_ht(e, w, World::here) && !eval_ht(e, w, World::there)) ++violations;

  std::ostringstream os;
  os << "anchors " << (anchors ? "ok" : "wrong") << "; " << exprs.size() << " expressions x " << worlds.size()
     << " HT-interpretations, " << violations << " heredity violations";
  return {anchors && violations == 0 && exprs.size() == 7265 && worlds.size() == 27, os.str()};
}

Outcome c9() {
  std::size_t bad = 0;
  auto programs = corpus(200);
  for (const auto& p : programs) {
    AtomTable table;
    auto s = translate_stages(p, table);
    if (!in_class(s.nnf, ProgramClass::nnf) || !in_class(s.labelled, ProgramClass::gdlp_ht) ||
        !in_class(s.double_negation_free, ProgramClass::generalized_disjunctive) ||
        !in_class(s.disjunctive, ProgramClass::disjunctive))
      ++bad;
  }
  std::ostringstream os;
  os << programs.size() << " programs, " << bad << " mistyped stages";
  return {bad == 0, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"end-to-end example", c1},       {"polarity negative control", c2}, {"answer sets = equilibrium models", c3},
      {"faithfulness", c4},             {"strong faithfulness", c5},       {"modularity", c6},
      {"blow-up separation", c7},       {"HT anchors and heredity", c8},   {"stage typing", c9},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << k + 1 << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << ": "
              << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << criteria.size() - failed << '/' << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
