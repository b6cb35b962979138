// SPDX-License-Identifier: Apache-2.0
#include "nestlp/errors.hpp"
#include "nestlp/text_io.hpp"
#include "nestlp/verify.hpp"

#include "oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace nestlp;

namespace {

Interpretation I(std::initializer_list<const char*> names) {
  Interpretation out;
  for (const char* n : names) out.emplace(n);
  return out;
}

const char* const example = "p. q. r v (p, q).";

}  // namespace

TEST_CASE("faithfulness on the closing example", "[faithful]") {
  auto v = check_faithful(parse(example));
  CHECK(v.equal);
  CHECK(v.one_to_one);
  CHECK_FALSE(v.witness);
  CHECK(v.input_answer_sets == InterpretationSet{I({"p", "q"})});
  CHECK(v.projected_translated_sets == InterpretationSet{I({"p", "q"})});

  VerifyOptions polarity;
  polarity.mode = TranslationMode::polarity;
  auto bad = check_faithful(parse(example), polarity);
  CHECK_FALSE(bad.equal);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == I({"p", "q", "r"}));
  CHECK(bad.projected_translated_sets == InterpretationSet{I({"p", "q"}), I({"p", "q", "r"})});

  auto empty = check_faithful(Program{});
  CHECK(empty.equal);
  CHECK(empty.input_answer_sets == InterpretationSet{I({})});
}

TEST_CASE("verdict invariant: equal iff no witness", "[faithful][property]") {
  VerifyOptions polarity;
  polarity.mode = TranslationMode::polarity;
  std::size_t mismatches = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    GeneratorConfig g;
    g.seed = seed;
    auto v = check_faithful(generate_program(g), polarity);
    CHECK(v.equal == !v.witness.has_value());
    if (v.witness) {
      ++mismatches;
      CHECK(v.input_answer_sets.contains(*v.witness) != v.projected_translated_sets.contains(*v.witness));
    }
  }
  CHECK(mismatches > 0);
}

TEST_CASE("faithfulness on a random corpus", "[faithful][oracle]") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GeneratorConfig g;
    g.seed = seed;
    auto p = generate_program(g);
    INFO(print_nested(p));
    auto v = check_faithful(p);
    CHECK(v.equal);
    CHECK(v.one_to_one);
    CHECK(oracle::to_names(v.input_answer_sets) == oracle::answer_sets(p, p.alphabet()));
  }
}

TEST_CASE("faithfulness on the families", "[faithful]") {
  for (auto f : {Family::dnf_head, Family::cnf_body})
    for (std::size_t n = 1; n <= 3; ++n) {
      auto p = family_program(f, n);
      CHECK(check_faithful(p).equal);
      VerifyOptions d;
      d.mode = TranslationMode::distributive;
      CHECK(check_faithful(p, d).equal);
    }
}

TEST_CASE("strong faithfulness", "[strong]") {
  GeneratorConfig g;
  auto verdicts = check_strongly_faithful(parse("p :- not q."), 10, g);
  CHECK(verdicts.size() == 10);
  for (const auto& v : verdicts) CHECK(v.equal);

  CHECK(check_strongly_faithful(parse(example), 0, g).empty());

  auto v = check_faithful_in_context(parse("r v (p, q)."), parse("p. q."));
  CHECK(v.equal);
  CHECK(v.input_answer_sets == InterpretationSet{I({"p", "q"})});
  CHECK(v.projected_translated_sets == InterpretationSet{I({"p", "q"})});

  // the context can expose what the plain check misses
  VerifyOptions polarity;
  polarity.mode = TranslationMode::polarity;
  CHECK(check_faithful(parse("r v (p, q)."), polarity).equal);
  CHECK_FALSE(check_faithful_in_context(parse("r v (p, q)."), parse("p. q."), polarity).equal);
}

TEST_CASE("sampled contexts only use the program's atoms", "[strong]") {
  auto p = parse("p :- not q.");
  std::vector<Atom> pool(p.alphabet().begin(), p.alphabet().end());
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GeneratorConfig g;
    g.seed = seed;
    auto context = generate_program(g, pool);
    for (const auto& a : context.alphabet()) CHECK(p.alphabet().contains(a));
  }
}

TEST_CASE("modularity", "[modular]") {
  auto a = parse("p :- not q.");
  auto b = parse("q :- not p.");
  CHECK(check_modular(a, b));
  CHECK(check_modular(a, Program{}));
  CHECK(check_modular(a, a));
  CHECK(check_modular(parse(example), parse("r :- not (p, q).")));

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GeneratorConfig g;
    g.seed = seed;
    auto x = generate_program(g);
    g.seed = seed + 10'000;
    CHECK(check_modular(x, generate_program(g)));
  }
}

TEST_CASE("equilibrium agreement", "[props]") {
  CHECK(check_equilibrium_agreement(parse(example)));
  CHECK(check_equilibrium_agreement(Program{}));
}

TEST_CASE("generator", "[generator]") {
  GeneratorConfig g;
  g.seed = 1;
  g.max_atoms = 3;
  g.max_depth = 2;
  g.max_rules = 2;
  CHECK(generate_program(g) == generate_program(g));

  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    g.seed = seed;
    g.max_depth = 1 + seed % 4;
    auto p = generate_program(g);
    CHECK(p.size() >= 1);
    CHECK(p.size() <= g.max_rules);
    CHECK(included_in(classify(p), ProgramClass::nested));
    for (const auto& a : p.alphabet()) CHECK((a.name() == "p" || a.name() == "q" || a.name() == "r"));
    for (const auto& r : p.rules()) {
      CHECK(r.head.depth() <= g.max_depth);
      CHECK(r.body.depth() <= g.max_depth);
    }
  }

  g.max_rules = 0;
  CHECK(generate_program(g).empty());

  GeneratorConfig fam;
  fam.family = Family::dnf_head;
  fam.max_rules = 4;
  CHECK(generate_program(fam) == family_program(Family::dnf_head, 4));
  CHECK(family_program(Family::dnf_head, 2) == parse("(a1, b1) | (a2, b2)."));
  CHECK(family_program(Family::cnf_body, 2) == parse("p :- (a1 | b1), (a2 | b2)."));
  CHECK_THROWS_AS(family_program(Family::random, 2), std::invalid_argument);
  CHECK(parse_family("cnf_body") == Family::cnf_body);
  CHECK_THROWS_AS(parse_family("dnf"), std::invalid_argument);
}

TEST_CASE("growth", "[growth]") {
  auto rows = measure_growth(Family::dnf_head, 1, 10);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].distributive_rules == 2);  // a1 and b1 as two facts
  CHECK(rows[1].distributive_rules == 4);
  for (const auto& r : rows) {
    CHECK_FALSE(r.distributive_overflow);
    CHECK(r.distributive_rules == (std::size_t{1} << r.n));
  }
  auto step = rows[1].structural_size - rows[0].structural_size;
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].structural_size - rows[k - 1].structural_size == step);

  auto body = measure_growth(Family::cnf_body, 1, 6);
  for (const auto& r : body) CHECK(r.distributive_rules == (std::size_t{1} << r.n));

  TranslateOptions tight;
  tight.distributive_guard = 200;
  auto over = measure_growth(Family::dnf_head, 1, 8, tight);
  CHECK_FALSE(over.front().distributive_overflow);
  CHECK(over.back().distributive_overflow);

  auto csv = growth_csv(over);
  CHECK(csv.starts_with("n,structural_size,distributive_size,distributive_overflow\n"));
  CHECK(csv.find("1," + std::to_string(over[0].structural_size) + "," + std::to_string(over[0].distributive_size) +
                 ",0\n") != std::string::npos);
  CHECK(csv.ends_with("8," + std::to_string(over.back().structural_size) + ",,1\n"));
  CHECK_THROWS_AS(measure_growth(Family::random, 1, 2), std::invalid_argument);
}
