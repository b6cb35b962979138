// SPDX-License-Identifier: Apache-2.0
#include "nestlp/cli.hpp"

#include "nestlp/errors.hpp"
#include "nestlp/text_io.hpp"
#include "nestlp/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace nestlp {

namespace {

struct Options {
  std::string input;
  std::string second_input;
  std::string output;
  std::string mode = "structural";
  bool simplify = false;
  std::vector<std::string> alphabet;
  std::vector<std::string> projection;
  std::size_t cap = 0;
  std::string check_kind;
  std::size_t contexts = 25;
  std::uint64_t seed = 1;
  std::string family = "random";
  std::size_t n_max = 10;
  std::size_t atoms = 4;
  std::size_t rules = 3;
  std::size_t depth = 3;
};

SourceProgram read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
    return {buf.str(), "<stdin>"};
  }
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  buf << file.rdbuf();
  return {buf.str(), path};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write '" + path + "'");
  file << text;
}

Alphabet to_alphabet(const std::vector<std::string>& names) {
  Alphabet out;
  for (const auto& n : names) out.emplace(n);
  return out;
}

void print_sets(std::ostream& out, const InterpretationSet& sets) {
  if (sets.empty()) {
    out << "0 answer sets\n";
    return;
  }
  for (const auto& s : sets) out << to_string(s) << '\n';
}

void print_verdict(std::ostream& out, const FaithfulnessVerdict& v) {
  out << "input answer sets:";
  for (const auto& s : v.input_answer_sets) out << ' ' << to_string(s);
  out << "\nprojected answer sets:";
  for (const auto& s : v.projected_translated_sets) out << ' ' << to_string(s);
  out << '\n';
  if (v.equal) {
    out << "result: equal" << (v.one_to_one ? "" : " (projection not one-to-one)") << '\n';
  } else {
    out << "result: mismatch\nwitness: " << to_string(*v.witness) << '\n';
  }
}

int do_translate(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Program p = parse(read_source(o.input, in));
  TranslateOptions topts;
  topts.simplify = o.simplify;
  auto [result, report] = translate(p, parse_mode(o.mode), topts);
  write_output(o.output, print_dlv(result), out);
  err << "mode=" << to_string(report.mode) << '\n'
      << "input_size=" << report.input_size << '\n'
      << "output_size=" << report.output_size << '\n'
      << "rules_in=" << report.rules_in << '\n'
      << "rules_out=" << report.rules_out << '\n'
      << "labels_created=" << report.labels_created << '\n'
      << "bars_created=" << report.bars_created << '\n';
  return exit_ok;
}

int do_solve(const Options& o, std::istream& in, std::ostream& out) {
  Program p = parse(read_source(o.input, in), {.allow_reserved = true});
  p.extend_alphabet(to_alphabet(o.alphabet));
  auto sets = answer_sets(p, p.alphabet(), o.cap ? o.cap : kDefaultEnumerationCap);
  if (!o.projection.empty()) sets = project(sets, to_alphabet(o.projection));
  print_sets(out, sets);
  return exit_ok;
}

int do_check(const Options& o, std::istream& in, std::ostream& out) {
  Program p = parse(read_source(o.input, in));
  VerifyOptions vopts;
  vopts.mode = parse_mode(o.mode);
  vopts.translate.simplify = o.simplify;
  if (o.cap) vopts.cap = o.cap;

  if (o.check_kind == "faithful") {
    auto v = check_faithful(p, vopts);
    print_verdict(out, v);
    return v.equal ? exit_ok : exit_mismatch;
  }
  if (o.check_kind == "strong") {
    std::vector<FaithfulnessVerdict> verdicts;
    if (!o.second_input.empty()) {
      std::istringstream none;
      verdicts.push_back(check_faithful_in_context(p, parse(read_source(o.second_input, none)), vopts));
    } else {
      GeneratorConfig g;
      g.seed = o.seed;
      g.max_depth = o.depth;
      g.max_rules = o.rules;
      verdicts = check_strongly_faithful(p, o.contexts, g, vopts);
    }
    std::size_t bad = 0;
    for (std::size_t k = 0; k < verdicts.size(); ++k) {
      const auto& v = verdicts[k];
      out << "context " << k << ": ";
      if (v.equal) {
        out << "equal\n";
      } else {
        out << "mismatch, witness " << to_string(*v.witness) << '\n';
        ++bad;
      }
    }
    out << verdicts.size() - bad << '/' << verdicts.size() << " contexts equal\n";
    return bad ? exit_mismatch : exit_ok;
  }
  if (o.check_kind == "modular") {
    if (o.second_input.empty()) throw std::invalid_argument("check modular needs a second program (-j FILE)");
    std::istringstream none;
    Program q = parse(read_source(o.second_input, none));
    bool ok = check_modular(p, q, vopts.translate);
    out << "modular: " << (ok ? "yes" : "no") << '\n';
    return ok ? exit_ok : exit_mismatch;
  }
  // props
  std::size_t cap = o.cap ? o.cap : kDefaultEnumerationCap;
  auto as = answer_sets(p, p.alphabet(), cap);
  auto eq = equilibrium_models(p, p.alphabet(), cap);
  out << "answer sets:";
  for (const auto& s : as) out << ' ' << to_string(s);
  out << "\nequilibrium models:";
  for (const auto& s : eq) out << ' ' << to_string(s);
  out << "\nresult: " << (as == eq ? "equal" : "mismatch") << '\n';
  return as == eq ? exit_ok : exit_mismatch;
}

int do_stats(const Options& o, std::ostream& out) {
  out << growth_csv(measure_growth(parse_family(o.family), 1, o.n_max));
  return exit_ok;
}

int do_gen(const Options& o, std::ostream& out) {
  GeneratorConfig g;
  g.seed = o.seed;
  g.max_atoms = o.atoms;
  g.max_rules = o.rules;
  g.max_depth = o.depth;
  g.family = parse_family(o.family);
  out << print_nested(generate_program(g));
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Translate nested logic programs into disjunctive programs", "nestlp"};
  app.require_subcommand(1);

  auto* translate_cmd = app.add_subcommand("translate", "Translate a nested program into DLV syntax");
  translate_cmd->add_option("--mode", o.mode, "structural, distributive or polarity")
      ->check(CLI::IsMember({"structural", "distributive", "polarity"}));
  translate_cmd->add_flag("--simplify", o.simplify, "Use true/false directly instead of labelling them");
  translate_cmd->add_option("-i,--input", o.input, "Input file (default stdin)");
  translate_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* solve_cmd = app.add_subcommand("solve", "Print the answer sets of a program");
  solve_cmd->add_option("--alphabet", o.alphabet, "Extra atoms of the alphabet")->delimiter(',');
  solve_cmd->add_option("--project", o.projection, "Print only these atoms")->delimiter(',');
  solve_cmd->add_option("--cap", o.cap, "Enumeration cap (number of atoms)");
  solve_cmd->add_option("-i,--input", o.input, "Input file (default stdin)");

  auto* check_cmd = app.add_subcommand("check", "Check a translation against the reference semantics");
  check_cmd->add_option("kind", o.check_kind, "faithful, strong, modular or props")
      ->required()
      ->check(CLI::IsMember({"faithful", "strong", "modular", "props"}));
  check_cmd->add_option("--mode", o.mode, "structural, distributive or polarity")
      ->check(CLI::IsMember({"structural", "distributive", "polarity"}));
  check_cmd->add_flag("--simplify", o.simplify, "Use true/false directly instead of labelling them");
  check_cmd->add_option("--contexts", o.contexts, "Sampled contexts for 'strong'");
  check_cmd->add_option("--seed", o.seed, "First context seed for 'strong'");
  check_cmd->add_option("--depth", o.depth, "Context expression depth for 'strong'");
  check_cmd->add_option("--rules", o.rules, "Context rule count bound for 'strong'");
  check_cmd->add_option("--cap", o.cap, "Enumeration cap (number of atoms)");
  check_cmd->add_option("-i,--input", o.input, "Input file (default stdin)");
  check_cmd->add_option("-j,--second", o.second_input, "Second program (modular) or fixed context (strong)");

  auto* stats_cmd = app.add_subcommand("stats", "Size growth of structural vs distributive translation (CSV)");
  stats_cmd->add_option("--family", o.family, "dnf_head or cnf_body")
      ->required()
      ->check(CLI::IsMember({"dnf_head", "cnf_body"}));
  stats_cmd->add_option("--n-max", o.n_max, "Largest family parameter")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Print a generated program");
  gen_cmd->add_option("--seed", o.seed, "Generator seed");
  gen_cmd->add_option("--atoms", o.atoms, "Number of atoms");
  gen_cmd->add_option("--rules", o.rules, "Maximum number of rules (family parameter n for families)");
  gen_cmd->add_option("--depth", o.depth, "Maximum expression depth");
  gen_cmd->add_option("--family", o.family, "random, dnf_head or cnf_body")
      ->check(CLI::IsMember({"random", "dnf_head", "cnf_body"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "nestlp: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (translate_cmd->parsed()) return do_translate(o, in, out, err);
    if (solve_cmd->parsed()) return do_solve(o, in, out);
    if (check_cmd->parsed()) return do_check(o, in, out);
    if (stats_cmd->parsed()) return do_stats(o, out);
    if (gen_cmd->parsed()) return do_gen(o, out);
  } catch (const ResourceError& e) {
    err << "nestlp: " << e.what() << '\n';
    return exit_resource;
  } catch (const std::exception& e) {
    err << "nestlp: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace nestlp
