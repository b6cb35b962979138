// SPDX-License-Identifier: Apache-2.0
#include "nestlp/errors.hpp"
#include "nestlp/semantics.hpp"
#include "nestlp/text_io.hpp"
#include "nestlp/translate.hpp"
#include "nestlp/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nestlp;

namespace {

py::frozenset to_python(const Interpretation& i) {
  py::set out;
  for (const auto& a : i) out.add(py::str(a.name()));
  return py::frozenset(out);
}

py::list to_python(const InterpretationSet& sets) {
  py::list out;
  for (const auto& s : sets) out.append(to_python(s));
  return out;
}

Alphabet to_alphabet(const Program& p, const std::optional<std::vector<std::string>>& names) {
  Alphabet out = p.alphabet();
  if (names)
    for (const auto& n : *names) out.emplace(n);
  return out;
}

py::dict to_python(const TranslationReport& r) {
  py::dict d;
  d["mode"] = std::string(to_string(r.mode));
  d["input_size"] = r.input_size;
  d["output_size"] = r.output_size;
  d["rules_in"] = r.rules_in;
  d["rules_out"] = r.rules_out;
  d["labels_created"] = r.labels_created;
  d["bars_created"] = r.bars_created;
  return d;
}

py::dict to_python(const FaithfulnessVerdict& v) {
  py::dict d;
  d["equal"] = v.equal;
  d["one_to_one"] = v.one_to_one;
  d["input_answer_sets"] = to_python(v.input_answer_sets);
  d["projected_answer_sets"] = to_python(v.projected_translated_sets);
  d["witness"] = v.witness ? py::object(to_python(*v.witness)) : py::none();
  return d;
}

VerifyOptions verify_options(const std::string& mode, bool simplify, std::size_t cap) {
  VerifyOptions o;
  o.mode = parse_mode(mode);
  o.translate.simplify = simplify;
  o.cap = cap;
  return o;
}

}  // namespace

PYBIND11_MODULE(_nestlp, m) {
  m.doc() = "Nested logic programs to disjunctive programs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SyntaxError>(m, "SyntaxError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

  py::class_<Program>(m, "Program")
      .def("__len__", &Program::size)
      .def("__str__", [](const Program& p) { return print_nested(p); })
      .def("__repr__", [](const Program& p) { return "<Program with " + std::to_string(p.size()) + " rules>"; })
      .def("__eq__", [](const Program& a, const Program& b) { return a == b; })
      .def_property_readonly("alphabet",
                             [](const Program& p) {
                               std::vector<std::string> out;
                               for (const auto& a : p.alphabet()) out.push_back(a.name());
                               return out;
                             })
      .def("classify", [](const Program& p) { return std::string(to_string(classify(p))); })
      .def("size", [](const Program& p) { return program_size(p); })
      .def("to_dlv", [](const Program& p) { return print_dlv(p); });

  m.def(
      "parse", [](const std::string& text, bool allow_reserved) { return parse(text, {.allow_reserved = allow_reserved}); },
      py::arg("text"), py::arg("allow_reserved") = false);

  m.def(
      "answer_sets",
      [](const Program& p, std::optional<std::vector<std::string>> alphabet, std::size_t cap) {
        return to_python(answer_sets(p, to_alphabet(p, alphabet), cap));
      },
      py::arg("program"), py::arg("alphabet") = py::none(), py::arg("cap") = kDefaultEnumerationCap);

  m.def(
      "equilibrium_models",
      [](const Program& p, std::optional<std::vector<std::string>> alphabet, std::size_t cap) {
        return to_python(equilibrium_models(p, to_alphabet(p, alphabet), cap));
      },
      py::arg("program"), py::arg("alphabet") = py::none(), py::arg("cap") = kDefaultEnumerationCap);

  m.def(
      "translate",
      [](const Program& p, const std::string& mode, bool simplify) {
        TranslateOptions o;
        o.simplify = simplify;
        auto [out, report] = translate(p, parse_mode(mode), o);
        return py::make_tuple(out, to_python(report));
      },
      py::arg("program"), py::arg("mode") = "structural", py::arg("simplify") = false);

  m.def(
      "check_faithful",
      [](const Program& p, const std::string& mode, bool simplify, std::size_t cap) {
        return to_python(check_faithful(p, verify_options(mode, simplify, cap)));
      },
      py::arg("program"), py::arg("mode") = "structural", py::arg("simplify") = false,
      py::arg("cap") = kMaxEnumerationCap);

  m.def(
      "check_faithful_in_context",
      [](const Program& p, const Program& context, const std::string& mode, std::size_t cap) {
        return to_python(check_faithful_in_context(p, context, verify_options(mode, false, cap)));
      },
      py::arg("program"), py::arg("context"), py::arg("mode") = "structural", py::arg("cap") = kMaxEnumerationCap);

  m.def(
      "check_modular", [](const Program& a, const Program& b) { return check_modular(a, b); }, py::arg("a"),
      py::arg("b"));

  m.def(
      "generate_program",
      [](std::uint64_t seed, std::size_t atoms, std::size_t rules, std::size_t depth, const std::string& family) {
        GeneratorConfig g;
        g.seed = seed;
        g.max_atoms = atoms;
        g.max_rules = rules;
        g.max_depth = depth;
        g.family = parse_family(family);
        return generate_program(g);
      },
      py::arg("seed") = 1, py::arg("atoms") = 4, py::arg("rules") = 3, py::arg("depth") = 3,
      py::arg("family") = "random");

  m.def(
      "measure_growth",
      [](const std::string& family, std::size_t n_min, std::size_t n_max) {
        py::list out;
        for (const auto& r : measure_growth(parse_family(family), n_min, n_max)) {
          py::dict d;
          d["n"] = r.n;
          d["structural_size"] = r.structural_size;
          d["structural_rules"] = r.structural_rules;
          d["distributive_size"] = r.distributive_overflow ? py::object(py::none()) : py::int_(r.distributive_size);
          d["distributive_rules"] = r.distributive_overflow ? py::object(py::none()) : py::int_(r.distributive_rules);
          d["distributive_overflow"] = r.distributive_overflow;
          out.append(d);
        }
        return out;
      },
      py::arg("family"), py::arg("n_min"), py::arg("n_max"));

  m.def(
      "growth_csv",
      [](const std::string& family, std::size_t n_max) {
        return growth_csv(measure_growth(parse_family(family), 1, n_max));
      },
      py::arg("family"), py::arg("n_max"));
}
