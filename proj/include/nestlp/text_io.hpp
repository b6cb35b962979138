// SPDX-License-Identifier: Apache-2.0
//
// Surface syntax for nested programs:
//
//   program  := { rule } ;
//   rule     := [ expr ] [ ":-" expr ] "." ;
//   expr     := conj { ("|" | ";" | "v") conj } ;
//   conj     := neg { ("," | "&") neg } ;
//   neg      := { "not" | "-" } prim ;
//   prim     := "true" | "false" | atom | "(" expr ")" ;
//
// "%" starts a comment running to the end of the line. Binary chains
// associate to the left.
#pragma once

#include "nestlp/program.hpp"

#include <string>
#include <string_view>

namespace nestlp {

struct SourceProgram {
  std::string text;
  std::string origin = "<stdin>";
};

struct ParseOptions {
  /// Accept "l_"/"n_" atoms, e.g. when reading back translated output.
  bool allow_reserved = false;
};

Program parse(const SourceProgram& source, ParseOptions opts = {});
inline Program parse(std::string_view text, ParseOptions opts = {}) {
  return parse(SourceProgram{std::string(text)}, opts);
}
Expression parse_expression(std::string_view text, ParseOptions opts = {});

std::string to_string(const Expression& e);
std::string to_string(const Rule& r);

/// One rule per line in the grammar above; parse(print_nested(p)) == p.
std::string print_nested(const Program& p);

/// DLV syntax for disjunctive programs: "a v b :- c, not d." Constants are
/// folded away; a rule that can never be violated is emitted as a comment.
/// Throws PreconditionError when the program is not disjunctive.
std::string print_dlv(const Program& p);

}  // namespace nestlp
