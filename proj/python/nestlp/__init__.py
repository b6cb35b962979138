# SPDX-License-Identifier: Apache-2.0
"""Compile nested logic programs into disjunctive programs and check the result."""

from ._nestlp import (
    Error,
    PreconditionError,
    Program,
    ResourceError,
    SyntaxError,
    answer_sets,
    check_faithful,
    check_faithful_in_context,
    check_modular,
    equilibrium_models,
    generate_program,
    growth_csv,
    measure_growth,
    parse,
    translate,
)

__all__ = [
    "Error",
    "PreconditionError",
    "Program",
    "ResourceError",
    "SyntaxError",
    "answer_sets",
    "check_faithful",
    "check_faithful_in_context",
    "check_modular",
    "equilibrium_models",
    "generate_program",
    "growth_csv",
    "measure_growth",
    "parse",
    "translate",
]
