"""Existential graphs: notation, illative rules, derivation search,
classical and intuitionistic oracles, SVG rendering, and an ordinal-indexed
sequence model. All values cross the boundary as text."""

from ._core import (
    EgError,
    canonical,
    check_script,
    concat,
    countermodel,
    domain,
    entails,
    equals,
    extends,
    lex_compare,
    ordinal_add,
    ordinal_cmp,
    ordinal_sub_left,
    prove,
    render_svg,
    run_cli,
    tail,
    taut,
    to_formula,
    to_graph,
)

__all__ = [
    "EgError",
    "canonical",
    "check_script",
    "concat",
    "countermodel",
    "domain",
    "entails",
    "equals",
    "extends",
    "lex_compare",
    "ordinal_add",
    "ordinal_cmp",
    "ordinal_sub_left",
    "prove",
    "render_svg",
    "run_cli",
    "tail",
    "taut",
    "to_formula",
    "to_graph",
]
