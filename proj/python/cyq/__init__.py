"""Exact q-expansions, enumerative invariants and identity checks for the quintic mirror family."""

from ._cyq import (
    UnsupportedSystem,
    expand,
    frobenius,
    gw_invariants,
    instanton_numbers,
    j_function,
    run_cli,
    verify,
    yukawa,
)

__all__ = [
    "UnsupportedSystem",
    "expand",
    "frobenius",
    "gw_invariants",
    "instanton_numbers",
    "j_function",
    "run_cli",
    "verify",
    "yukawa",
]
