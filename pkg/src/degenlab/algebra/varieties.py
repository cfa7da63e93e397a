"""Laws of the built-in varieties of pairs (dot ``*``, second product ``@``)."""

from __future__ import annotations

from typing import Dict

from .identities import VarietyDef

COMMUTATIVE = "x*y - y*x"
ASSOCIATIVE = "(x*y)*z - x*(y*z)"
LEIBNIZ = "(x@y)@z = (x@z)@y + x@(y@z)"
SYMMETRIC_LEIBNIZ = "x@(y@z) = (x@y)@z + y@(x@z)"
ANTICOMMUTATIVE = "x@y + y@x"
JACOBI = "(x@y)@z + (y@z)@x + (z@x)@y"
PRE_LIE = "(x@y)@z - x@(y@z) = (y@x)@z - y@(x@z)"
RIGHT_COMMUTATIVE = "(x@y)@z = (x@z)@y"
NOVIKOV_COMPAT_1 = "(x*y)@z = x*(y@z)"
NOVIKOV_COMPAT_2 = "(x@y)*z - (y@x)*z = x@(y*z) - y@(x*z)"
ZINBIEL = "x*(y*z) = (y*x + x*y)*z"

_COMM_ASSOC = (COMMUTATIVE, ASSOCIATIVE)


def _builtin() -> Dict[str, VarietyDef]:
    b = VarietyDef.build
    defs = [
        b("comm-assoc", "commutative associative algebras", _COMM_ASSOC, ("x@y",), ()),
        b("zinbiel", "Zinbiel algebras", (ZINBIEL,), ("x@y",), (), dot_role="Zinbiel"),
        b(
            "leibniz-poisson",
            "Leibniz-Poisson algebras",
            _COMM_ASSOC,
            (LEIBNIZ,),
            ("(x*y)@z = (x@z)*y + x*(y@z)",),
            circ_role="Leibniz bracket",
        ),
        b(
            "generic-poisson",
            "generic Poisson algebras",
            _COMM_ASSOC,
            (ANTICOMMUTATIVE,),
            ("(x*y)@z = (x@z)*y + x*(y@z)",),
            circ_role="anticommutative bracket",
        ),
        b(
            "transposed-leibniz-poisson",
            "transposed Leibniz-Poisson algebras",
            _COMM_ASSOC,
            (LEIBNIZ, SYMMETRIC_LEIBNIZ),
            ("2*(x@y)*z = (x*z)@y + x@(y*z)",),
            circ_role="symmetric Leibniz bracket",
        ),
        b(
            "transposed-poisson",
            "transposed Poisson algebras",
            _COMM_ASSOC,
            (ANTICOMMUTATIVE, JACOBI),
            ("2*(x@y)*z = (x*z)@y + x@(y*z)",),
            circ_role="Lie bracket",
        ),
        b(
            "novikov-poisson",
            "Novikov-Poisson algebras",
            _COMM_ASSOC,
            (PRE_LIE, RIGHT_COMMUTATIVE),
            (NOVIKOV_COMPAT_1, NOVIKOV_COMPAT_2),
            circ_role="Novikov product",
        ),
        b(
            "pre-lie-poisson",
            "pre-Lie Poisson algebras",
            _COMM_ASSOC,
            (PRE_LIE,),
            (NOVIKOV_COMPAT_2, NOVIKOV_COMPAT_1),
            circ_role="pre-Lie product",
        ),
        b(
            "comm-pre-lie",
            "commutative pre-Lie algebras",
            _COMM_ASSOC,
            (PRE_LIE,),
            ("x@(y*z) = (x@y)*z + y*(x@z)",),
            circ_role="pre-Lie product",
        ),
        b(
            "anti-pre-lie-poisson",
            "anti-pre-Lie Poisson algebras",
            _COMM_ASSOC,
            (
                "x@(y@z) - y@(x@z) = (y@x - x@y)@z",
                "(x@y - y@x)@z + (y@z - z@y)@x + (z@x - x@z)@y",
            ),
            (
                "2*(x@y)*z - 2*(y@x)*z = y*(x@z) - x*(y@z)",
                "2*x@(y*z) = (z*x)@y + z*(x@y)",
            ),
            circ_role="anti-pre-Lie product",
        ),
        b(
            "pre-poisson",
            "pre-Poisson algebras",
            (ZINBIEL,),
            (PRE_LIE,),
            (
                "(x@y - y@x)*z = x@(y*z) - y*(x@z)",
                "(x*y + y*x)@z = x*(y@z) + y*(x@z)",
            ),
            dot_role="Zinbiel",
            circ_role="pre-Lie product",
        ),
    ]
    return {d.name: d for d in defs}


BUILTIN_VARIETIES: Dict[str, VarietyDef] = _builtin()


def variety(name: str) -> VarietyDef:
    try:
        return BUILTIN_VARIETIES[name]
    except KeyError:
        raise KeyError(f"unknown variety {name!r}; known: {sorted(BUILTIN_VARIETIES)}") from None
