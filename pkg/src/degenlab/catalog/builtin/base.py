"""Commutative associative and Zinbiel algebras underlying every variety."""

from __future__ import annotations

from ..models import AutFamily
from ._dsl import Builder

# first-product tables shared by the Poisson-type varieties (completed commutatively)
A01 = {"11": "e1", "22": "e2"}
A02 = {"11": "e1", "12": "e2"}
A03 = {"11": "e1"}
A04 = {"11": "e2"}


def comm_assoc() -> Builder:
    b = Builder("comm-assoc")
    b.alg(
        "A01",
        A01,
        autos=(
            AutFamily((), (("1", "0"), ("0", "1")), label="identity"),
            AutFamily((), (("0", "1"), ("1", "0")), label="swap"),
        ),
    )
    b.alg("A02", A02, autos=(AutFamily(("xi",), (("1", "0"), ("0", "xi")), ("xi",), "diagonal"),))
    b.alg("A03", A03, autos=(AutFamily(("xi",), (("1", "0"), ("0", "xi")), ("xi",), "diagonal"),))
    b.alg("A04", A04, autos=(AutFamily(("xi", "nu"), (("xi", "nu"), ("0", "xi^2")), ("xi",), "triangular"),))
    b.alg("C8", label="C^8")
    return b


def zinbiel() -> Builder:
    b = Builder("zinbiel")
    b.alg("Z1", {"11": "e2"}, complete=False)
    b.alg("C8", label="C^8")
    return b
