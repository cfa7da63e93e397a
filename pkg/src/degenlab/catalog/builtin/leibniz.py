"""Leibniz-Poisson, transposed Leibniz-Poisson and transposed Poisson algebras."""

from __future__ import annotations

from ._dsl import Builder, tg
from .base import A01, A02, A03, A04

LP_FREE_L5 = ("c11_1", "c11_2", "c12_2", "c21_2", "cp11_2", "cp21_2")
LP_FREE_L6 = ("c11_1", "c11_2", "cp11_2", "cp21_2")


def leibniz_poisson() -> Builder:
    b = Builder("leibniz-poisson")
    b.alg("L1", circ={"11": "e2"})
    b.alg("L2", circ={"12": "e1"})
    b.alg("L3", circ={"12": "e2", "21": "-e2"})
    b.alg("L4", A01)
    b.alg("L5", A02, {"21": "alpha*e2"}, ("alpha",))
    b.alg("L6", A03, {"21": "alpha*e2"}, ("alpha",))
    b.alg("L7", A04, {"11": "alpha*e2"}, ("alpha",))
    b.alg("C8", label="C^8")

    b.wit("L4", "L5", "e1 + e2", "t*e2", targs=("0",))
    b.wit("L4", "L6", "e1", "t*e2", targs=("0",))
    b.wit("L5", "L7", "t*e1 + e2/t", "e2", ("alpha",), ("alpha",))
    b.wit("L6", "L7", "t*e1 - e2/t", "e2", ("alpha",), ("-alpha",))

    b.fam("L5", "L2", "e2", "t*e1", ("1/t",))
    b.fam("L6", "L2", "e2", "t*e1", ("1/t",))
    b.fam("L7", "L1", "e1", "e2/t", ("1/t",))
    b.wit("L2", "L1", "e1 + t*e2", "t*e1", origin="added", note="figure edge without a table witness")

    b.nd(
        "L4",
        [tg("L1"), tg("L3"), tg("L7", "alpha", cond=("alpha",))],
        ("c11_1", "c11_2", "c12_2", "c21_2", "c22_2"),
        ("c12_2 = c21_2",),
    )
    b.nd(
        "L5",
        [tg("L1"), tg("L3"), tg("L7", "beta", cond=("beta - alpha",))],
        LP_FREE_L5,
        ("c11_1 = c12_2", "c11_1 = c21_2", "cp11_2 = alpha*c11_2", "cp21_2 = alpha*c11_1"),
        ("alpha",),
    )
    b.nd(
        "L6",
        [tg("L1"), tg("L3"), tg("L7", "beta", cond=("beta + alpha",))],
        LP_FREE_L6,
        ("cp11_2 = -alpha*c11_2", "cp21_2 = alpha*c11_1"),
        ("alpha",),
    )
    b.nd("L5", [tg("L3")], LP_FREE_L5, ("c11_1 = c12_2", "c11_1 = c21_2"), family=True)
    b.nd("L6", [tg("L3")], LP_FREE_L6, family=True)

    b.node("L4", 4)
    for k in ("L2",):
        b.node(k, 3)
    b.node("L5", 3, args=("beta",), label="L5^beta")
    b.node("L6", 3, args=("beta",), label="L6^beta")
    b.node("L1", 2)
    b.node("L3", 2)
    b.node("L7", 2, args=("alpha",), label="L7^alpha")
    b.node("C8", 0)
    b.edge("L4", "L5", "beta=0")
    b.edge("L4", "L6", "beta=0")
    b.edge("L5", "L7", "alpha=beta")
    b.edge("L6", "L7", "alpha=-beta")
    b.edge("L2", "L1")
    for k in ("L1", "L3", "L7"):
        b.edge(k, "C8")
    b.claim("L3", "L4", "L5*", "L6*")
    return b


T5_FREE = ("c11_1", "c11_2", "c12_2", "c21_2", "cp12_2", "cp21_2")


def transposed_leibniz_poisson() -> Builder:
    b = Builder("transposed-leibniz-poisson")
    b.alg("T1", circ={"11": "e2"})
    b.alg("T2", circ={"12": "e2", "21": "-e2"})
    b.alg("T3", A01)
    b.alg("T4", A02, {"11": "e2"})
    b.alg("T5", A02, {"12": "alpha*e2", "21": "-alpha*e2"}, ("alpha",), notes=("{e1,e2} in the source table read as the bracket",))
    b.alg("T6", A03)
    b.alg("T7", A04, {"11": "alpha*e2"}, ("alpha",))
    b.alg("T8", A04, {"12": "e2", "21": "-e2"})
    b.alg("C8", label="C^8")

    b.wit("T3", "T5", "e1 + e2", "t*e2", targs=("0",))
    b.wit("T3", "T6", "e1", "t*e2")
    b.wit("T4", "T1", "t*e1", "t^2*e2")
    b.wit("T4", "T5", "e1", "e2/t", targs=("0",))
    b.wit("T4", "T7", "alpha*t*e1 + t*e2", "alpha*t^2*e2", targs=("alpha",), cond=("alpha",))
    b.wit("T5", "T7", "t*e1 + e2", "t*e2", ("alpha",), ("0",))
    b.wit("T6", "T7", "t*e1 + e2", "-t*e2", targs=("0",))
    b.wit("T8", "T2", "e1", "e2/t")
    b.wit("T8", "T7", "t*e1", "t^2*e2", targs=("0",))

    b.fam("T5", "T8", "t*e1 + e2", "t*e2", ("1/t",))
    b.fam("T7", "T1", "t*e1", "e2", ("t^-2",))

    b.nd(
        "T3",
        [tg("T1"), tg("T2"), tg("T5", "alpha", cond=("alpha",)), tg("T7", "alpha", cond=("alpha",))],
        ("c11_1", "c11_2", "c12_2", "c21_2", "c22_2"),
        ("c12_2 = c21_2",),
    )
    b.nd(
        "T4",
        [tg("T2"), tg("T5", "alpha", cond=("alpha",)), tg("T6")],
        ("c11_1", "c11_2", "c12_2", "c21_2", "cp11_2"),
        ("c11_1 = c12_2", "c11_1 = c21_2"),
    )
    b.nd(
        "T5",
        [tg("T1"), tg("T2"), tg("T7", "beta", cond=("beta",))],
        T5_FREE,
        ("c11_1 = c12_2", "c11_1 = c21_2", "cp12_2 = alpha*c11_1", "cp21_2 = -cp12_2"),
        ("alpha",),
    )
    b.nd("T8", [tg("T1"), tg("T7", "alpha", cond=("alpha",))], ("c11_2", "cp12_2", "cp21_2"), ("cp21_2 = -cp12_2",))
    b.nd(
        "T5",
        [tg("T1"), tg("T6"), tg("T7", "alpha", cond=("alpha",))],
        T5_FREE,
        ("c11_1 = c12_2", "c11_1 = c21_2", "cp21_2 = -cp12_2"),
        family=True,
    )
    b.nd("T7", [tg("T2")], ("c11_2", "cp11_2"), family=True)

    b.node("T3", 4)
    b.node("T4", 4)
    b.node("T5", 3, args=("beta",), label="T5^beta")
    b.node("T6", 3)
    b.node("T8", 3)
    b.node("T1", 2)
    b.node("T2", 2)
    b.node("T7", 2, args=("alpha",), label="T7^alpha")
    b.node("C8", 0)
    b.edge("T3", "T5", "beta=0")
    b.edge("T4", "T5", "beta=0")
    b.edge("T6", "T7", "alpha=0")
    b.edge("T5", "T7", "alpha=0")
    b.edge("T8", "T7", "alpha=0")
    b.edge("T3", "T6")
    b.edge("T8", "T2")
    b.edge("T4", "T1")
    b.edge("T4", "T7")
    for k in ("T1", "T2", "T7"):
        b.edge(k, "C8")
    b.claim("T3", "T4", "T5*")
    return b


def transposed_poisson() -> Builder:
    """Members of the transposed Leibniz-Poisson list whose bracket is a Lie bracket."""
    b = Builder("transposed-poisson")
    b.alg("T2", circ={"12": "e2", "21": "-e2"})
    b.alg("T3", A01)
    b.alg("T5", A02, {"12": "alpha*e2", "21": "-alpha*e2"}, ("alpha",))
    b.alg("T6", A03)
    b.alg("T7", A04, label="T7^0", notes=("the zero-bracket member of the transposed Leibniz-Poisson family T7",))
    b.alg("T8", A04, {"12": "e2", "21": "-e2"})
    b.alg("C8", label="C^8")

    b.wit("T3", "T5", "e1 + e2", "t*e2", targs=("0",), origin="shared")
    b.wit("T3", "T6", "e1", "t*e2", origin="shared")
    b.wit("T5", "T7", "t*e1 + e2", "t*e2", ("alpha",), origin="shared")
    b.wit("T6", "T7", "t*e1 + e2", "-t*e2", origin="shared")
    b.wit("T8", "T2", "e1", "e2/t", origin="shared")
    b.wit("T8", "T7", "t*e1", "t^2*e2", origin="shared")
    b.fam("T5", "T8", "t*e1 + e2", "t*e2", ("1/t",), origin="shared")

    b.nd(
        "T3",
        [tg("T2"), tg("T5", "alpha", cond=("alpha",))],
        ("c11_1", "c11_2", "c12_2", "c21_2", "c22_2"),
        ("c12_2 = c21_2",),
        origin="shared",
    )
    b.nd(
        "T5",
        [tg("T2")],
        T5_FREE,
        ("c11_1 = c12_2", "c11_1 = c21_2", "cp12_2 = alpha*c11_1", "cp21_2 = -cp12_2"),
        ("alpha",),
        origin="shared",
    )
    b.nd("T5", [tg("T6")], T5_FREE, ("c11_1 = c12_2", "c11_1 = c21_2", "cp21_2 = -cp12_2"), family=True, origin="shared")
    b.claim("T3", "T5*")
    return b
