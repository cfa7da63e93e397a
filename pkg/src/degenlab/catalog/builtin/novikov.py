"""Novikov-Poisson and pre-Lie Poisson algebras."""

from __future__ import annotations

from ...algebra.structure import COORDINATES
from ._dsl import Builder, identity_relations, tg
from .base import A01, A02, A03, A04

N07_FREE = ("c11_1", "c11_2", "c12_2", "c21_2", "c22_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2", "cp22_2")
N08_FREE = ("c11_1", "c11_2", "c12_2", "c21_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2")
N10_FREE = ("c11_1", "c11_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2", "cp22_2")
N11_FREE = ("c11_1", "c11_2", "cp11_1", "cp11_2")
N12_FREE = ("c11_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2")
N13_FREE = ("c11_2", "cp11_1", "cp11_2", "cp21_2")


def _entries(b: Builder) -> None:
    b.alg("N01", circ={"11": "e2"})
    b.alg("N02", circ={"21": "-e1"})
    b.alg("N03", circ={"11": "e1", "22": "e2"})
    b.alg("N04", circ={"11": "e1"})
    b.alg("N05", circ={"12": "e1", "22": "e1 + e2"})
    b.alg("N06", circ={"12": "e1", "21": "alpha*e1", "22": "e2"}, params=("alpha",))
    b.alg("N07", A01, {"11": "alpha*e1", "22": "beta*e2"}, ("alpha", "beta"), notes=("N07^{alpha,beta} ~ N07^{beta,alpha}",))
    b.alg("N08", A02, {"11": "alpha*e1 + e2", "12": "beta*e2", "21": "alpha*e2"}, ("alpha", "beta"))
    b.alg("N09", A02, {"11": "alpha*e1", "12": "beta*e2", "21": "alpha*e2"}, ("alpha", "beta"))
    b.alg("N10", A03, {"11": "alpha*e1", "22": "e2"}, ("alpha",))
    b.alg("N11", A03, {"11": "alpha*e1"}, ("alpha",))
    b.alg("N12", A04, {"11": "alpha*e1", "12": "e2", "21": "alpha*e2"}, ("alpha",))
    b.alg("N13", A04, {"11": "e1 + alpha*e2", "21": "e2"}, ("alpha",))
    b.alg("N14", A04, {"11": "alpha*e2"}, ("alpha",))
    b.alg("C8", label="C^8")


def _witnesses(b: Builder) -> None:
    ab = ("alpha", "beta")
    aa = ("alpha", "alpha")
    b.wit("N07", "N01", "t*e1 + t*e2", "t^2*(alpha - beta)*e1", ab, cond=("beta - alpha",))
    b.wit("N07", "N09", "e1 + e2", "-t*e2", aa, aa)
    b.wit("N07", "N11", "e1", "t*e2", ab, ("alpha",))
    b.wit("N07", "N14", "t*e1 - (t - 1)*t*e2", "(t - 1)*t^3*e2", aa, ("alpha",), note="the figure draws this edge from the whole family")
    b.wit("N08", "N01", "t*e1", "t^2*e2", ab)
    b.wit("N08", "N09", "e1", "e2/t", ab, ab)
    b.wit(
        "N08",
        "N14",
        "t*e1 + t/(gamma - beta)*e2",
        "t^2/(gamma - beta)*e2",
        ab,
        ("gamma",),
        cond=("gamma - beta",),
        note="gamma != beta added: the basis divides by gamma - beta",
    )
    b.wit("N09", "N14", "t*e1 + e2/t", "e2", ab, ("beta",))
    b.wit("N10", "N04", "e2", "t*e1", ("alpha",))
    b.wit("N10", "N11", "e1", "t*e2", ("alpha",), ("alpha",))
    b.wit("N10", "N14", "t/(alpha - beta)*e1 + t*e2", "t^2/(alpha - beta)^2*e1", ("alpha",), ("beta",), cond=("alpha - beta",))
    b.wit("N11", "N14", "t*e1 - e2/t", "e2", ("alpha",), ("alpha",))
    b.wit("N12", "N02", "e2/t", "-e1", ("0",))
    b.wit("N12", "N06", "e2/t", "e1/alpha", ("alpha",), ("1/alpha",), cond=("alpha",))
    b.wit(
        "N12",
        "N14",
        "t*e1 + alpha*t*e2",
        "t^2*e2",
        ("alpha",),
        ("beta",),
        solve=("beta",),
        note="target parameter fixed by the limit",
    )
    b.wit("N13", "N06", "e2/t", "e1", ("alpha",), ("0",))
    b.wit("N13", "N14", "t*e1", "t^2*e2", ("alpha",), ("alpha",))

    b.fam("N07", "N03", "t*e1", "t*e2", ("1/t", "1/t"))
    b.fam("N07", "N08", "e1 + e2", "-t*e1", ("t + alpha", "alpha"), aa)
    b.fam("N07", "N10", "e1", "t*e2", ("alpha", "1/t"), ("alpha",))
    b.fam("N08", "N12", "t*e1 - t^2*e2", "-t^3*e2", ("alpha/t", "1/t"), ("alpha",))
    b.fam("N09", "N06", "t*e2", "t*e1", ("1/t", "alpha/t"), ("alpha",))
    b.fam("N09", "N13", "t*e1 + e2/t", "e2", ("1/t", "alpha"), ("alpha",))
    b.fam("N10", "N03", "t*e1", "e2", ("1/t",))
    b.fam("N10", "N12", "t*e1 + e2", "t^2*e1", ("1/t",), ("1",))
    b.fam("N11", "N04", "t*e1", "e2", ("1/t",))
    b.fam("N12", "N13", "t*e1 + alpha*t*e2", "t^2*e2", ("1/t",), ("alpha",))
    b.fam("N13", "N05", "e2/t", "e1", ("1/t",))
    b.fam("N14", "N01", "e1", "e2/t", ("1/t",))

    note = "figure edge between zero-dot algebras without a table witness"
    for src, tgt, e1, e2, sargs, targs, cond in ZERO_DOT_WITNESSES:
        b.wit(src, tgt, e1, e2, sargs, targs, cond, origin="added", note=note)


# figure edges among algebras with zero first product, witnessed by bases found on the bounded search grid
ZERO_DOT_WITNESSES = (
    ("N02", "N01", "e1 + t*e2", "t^2*e2", (), (), ()),
    ("N04", "N01", "t*e1 + e2", "-t*e2", (), (), ()),
    ("N05", "N01", "t*e2", "t^2*e1", (), (), ()),
    ("N05", "N06", "e1/t", "e2", (), ("0",), ()),
    ("N06", "N01", "t*e1 + t*e2", "t^2*(1 + alpha)*e1 + t^2*e2", ("alpha",), (), ("alpha",)),
    ("N03", "N04", "e2", "t*e1", (), (), ()),
    ("N03", "N06", "t*e2", "e1 + e2", (), ("1",), ()),
)


def _nondegen(b: Builder) -> None:
    b.nd(
        "N07",
        [
            tg("N06", "gamma"),
            tg("N02"),
            tg("N04"),
            tg("N11", "gamma", cond=("gamma - alpha", "gamma - beta")),
            tg("N09", "gamma", "delta"),
        ],
        N07_FREE,
        ("c21_2 = c12_2", "cp12_2 = cp21_2", "cp11_1 = alpha*c11_1", "cp12_2 = beta*c12_2", "cp22_2 = beta*c22_2"),
        ("alpha", "beta"),
        cond=("beta - alpha",),
    )
    b.nd(
        "N07",
        [
            tg("N06", "0"),
            tg("N09", "beta", "gamma", any=(("beta - alpha", "gamma - alpha"),)),
            tg("N01"),
            tg("N14", "beta", cond=("beta - alpha",)),
        ],
        N07_FREE,
        (
            "c21_2 = c12_2",
            "cp11_1 = alpha*c11_1",
            "cp11_2 = alpha*c11_2",
            "cp12_2 = cp21_2",
            "cp12_2 = alpha*c12_2",
            "cp22_2 = alpha*c22_2",
        ),
        ("alpha", "alpha"),
    )
    b.nd(
        "N08",
        [
            tg("N06", "gamma"),
            tg("N02"),
            tg("N04"),
            tg("N11", "gamma"),
            tg("N09", "gamma", "delta", any=(("gamma - alpha", "delta - beta"),)),
        ],
        N08_FREE,
        ("c12_2 = c11_1", "c21_2 = c11_1", "cp11_1 = alpha*c11_1", "cp12_2 = beta*c11_1", "cp21_2 = alpha*c11_1"),
        ("alpha", "beta"),
    )
    b.nd(
        "N09",
        [tg("N01"), tg("N14", "gamma", cond=("gamma - beta",))],
        N08_FREE,
        (
            "c12_2 = c11_1",
            "c21_2 = c11_1",
            "cp11_1 = alpha*c11_1",
            "cp21_2 = alpha*c11_1",
            "cp12_2 = beta*c11_1",
            "cp11_2 = beta*c11_2",
        ),
        ("alpha", "beta"),
    )
    b.nd(
        "N10",
        [tg("N02"), tg("N06", "beta"), tg("N09", "beta", "gamma"), tg("N11", "beta", cond=("beta - alpha",))],
        N10_FREE,
        ("cp11_1 = alpha*c11_1", "cp12_2 = cp21_2", "c11_1*cp21_2 = -c11_2*cp22_2"),
        ("alpha",),
    )
    b.nd(
        "N11",
        [tg("N01"), tg("N14", "beta", cond=("beta - alpha",))],
        N11_FREE,
        ("cp11_1 = alpha*c11_1", "cp11_2 = alpha*c11_2"),
        ("alpha",),
    )
    b.nd(
        "N12",
        [
            tg("N09", "beta", "gamma"),
            tg("N11", "beta"),
            tg("N04"),
            tg("N06", "beta", cond=("alpha*beta - 1",)),
            tg("N02", cond=("alpha",)),
        ],
        N12_FREE,
        ("cp11_1 = alpha*cp12_2", "cp21_2 = alpha*cp12_2"),
        ("alpha",),
    )
    b.nd(
        "N13",
        [tg("N01"), tg("N14", "beta", cond=("beta - alpha",))],
        N13_FREE,
        ("cp11_1 = cp21_2", "cp11_2 = alpha*c11_2"),
        ("alpha",),
    )

    b.nd(
        "N07",
        [tg("N02"), tg("N06", "alpha", cond=("alpha - 1",)), tg("N09", "alpha", "beta", cond=("beta - alpha",))],
        N07_FREE,
        ("c21_2 = c12_2", "cp12_2 = cp21_2", "c22_2*cp12_2 = c12_2*cp22_2"),
        family=True,
    )
    b.nd(
        "N08",
        [tg("N04"), tg("N10", "alpha"), tg("N11", "alpha")],
        N08_FREE,
        ("c12_2 = c11_1", "c21_2 = c11_1", "cp11_1 = cp21_2"),
        family=True,
    )
    b.nd(
        "N09",
        [tg("N08", "alpha", "beta"), tg("N12", "alpha")],
        N08_FREE,
        ("c12_2 = c11_1", "c21_2 = c11_1", "cp11_1 = cp21_2", "c11_2*cp12_2 = c11_1*cp11_2"),
        family=True,
    )
    b.nd(
        "N10",
        [tg("N07", "alpha", "beta"), tg("N09", "alpha", "alpha")],
        N10_FREE,
        ("cp12_2 = cp21_2", "c11_1*cp21_2 = -c11_2*cp22_2"),
        family=True,
    )
    b.nd("N11", [tg("N06", "1")], N11_FREE, ("c11_1*cp11_2 = c11_2*cp11_1",), family=True)
    b.nd("N12", [tg("N09", "alpha", "beta")], N12_FREE, ("cp11_1 = cp21_2",), family=True)
    b.nd("N13", [tg("N02"), tg("N06", "alpha", cond=("alpha",))], N13_FREE, ("cp11_1 = cp21_2",), family=True)


def _figure(b: Builder) -> None:
    for k in ("N03",):
        b.node(k, 4)
    for k, args in (("N07", ("alpha", "beta")), ("N08", ("alpha", "beta")), ("N10", ("alpha",)), ("N12", ("alpha",))):
        b.node(k, 4, args=args)
    for k in ("N02", "N04", "N05"):
        b.node(k, 3)
    b.node("N06", 3, args=("gamma",), where=("gamma",), label="N06^{gamma!=0}")
    b.node("N09", 3, args=("alpha", "beta"))
    b.node("N11", 3, args=("alpha",))
    b.node("N13", 3, args=("alpha",))
    b.node("N01", 2)
    b.node("N06^0", 2, args=("0",))
    b.node("N14", 2, args=("alpha",))
    b.node("C8", 0)
    edges = [
        ("N07", "N11", ""),
        ("N10", "N14", ""),
        ("N07", "N01", ""),
        ("N07", "N14", ""),
        ("N07", "N09", ""),
        ("N08", "N09", ""),
        ("N08", "N01", ""),
        ("N12", "N02", "delta=0"),
        ("N12", "N06", "delta=1/beta"),
        ("N10", "N11", ""),
        ("N10", "N04", ""),
        ("N09", "N14", ""),
        ("N11", "N14", ""),
        ("N13", "N14", ""),
        ("N13", "N06^0", ""),
        ("N03", "N06", "beta=1"),
        ("N03", "N04", ""),
        ("N05", "N06^0", ""),
        ("N06", "N01", ""),
        ("N05", "N01", ""),
        ("N04", "N01", ""),
        ("N02", "N01", ""),
        ("N14", "C8", ""),
        ("N06^0", "C8", ""),
        ("N01", "C8", ""),
        ("N12", "N14", ""),
        ("N08", "N14", ""),
    ]
    for s, t, label in edges:
        b.edge(s, t, label)


def novikov_poisson() -> Builder:
    b = Builder("novikov-poisson")
    _entries(b)
    _witnesses(b)
    _nondegen(b)
    _figure(b)
    b.claim("N07*", "N08*")
    return b


def pre_lie_poisson(np: Builder) -> Builder:
    """Novikov-Poisson algebras together with the non-Novikov pre-Lie algebras."""
    b = Builder("pre-lie-poisson")
    b.adopt(np.entries)
    b.alg("P01", circ={"21": "-e1", "22": "alpha*e2"}, params=("alpha",), excl=("alpha",))
    b.alg("P02", circ={"11": "e2", "21": "-e1", "22": "-2*e2"})
    b.alg("P03", circ={"21": "-e1", "22": "e1 - e2"})
    b.reuse(np.witnesses)
    b.fam("P01", "P03", "t*e2", "e1 + e2", ("t - 1",), origin="added", note="places P03 in the closure of the P01 family")
    novikov = identity_relations("(x@y)@z = (x@z)@y")
    note = "Novikov algebras form a closed set; the zero-dot pre-Lie algebras P01-P03 are not Novikov"
    targets = [tg("P01", "alpha", cond=("alpha",)), tg("P02"), tg("P03")]
    for src in ("N07", "N08"):
        b.nd(src, targets, COORDINATES, novikov, family=True, origin="added", note=note)
    b.claim("P02", "P01*", "N07*", "N08*")
    return b

