"""Anti-pre-Lie Poisson algebras."""

from __future__ import annotations

from ...algebra.structure import COORDINATES
from ..models import Radical
from ._dsl import Builder, tg
from .base import A01 as DOT_A01, A02 as DOT_A02, A03 as DOT_A03, A04 as DOT_A04

CP_ALL = tuple(c for c in COORDINATES if c.startswith("cp"))
A10_FREE = ("c11_1", "c11_2", "c12_2", "c21_2", "c22_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2", "cp22_2")
A11_FREE = ("c11_1", "c11_2", "c12_2", "c21_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2")


def _entries(b: Builder) -> None:
    b.alg("A01", circ={"11": "e1", "22": "e2"})
    b.alg("A02", circ={"11": "e1", "12": "e2", "21": "e2"})
    b.alg("A03", circ={"11": "e1"})
    b.alg("A04", circ={"11": "e2"})
    b.alg("A05", circ={"11": "-e2", "21": "-e1"})
    b.alg("A06", circ={"21": "-e1", "22": "alpha*e2"}, params=("alpha",))
    b.alg("A07", circ={"21": "-e1", "22": "e1 - e2"})
    b.alg(
        "A08",
        circ={"12": "(alpha + 1)*e1", "21": "alpha*e1", "22": "(alpha - 1)*e2"},
        params=("alpha",),
        excl=("alpha + 1",),
        notes=("A08^-1 would coincide with A06^-2",),
    )
    b.alg("A09", circ={"12": "-e1", "21": "-2*e1", "22": "e1 - 3*e2"})
    b.alg("A10", DOT_A01, {"11": "alpha*e1", "22": "beta*e2"}, ("alpha", "beta"), notes=("A10^{alpha,beta} ~ A10^{beta,alpha}",))
    b.alg("A11", DOT_A02, {"11": "(2*alpha - beta)*e1 + e2", "12": "alpha*e2", "21": "beta*e2"}, ("alpha", "beta"))
    b.alg("A12", DOT_A02, {"11": "(2*alpha - beta)*e1", "12": "alpha*e2", "21": "beta*e2"}, ("alpha", "beta"))
    b.alg("A13", DOT_A03, {"11": "alpha*e1", "22": "e2"}, ("alpha",))
    b.alg("A14", DOT_A03, {"11": "alpha*e1"}, ("alpha",))
    b.alg(
        "A15",
        DOT_A04,
        {"11": "(2 - alpha)*e1", "12": "e2", "21": "alpha*e2"},
        ("alpha",),
        ("2*alpha - 1",),
        notes=("the excluded member alpha = 1/2 has the tables of A16^0",),
    )
    b.alg("A16", DOT_A04, {"11": "(3/2)*e1 + alpha*e2", "12": "e2", "21": "e2/2"}, ("alpha",))
    b.alg("A17", DOT_A04, {"11": "-e1", "21": "e2"})
    b.alg("A18", DOT_A04, {"11": "alpha*e2"}, ("alpha",))
    b.alg("C8", label="C^8")


def _witnesses(b: Builder) -> None:
    a, ab, aa = ("alpha",), ("alpha", "beta"), ("alpha", "alpha")
    w = b.wit
    w("A01", "A02", "e1 + e2", "t*e2")
    w("A01", "A03", "e1", "t*e2")
    w("A02", "A04", "t*e1 + e2", "t*e2")
    w("A03", "A04", "t*e1 + e2", "t^2*e1")
    w("A05", "A06", "t*e1", "e2", targs=("0",))
    w("A05", "A08", "t*e2", "e1 + e2", targs=("0",))
    w("A06", "A04", "e1 + t*e2", "-t*(1 + alpha)*e1", a, cond=("alpha + 1",))
    w("A07", "A04", "t*e2", "t^2*e1")
    w("A07", "A06", "e1/t", "e2", targs=("-1",))
    w("A08", "A04", "e1 + t*e2", "-t^2*(2 + alpha)*e2", a, cond=("alpha + 2",))
    w("A09", "A04", "t*e2", "t^2*e1")
    w("A09", "A08", "e1/t", "e2", targs=("-2",))
    w("A10", "A04", "t*e1 + t*e2", "t^2*(alpha - beta)*e1", ab, cond=("alpha - beta",))
    w("A10", "A12", "e1 + e2", "t*e2", aa, aa)
    w("A10", "A14", "e1", "t*e2", ab, a)
    w(
        "A10",
        "A18",
        "t*(beta - gamma)/(alpha - gamma)*e1 + t*e2",
        "t^2*(alpha - beta)/(alpha - gamma)*e2",
        ab,
        ("gamma",),
        cond=("alpha - beta", "beta - gamma", "alpha - gamma"),
    )
    w("A11", "A04", "t*e1", "t^2*e2", ab)
    w(
        "A11",
        "A18",
        "t*(alpha - 2*beta + gamma)*e1 + t*e2",
        "t^2*(alpha - 2*beta + gamma)*e2",
        ab,
        ("gamma",),
        cond=("gamma - 2*beta + alpha",),
    )
    w("A11", "A12", "e1", "e2/t", ab, ab)
    w("A12", "A18", "t*e1 + e2", "t*e2", ab, ("2*beta - alpha",))
    w("A13", "A14", "e1", "t*e2", a, a)
    w("A13", "A03", "t^2*e1 + e2", "t*e1", a)
    w("A13", "A18", "t*e1 + t*(alpha - beta)*e2", "-t^2*(alpha - beta)*e2", a, ("beta",), cond=("beta - alpha",))
    w("A14", "A18", "t*e1 + e2", "-t*e2", a, a)
    w("A15", "A02", "e1", "e2/t", ("1",))
    w("A15", "A06", "e2/t", "-e1", ("0",), ("-2",))
    w("A15", "A08", "e2/t", "1/(alpha - 1)*e1 + 1/(alpha - 1)*e2", a, ("1/(alpha - 1)",), cond=("alpha - 1",))
    w("A15", "A18", "t*e1 + t*beta/(2*alpha - 1)*e2", "t^2*e2", a, ("beta",))
    w("A16", "A18", "t*e1", "t^2*e2", a, a)
    w("A16", "A08", "e2/t", "-2*e1", a, ("-2",))
    w("A17", "A18", "t*e1 + (t*alpha/2)*e2", "-(t^2/alpha)*e1 + (t^2/2)*e2", targs=a, cond=("alpha",))
    w("A17", "A18", "t*e1", "t^2*e2", targs=("0",))
    w("A17", "A08", "e2/t", "e1", targs=("0",))

    f = b.fam
    f("A06", "A03", "t*e2", "t*e1", ("1/t",))
    f("A06", "A07", "e1", "-e1/t + e2", ("t - 1",))
    f("A08", "A02", "t*e2", "e1", ("1/t",))
    f("A08", "A09", "-t*e2", "e1 + e2", ("t - 2",))
    f("A10", "A01", "t*e1", "t*e2", ("1/t", "1/t"))
    f("A10", "A15", "2*t*e1 + t*e2", "-t^2*e2", ("1/(2*t)", "1/t"), ("1",))
    f("A10", "A13", "e1", "t*e2", ("alpha", "1/t"), a)
    f("A10", "A11", "e1 + e2", "t*e2", ("alpha", "t + alpha"), aa)
    f("A11", "A17", "t*e1 - (t^2/2)*e2", "-(t^3/2)*e2", ("0", "1/t"))
    f(
        "A11",
        "A15",
        "-t*r*e1 + t^2*e2",
        "-t^3*r*e2",
        ("-1/(t*r)", "-alpha/(t*r)"),
        a,
        cond=("r",),
        radicals=(Radical("r", "1 - 2*alpha", "alpha"),),
        note="r is a square root of 1 - 2*alpha",
    )
    f("A11", "A02", "t*e1", "e2", ("1/t", "1/t"))
    f("A11", "A09", "t^2*e2", "t*e1", ("-2/t", "-1/t"))
    f("A11", "A16", "t*e1 + (t/alpha)*e2", "(t^2/alpha)*e2", ("1/t", "1/(2*t)"), a, cond=("alpha",))
    f("A11", "A16", "t*e1 + e2", "t*e2", ("1/t", "1/(2*t)"), ("0",))
    f("A12", "A02", "t*e1", "e2", ("1/t", "1/t"))
    f("A12", "A09", "t^3*e1 - t*e2", "t^2*e1 + e2", ("-2/t^2", "-(1 + t)/t^2"))
    f("A12", "A16", "t*e1 + e2", "-(t^2/2)*e1 + (t/2)*e2", ("1/t", "(1 + t*alpha)/(2*t)"), a)
    f("A12", "A08", "e2", "t*e1 + t*e2", ("alpha/t", "(1 + alpha)/t"), a)
    f("A13", "A01", "t*e1", "e2", ("1/t",))
    f("A13", "A15", "t*e1 + e2", "-t*e2", ("1/t",), ("1",))
    f("A14", "A03", "t*e1", "e2", ("1/t",))
    f("A15", "A17", "t*e1", "t^2*e2", ("2 + 1/t",))
    f("A15", "A09", "e2/t", "-2*e1 - 1/(4*t^2)*e2", ("1/2 + t",))
    f("A15", "A16", "(1 + t)*e1 + (1 + t)^2*alpha/(3*t)*e2", "(1 + t)^2*e2", ("2 - 3/(2*(1 + t))",), a)
    f("A15", "A08", "e2", "t*e1", ("1/t",), ("0",))
    f("A16", "A09", "4/t*e2", "-2*e1", ("1/t",))
    f("A18", "A04", "t*e1", "e2", ("t^-2",))


def _nondegen(b: Builder) -> None:
    nd = b.nd
    nd("A07", [tg("A08", "-2")], CP_ALL, ("cp11_1 + 2*cp21_2 = cp12_2", "2*cp12_1 + cp22_2 = cp21_1"))
    nd("A09", [tg("A06", "-1")], CP_ALL, ("cp11_1 + 5*cp21_2 = 4*cp12_2", "5*cp12_1 + cp22_2 = 4*cp21_1"))
    nd(
        "A06",
        [tg("A06", "-1"), tg("A08", "-2")],
        ("cp11_1", "cp11_2", "cp12_2", "cp21_1", "cp21_2", "cp22_2"),
        ("-alpha*cp11_1 = cp12_2", "-(alpha + 1)*cp11_1 = cp21_2", "-alpha*cp21_1 = cp22_2"),
        ("alpha",),
        cond=("alpha + 1",),
        note="alpha != -1 added: the source may not be its own target",
    )
    nd(
        "A08",
        [tg("A06", "-1"), tg("A08", "-2")],
        ("cp11_1", "cp11_2", "cp12_1", "cp12_2", "cp21_1", "cp21_2", "cp22_2"),
        ("(2*alpha + 1)*cp21_2 + cp11_1 = 0", "(alpha - 1)*cp21_1 = alpha*cp22_2", "cp12_1 + cp22_2 = 2*cp21_1"),
        ("alpha",),
        cond=("alpha + 2",),
        note="alpha != -2 added: the source may not be its own target",
    )
    nd(
        "A05",
        [tg("A02"), tg("A03"), tg("A06", "alpha", cond=("alpha",)), tg("A08", "alpha", cond=("alpha",))],
        ("cp11_1", "cp11_2", "cp21_1", "cp21_2"),
        ("cp21_2 = -cp11_1",),
    )
    nd(
        "A12",
        [tg("A04"), tg("A06", "-1"), tg("A08", "-2"), tg("A18", "gamma", cond=("gamma - 2*beta + alpha",))],
        ("c11_1", "c11_2", "c12_2", "c21_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2"),
        (
            "c12_2 = c11_1",
            "c21_2 = c11_1",
            "cp12_2 = alpha*c11_1",
            "cp21_2 = beta*c11_1",
            "cp11_2 = -(alpha - 2*beta)*c11_2",
            "cp11_1 = (2*alpha - beta)*c11_1",
        ),
        ("alpha", "beta"),
        note="free coordinate cp21_1 of the source table read as cp21_2",
    )
    nd(
        "A14",
        [tg("A04"), tg("A06", "-1"), tg("A08", "-2"), tg("A18", "beta", cond=("beta - alpha",))],
        ("c11_1", "c11_2", "cp11_1", "cp11_2"),
        ("cp11_1 = alpha*c11_1", "cp11_2 = alpha*c11_2"),
        ("alpha",),
    )
    nd(
        "A16",
        [tg("A04"), tg("A06", "-1"), tg("A18", "beta", cond=("beta - alpha",))],
        ("c11_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2"),
        ("cp11_1 = (3/2)*cp12_2", "cp21_2 = (1/2)*cp12_2", "alpha*c11_2 = cp11_2"),
        ("alpha",),
    )
    nd(
        "A10",
        [
            tg("A02"),
            tg("A03"),
            tg("A06", "gamma"),
            tg("A08", "gamma"),
            tg("A12", "gamma", "delta", any=(("alpha - beta", "beta - gamma", "gamma - delta"),)),
            tg("A14", "gamma", cond=("alpha - gamma", "beta - gamma")),
        ],
        A10_FREE,
        ("alpha*c11_1 = cp11_1", "cp12_2 = cp21_2", "beta*c22_2 = cp22_2", "c12_2 = c21_2", "beta*c12_2 = cp12_2"),
        ("alpha", "beta"),
    )
    nd(
        "A10",
        [
            tg("A04"),
            tg("A06", "-1"),
            tg("A08", "-2"),
            tg("A18", "beta", cond=("beta - alpha",)),
            tg("A12", "beta", "gamma", any=(("beta - alpha", "gamma - alpha"),)),
        ],
        A10_FREE,
        (
            "alpha*c11_1 = cp11_1",
            "alpha*c11_2 = cp11_2",
            "alpha*c12_2 = cp12_2",
            "alpha*c21_2 = cp21_2",
            "alpha*c22_2 = cp22_2",
            "c12_2 = c21_2",
        ),
        ("alpha", "alpha"),
    )
    nd(
        "A11",
        [
            tg("A02"),
            tg("A03"),
            tg("A06", "gamma"),
            tg("A14", "gamma"),
            tg("A08", "gamma"),
            tg("A12", "gamma", "delta", any=(("gamma - alpha", "delta - beta"),)),
        ],
        A11_FREE,
        ("c11_1 = c12_2", "c21_2 = c11_1", "cp11_1 = (2*alpha - beta)*c11_1", "cp12_2 = alpha*c11_1", "cp21_2 = beta*c11_1"),
        ("alpha", "beta"),
    )
    nd(
        "A13",
        [tg("A02"), tg("A06", "beta"), tg("A08", "beta"), tg("A12", "beta", "gamma"), tg("A14", "beta", cond=("beta - alpha",))],
        ("c11_1", "c11_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2", "cp22_2"),
        ("cp12_2 = cp21_2", "alpha*c11_1 = cp11_1"),
        ("alpha",),
    )
    nd(
        "A15",
        [
            tg("A02", cond=("alpha - 1",)),
            tg("A03"),
            tg("A06", "beta", any=(("alpha", "beta + 2"),)),
            tg("A08", "beta", cond=("beta*(alpha - 1) - 1",)),
            tg("A08", "0"),
            tg("A12", "beta", "gamma"),
            tg("A14", "beta"),
        ],
        ("c11_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2"),
        ("cp11_1 = (2 - alpha)*cp12_2", "cp21_2 = alpha*cp12_2"),
        ("alpha",),
    )
    nd(
        "A17",
        [tg("A02"), tg("A03"), tg("A06", "alpha"), tg("A08", "alpha", cond=("alpha",)), tg("A12", "alpha", "beta"), tg("A14", "alpha")],
        ("c11_2", "cp11_1", "cp11_2", "cp21_2"),
        ("cp21_2 = -cp11_1",),
    )

    fam = lambda *a, **k: b.nd(*a, family=True, **k)
    fam("A18", [tg("A06", "alpha"), tg("A08", "alpha")], ("c11_2", "cp11_2"))
    fam(
        "A06",
        [tg("A02"), tg("A08", "alpha")],
        ("cp11_1", "cp11_2", "cp12_2", "cp21_1", "cp21_2", "cp22_2"),
        ("cp12_2*cp21_1 = cp11_1*cp22_2", "cp12_2*cp21_2 = cp11_2*cp22_2", "cp11_2*cp21_1 = cp11_1*cp21_2"),
    )
    fam(
        "A08",
        [tg("A03"), tg("A06", "alpha", cond=("alpha + 2",))],
        ("cp11_1", "cp11_2", "cp12_1", "cp12_2", "cp21_1", "cp21_2", "cp22_2"),
        (
            "cp12_1 + cp22_2 = 2*cp21_1",
            "cp12_2 = 2*cp21_2",
            "cp11_1^2 - 9*cp21_2^2 + 4*cp11_2*cp22_2 = 0",
            "cp11_1*cp12_1 + 6*cp21_1*cp21_2 - cp11_1*cp22_2 - 2*cp21_2*cp22_2 = 0",
        ),
    )
    fam(
        "A14",
        [tg("A02"), tg("A06", "alpha"), tg("A08", "alpha"), tg("A12", "alpha", "beta")],
        ("c11_1", "c11_2", "cp11_1", "cp11_2"),
        ("c11_2*cp11_1 = c11_1*cp11_2",),
    )
    fam(
        "A16",
        [tg("A02"), tg("A03"), tg("A06", "alpha"), tg("A08", "alpha", cond=("alpha + 2",)), tg("A12", "alpha", "beta"), tg("A14", "alpha")],
        ("c11_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2"),
        ("2*cp11_1 = 3*cp12_2", "2*cp21_2 = cp12_2"),
    )
    fam(
        "A12",
        [
            tg("A03"),
            tg("A06", "alpha", cond=("alpha + 2",)),
            tg("A11", "alpha", "beta"),
            tg("A14", "alpha"),
            tg("A15", "alpha"),
            tg("A17"),
        ],
        A11_FREE,
        ("c12_2 = c11_1", "c21_2 = c11_1", "c11_2*(cp12_2 - 2*cp21_2) = -c11_1*cp11_2", "2*cp12_2 - cp21_2 = cp11_1"),
    )
    fam(
        "A13",
        [tg("A06", "alpha"), tg("A08", "alpha"), tg("A10", "alpha", "beta"), tg("A12", "alpha", "beta")],
        ("c11_1", "c11_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2", "cp22_2"),
        ("cp12_2 = cp21_2",),
    )
    fam(
        "A15",
        [tg("A03"), tg("A06", "alpha", cond=("alpha + 2",)), tg("A12", "alpha", "beta"), tg("A14", "alpha")],
        ("c11_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2"),
        ("2*cp12_2 - cp21_2 = cp11_1",),
    )
    fam(
        "A10",
        [tg("A06", "alpha"), tg("A08", "alpha"), tg("A12", "alpha", "beta", cond=("beta - alpha",))],
        A10_FREE,
        ("c12_2 = c21_2", "cp12_2 = cp21_2", "c22_2*cp12_2 = c12_2*cp22_2"),
    )
    fam(
        "A11",
        [tg("A03"), tg("A06", "alpha", cond=("alpha + 2",)), tg("A14", "alpha")],
        A11_FREE,
        ("c11_1 = c12_2", "c21_2 = c11_1", "2*cp12_2 - cp21_2 = cp11_1"),
    )


def _figure(b: Builder) -> None:
    for k in ("A01", "A05", "A17"):
        b.node(k, 4)
    b.node("A10", 4, args=("alpha", "beta"))
    b.node("A11", 4, args=("alpha", "beta"))
    b.node("A13", 4, args=("alpha",))
    b.node("A15", 4, args=("delta",), label="A15^{delta!=1/2}")
    for k in ("A07", "A09", "A02", "A03"):
        b.node(k, 3)
    b.node("A06", 3, args=("beta",), where=("beta + 1",), label="A06^{beta!=-1}")
    b.node("A08", 3, args=("beta",), where=("beta + 1", "beta + 2"), label="A08^{beta!=-1,-2}")
    b.node("A12", 3, args=("alpha", "beta"))
    b.node("A14", 3, args=("alpha",))
    b.node("A16", 3, args=("alpha",))
    b.node("A04", 2)
    b.node("A06^-1", 2, args=("-1",))
    b.node("A08^-2", 2, args=("-2",))
    b.node("A18", 2, args=("alpha",))
    b.node("C8", 0)
    edges = [
        ("A10", "A12", ""),
        ("A10", "A14", ""),
        ("A10", "A04", ""),
        ("A10", "A18", ""),
        ("A11", "A18", ""),
        ("A11", "A12", ""),
        ("A11", "A04", ""),
        ("A13", "A18", ""),
        ("A13", "A14", ""),
        ("A13", "A03", ""),
        ("A15", "A06", "(delta,beta)=(0,-2)"),
        ("A15", "A02", "delta=1"),
        ("A15", "A08", "beta=1/(delta-1)"),
        ("A15", "A18", ""),
        ("A17", "A08", "beta=0"),
        ("A17", "A18", ""),
        ("A12", "A18", ""),
        ("A14", "A18", ""),
        ("A16", "A08^-2", ""),
        ("A16", "A18", ""),
        ("A05", "A08", "beta=0"),
        ("A05", "A06", "beta=0"),
        ("A01", "A02", ""),
        ("A01", "A03", ""),
        ("A02", "A04", ""),
        ("A03", "A04", ""),
        ("A06", "A04", ""),
        ("A08", "A04", ""),
        ("A07", "A04", ""),
        ("A07", "A06^-1", ""),
        ("A09", "A04", ""),
        ("A09", "A08^-2", ""),
        ("A04", "C8", ""),
        ("A06^-1", "C8", ""),
        ("A08^-2", "C8", ""),
        ("A18", "C8", ""),
    ]
    for s, t, label in edges:
        b.edge(s, t, label)


def anti_pre_lie_poisson() -> Builder:
    b = Builder("anti-pre-lie-poisson")
    _entries(b)
    _witnesses(b)
    _nondegen(b)
    _figure(b)
    b.claim("A05", "A10*", "A11*")
    return b
