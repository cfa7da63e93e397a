"""Commutative pre-Lie algebras and pre-Poisson algebras."""

from __future__ import annotations

from ..models import Radical
from ._dsl import Builder, tg
from .base import A01, A02, A03, A04

C10_FREE = ("c11_1", "c11_2", "c12_2", "c21_2", "cp11_2", "cp12_2")
C12_FREE = ("c11_1", "c11_2", "cp11_2", "cp12_2")
C15_FREE = ("c11_2", "cp11_1", "cp11_2", "cp12_2", "cp21_1", "cp21_2", "cp22_2")
C15_LINEAR = ("cp11_1 = cp21_2", "2*cp21_1 = cp22_2", "cp12_2 = 2*cp11_1")


def _zero_dot_entries(b: Builder, prefix: str) -> None:
    """The eight pre-Lie algebras with zero first product."""
    p = prefix
    b.alg(f"{p}01", circ={"11": "e1 + e2", "21": "e2"})
    b.alg(f"{p}02", circ={"11": "e1 + e2", "12": "e2"})
    b.alg(f"{p}03", circ={"11": "e2"})
    b.alg(f"{p}04", circ={"21": "e1"})
    b.alg(f"{p}05", circ={"11": "e1", "12": "alpha*e2"}, params=("alpha",))
    b.alg(f"{p}06", circ={"11": "e1", "12": "alpha*e2", "21": "e2"}, params=("alpha",))
    b.alg(f"{p}07", circ={"11": "e1", "22": "e2"})
    b.alg(f"{p}08", circ={"11": "e1", "12": "2*e2", "21": "e1/2 + e2", "22": "e2"})


def _zero_dot_witnesses(b: Builder, p: str, origin: str = "table") -> None:
    w = lambda *a, **k: b.wit(*a, origin=origin, **k)
    w(f"{p}01", f"{p}03", "t*e1", "t^2*e2")
    w(f"{p}01", f"{p}06", "e1", "e2/t", targs=("0",))
    w(f"{p}02", f"{p}03", "t*e1", "t^2*e2")
    w(f"{p}02", f"{p}05", "e1", "e2/t", targs=("1",))
    w(f"{p}04", f"{p}03", "e1 + t*e2", "-t^2*e2")
    w(f"{p}05", f"{p}03", "t*e1 + 1/(t*(alpha - 1))*e2", "e2", ("alpha",), cond=("alpha - 1",))
    w(f"{p}06", f"{p}03", "t*e1 + 1/(t*alpha)*e2", "e2", ("alpha",), cond=("alpha",))
    w(f"{p}07", f"{p}05", "e1", "t*e2", targs=("0",))
    w(f"{p}07", f"{p}06", "e1 + e2", "t*e2", targs=("1",))
    w(f"{p}08", f"{p}05", "e2", "-(t/2)*e1 + t*e2", targs=("1/2",))
    w(f"{p}08", f"{p}06", "e1", "t*e2", targs=("2",))


def _zero_dot_families(b: Builder, p: str, origin: str = "table") -> None:
    b.fam(f"{p}05", f"{p}04", "e2", "t*e1", ("1/t",), origin=origin)
    b.fam(f"{p}05", f"{p}02", "e1 + e2", "t*e2", ("t + 1",), origin=origin)
    b.fam(f"{p}06", f"{p}04", "e2", "t*e1", ("1/t",), origin=origin)
    b.fam(f"{p}06", f"{p}01", "e1 + e2", "t*e2", ("t",), origin=origin)


def _zero_dot_nondegen(b: Builder, p: str, origin: str = "table") -> None:
    nd = lambda *a, **k: b.nd(*a, origin=origin, **k)
    nd(f"{p}01", [tg(f"{p}05", "1")], ("cp11_1", "cp11_2", "cp21_2"), ("cp11_1 = cp21_2",))
    nd(f"{p}02", [tg(f"{p}06", "0")], ("cp11_1", "cp11_2", "cp12_2"), ("cp12_2 = cp11_1",))
    nd(
        f"{p}04",
        [tg(f"{p}06", "0"), tg(f"{p}05", "1")],
        ("cp11_1", "cp11_2", "cp21_1", "cp21_2"),
        ("cp11_1 = -cp21_2", "-cp11_2*cp21_1 = cp11_1^2"),
    )
    nd(
        f"{p}05",
        [tg(f"{p}05", "1"), tg(f"{p}06", "0")],
        ("cp11_1", "cp11_2", "cp12_2"),
        ("cp12_2 = alpha*cp11_1",),
        ("alpha",),
        cond=("alpha - 1",),
    )
    nd(
        f"{p}06",
        [tg(f"{p}05", "1"), tg(f"{p}06", "0")],
        ("cp11_1", "cp11_2", "cp12_2", "cp21_2"),
        ("cp12_2 = alpha*cp11_1", "cp21_2 = cp11_1"),
        ("alpha",),
        cond=("alpha",),
    )
    nd(
        f"{p}07",
        [tg(f"{p}06", "alpha", cond=("alpha - 1",)), tg(f"{p}05", "alpha", cond=("alpha",)), tg(f"{p}04")],
        ("cp11_1", "cp11_2", "cp12_2", "cp21_2", "cp22_2"),
        ("cp21_2 = cp12_2",),
    )
    nd(
        f"{p}08",
        [tg(f"{p}06", "alpha", cond=("alpha - 2",)), tg(f"{p}05", "alpha", cond=("2*alpha - 1",)), tg(f"{p}04")],
        ("cp11_1", "cp11_2", "cp12_2", "cp21_1", "cp21_2", "cp22_2"),
        ("2*cp21_1 = cp22_2", "cp11_1 = cp21_2", "2*cp11_1 = cp12_2"),
    )


def _zero_dot_figure(b: Builder, p: str) -> None:
    b.node(f"{p}05", 3, args=("alpha",), where=("alpha - 1",), label=f"{p}05^{{alpha!=1}}")
    b.node(f"{p}06", 3, args=("alpha",), where=("alpha",), label=f"{p}06^{{alpha!=0}}")
    b.node(f"{p}06^0", 2, args=("0",))
    b.node(f"{p}05^1", 2, args=("1",))
    b.node(f"{p}03", 2)
    b.node("C8", 0)
    b.edge(f"{p}08", f"{p}05", "alpha=1/2")
    b.edge(f"{p}08", f"{p}06", "alpha=2")
    b.edge(f"{p}07", f"{p}06", "alpha=1")
    b.edge(f"{p}07", f"{p}05", "alpha=0")
    b.edge(f"{p}02", f"{p}05^1")
    b.edge(f"{p}01", f"{p}06^0")
    for k in ("06", "05", "04", "02", "01"):
        b.edge(f"{p}{k}", f"{p}03")
    for k in ("06^0", "05^1", "03"):
        b.edge(f"{p}{k}", "C8")


def commutative_pre_lie() -> Builder:
    b = Builder("comm-pre-lie")
    _zero_dot_entries(b, "C")
    b.alg("C09", A01)
    b.alg("C10", A02, {"12": "alpha*e2"}, ("alpha",))
    b.alg("C11", A02, {"22": "e2"})
    b.alg("C12", A03, {"12": "alpha*e2"}, ("alpha",))
    b.alg("C13", A03, {"22": "e2"})
    b.alg("C14", A04, {"11": "e1", "12": "2*e2"})
    b.alg(
        "C15",
        A04,
        {"11": "alpha*e1", "12": "2*alpha*e2", "21": "e1 + alpha*e2", "22": "2*e2"},
        ("alpha",),
        notes=("C15^alpha ~ C15^-alpha via E1 = -e1, E2 = e2",),
    )
    b.alg("C16", A04, {"11": "e1", "12": "2*e2", "21": "e2"})
    b.alg("C17", A04, {"11": "alpha*e2"}, ("alpha",))
    b.alg("C8", label="C^8")

    _zero_dot_witnesses(b, "C")
    b.wit("C09", "C10", "e1 + e2", "t*e1", targs=("0",))
    b.wit("C09", "C12", "e1", "t*e2", targs=("0",))
    b.wit("C11", "C05", "e2", "t*e1", targs=("0",))
    b.wit("C11", "C10", "e1", "t*e2", targs=("0",))
    b.wit("C13", "C05", "e2", "t*e1", targs=("0",))
    b.wit("C13", "C12", "e1", "t*e2", targs=("0",))
    b.wit("C14", "C05", "e1", "e2/t", targs=("2",))
    b.wit("C15", "C05", "e2/2", "t*e1", ("alpha",), ("1/2",))
    b.wit("C16", "C06", "e1", "e2/t", targs=("2",))
    b.wit("C10", "C17", "t*e1 + e2", "t*e2", ("alpha",), ("alpha",))
    b.wit("C12", "C17", "t*e1 + e2", "t^2*e1", ("alpha",), ("-alpha",))
    b.wit("C11", "C17", "t*e1 + beta*t*e2", "beta*t^2*e2", targs=("alpha",), cond=("beta",), solve=("alpha",))
    b.wit("C13", "C17", "-t*e1 + beta*t*e2", "beta*t^2*e2", targs=("alpha",), cond=("beta",), solve=("alpha",))
    b.wit("C14", "C17", "t*e1 + alpha*t*e2", "t^2*e2", targs=("alpha",))
    b.wit(
        "C15",
        "C17",
        "t*e1 - (alpha*t - t*r)*e2",
        "t^2*e2",
        ("alpha",),
        ("beta",),
        radicals=(Radical("r", "alpha^2 + beta", "beta"),),
        note="r is a square root of alpha^2 + beta",
    )
    b.wit("C16", "C17", "t*e1 + (alpha*t/2)*e2", "t^2*e2", targs=("alpha",))

    _zero_dot_families(b, "C")
    b.fam("C10", "C04", "e2", "t*e1", ("1/t",))
    b.fam("C12", "C04", "e2", "t*e1", ("1/t",))
    b.fam("C15", "C16", "t*e1", "t^2*e2", ("1/t",))
    b.fam("C15", "C08", "t*e1", "e2/2", ("1/t",))
    b.fam("C17", "C03", "e1", "e2/t", ("1/t",))

    _zero_dot_nondegen(b, "C")
    b.nd(
        "C10",
        [tg("C17", "beta", cond=("beta - alpha",)), tg("C06", "0"), tg("C05", "1"), tg("C03")],
        C10_FREE,
        ("c12_2 = c11_1", "c21_2 = c11_1", "cp12_2 = alpha*c11_1", "cp11_2 = alpha*c11_2"),
        ("alpha",),
    )
    b.nd(
        "C12",
        [tg("C17", "beta", cond=("beta + alpha",)), tg("C06", "0"), tg("C05", "1"), tg("C03")],
        C12_FREE,
        ("cp12_2 = alpha*c11_1", "cp11_2 = -alpha*c11_2"),
        ("alpha",),
    )
    b.nd(
        "C09",
        [tg("C17", "alpha", cond=("alpha",)), tg("C05", "alpha"), tg("C06", "alpha"), tg("C03")],
        ("c11_1", "c11_2", "c12_2", "c21_2", "c22_2"),
        ("c12_2 = c21_2",),
    )
    b.nd(
        "C11",
        [tg("C04"), tg("C05", "alpha", cond=("alpha",)), tg("C06", "alpha"), tg("C12", "alpha"), tg("C10", "alpha", cond=("alpha",))],
        ("c11_1", "c11_2", "c12_2", "c21_2", "cp11_2", "cp12_2", "cp21_2", "cp22_2"),
        ("c12_2 = c11_1", "c21_2 = c11_1", "cp12_2 = cp21_2", "cp12_2^2 = cp11_2*cp22_2", "c11_2*cp22_2 = c11_1*cp21_2"),
    )
    b.nd(
        "C13",
        [tg("C04"), tg("C05", "alpha", cond=("alpha",)), tg("C06", "alpha"), tg("C12", "alpha", cond=("alpha",)), tg("C10", "alpha")],
        ("c11_1", "c11_2", "cp11_2", "cp12_2", "cp21_2", "cp22_2"),
        ("cp12_2 = cp21_2", "cp11_2*cp22_2 = cp12_2^2", "c11_2*cp22_2 = -c11_1*cp12_2"),
    )
    b.nd(
        "C14",
        [tg("C05", "alpha", cond=("alpha - 2",)), tg("C06", "alpha"), tg("C12", "alpha"), tg("C10", "alpha"), tg("C04")],
        ("c11_2", "cp11_1", "cp11_2", "cp12_2"),
        ("cp12_2 = 2*cp11_1",),
    )
    b.nd(
        "C15",
        [tg("C05", "beta", cond=("2*beta - 1",)), tg("C06", "beta"), tg("C12", "beta"), tg("C10", "beta"), tg("C04")],
        C15_FREE,
        C15_LINEAR + ("cp11_1^2 = cp11_2*cp21_1 + alpha^2*c11_2*cp21_1",),
        ("alpha",),
    )
    b.nd(
        "C16",
        [tg("C05", "alpha"), tg("C06", "alpha", cond=("alpha - 2",)), tg("C12", "alpha"), tg("C10", "alpha"), tg("C04")],
        ("c11_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2"),
        ("cp21_2 = cp11_1", "cp12_2 = 2*cp11_1"),
    )

    b.nd("C05", [tg("C17", "alpha"), tg("C06", "alpha")], ("cp11_1", "cp11_2", "cp12_2"), family=True)
    b.nd("C06", [tg("C17", "alpha"), tg("C05", "alpha")], ("cp11_1", "cp11_2", "cp12_2", "cp21_2"), ("cp21_2 = cp11_1",), family=True)
    b.nd("C10", [tg("C05", "alpha"), tg("C06", "alpha"), tg("C12", "alpha")], C10_FREE, ("c12_2 = c11_1", "c21_2 = c11_1"), family=True)
    b.nd(
        "C12",
        [tg("C05", "alpha"), tg("C06", "alpha"), tg("C10", "alpha")],
        C12_FREE,
        ("c11_1*cp11_2 = -c11_2*cp12_2",),
        family=True,
    )
    b.nd(
        "C15",
        [tg("C05", "alpha", cond=("2*alpha - 1",)), tg("C06", "alpha", cond=("alpha - 2",)), tg("C12", "alpha"), tg("C10", "alpha"), tg("C04")],
        C15_FREE,
        C15_LINEAR,
        family=True,
    )
    b.nd(
        "C17",
        [tg("C05", "alpha"), tg("C06", "alpha")],
        ("c11_2", "cp11_2", "cp12_2", "cp21_2", "cp22_2"),
        ("cp12_2 = cp21_2", "cp22_2*cp11_2 = cp12_2^2"),
        family=True,
    )

    for k in ("C07", "C08", "C11", "C13", "C14", "C16", "C09"):
        b.node(k, 4)
    b.node("C15", 4, args=("alpha",))
    for k in ("C01", "C02", "C04"):
        b.node(k, 3)
    b.node("C10", 3, args=("alpha",))
    b.node("C12", 3, args=("alpha",))
    b.node("C17", 2, args=("alpha",))
    _zero_dot_figure(b, "C")
    edges = [
        ("C15", "C05", "alpha=1/2"),
        ("C15", "C17", ""),
        ("C14", "C17", ""),
        ("C14", "C05", "alpha=2"),
        ("C16", "C17", ""),
        ("C16", "C06", "alpha=2"),
        ("C09", "C10", "alpha=0"),
        ("C09", "C12", "alpha=0"),
        ("C11", "C05", "alpha=0"),
        ("C11", "C10", "alpha=0"),
        ("C11", "C17", ""),
        ("C13", "C12", "alpha=0"),
        ("C13", "C05", "alpha=0"),
        ("C13", "C17", ""),
        ("C12", "C17", "alpha=-beta"),
        ("C10", "C17", "alpha=beta"),
        ("C17", "C8", ""),
    ]
    for s, t, label in edges:
        b.edge(s, t, label)
    b.claim("C07", "C09", "C11", "C13", "C14", "C05*", "C06*", "C10*", "C12*", "C15*", "C17*")
    return b


def pre_poisson() -> Builder:
    b = Builder("pre-poisson")
    _zero_dot_entries(b, "P")
    b.alg("P09", {"11": "e2"}, {"11": "alpha*e2"}, ("alpha",), complete=False)
    b.alg("P10", {"11": "e2"}, {"11": "e1", "12": "e2", "21": "e2"}, complete=False)
    b.alg("C8", label="C^8")

    note = "zero-dot pre-Lie row"
    _zero_dot_witnesses(b, "P", origin="shared")
    b.wit("P10", "P09", "t*e1 + alpha*t*e2", "t^2*e2", targs=("alpha",))
    b.wit("P10", "P06", "e1", "e2/t", targs=("1",))
    _zero_dot_families(b, "P", origin="shared")
    b.fam("P09", "P03", "e1", "e2/t", ("1/t",), origin="added", note="same tables as the commutative pre-Lie family C17")

    _zero_dot_nondegen(b, "P", origin="shared")
    b.nd("P05", [tg("P09", "alpha"), tg("P06", "alpha")], ("cp11_1", "cp11_2", "cp12_2"), family=True, origin="shared", note=note)
    b.nd(
        "P06",
        [tg("P09", "alpha"), tg("P05", "alpha")],
        ("cp11_1", "cp11_2", "cp12_2", "cp21_2"),
        ("cp21_2 = cp11_1",),
        family=True,
        origin="shared",
        note=note,
    )
    b.nd(
        "P10",
        [tg("P04"), tg("P05", "alpha"), tg("P06", "alpha", cond=("alpha - 1",))],
        ("c11_2", "cp11_1", "cp11_2", "cp12_2", "cp21_2"),
        ("cp12_2 = cp11_1", "cp21_2 = cp11_1"),
        note="e1 acts on the line of e2 by the scalar of its own square",
    )

    b.node("P07", 4)
    b.node("P08", 4)
    b.node("P10", 4)
    for k in ("P01", "P02", "P04"):
        b.node(k, 3)
    b.node("P09", 2, args=("alpha",))
    _zero_dot_figure(b, "P")
    b.edge("P10", "P06", "alpha=1")
    b.edge("P09", "C8")
    b.edge("P10", "P09")
    b.claim("P07", "P08", "P10", "P05*", "P06*")
    return b
