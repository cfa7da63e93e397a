"""Reading and writing catalog files (JSON text validated by the shipped schema)."""

from __future__ import annotations

import hashlib
import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple

import jsonschema

from ..algebra.closedset import ClosedSetSpec
from ..algebra.identities import IdentitySyntaxError, VarietyDef, VarietyIdentity
from ..algebra.structure import CIRC, DIM, DOT, StructurePair, flat_index, format_vector
from ..exact import ExprSyntaxError
from .models import (
    AutFamily,
    Catalog,
    CatalogEntry,
    ComponentClaim,
    Figure,
    FigureEdge,
    FigureNode,
    NonDegenRow,
    Radical,
    TargetSpec,
    WitnessRow,
)

FORMAT = "degenlab-catalog/1"
SCHEMA_PATH = Path(__file__).with_name("catalog.schema.json")


class CatalogFileError(ValueError):
    """Base class of catalog file problems."""


class ParseError(CatalogFileError):
    """The file is not well-formed text of the format."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SchemaError(CatalogFileError):
    """The file parses but a field violates the schema or a semantic rule."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field


@lru_cache(maxsize=1)
def catalog_schema() -> Dict[str, Any]:
    return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))


def _path(parts: Sequence[Any]) -> str:
    out = ""
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or "<root>"


# writing ------------------------------------------------------------------------


def _table(pair: StructurePair, product: int) -> Dict[str, str]:
    out = {}
    tab = pair.table(product)
    for i in range(DIM):
        for j in range(DIM):
            text = format_vector([tab[flat_index(i, j, k)] for k in range(DIM)])
            if text != "0":
                out[f"{i + 1}{j + 1}"] = text
    return out


def _drop_empty(d: Dict[str, Any]) -> Dict[str, Any]:
    return {k: v for k, v in d.items() if v not in ((), [], {}, "", None)}


def _entry_data(e: CatalogEntry) -> Dict[str, Any]:
    autos = [
        _drop_empty({"params": list(a.params), "rows": [list(r) for r in a.rows], "exclusions": list(a.exclusions), "label": a.label})
        for a in e.automorphisms
    ]
    return _drop_empty(
        {
            "variety": e.variety,
            "id": e.id,
            "label": e.label,
            "params": list(e.pair.params.names),
            "exclusions": [str(p) for p in e.pair.params.exclusions],
            "dot": _table(e.pair, DOT),
            "circ": _table(e.pair, CIRC),
            "notes": list(e.notes),
            "automorphisms": autos,
        }
    )


def _witness_data(w: WitnessRow) -> Dict[str, Any]:
    return _drop_empty(
        {
            "id": w.id,
            "variety": w.variety,
            "source": w.source,
            "target": w.target,
            "basis": [list(r) for r in w.basis],
            "source_args": list(w.source_args),
            "target_args": list(w.target_args),
            "symbols": list(w.symbols),
            "conditions": list(w.conditions),
            "solve": list(w.solve),
            "radicals": [{"root": r.root, "radicand": r.radicand, "solve_for": r.solve_for} for r in w.radicals],
            "origin": w.origin,
            "group": w.group,
            "note": w.note,
        }
    )


def _target_data(t: TargetSpec) -> Dict[str, Any]:
    return _drop_empty(
        {"id": t.id, "args": list(t.args), "symbols": list(t.symbols), "conditions": list(t.conditions), "any": [list(g) for g in t.any]}
    )


def _nondegen_data(r: NonDegenRow) -> Dict[str, Any]:
    d = _drop_empty(
        {
            "id": r.id,
            "variety": r.variety,
            "source": r.source,
            "source_args": list(r.source_args),
            "conditions": list(r.conditions),
            "free": list(r.closed_set.free),
            "relations": [str(p) for p in r.closed_set.relations],
            "params": list(r.closed_set.params),
            "targets": [_target_data(t) for t in r.targets],
            "origin": r.origin,
            "note": r.note,
        }
    )
    d.setdefault("free", [])
    if r.family:
        d["family"] = True
    return d


def catalog_to_data(cat: Catalog) -> Dict[str, Any]:
    return {
        "format": FORMAT,
        "variety": [
            {
                "name": v.name,
                "title": v.title,
                "dot_laws": [x.text for x in v.dot_laws],
                "circ_laws": [x.text for x in v.circ_laws],
                "compat_laws": [x.text for x in v.compat_laws],
                "dot_role": v.dot_role,
                "circ_role": v.circ_role,
            }
            for v in cat.varieties
        ],
        "algebra": [_entry_data(e) for e in cat.entries],
        "witness": [_witness_data(w) for w in cat.witnesses],
        "nondegen": [_nondegen_data(r) for r in cat.nondegen],
        "figure": [
            {
                "variety": f.variety,
                "nodes": [
                    _drop_empty({"key": n.key, "entry": n.entry, "level": n.level, "args": list(n.args), "where": list(n.where), "label": n.label})
                    for n in f.nodes
                ],
                "edges": [_drop_empty({"source": e.source, "target": e.target, "label": e.label}) for e in f.edges],
            }
            for f in cat.figures
        ],
        "components": [{"variety": c.variety, "claim": list(c.claim)} for c in cat.components],
    }


def dumps_catalog(cat: Catalog) -> str:
    return json.dumps(catalog_to_data(cat), indent=1, ensure_ascii=False) + "\n"


def save_catalog(cat: Catalog, path) -> None:
    Path(path).write_text(dumps_catalog(cat), encoding="utf-8", newline="\n")


def catalog_hash(cat: Catalog) -> str:
    """SHA-256 of the canonical file text."""
    return hashlib.sha256(dumps_catalog(cat).encode("utf-8")).hexdigest()


# reading ------------------------------------------------------------------------


def _reject_duplicate_keys(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for k, v in pairs:
        if k in out:
            raise ValueError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _decode(text: str) -> Any:
    try:
        return json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    except ValueError as exc:
        # duplicate key: the decoder gives no position, so report the first occurrence of the key
        key = str(exc).split("'")[1] if "'" in str(exc) else ""
        line, col = _locate(text, f'"{key}"', second=True)
        raise ParseError(str(exc), line, col) from None


def _locate(text: str, needle: str, second: bool = False) -> Tuple[int, int]:
    pos = text.find(needle)
    if second and pos >= 0:
        nxt = text.find(needle, pos + 1)
        pos = nxt if nxt >= 0 else pos
    if pos < 0:
        return 1, 1
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _validate(data: Any) -> None:
    validator = jsonschema.Draft202012Validator(catalog_schema())
    errors = sorted(validator.iter_errors(data), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        err = errors[0]
        raise SchemaError(_path(list(err.absolute_path)), err.message)


class _Builder:
    def __init__(self, data: Dict[str, Any]) -> None:
        self.data = data

    def _guard(self, field: str, fn):
        try:
            return fn()
        except (ExprSyntaxError, IdentitySyntaxError, ValueError) as exc:
            raise SchemaError(field, str(exc)) from None

    def varieties(self) -> Tuple[VarietyDef, ...]:
        out, seen = [], set()
        for k, v in enumerate(self.data.get("variety", [])):
            f = f"variety[{k}]"
            if v["name"] in seen:
                raise SchemaError(f"{f}.name", f"duplicate variety {v['name']!r}")
            seen.add(v["name"])
            laws = {
                key: self._guard(f"{f}.{key}", lambda key=key: tuple(VarietyIdentity.parse(x) for x in v[key]))
                for key in ("dot_laws", "circ_laws", "compat_laws")
            }
            out.append(
                VarietyDef(
                    v["name"],
                    v["title"],
                    laws["dot_laws"],
                    laws["circ_laws"],
                    laws["compat_laws"],
                    v.get("dot_role", "commutative associative"),
                    v.get("circ_role", ""),
                )
            )
        return tuple(out)

    def entries(self, varieties: set) -> Tuple[CatalogEntry, ...]:
        out, seen = [], set()
        for k, a in enumerate(self.data.get("algebra", [])):
            f = f"algebra[{k}]"
            if a["variety"] not in varieties:
                raise SchemaError(f"{f}.variety", f"unknown variety {a['variety']!r}")
            key = (a["variety"], a["id"])
            if key in seen:
                raise SchemaError(f"{f}.id", f"duplicate id {a['id']!r} in variety {a['variety']!r}")
            seen.add(key)
            pair = self._guard(
                f,
                lambda a=a: StructurePair.from_tables(a.get("dot"), a.get("circ"), a.get("params", ()), a.get("exclusions", ())),
            )
            autos = tuple(
                AutFamily(tuple(x.get("params", ())), tuple(tuple(r) for r in x["rows"]), tuple(x.get("exclusions", ())), x.get("label", ""))
                for x in a.get("automorphisms", [])
            )
            out.append(CatalogEntry(a["variety"], a["id"], pair, a.get("label", ""), tuple(a.get("notes", ())), autos))
        return tuple(out)

    def _check_ref(self, field: str, ids: set, variety: str, id: str) -> None:
        if (variety, id) not in ids:
            raise SchemaError(field, f"no algebra {id!r} in variety {variety!r}")

    def witnesses(self, ids: set) -> Tuple[WitnessRow, ...]:
        out, seen = [], set()
        for k, w in enumerate(self.data.get("witness", [])):
            f = f"witness[{k}]"
            if w["id"] in seen:
                raise SchemaError(f"{f}.id", f"duplicate witness id {w['id']!r}")
            seen.add(w["id"])
            self._check_ref(f"{f}.source", ids, w["variety"], w["source"])
            self._check_ref(f"{f}.target", ids, w["variety"], w["target"])
            out.append(
                WitnessRow(
                    id=w["id"],
                    variety=w["variety"],
                    source=w["source"],
                    target=w["target"],
                    basis=tuple(tuple(r) for r in w["basis"]),
                    source_args=tuple(w.get("source_args", ())),
                    target_args=tuple(w.get("target_args", ())),
                    symbols=tuple(w.get("symbols", ())),
                    conditions=tuple(w.get("conditions", ())),
                    solve=tuple(w.get("solve", ())),
                    radicals=tuple(Radical(r["root"], r["radicand"], r["solve_for"]) for r in w.get("radicals", ())),
                    origin=w.get("origin", "table"),
                    group=w.get("group", "primary"),
                    note=w.get("note", ""),
                )
            )
        return tuple(out)

    def nondegen(self, ids: set) -> Tuple[NonDegenRow, ...]:
        out, seen = [], set()
        for k, r in enumerate(self.data.get("nondegen", [])):
            f = f"nondegen[{k}]"
            if r["id"] in seen:
                raise SchemaError(f"{f}.id", f"duplicate non-degeneration id {r['id']!r}")
            seen.add(r["id"])
            self._check_ref(f"{f}.source", ids, r["variety"], r["source"])
            targets = []
            for j, t in enumerate(r["targets"]):
                self._check_ref(f"{f}.targets[{j}].id", ids, r["variety"], t["id"])
                targets.append(
                    TargetSpec(
                        t["id"],
                        tuple(t.get("args", ())),
                        tuple(t.get("symbols", ())),
                        tuple(t.get("conditions", ())),
                        tuple(tuple(g) for g in t.get("any", ())),
                    )
                )
            closed = self._guard(
                f"{f}.relations", lambda r=r: ClosedSetSpec.parse(r["free"], r.get("relations", ()), r.get("params", ()))
            )
            out.append(
                NonDegenRow(
                    id=r["id"],
                    variety=r["variety"],
                    source=r["source"],
                    targets=tuple(targets),
                    closed_set=closed,
                    source_args=tuple(r.get("source_args", ())),
                    family=bool(r.get("family", False)),
                    conditions=tuple(r.get("conditions", ())),
                    origin=r.get("origin", "table"),
                    note=r.get("note", ""),
                )
            )
        return tuple(out)

    def figures(self, ids: set, varieties: set) -> Tuple[Figure, ...]:
        out = []
        for k, fig in enumerate(self.data.get("figure", [])):
            f = f"figure[{k}]"
            if fig["variety"] not in varieties:
                raise SchemaError(f"{f}.variety", f"unknown variety {fig['variety']!r}")
            keys = set()
            nodes = []
            for j, n in enumerate(fig["nodes"]):
                if n["key"] in keys:
                    raise SchemaError(f"{f}.nodes[{j}].key", f"duplicate node key {n['key']!r}")
                keys.add(n["key"])
                self._check_ref(f"{f}.nodes[{j}].entry", ids, fig["variety"], n["entry"])
                nodes.append(FigureNode(n["key"], n["entry"], n["level"], tuple(n.get("args", ())), tuple(n.get("where", ())), n.get("label", "")))
            edges = []
            for j, e in enumerate(fig["edges"]):
                for end in ("source", "target"):
                    if e[end] not in keys:
                        raise SchemaError(f"{f}.edges[{j}].{end}", f"unknown node {e[end]!r}")
                edges.append(FigureEdge(e["source"], e["target"], e.get("label", "")))
            out.append(Figure(fig["variety"], tuple(nodes), tuple(edges)))
        return tuple(out)

    def claims(self, varieties: set) -> Tuple[ComponentClaim, ...]:
        out = []
        for k, c in enumerate(self.data.get("components", [])):
            if c["variety"] not in varieties:
                raise SchemaError(f"components[{k}].variety", f"unknown variety {c['variety']!r}")
            out.append(ComponentClaim(c["variety"], tuple(c["claim"])))
        return tuple(out)


def catalog_from_data(data: Any) -> Catalog:
    _validate(data)
    b = _Builder(data)
    varieties = b.varieties()
    names = {v.name for v in varieties}
    entries = b.entries(names)
    ids = {(e.variety, e.id) for e in entries}
    return Catalog(varieties, entries, b.witnesses(ids), b.nondegen(ids), b.figures(ids, names), b.claims(names))


def loads_catalog(text: str) -> Catalog:
    return catalog_from_data(_decode(text))


def load_catalog(path) -> Catalog:
    """Read a catalog file; raises ParseError or SchemaError."""
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        line, col = _locate(raw[: exc.start].decode("utf-8", "replace") + "\x00", "\x00")
        raise ParseError("invalid UTF-8", line, col) from None
    return loads_catalog(text)
