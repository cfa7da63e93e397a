import copy
import json

import pytest

from degenlab.algebra import check_variety
from degenlab.catalog import (
    FORMAT,
    AutFamily,
    ParseError,
    SchemaError,
    builtin_catalog,
    catalog_from_data,
    catalog_hash,
    catalog_to_data,
    dumps_catalog,
    load_catalog,
    loads_catalog,
    save_catalog,
    verify_automorphisms,
    ZERO_ID,
)
from degenlab.degen.instances import entry_constants, parse_args

# table sizes counted while transcribing, then checked against the source text
TABLE_ROWS = {
    ("leibniz-poisson", "primary"): 4,
    ("leibniz-poisson", "family"): 3,
    ("transposed-leibniz-poisson", "primary"): 9,
    ("transposed-leibniz-poisson", "family"): 2,
    ("novikov-poisson", "primary"): 17,
    ("novikov-poisson", "family"): 12,
    ("comm-pre-lie", "primary"): 27,
    ("comm-pre-lie", "family"): 9,
    ("anti-pre-lie-poisson", "primary"): 33,
    ("anti-pre-lie-poisson", "family"): 27,
    ("pre-poisson", "primary"): 2,
}


def test_transposed_leibniz_poisson_entries(catalog):
    ids = [e.id for e in catalog.entries_of("transposed-leibniz-poisson")]
    assert ids == ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", ZERO_ID]


def test_zero_pair_in_every_variety(catalog):
    for v in catalog.variety_names():
        e = catalog.entry(v, ZERO_ID)
        assert all(p.is_zero() for p in e.pair.constants())


def test_table_row_counts(catalog):
    for (variety, group), n in TABLE_ROWS.items():
        rows = [w for w in catalog.witnesses_of(variety) if w.group == group and w.origin == "table"]
        assert len(rows) == n, (variety, group)


def test_ids_unique_per_variety(catalog):
    for v in catalog.variety_names():
        ids = [e.id for e in catalog.entries_of(v)]
        assert len(ids) == len(set(ids))
    assert len({w.id for w in catalog.witnesses}) == len(catalog.witnesses)
    assert len({r.id for r in catalog.nondegen}) == len(catalog.nondegen)


def test_every_entry_in_its_variety(catalog):
    for e in catalog.entries:
        assert check_variety(e.pair, catalog.variety(e.variety)).passed, e.id


def test_named_entries_present(catalog):
    want = {
        "leibniz-poisson": [f"L{i}" for i in range(1, 8)],
        "transposed-leibniz-poisson": [f"T{i}" for i in range(1, 9)],
        "novikov-poisson": [f"N{i:02d}" for i in range(1, 15)],
        "comm-pre-lie": [f"C{i:02d}" for i in range(1, 18)],
        "anti-pre-lie-poisson": [f"A{i:02d}" for i in range(1, 19)],
        "pre-poisson": ["P09", "P10"],
        "zinbiel": ["Z1"],
        "comm-assoc": ["A01", "A02", "A03", "A04"],
    }
    for v, ids in want.items():
        have = {e.id for e in catalog.entries_of(v)}
        assert set(ids) <= have, v


def test_a15_half_equals_a16_zero(catalog):
    a15 = catalog.entry("anti-pre-lie-poisson", "A15")
    a16 = catalog.entry("anti-pre-lie-poisson", "A16")
    assert entry_constants(a15, parse_args(["1/2"], ())) == entry_constants(a16, parse_args(["0"], ()))


# file format --------------------------------------------------------------------


def test_round_trip_is_identity(catalog, tmp_path):
    path = tmp_path / "catalog.json"
    save_catalog(catalog, path)
    again = load_catalog(path)
    assert again == catalog
    assert dumps_catalog(again) == path.read_text(encoding="utf-8")
    assert catalog_hash(again) == catalog_hash(catalog)


def test_format_tag(catalog):
    assert catalog_to_data(catalog)["format"] == FORMAT


def test_three_by_three_matrix_rejected(catalog):
    data = catalog_to_data(catalog)
    data["witness"][0]["basis"] = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    with pytest.raises(SchemaError) as info:
        catalog_from_data(data)
    assert info.value.field == "witness[0].basis"


def test_duplicate_l5_rejected(catalog):
    data = catalog_to_data(catalog)
    l5 = next(a for a in data["algebra"] if a["variety"] == "leibniz-poisson" and a["id"] == "L5")
    data["algebra"].append(copy.deepcopy(l5))
    with pytest.raises(SchemaError) as info:
        catalog_from_data(data)
    assert info.value.field.endswith(".id") and "L5" in str(info.value)


def test_unknown_key_rejected(catalog):
    data = catalog_to_data(catalog)
    data["algebra"][0]["colour"] = "blue"
    with pytest.raises(SchemaError):
        catalog_from_data(data)


def test_unknown_reference_rejected(catalog):
    data = catalog_to_data(catalog)
    data["witness"][0]["target"] = "Q99"
    with pytest.raises(SchemaError) as info:
        catalog_from_data(data)
    assert info.value.field == "witness[0].target"


def test_bad_expression_rejected(catalog):
    data = catalog_to_data(catalog)
    data["algebra"][1]["dot"] = {"11": "e1 +* e2"}
    with pytest.raises(SchemaError):
        catalog_from_data(data)


def test_parse_error_has_position():
    text = '{\n  "format": "degenlab-catalog/1",\n  "variety": [,]\n}\n'
    with pytest.raises(ParseError) as info:
        loads_catalog(text)
    assert (info.value.line, info.value.column) == (3, 15)


def test_duplicate_json_key_is_parse_error():
    text = '{"format": "degenlab-catalog/1", "variety": [], "algebra": [], "algebra": []}'
    with pytest.raises(ParseError):
        loads_catalog(text)


def test_minimal_file():
    text = json.dumps(
        {
            "format": FORMAT,
            "variety": [{"name": "v", "title": "t", "dot_laws": ["x*y - y*x"], "circ_laws": [], "compat_laws": []}],
            "algebra": [{"variety": "v", "id": "X", "dot": {"11": "e1"}}],
        }
    )
    cat = loads_catalog(text)
    assert [e.id for e in cat.entries] == ["X"]


# automorphisms ------------------------------------------------------------------


def test_a02_diagonal_family():
    rep = verify_automorphisms("A02")
    assert rep.ok and rep.parameter_count == rep.derivation_dimension == 1


def test_identity_is_automorphism_everywhere():
    ident = AutFamily((), (("1", "0"), ("0", "1")), label="identity")
    for base in ("A01", "A02", "A03", "A04"):
        rep = verify_automorphisms(base, families=[ident])
        assert rep.families[0].ok


def test_swap_on_a02_fails():
    swap = AutFamily((), (("0", "1"), ("1", "0")), label="swap")
    rep = verify_automorphisms("A02", families=[swap])
    assert not rep.families[0].preserves


@pytest.mark.parametrize("base,dim", [("A01", 0), ("A02", 1), ("A03", 1), ("A04", 2)])
def test_listed_families_match_derivations(base, dim):
    rep = verify_automorphisms(base)
    assert rep.ok
    assert rep.derivation_dimension == dim


def test_singular_family_is_not_invertible():
    bad = AutFamily(("xi",), (("xi", "0"), ("0", "0")), label="degenerate")
    rep = verify_automorphisms("A04", families=[bad])
    assert not rep.families[0].ok


def test_automorphisms_only_for_base_algebras():
    with pytest.raises(ValueError):
        verify_automorphisms("L5")


def test_builtin_is_cached():
    assert builtin_catalog() is builtin_catalog()
