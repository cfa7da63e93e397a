from dataclasses import replace

import pytest

from degenlab.algebra import ClosedSetSpec, ParamSpec, StructurePair
from degenlab.catalog import WitnessRow
from degenlab.degen import (
    MismatchAt,
    NotInvariant,
    check_invariance,
    check_witness,
    componentwise_filter,
    find_invariant_orientation,
    repair_candidates,
    verify_degeneration,
    verify_nondegeneration,
)
from degenlab.degen.instances import entry_constants, parse_args
from degenlab.exact import PoleAtZero
from degenlab.geometry import consistency_conflicts

R_L4 = ClosedSetSpec.parse(("c11_1", "c11_2", "c12_2", "c21_2", "c22_2"), ("c12_2 = c21_2",))
ERRATUM = "novikov-poisson:N07^{t + alpha,alpha}->N08^{alpha,alpha}"


def witness(catalog, id):
    return next(w for w in catalog.witnesses if w.id == id)


def nondegen(catalog, id):
    return next(r for r in catalog.nondegen if r.id == id)


def self_row(variety, id):
    return WitnessRow(f"{variety}:{id}->{id}", variety, id, id, (("1", "0"), ("0", "1")))


# verify_degeneration ----------------------------------------------------------------


def test_l4_to_l5_zero(catalog):
    cert = verify_degeneration(catalog, witness(catalog, "leibniz-poisson:L4->L5^{0}"))
    assert cert.basis == (("1", "1"), ("0", "t"))
    assert cert.genericity == ()


def test_identity_basis_degenerates_to_itself(catalog):
    for variety, id in (("leibniz-poisson", "L4"), ("novikov-poisson", "N03"), ("pre-poisson", "P07")):
        verify_degeneration(catalog, self_row(variety, id))


def test_broken_basis_rejected(catalog):
    row = witness(catalog, "leibniz-poisson:L4->L5^{0}")
    with pytest.raises((PoleAtZero, MismatchAt)):
        verify_degeneration(catalog, row, basis=(("1", "1"), ("0", "1/t")))


def test_family_witness_with_parametric_index(catalog):
    cert = verify_degeneration(catalog, witness(catalog, "leibniz-poisson:L5^{1/t}->L2"))
    assert cert.samples == ()


def test_symbolic_witness_sampled(catalog):
    cert = verify_degeneration(catalog, witness(catalog, "leibniz-poisson:L5^{alpha}->L7^{alpha}"), samples=3)
    assert len({dict(s)["alpha"] for s in cert.samples}) >= 3


# check_witness and repair -----------------------------------------------------------------


def test_sign_erratum_repaired(catalog):
    out = check_witness(catalog, witness(catalog, ERRATUM))
    assert out.status == "errata-candidate"
    assert out.error.startswith("MismatchAt")
    assert out.repaired.basis == (("1", "1"), ("t", "0"))
    assert out.repaired.origin == "repaired"


def test_repair_disabled_reports_failure(catalog):
    out = check_witness(catalog, witness(catalog, ERRATUM), repair=False)
    assert out.status == "fail" and out.certificate is None


def test_planted_sign_error_recovered(catalog):
    row = witness(catalog, "leibniz-poisson:L6^{alpha}->L7^{-alpha}")
    broken = replace(row, basis=(("t", "1/t"), ("0", "1")))
    out = check_witness(catalog, broken)
    assert out.status == "errata-candidate"
    verify_degeneration(catalog, out.repaired)


def test_repair_candidates_bounded():
    one = list(repair_candidates((("1", "0"), ("0", "t")), depth=1))
    assert len(one) == 6
    assert (("-(1)", "0"), ("0", "t")) in one
    two = list(repair_candidates((("1", "0"), ("0", "t")), depth=2))
    assert len(two) == 6 + 9


def test_every_witness_row_verified_or_repaired(outcomes):
    statuses = [o.status for o in outcomes.values()]
    assert "fail" not in statuses
    assert statuses.count("pass") >= 0.95 * len(statuses)
    assert sorted(k for k, o in outcomes.items() if o.status != "pass") == [ERRATUM, ERRATUM.replace("novikov-poisson", "pre-lie-poisson")]


# check_invariance -----------------------------------------------------------------------


def test_r_l4_invariant():
    res = find_invariant_orientation(R_L4)
    assert res.orientation == "lower" and res.tried == ("upper", "lower")


def test_commutative_zero_bracket_set_invariant_both_ways():
    dot = tuple(c for c in R_L4.free) + ("c12_1", "c21_1", "c22_1")
    c = ClosedSetSpec.parse(dot, ("c12_2 = c21_2", "c12_1 = c21_1"))
    for orientation in ("upper", "lower"):
        assert check_invariance(c, orientation).method == "ideal"


def test_whole_space_invariant():
    assert check_invariance(ClosedSetSpec.whole_space(), "lower").checked == 0


def test_single_coordinate_set_not_invariant():
    c = ClosedSetSpec.parse(("c11_1",))
    with pytest.raises(NotInvariant) as lower:
        check_invariance(c, "lower")
    assert lower.value.relation == "c11_2"
    with pytest.raises(NotInvariant):
        find_invariant_orientation(c)


def test_orientation_recorded(catalog):
    res = find_invariant_orientation(nondegen(catalog, "transposed-leibniz-poisson:T5*-/->").closed_set)
    assert res.orientation in ("upper", "lower")
    assert res.tried[-1] == res.orientation


# verify_nondegeneration -------------------------------------------------------------------


def test_l4_row_certified(catalog):
    cert = verify_nondegeneration(catalog, nondegen(catalog, "leibniz-poisson:L4-/->"))
    assert cert.certified
    assert any(c.target == "L1" and c.disjoint for c in cert.checks)


def test_full_space_certifies_nothing(catalog):
    row = replace(nondegen(catalog, "leibniz-poisson:L4-/->"), closed_set=ClosedSetSpec.whole_space())
    cert = verify_nondegeneration(catalog, row)
    assert not cert.certified
    assert cert.checks and not any(c.disjoint for c in cert.checks)


def test_t5_family_excludes_t7(catalog):
    cert = verify_nondegeneration(catalog, nondegen(catalog, "transposed-leibniz-poisson:T5*-/->"))
    assert cert.certified
    t7 = {dict(c.sample)["alpha"] for c in cert.checks if c.target == "T7"}
    assert {"2", "3"} <= t7 or len(t7) >= 3


def test_source_outside_set_reported(catalog):
    row = replace(nondegen(catalog, "leibniz-poisson:L4-/->"), source="L1")
    cert = verify_nondegeneration(catalog, row)
    assert cert.membership and not cert.certified


def test_nondegeneration_rows(certificates):
    failing = sorted(k for k, c in certificates.items() if not c.certified)
    assert failing == ["comm-pre-lie:C17*-/->"]
    assert certificates["comm-pre-lie:C17*-/->"].failures() == ["orbit of C05 at {'alpha': '0'} meets the set"]


# componentwise_filter ----------------------------------------------------------------------


def test_filter_examples(catalog):
    l1 = catalog.entry("leibniz-poisson", "L1").pair
    l4 = catalog.entry("leibniz-poisson", "L4").pair
    assert componentwise_filter(l1, l4) == "impossible"
    assert componentwise_filter(StructurePair.zero(), StructurePair.zero()) == "possible"
    n01 = catalog.entry("novikov-poisson", "N01").pair
    n14 = catalog.entry("novikov-poisson", "N14").pair
    assert componentwise_filter(n01, n14) == "impossible"
    assert componentwise_filter(l4, l1) == "impossible"
    assert componentwise_filter(catalog.entry("leibniz-poisson", "L2").pair, l1) == "possible"


def _zero_pattern(catalog, row, id, args):
    """A pair whose vanishing constants are exactly those of the instance (numerators only)."""
    consts = entry_constants(catalog.entry(row.variety, id), parse_args(args, ("t",) + tuple(row.symbols)))
    return StructurePair.from_constants([c.num for c in consts], ParamSpec(("t",) + tuple(row.symbols)))


def test_filter_never_blocks_a_certified_witness(catalog, outcomes):
    for key, out in outcomes.items():
        if out.verified and not out.row.solve:
            src = _zero_pattern(catalog, out.row, out.row.source, out.row.source_args)
            tgt = _zero_pattern(catalog, out.row, out.row.target, out.row.target_args)
            assert componentwise_filter(src, tgt) == "possible", key


def test_certificates_never_contradict_witnesses(context, catalog):
    for v in catalog.variety_names():
        assert consistency_conflicts(context.graph(v)) == [], v
