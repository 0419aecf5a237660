import pytest

from qmg import families
from qmg.dedekind import Status, is_monogenic
from qmg.families import (
    FAMILY_GROUP, MAIN_FAMILIES, OVERLAP_PAIRS, FamilyId, closed_form_disc, condition_holds, distinctness_check,
    exemplars, gen, is_primitive_root, literature_condition, overlap_scan, two_adic_valuation,
)
from qmg.galois import GaloisLabel, classify
from qmg.intarith import Tristate, is_squarefree
from qmg.poly import IntPoly, discriminant

LITERATURE = [f for f in FamilyId if f not in MAIN_FAMILIES]


def P(*desc):
    return IntPoly.from_desc(desc)


@pytest.mark.parametrize("fid, params, want", [
    (FamilyId.X5, (0,), P(1, -2, -2, 6, -2)),
    (FamilyId.X4, (1,), P(1, 2, 2, 4, 22)),
    (FamilyId.LIT_GSS, (1,), P(1, 0, -6, -1, -3)),
    (FamilyId.X2, (3,), P(1, 0, 12, 0, 1)),
    (FamilyId.X3, (1,), P(1, 24, 16, 4, 1)),
    (FamilyId.LIT_JonesC2C2, (2, 3), P(1, 0, 215, 0, 1)),
    (FamilyId.LIT_SmithB, (7,), P(1, 0, 0, 7, 7)),
    (FamilyId.LIT_SmithD, (3,), P(1, 1, 0, 0, 3)),
    (FamilyId.LIT_SpearmanA4, (1,), P(1, 0, 18, -4, 82)),
])
def test_gen_examples(fid, params, want):
    assert gen(fid, *params) == want


def test_arity_is_enforced():
    with pytest.raises(TypeError):
        gen(FamilyId.X2, 1, 2)
    with pytest.raises(TypeError):
        closed_form_disc(FamilyId.LIT_JonesC2C2, 5)
    assert FamilyId.LIT_JonesD4minus.arity == 2 and FamilyId.X3.arity == 1
    assert FamilyId.parse("X4") is FamilyId.X4
    with pytest.raises(ValueError):
        FamilyId.parse("X6")


@pytest.mark.parametrize("fid, t, want", [
    (FamilyId.X2, 1, 2304),
    (FamilyId.X5, 1, -18480),
    (FamilyId.X3, 0, 512),
])
def test_closed_form_examples(fid, t, want):
    assert closed_form_disc(fid, t) == want


def test_closed_forms_match_resultant_main_families():
    for fid in MAIN_FAMILIES:
        for t in range(-300, 301):
            assert discriminant(gen(fid, t)) == closed_form_disc(fid, t), (fid, t)


def test_closed_forms_match_resultant_literature_families():
    for fid in LITERATURE:
        if fid.arity == 2:
            grid = [(r, p) for r in range(1, 15) for p in range(1, 15)]
        else:
            grid = [(k,) for k in range(-100, 101)]
        for params in grid:
            assert discriminant(gen(fid, *params)) == closed_form_disc(fid, *params), (fid, params)


@pytest.mark.parametrize("fid, t, want", [
    (FamilyId.X2, 5, Tristate.FALSE),
    (FamilyId.X5, 1, Tristate.TRUE),
    (FamilyId.X3, 0, Tristate.TRUE),
    (FamilyId.X5, 2, Tristate.FALSE),
    (FamilyId.X4, 0, Tristate.TRUE),
])
def test_condition_examples(fid, t, want):
    assert condition_holds(fid, t) is want


def test_condition_rejects_literature_ids():
    with pytest.raises(ValueError):
        condition_holds(FamilyId.LIT_GSS, 1)


def test_x5_condition_is_per_factor():
    # 4t+1, 4t-7 and 64t+13 can be pairwise non-coprime, so each is tested on its own
    for t in range(-200, 201):
        parts = (4 * t + 1, 4 * t - 7, 64 * t + 13)
        want = all(is_squarefree(n) is Tristate.TRUE for n in parts)
        assert (condition_holds(FamilyId.X5, t) is Tristate.TRUE) == want


def test_family_groups_small_range():
    for fid in MAIN_FAMILIES:
        for t in range(-20, 21):
            assert classify(gen(fid, t))[0] is FAMILY_GROUP[fid]


def test_literature_members_have_their_groups_and_are_monogenic():
    for fid in LITERATURE:
        grid = [(r, p) for r in (3, 5, 7, 13, 17) for p in (2, 3, 5, 7)] if fid.arity == 2 else \
            [(k,) for k in range(-30, 31)]
        members = [params for params in grid if literature_condition(fid, *params)]
        assert members, fid
        for params in members:
            f = gen(fid, *params)
            if fid is FamilyId.LIT_GSS:
                continue
            assert classify(f)[0] is FAMILY_GROUP[fid], (fid, params)
            assert is_monogenic(f).status is Status.MONOGENIC, (fid, params)


def test_gss_family_group_exceptions():
    # x^4 - 6x^2 - mx - 3 is S4 except for three dihedral members
    dihedral = [m for m in range(-300, 301) if m not in (-8, 8)
                and classify(gen(FamilyId.LIT_GSS, m))[0] is not GaloisLabel.T5]
    assert dihedral == [-24, 0, 24]
    assert all(classify(gen(FamilyId.LIT_GSS, m))[0] is GaloisLabel.T3 for m in dihedral)


def test_primitive_roots():
    assert is_primitive_root(2, 9) and is_primitive_root(5, 9)
    assert not is_primitive_root(7, 9)
    assert is_primitive_root(2, 25) and is_primitive_root(3, 25)
    assert not is_primitive_root(7, 25)
    assert not is_primitive_root(3, 9)


def test_literature_condition_rejects_excluded_values():
    assert not literature_condition(FamilyId.LIT_SmithB, 3)
    assert not literature_condition(FamilyId.LIT_SmithB, 5)
    assert not literature_condition(FamilyId.LIT_SmithD, -2)
    assert not literature_condition(FamilyId.LIT_JonesC2C2, 2, 3)
    with pytest.raises(ValueError):
        literature_condition(FamilyId.X2, 1)


def test_exemplar_registry():
    reg = exemplars()
    assert [e.name for e in reg] == ["f_2", "f_4", "g_1", "g_2", "g_3", "g_4", "Phi5", "x4+4x2+2"]
    want = {"f_2": 2**4 * 5**3, "f_4": 2**11, "g_1": 3**2 * 13**3, "g_2": 3**2 * 5**3, "g_3": 5**3 * 11**2,
            "g_4": 5**3 * 7**2, "Phi5": 125, "x4+4x2+2": 2048}
    for e in reg:
        assert e.expected_group is GaloisLabel.T1
        assert e.expected_disc == want[e.name] == discriminant(e.poly)
        assert classify(e.poly)[0] is GaloisLabel.T1
        v = is_monogenic(e.poly)
        assert v.status is Status.MONOGENIC and v.field_disc_if_monogenic == e.expected_disc


def test_distinctness_examples():
    d = distinctness_check(FamilyId.X2, 1, -1)
    assert d.same_discriminant and d.resolved_by_signature
    assert str(d) == "SameDiscriminant(resolved_by_signature=True)"
    d = distinctness_check(FamilyId.X2, 1, 2)
    assert not d.same_discriminant and str(d) == "Distinct"
    assert str(distinctness_check(FamilyId.X5, 1, 3)) == "Distinct"


def test_distinctness_preconditions():
    with pytest.raises(ValueError):
        distinctness_check(FamilyId.X5, 1, 2)
    with pytest.raises(ValueError):
        distinctness_check(FamilyId.X2, 4, 4)
    with pytest.raises(ValueError):
        distinctness_check(FamilyId.X2, 1, 5)


def test_x2_only_collisions_are_opposite_signs():
    members = [t for t in range(-60, 61) if condition_holds(FamilyId.X2, t) is Tristate.TRUE]
    for t1 in members:
        for t2 in members:
            if t1 < t2:
                d = distinctness_check(FamilyId.X2, t1, t2)
                assert d.same_discriminant == (t1 == -t2)
                if d.same_discriminant:
                    assert d.resolved_by_signature


def test_two_adic_valuation():
    assert [two_adic_valuation(n) for n in (1, 2, 12, -48, 2**40 * 3)] == [0, 1, 2, 4, 40]
    with pytest.raises(ValueError):
        two_adic_valuation(0)


def test_overlap_scans_small():
    for pair in OVERLAP_PAIRS:
        rep = overlap_scan(pair, 100, 30)
        assert rep.collisions == [], pair
        assert rep.left_count > 0 and rep.right_count > 0
    rep = overlap_scan("X2-vs-JonesC2C2", 100, 30)
    assert rep.reason == "2-adic valuation mismatch"
    assert rep.left_valuations == {8} and rep.right_valuations == {4}
    with pytest.raises(KeyError):
        overlap_scan("X9-vs-nothing", 1, 1)


def test_overlap_scan_detects_a_planted_collision(monkeypatch):
    # negative control: give the right-hand family the left-hand discriminant formula
    monkeypatch.setitem(families._CLOSED_FORMS, FamilyId.LIT_SmithB, families._CLOSED_FORMS[FamilyId.X5])
    rep = overlap_scan("X5-vs-SmithB", 30, 30)
    assert rep.reason == "discriminant collision"
    assert ((1,), (1,), closed_form_disc(FamilyId.X5, 1)) in rep.collisions
