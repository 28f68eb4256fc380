import json

import pytest

import extremal as ex


def test_family_roundtrip():
    f = ex.Family(6, 2, [[1, 3], [1, 2]])
    assert len(f) == 2
    assert f.edges == [[1, 2], [1, 3]]
    text = ex.family_to_json(f)
    assert json.loads(text) == {"n": 6, "k": 2, "edges": [[1, 2], [1, 3]]}
    assert ex.family_from_json(text) == f


def test_invariants_of_hitting_family():
    f = ex.build("E", {"n": 6, "k": 2, "s": 2})
    assert len(f) == 9
    report = ex.invariants(f)
    assert (report["nu"], report["tau"], report["omega"], report["shifted"]) == (2, 2, 3, True)


def test_shifting():
    f = ex.Family(4, 2, [[1, 4], [2, 3]])
    assert not ex.is_shifted(f)
    assert ex.shift_closure(f).edges == [[1, 2], [1, 3]]
    assert len(ex.shift_ij(f, 1, 2)) == 2


def test_formulas():
    assert ex.size_A(10, 7, 3, 2) == 53
    assert ex.conjecture_rhs(11, 7, 3, 2) == 59
    r = ex.m_closed(9, 4, 2, 2)
    assert (r["value"], r["regime"], r["hypotheses_met"]) == (11, "specialcase-1", True)
    assert ex.cross_bound(10, 3, 3, 1, 2)["value"] == "72"


def test_oracle():
    r = ex.exact_m_star(6, 4, 2, 2)
    assert (r.value, r.proven_optimal) == (9, True)
    assert ex.is_shifted(r.witness)
    assert ex.exact_m(6, 4, 2, 2).value == 10
    assert ex.exact_m_via_stars(6, 4, 2, 2).value == 10


def test_errors():
    with pytest.raises(ex.ArgumentError):
        ex.build("A", {"n": 10, "q": 2, "k": 3, "s": 2})
    with pytest.raises(ex.CapacityError):
        ex.Family(65, 2)
    with pytest.raises(ex.ParseError):
        ex.family_from_json('{"n": 6, "k": 2, "edges": [[1, 1]]}')


def test_suite():
    report = ex.run_suite("regime")
    assert report["passed"] and report["violations"] == 0
