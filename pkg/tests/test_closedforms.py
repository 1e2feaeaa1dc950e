import json
import math
import threading
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hassepaths import closedforms as cf
from hassepaths.paths import CLASSES, enumerate_class
from reference import TABLE1


def _trinomial_row(n):
    row = [1]
    for _ in range(n):
        nxt = [0] * (len(row) + 2)
        for i, c in enumerate(row):
            for j in range(3):
                nxt[i + j] += c
        row = nxt
    return row


@given(st.integers(0, 40))
def test_trinomial_row(n):
    row = _trinomial_row(n)
    assert [cf.trinomial(n, k) for k in range(2 * n + 1)] == row
    assert cf.trinomial(n, -1) == 0 and cf.trinomial(n, 2 * n + 1) == 0


def test_trinomial_table_is_thread_safe():
    results = {}

    def work(n):
        results[n] = cf.trinomial(n, n)

    threads = [threading.Thread(target=work, args=(n,)) for n in range(150, 230, 4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(results[n] == sum(math.comb(n, 2 * k) * math.comb(2 * k, k) for k in range(n // 2 + 1)) for n in results)


def test_sequences():
    assert [cf.sequence_value("motzkin", n) for n in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]
    assert [cf.sequence_value("central_delannoy", n) for n in range(6)] == [1, 3, 13, 63, 321, 1683]
    assert [cf.sequence_value("large_schroder", n) for n in range(6)] == [1, 2, 6, 22, 90, 394]
    assert [cf.sequence_value("fibonacci", n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    assert [cf.sequence_value("lucas", n) for n in range(6)] == [2, 1, 3, 4, 7, 11]
    assert cf.sequence_value("trinomial", 3, 2) == 6
    with pytest.raises(ValueError):
        cf.sequence_value("trinomial", 2, 5)
    with pytest.raises(ValueError):
        cf.sequence_value("nope", 2)
    with pytest.raises(ValueError):
        cf.sequence_value("catalan", -1)


@pytest.mark.parametrize("cls", list(CLASSES))
def test_vertex_count_matches_enumeration(cls):
    for n in range(7):
        assert cf.vertex_count(cls, n) == len(enumerate_class(cls, n))


@pytest.mark.parametrize("cls", list(CLASSES))
def test_formula_matches_table(cls):
    assert [cf.edge_count_formula(cls, n) for n in range(11)] == TABLE1[cls]


@pytest.mark.parametrize("cls", ["MM", "GM", "SS", "GS", "DD"])
def test_identities_agree(cls):
    for n in range(61):
        values = cf.edge_count_identities(cls, n)
        assert len(set(values.values())) == 1, (cls, n, values)


def test_identity_counts():
    assert len(cf.edge_count_identities("MM", 10)) == 3
    assert len(cf.edge_count_identities("GM", 10)) == 3
    assert len(cf.edge_count_identities("SS", 10)) == 2
    assert len(cf.edge_count_identities("GS", 10)) == 2


def test_mismatch_is_reported(monkeypatch):
    monkeypatch.setitem(cf._IDENTITIES, "MM", lambda n: {"a": 1, "b": 2})
    with pytest.raises(cf.IdentityMismatch):
        cf.edge_count_formula("MM", 4)


def test_divisibility_checks():
    for n in range(201):
        cf.edge_count_formula("FF", n)
        cf.edge_count_formula("GF", n)


def test_hasse_index():
    assert cf.hasse_index_exact("GD", 9) == Fraction(9, 2)
    assert cf.hasse_index_exact("DD", 9) == 4
    assert cf.hasse_index_exact("MM", 4) == Fraction(13, 9)


@pytest.mark.parametrize("quantity", cf.ASYMPTOTIC_QUANTITIES)
def test_asymptotic_ratios(quantity):
    rep = cf.asymptotic_report(quantity, 300)
    assert abs(rep.log_gap) < math.log(1.05), rep
    assert rep.ratio == pytest.approx(math.exp(rep.log_gap))


def test_asymptotic_errors_and_overflow():
    with pytest.raises(ValueError):
        cf.asymptotic_log_estimate("edges_XX", 10)
    with pytest.raises(ValueError):
        cf.asymptotic_log_estimate("motzkin", 0)
    assert cf.asymptotic_estimate("edges_GS", 2000) == math.inf
    assert math.isfinite(cf.asymptotic_log_estimate("edges_GS", 2000))


def test_classification():
    cats = {c: cf.classification_report(c) for c in CLASSES}
    assert cats["GD"].category == "boolean"
    assert cats["DD"].category == "asymptotically_boolean"
    for c in ("MM", "GM", "SS", "GS"):
        assert cats[c].category == "asymptotically_quasi_boolean"
        assert cats[c].tamed
    for c in ("FF", "GF"):
        assert cats[c].category == "not_quasi_boolean"
        assert not cats[c].tamed
    assert cats["MM"].c == pytest.approx(1 / 18)
    assert json.loads(cats["SS"].to_json())["cls"] == "SS"


def test_report_table():
    reps = [cf.classification_report(c) for c in ("DD", "FF")]
    text = cf.report_table(reps)
    assert text.splitlines()[0].split() == ["class", "index", "slope", "c", "category", "tamed"]
    assert len(json.loads(cf.report_table(reps, "json"))) == 2
