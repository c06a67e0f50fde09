import re

import pytest

from domperf import enumeration
from domperf.enumeration import (
    count_connected_labeled,
    enumerate_connected_graphs,
    verify_theorem,
)
from domperf.graph_core import GraphError, is_connected
from domperf.perfection import Certificate, ContainsTriangle, TreeDiamAtMost4

from oracles import all_graphs


@pytest.mark.parametrize(
    "n, expected",
    # n=4 by hand: 64 - (1*1*8 + 3*1*2 + 3*4*1) = 38
    [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728), (6, 26704), (7, 1866256)],
)
def test_recurrence(n, expected):
    assert count_connected_labeled(n) == expected


def test_recurrence_wide_integers():
    assert count_connected_labeled(16) > 2**100


@pytest.mark.parametrize("n", [0, 17])
def test_recurrence_range(n):
    with pytest.raises(ValueError):
        count_connected_labeled(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_stream_count_matches_recurrence(n):
    assert sum(1 for _ in enumerate_connected_graphs(n)) == count_connected_labeled(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_stream_is_exactly_the_connected_graphs(n):
    expected = {g for g in all_graphs(n) if is_connected(g)}
    got = list(enumerate_connected_graphs(n))
    assert len(got) == len(set(got))
    assert set(got) == expected


def test_small_streams():
    assert [g.edges() for g in enumerate_connected_graphs(2)] == [[(0, 1)]]
    three = list(enumerate_connected_graphs(3))
    assert len(three) == 4
    assert sum(g.edge_count == 3 for g in three) == 1


def test_stream_in_increasing_mask_order():
    pairs = [(i, j) for j in range(1, 5) for i in range(j)]
    masks = [sum(1 << k for k, (i, j) in enumerate(pairs) if g.has_edge(i, j)) for g in enumerate_connected_graphs(5)]
    assert masks == sorted(masks)


@pytest.mark.parametrize("n", [0, 8])
def test_stream_range(n):
    with pytest.raises(GraphError):
        list(enumerate_connected_graphs(n))


def test_verify_tiny():
    report = verify_theorem(2, 2)
    (rec,) = report.orders
    assert (rec.connected, rec.perfect, rec.agree) == (1, 1, 1)
    assert report.ok


def test_verify_to_five():
    report = verify_theorem(5, 5)
    assert [r.connected for r in report.orders] == [1, 4, 38, 728]
    assert all(r.oracle_mode == "full" for r in report.orders)
    assert report.disagreements == []
    assert report.ok
    text = report.to_text()
    assert text.splitlines()[0] == "# domperf verify max_n=5 oracle_max_n=5 sample=none seed=none"
    assert text.endswith("RESULT OK\n")
    line = re.compile(r"^n=(\d+) connected=(\d+) perfect=(\d+) agree=(\d+) oracle_mode=(full|sample:\d+|off)\b")
    assert sum(bool(line.match(s)) for s in text.splitlines()) == 4


def test_verify_modes():
    report = verify_theorem(6, 4, sample=50, seed=3)
    assert [r.oracle_mode for r in report.orders] == ["full", "full", "full", "sample:50", "sample:50"]
    assert [r.oracle_checked for r in report.orders][-2:] == [50, 50]
    assert verify_theorem(5, 4).orders[-1].oracle_mode == "off"


def test_sample_larger_than_population_checks_everything():
    report = verify_theorem(4, 3, sample=10_000, seed=1)
    assert report.orders[-1].oracle_checked == 38


@pytest.mark.parametrize(
    "kwargs",
    [dict(max_n=1), dict(max_n=8), dict(max_n=5, oracle_max_n=6), dict(max_n=5, sample=0), dict(max_n=4, jobs=0)],
)
def test_verify_rejects(kwargs):
    with pytest.raises(GraphError):
        verify_theorem(**kwargs)


def test_deterministic_modulo_timing():
    a = verify_theorem(6, 5, sample=200, seed=9)
    b = verify_theorem(6, 5, sample=200, seed=9)
    assert a.to_text(timing=False) == b.to_text(timing=False)
    assert a.to_dict(timing=False) == b.to_dict(timing=False)


def test_parallel_equals_serial():
    serial = verify_theorem(6, 5, sample=100, seed=4, jobs=1)
    parallel = verify_theorem(6, 5, sample=100, seed=4, jobs=3)
    assert serial.to_text(timing=False) == parallel.to_text(timing=False)


def test_disagreement_is_reported(monkeypatch):
    real = enumeration.classify_forbidden

    def lying(g):
        if g.edge_count == 3 and g.order == 3:
            return Certificate(TreeDiamAtMost4(2))
        return real(g)

    monkeypatch.setattr(enumeration, "classify_forbidden", lying)
    report = verify_theorem(3, 3)
    assert not report.ok
    rec = report.orders[-1]
    assert rec.agree == rec.connected - 1
    text = report.to_text()
    assert "DISAGREE Bw structural=not_perfect forbidden=perfect oracle=not_perfect" in text
    # the lie also fails independent witness checking
    assert any(b.startswith("Bw forbidden") for b in rec.bad_certificates)
    assert text.endswith("RESULT FAIL\n")


def test_bad_certificate_fails_report(monkeypatch):
    real = enumeration.classify_structural

    def wrong_witness(g):
        cert = real(g)
        if isinstance(cert.reason, ContainsTriangle):
            return Certificate(ContainsTriangle((0, 1, 3)))
        return cert

    monkeypatch.setattr(enumeration, "classify_structural", wrong_witness)
    report = verify_theorem(4, 2)
    assert report.disagreements == []
    assert report.orders[-1].bad_certificates
    assert not report.ok
