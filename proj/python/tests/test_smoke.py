import json

import pytest

import tourney


def test_tournament_basics():
    t = tourney.Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert t.n == 3
    assert all(t.out_degree(v) == 1 for v in range(3))
    assert t.complement().complement() == t
    assert not tourney.is_transitive(t)
    assert tourney.tr(t) == (2, [0, 1])


def test_trn_round_trip():
    t = tourney.named("K6")
    assert tourney.Tournament.from_trn(t.to_trn()) == t


def test_catalog():
    ids = tourney.catalog_ids()
    assert len(ids) == 89
    assert tourney.is_prime(tourney.named("K6"))
    assert tourney.find_galaxy_ordering(tourney.named("K6")) is None
    assert tourney.contains(tourney.named("L1"), tourney.named("C5")) == [0, 1, 2, 3, 4]
    report = json.loads(tourney.verify_catalog_json())
    assert report["all_pass"]


def test_canonical_and_isomorphism():
    s1 = tourney.named("S1")
    perm = [3, 5, 6, 0, 1, 4, 2]
    relabeled = s1.relabel(perm)
    assert tourney.canonical_hex(s1) == tourney.canonical_hex(relabeled)
    assert tourney.is_isomorphic(s1, relabeled)


def test_enumeration_counts():
    assert [len(tourney.enumerate_classes(n)) for n in range(1, 6)] == [1, 1, 2, 4, 12]


def test_classify7():
    rec = tourney.classify7_json(tourney.named("R1"))
    assert rec["in_R"]
    assert not rec["residual"]


def test_ramsey():
    assert tourney.check_ramsey_bound(3)


def test_landscape_summary():
    summary = json.loads(tourney.run_landscape_json(False))
    assert summary["total_classes"] == 456
    assert summary["full_coverage"]
    assert summary["regular_claim_holds"]
    assert summary["counts"]["residual"] == len(summary["residual"])


def test_smooth_structure():
    t = tourney.Tournament(4)
    spec = json.dumps({"c": "1/4", "lambda": "1/2", "w": [0, 0], "sets": [[0], [1]]})
    report = json.loads(tourney.validate_smooth_structure(t, spec))
    assert report["valid"]
    size, bound, holds = tourney.check_intersection_bound(t, spec, 0, [0], [1])
    assert holds


def test_search_determinism():
    a = tourney.local_search(6, [tourney.named("C5")], seed=3, max_steps=60, restarts=2)
    b = tourney.local_search(6, [tourney.named("C5")], seed=3, max_steps=60, restarts=2)
    assert a[3] == b[3]
    assert a[2]  # free certificate


def test_errors_surface_as_exceptions():
    with pytest.raises(Exception):
        tourney.named("nope")
    with pytest.raises(Exception):
        tourney.Tournament.from_trn("3\n11\n")
