import random

import pytest

from cubicmw import (
    build_report,
    build_table,
    enumerate_points,
    on_tangent_section,
    render_scheme,
    secant_compose,
    strong_decompositions,
    weak_closure,
)
from cubicmw.decompose import (
    Scheme,
    _closure,
    evaluate_parsed,
    evaluate_scheme,
    parse_scheme,
)
from cubicmw.errors import ParseError


@pytest.fixture(scope="module")
def registry_300():
    return enumerate_points((1, 2, 3, 4), 300)


@pytest.fixture(scope="module")
def table_300(registry_300):
    return build_table(registry_300)


def test_table_symmetry(table_300):
    for (i, j), k in list(table_300.in_vh.items())[:50]:
        assert table_300.outcome(j, i) == ("in", k)


def test_table_soundness(table_300, registry_300):
    rng = random.Random(10)
    surface = registry_300.surface
    entries = sorted(table_300.in_vh.items())
    for (i, j), k in rng.sample(entries, min(500, len(entries))):
        z = secant_compose(surface, registry_300.point(i), registry_300.point(j))
        assert registry_300.index[z.coords] == k
    rows = [(i, j) for i, row in table_300.tangent.items() for j in row]
    for i, j in rng.sample(rows, min(200, len(rows))):
        assert on_tangent_section(
            surface, registry_300.point(j), registry_300.point(i)
        )


def test_binary_entry_example(table_300, registry_300):
    i = registry_300.index[(1, 0, 1, -1)]
    j = registry_300.index[(1, 1, -1, 0)]
    k = registry_300.index[(3, 1, 1, -2)]
    assert table_300.outcome(i, j) == ("in", k)


def test_tangent_row_example(table_300, registry_300):
    y = registry_300.index[(1, 1, -1, 0)]
    x = registry_300.index[(1, 28, -19, -18)]
    assert x in table_300.tangent[y]


def test_first_three_points_undecomposable(table_300, registry_300):
    strong = strong_decompositions(table_300)
    for rank in (1, 2, 3):
        assert rank not in strong
        ok, _ = weak_closure(table_300, rank)
        assert not ok


def test_strong_subset_of_weak(table_300):
    strong = strong_decompositions(table_300)
    rng = random.Random(11)
    for x in rng.sample(sorted(strong), min(20, len(strong))):
        ok, scheme = weak_closure(table_300, x)
        assert ok
        # a strongly decomposable point admits a depth-1 witness
        y, z = strong[x][0]
        assert scheme is not None


def test_closure_idempotent_and_monotone(table_300):
    seeds = set(range(1, 8))
    closed, _ = _closure(table_300, seeds)
    again, _ = _closure(table_300, closed)
    assert again == closed
    bigger, _ = _closure(table_300, seeds | {9})
    assert closed <= bigger


def test_partition_and_regeneration(table_300, registry_300):
    report = build_report(table_300)
    n = len(registry_300)
    strong = set(report.strong)
    weak = set(report.weak_witnesses)
    gens = set(report.generator_ranks)
    assert strong | weak | gens == set(range(1, n + 1))
    assert not (strong & weak) and not (strong & gens) and not (weak & gens)
    regenerated, _ = _closure(table_300, gens)
    assert regenerated == set(range(1, n + 1))


def test_weak_witnesses_valid(table_300, registry_300):
    report = build_report(table_300)
    for x, scheme in report.weak_witnesses.items():
        value = evaluate_scheme(registry_300, scheme)
        assert value.coords == registry_300.point(x).coords

        def leaves(s):
            return {s.rank} if s.is_leaf else leaves(s.left) | leaves(s.right)

        assert all(leaf < x for leaf in leaves(scheme))


def test_render_depth_one():
    s = Scheme(5, Scheme(1), Scheme(2))
    assert render_scheme(s) == "1∘2"


def test_render_parse_round_trip(table_300, registry_300):
    report = build_report(table_300)
    rng = random.Random(12)
    schemes = list(report.weak_witnesses.items())
    for x, scheme in schemes:
        text = render_scheme(scheme)
        tree = parse_scheme(text)
        values = evaluate_parsed(registry_300, tree)
        assert registry_300.point(x).coords in values
    # a hand-made nested render parses back to the same shape
    assert parse_scheme("5∘(1∘2)") == (5, (1, 2))
    with pytest.raises(ParseError):
        parse_scheme("5∘(1∘2")


def test_report_json_schema(table_300):
    report = build_report(table_300)
    d = report.to_json_dict()
    assert list(d) == [
        "points",
        "strong_count",
        "weak_only_count",
        "generator_count",
        "generators",
        "strong",
        "weak_witnesses",
    ]
    assert d["points"] == d["strong_count"] + d["weak_only_count"] + d["generator_count"]
    for pairs in d["strong"].values():
        for y, z in pairs:
            assert isinstance(y, int) and isinstance(z, int)
