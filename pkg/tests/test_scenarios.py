import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bunchlab import (CapacityError, ConfigurationError,
                      DistinguishabilityScenario, LabelParseError,
                      closed_form_enhancement, coincidence_probability,
                      enumerate_scenarios, format_label, parse_label,
                      scenario_to_packets)
from bunchlab.scenarios import PUBLISHED_TABLES, published_table, table_rows

S = DistinguishabilityScenario.of


def brute_force_partitions(n, m):
    """Multiset partitions of (n, m) by merging a list of single photons."""
    found = set()

    def rec(remaining, groups):
        if not remaining:
            found.add(DistinguishabilityScenario(tuple(groups)))
            return
        photon, rest = remaining[0], remaining[1:]
        for i, (gn, gm) in enumerate(groups):
            new = list(groups)
            new[i] = (gn + photon[0], gm + photon[1])
            rec(rest, new)
        rec(rest, groups + [photon])

    rec([(1, 0)] * n + [(0, 1)] * m, [])
    return found


@pytest.mark.parametrize("groups,factor", [
    (((3, 3),), 20),
    (((2, 1), (1, 2)), 9),
    (((1, 1), (1, 1), (1, 1)), 8),
    (((2, 0), (0, 2)), 1),
])
def test_closed_form_examples(groups, factor):
    assert closed_form_enhancement(DistinguishabilityScenario(groups)) == factor


def test_canonical_form():
    s = S((0, 1), (1, 1), (1, 0), (2, 1))
    assert s.groups == ((2, 1), (1, 1), (1, 0), (0, 1))
    assert s == S((1, 0), (2, 1), (0, 1), (1, 1))
    with pytest.raises(ValueError):
        S((0, 0))
    with pytest.raises(ValueError):
        DistinguishabilityScenario(())


@pytest.mark.parametrize("key", sorted(PUBLISHED_TABLES))
def test_published_tables(key):
    listed = dict((s, f) for s, f in enumerate_scenarios(*key))
    for label, scenario, printed in published_table(*key):
        assert closed_form_enhancement(scenario) == printed, label
        assert listed[scenario] == printed


def test_table_values_in_order():
    assert [v for _, v in PUBLISHED_TABLES[(2, 2)]] == [6, 3, 4, 2]
    assert [v for _, v in PUBLISHED_TABLES[(3, 2)]] == [10, 6, 4, 6, 3, 3, 4, 2]
    assert [v for _, v in PUBLISHED_TABLES[(3, 3)]] == [20, 10, 4, 12, 6, 9, 6, 3, 8, 4, 2]


def test_enumerate_two_two_has_the_four_tabulated_factors():
    out = enumerate_scenarios(2, 2)
    labels = {format_label(s): f for s, f in out}
    assert {k: labels[k] for k in ("2a2b", "2a1b+b", "ab+ab", "ab+a+b")} == \
        {"2a2b": 6, "2a1b+b": 3, "ab+ab": 4, "ab+a+b": 2}
    assert labels["1a2b+a"] == 3  # mirror, not tabulated
    assert labels["a+a+b+b"] == 1


def test_enumerate_trivial():
    assert enumerate_scenarios(1, 0) == [(S((1, 0)), 1)]


@pytest.mark.parametrize("n,m", [(n, m) for n in range(5) for m in range(5) if n + m])
def test_enumeration_is_complete_and_unique(n, m):
    out = enumerate_scenarios(n, m)
    scenarios = [s for s, _ in out]
    assert len(set(scenarios)) == len(scenarios)
    assert set(scenarios) == brute_force_partitions(n, m)
    assert all(s.n == n and s.m == m for s in scenarios)
    factors = [f for _, f in out]
    assert factors == sorted(factors, reverse=True)
    assert out[0] == (S((n, m)), math.comb(n + m, n))
    assert sum(f == math.comb(n + m, n) for f in factors) == 1 or n == 0 or m == 0


def test_enumeration_deterministic():
    assert enumerate_scenarios(4, 3) == enumerate_scenarios(4, 3)


def test_enumeration_capacity():
    with pytest.raises(CapacityError):
        enumerate_scenarios(9, 1)
    assert len(enumerate_scenarios(8, 8)) > 0


def test_mirror_symmetry():
    for n in range(5):
        for m in range(5):
            if n + m:
                for s, f in enumerate_scenarios(n, m):
                    assert closed_form_enhancement(s.mirrored()) == f


@pytest.mark.parametrize("text,groups", [
    ("3a2b", ((3, 2),)),
    ("ab+a+b", ((1, 1), (1, 0), (0, 1))),
    ("1ab+1ab", ((1, 1), (1, 1))),
    ("2a1b + b", ((2, 1), (0, 1))),
    ("12a", ((12, 0),)),
])
def test_parse(text, groups):
    assert parse_label(text).groups == groups


def test_round_trip_example():
    assert format_label(parse_label("2a1b+ab")) == "2a1b+ab"


@pytest.mark.parametrize("text,position", [
    ("", 0), ("2a+", 3), ("ab+x", 3), ("2a1c", 3), ("3", 1), ("a++b", 2), ("ba", 1),
])
def test_parse_errors_report_position(text, position):
    with pytest.raises(LabelParseError) as info:
        parse_label(text)
    assert info.value.position == position


groups_st = st.lists(
    st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(lambda g: sum(g) > 0),
    min_size=1, max_size=5)


@given(groups_st)
def test_round_trip_property(groups):
    s = DistinguishabilityScenario(tuple(groups))
    assert parse_label(format_label(s)) == s


@pytest.mark.parametrize("groups,sep,factor", [
    (((2, 2),), 12.0, 6),
    (((2, 1), (1, 1), (0, 1)), 20.0, 6),
])
def test_scenario_to_packets_examples(groups, sep, factor):
    cfg = scenario_to_packets(DistinguishabilityScenario(groups), 1.0, sep)
    assert abs(coincidence_probability(cfg).enhancement - factor) < 1e-6


def test_single_photon_scenario_exact():
    cfg = scenario_to_packets(S((1, 0)))
    assert coincidence_probability(cfg).enhancement == 1.0


def test_scenario_to_packets_layout():
    cfg = scenario_to_packets(S((2, 1), (0, 2)), width=2.0, group_separation=30.0)
    assert [p.center_time for p in cfg.port_a] == [0.0, 0.0]
    assert [p.center_time for p in cfg.port_b] == [0.0, 30.0, 30.0]
    assert cfg.transmissivity == pytest.approx(2 / 5)


def test_scenario_to_packets_rejects_close_groups():
    with pytest.raises(ConfigurationError):
        scenario_to_packets(S((1, 1)), 1.0, 7.9)
    with pytest.raises(ConfigurationError):
        scenario_to_packets(S((1, 1)), 0.0, 10.0)


def test_engine_matches_closed_form_all_small():
    for total in range(1, 7):
        for n in range(total + 1):
            for s, f in enumerate_scenarios(n, total - n):
                enh = coincidence_probability(scenario_to_packets(s, 1.0, 12.0)).enhancement
                assert abs(enh - f) < 1e-6, s.label


def test_table_rows_flags():
    rows = table_rows(3, 3)
    published = [r for r in rows if r["published"]]
    assert len(published) == 11
    row = next(r for r in rows if r["published_label"] == "ab+b+a+a+b")
    assert row["factor"] == 2 and row["label"] == "ab+a+a+b+b"
    assert {(r["label"], r["factor"]) for r in rows} >= {("3a3b", 20), ("2a2b+ab", 12)}
