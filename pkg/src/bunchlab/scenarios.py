"""Distinguishability scenarios and their closed-form enhancement factors.

A scenario splits the N port-a photons and M port-b photons into groups
``(n_i, m_i)``: photons inside a group are mutually indistinguishable, photons
in different groups are orthogonal in time. Each group multiplies the
bunching enhancement by ``binomial(n_i + m_i, n_i)``.

Labels use the notation of the bunching tables, e.g. ``"2a1b+ab+b"``: terms
joined by ``+``, each term ``[count]a[count]b``; an omitted count means 1,
an omitted letter means 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .exceptions import (CapacityError, ConfigurationError, DomainError,
                         LabelParseError)
from .interference import InputConfiguration
from .temporal_modes import WavePacket

MAX_ENUMERATION = 8
MIN_SEPARATION_WIDTHS = 8.0


def _group_key(group):
    n, m = group
    return (n + m, n)


@dataclass(frozen=True)
class DistinguishabilityScenario:
    """Canonical multiset of ``(n_i, m_i)`` groups.

    Groups are stored sorted descending by ``(n_i + m_i, n_i)``; empty
    ``(0, 0)`` groups are rejected.
    """

    groups: tuple[tuple[int, int], ...]

    def __post_init__(self):
        groups = []
        for g in self.groups:
            n, m = (int(x) for x in g)
            if n < 0 or m < 0:
                raise ValueError(f"group counts must be non-negative, got {g!r}")
            if n + m == 0:
                raise ValueError("empty (0, 0) group")
            groups.append((n, m))
        if not groups:
            raise ValueError("scenario needs at least one group")
        groups.sort(key=_group_key, reverse=True)
        object.__setattr__(self, "groups", tuple(groups))

    @classmethod
    def of(cls, *groups) -> "DistinguishabilityScenario":
        return cls(tuple(groups))

    @property
    def n(self) -> int:
        return sum(g[0] for g in self.groups)

    @property
    def m(self) -> int:
        return sum(g[1] for g in self.groups)

    def mirrored(self) -> "DistinguishabilityScenario":
        return DistinguishabilityScenario(tuple((m, n) for n, m in self.groups))

    @property
    def label(self) -> str:
        return format_label(self)

    def __str__(self):
        return self.label


def closed_form_enhancement(scenario: DistinguishabilityScenario) -> int:
    """Product of ``binomial(n_i + m_i, n_i)`` over the groups."""
    factor = 1
    for n, m in scenario.groups:
        factor *= math.comb(n + m, n)
    return factor


def _vector_partitions(n, m, bound):
    """Partitions of (n, m) into groups not exceeding ``bound`` in canonical order."""
    if n == 0 and m == 0:
        yield ()
        return
    size_max, n_max = bound
    for size in range(min(n + m, size_max), 0, -1):
        top = min(n, size, n_max if size == size_max else size)
        for gn in range(top, -1, -1):
            gm = size - gn
            if gm > m:
                continue
            for rest in _vector_partitions(n - gn, m - gm, (size, gn)):
                yield ((gn, gm),) + rest


def enumerate_scenarios(n: int, m: int) -> list[tuple[DistinguishabilityScenario, int]]:
    """Every scenario of ``n`` a-photons and ``m`` b-photons with its factor.

    Ordered by decreasing factor, ties broken by the canonical group tuple
    (descending). Mirror scenarios and the all-distinguishable baselines are
    included.
    """
    if n < 0 or m < 0 or n + m == 0:
        raise DomainError(f"need n, m >= 0 with n + m >= 1, got ({n}, {m})")
    if n > MAX_ENUMERATION or m > MAX_ENUMERATION:
        raise CapacityError(f"enumeration supports n, m <= {MAX_ENUMERATION}, got ({n}, {m})")
    out = []
    for groups in _vector_partitions(n, m, (n + m, n)):
        s = DistinguishabilityScenario(groups)
        out.append((s, closed_form_enhancement(s)))
    out.sort(key=lambda item: (item[1], tuple(_group_key(g) for g in item[0].groups)),
             reverse=True)
    return out


def _parse_term(text: str, start: int, stop: int) -> tuple[int, int]:
    """Parse ``text[start:stop]`` as ``[count]a[count]b``; whitespace-trimmed."""
    while start < stop and text[start].isspace():
        start += 1
    while stop > start and text[stop - 1].isspace():
        stop -= 1
    if start == stop:
        raise LabelParseError("empty term", text, start)
    counts = {"a": 0, "b": 0}
    pos = start
    for letter in "ab":
        digits_at = pos
        while pos < stop and text[pos].isdigit():
            pos += 1
        if pos < stop and text[pos] == letter:
            counts[letter] = int(text[digits_at:pos]) if pos > digits_at else 1
            pos += 1
        elif letter == "a":
            pos = digits_at  # the count may belong to b
        elif pos > digits_at:
            if pos == stop:
                raise LabelParseError("count without a letter", text, pos)
            raise LabelParseError(f"expected 'b', found {text[pos]!r}", text, pos)
    if pos != stop:
        raise LabelParseError(f"unexpected character {text[pos]!r}", text, pos)
    if counts["a"] + counts["b"] == 0:
        raise LabelParseError("term has zero photons", text, start)
    return counts["a"], counts["b"]


def parse_label(text: str) -> DistinguishabilityScenario:
    """Parse a label such as ``"2a1b+ab+b"`` into a scenario.

    Whitespace around terms is ignored.

    Raises
    ------
    LabelParseError
        With the character offset of the first problem.
    """
    if not isinstance(text, str):
        raise TypeError("label must be a string")
    groups = []
    start = 0
    while True:
        stop = text.find("+", start)
        stop = len(text) if stop < 0 else stop
        groups.append(_parse_term(text, start, stop))
        if stop == len(text):
            break
        start = stop + 1
    return DistinguishabilityScenario(tuple(groups))


def _format_term(n: int, m: int) -> str:
    if n == 1 and m == 1:
        return "ab"
    if n and m:
        return f"{n}a{m}b"
    if n:
        return "a" if n == 1 else f"{n}a"
    return "b" if m == 1 else f"{m}b"


def format_label(scenario: DistinguishabilityScenario) -> str:
    """Canonical label; ``parse_label(format_label(s)) == s``."""
    return "+".join(_format_term(n, m) for n, m in scenario.groups)


def scenario_to_packets(scenario: DistinguishabilityScenario, width: float = 1.0,
                        group_separation: float = 12.0,
                        transmissivity: float | None = None) -> InputConfiguration:
    """Realize a scenario as Gaussian packets.

    Group ``i`` puts ``n_i`` identical packets in port a and ``m_i`` in port b,
    all centered at ``i * group_separation``. The transmissivity defaults to
    the optimum N / (N + M).
    """
    if not width > 0:
        raise ConfigurationError(f"width must be positive, got {width!r}")
    if group_separation < MIN_SEPARATION_WIDTHS * width:
        raise ConfigurationError(
            f"group separation {group_separation!r} is below {MIN_SEPARATION_WIDTHS:g} widths")
    port_a, port_b = [], []
    for i, (n, m) in enumerate(scenario.groups):
        packet = WavePacket(center_time=i * group_separation, width=width)
        port_a.extend([packet] * n)
        port_b.extend([packet] * m)
    if transmissivity is None:
        transmissivity = scenario.n / (scenario.n + scenario.m)
    return InputConfiguration(tuple(port_a), tuple(port_b), transmissivity)


# Columns of the published bunching tables, keyed by (N, M), written in the
# label grammar above and in the column order of the tables.
PUBLISHED_TABLES: dict[tuple[int, int], tuple[tuple[str, int], ...]] = {
    (2, 2): (
        ("2a2b", 6), ("2a1b+b", 3), ("ab+ab", 4), ("ab+a+b", 2),
    ),
    (3, 2): (
        ("3a2b", 10), ("2a2b+a", 6), ("3a1b+b", 4), ("2a1b+ab", 6),
        ("1a2b+2a", 3), ("2a1b+a+b", 3), ("ab+a+ab", 4), ("ab+a+a+b", 2),
    ),
    (3, 3): (
        ("3a3b", 20), ("3a2b+b", 10), ("3a1b+2b", 4), ("2a2b+ab", 12),
        ("2a2b+a+b", 6), ("2a1b+1a2b", 9), ("2a1b+ab+b", 6), ("2a1b+a+b+b", 3),
        ("ab+ab+ab", 8), ("ab+ab+a+b", 4), ("ab+b+a+a+b", 2),
    ),
}


def published_table(n: int, m: int) -> list[tuple[str, DistinguishabilityScenario, int]]:
    """Published columns for ``(n, m)`` as ``(label, scenario, printed factor)``."""
    return [(label, parse_label(label), value) for label, value in PUBLISHED_TABLES[(n, m)]]


def table_rows(n: int, m: int) -> list[dict]:
    """All scenarios of ``(n, m)`` with a flag for those printed in the tables."""
    printed = {}
    for label, value in PUBLISHED_TABLES.get((n, m), ()):
        printed[parse_label(label)] = label
    rows = []
    for scenario, factor in enumerate_scenarios(n, m):
        rows.append({
            "label": format_label(scenario),
            "factor": factor,
            "published": scenario in printed,
            "published_label": printed.get(scenario, ""),
        })
    return rows


def scenarios_from_labels(labels: Iterable[str]) -> list[DistinguishabilityScenario]:
    return [parse_label(s) for s in labels]
