"""Edge-coloring model, vertex spectra, and validators.

Colors are 1-based.  A coloring with t colors is *cyclic-interval valid* when
it is proper, uses every color in [1, t] at least once, and the color set at
each vertex occupies consecutive positions on the color circle 1..t (wrapping
from t back to 1 is allowed).  The *interval* variant forbids the wrap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graphs import Graph, _is_int, canonical_json


def mod_color(x: int, t: int) -> int:
    """Map an integer onto the color circle [1, t]."""
    return (x - 1) % t + 1


@dataclass(frozen=True)
class EdgeColoring:
    """Colors in [1, t], one per edge in the graph's canonical edge order."""

    t: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError("t must be a positive integer")
        object.__setattr__(self, "colors", tuple(self.colors))

    def to_dict(self) -> dict:
        return {"t": self.t, "colors": list(self.colors)}

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "EdgeColoring":
        if not isinstance(d, dict) or "t" not in d or "colors" not in d:
            raise ValueError("coloring object needs 't' and 'colors'")
        t, colors = d["t"], d["colors"]
        if not _is_int(t) or not isinstance(colors, list) \
                or not all(_is_int(c) for c in colors):
            raise ValueError("'t' must be an int and 'colors' a list of ints")
        return cls(t, tuple(colors))

    @classmethod
    def from_json(cls, text: str) -> "EdgeColoring":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(d)


@dataclass(frozen=True)
class SpectrumReport:
    """A vertex's incident color set and how it sits on the color circle."""

    vertex: int
    colors: tuple[int, ...]  # sorted
    is_interval: bool
    is_cyclic_interval: bool

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "colors": list(self.colors),
                "is_interval": self.is_interval,
                "is_cyclic_interval": self.is_cyclic_interval}


def spectrum_report(g: Graph, coloring: EdgeColoring, v: int) -> SpectrumReport:
    """Classify the spectrum of v: plain interval, cyclic interval, or
    neither (a plain interval is always also cyclic)."""
    s = sorted(spectrum(g, coloring, v))
    in_range = all(1 <= c <= coloring.t for c in s)
    plain = in_range and is_integer_interval(s)
    cyclic = in_range and _cyclic_cover_len(s, coloring.t) <= len(s)
    return SpectrumReport(v, tuple(s), plain, cyclic)


@dataclass(frozen=True)
class Violation:
    kind: str  # not-proper | color-unused | spectrum-not-cyclic-interval |
    #            spectrum-not-interval | color-out-of-range
    vertex: Optional[int] = None
    color: Optional[int] = None
    edge: Optional[tuple[int, int]] = None

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.vertex is not None:
            d["vertex"] = self.vertex
        if self.color is not None:
            d["color"] = self.color
        if self.edge is not None:
            d["edge"] = list(self.edge)
        return d


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "valid" if self.valid else "invalid"

    def to_dict(self) -> dict:
        return {"verdict": self.verdict,
                "violations": [v.to_dict() for v in self.violations]}

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def spectrum(g: Graph, coloring: EdgeColoring, v: int) -> frozenset[int]:
    """Set of colors appearing on edges incident to v."""
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    if len(coloring.colors) != g.edge_count:
        raise ValueError("coloring length does not match edge count")
    return frozenset(coloring.colors[e] for e in g.incident_edges[v])


def is_integer_interval(colors: Iterable[int]) -> bool:
    s = set(colors)
    if not s:
        return True
    return max(s) - min(s) + 1 == len(s)


def is_cyclic_interval(colors: Iterable[int], d: int, t: int) -> bool:
    """True when the d colors occupy consecutive positions modulo t.

    A full set (d = t) always qualifies.  Raises ValueError when the set is
    not a size-d subset of [1, t].
    """
    s = sorted(set(colors))
    if len(s) != d:
        raise ValueError("color set size does not match d")
    if s and not (1 <= s[0] and s[-1] <= t):
        raise ValueError("colors outside [1, t]")
    return _cyclic_cover_len(s, t) <= d


def _cyclic_cover_len(sorted_colors: list[int], t: int) -> int:
    """Length of the shortest cyclic window of [1, t] containing the set."""
    k = len(sorted_colors)
    if k == 0:
        return 0
    max_gap = sorted_colors[0] + t - sorted_colors[-1]
    for a, b in zip(sorted_colors, sorted_colors[1:]):
        max_gap = max(max_gap, b - a)
    return t - max_gap + 1


def validate_cyclic(g: Graph, coloring: EdgeColoring) -> ValidationResult:
    """Check the full cyclic-interval coloring definition, reporting every
    violation rather than stopping at the first."""
    return _validate(g, coloring, cyclic=True)


def validate_interval(g: Graph, coloring: EdgeColoring) -> ValidationResult:
    """As validate_cyclic, but vertex spectra must be plain integer intervals
    (no wrap across t)."""
    return _validate(g, coloring, cyclic=False)


def _validate(g: Graph, coloring: EdgeColoring, cyclic: bool) -> ValidationResult:
    if len(coloring.colors) != g.edge_count:
        raise ValueError(
            f"coloring has {len(coloring.colors)} colors for {g.edge_count} edges")
    t = coloring.t
    violations: list[Violation] = []

    bad_edges = set()
    for i, c in enumerate(coloring.colors):
        if not 1 <= c <= t:
            bad_edges.add(i)
            violations.append(Violation("color-out-of-range", edge=g.edges[i], color=c))

    used: set[int] = set()
    for v in range(g.vertex_count):
        seen: set[int] = set()
        clashed: set[int] = set()
        touches_bad = False
        for e in g.incident_edges[v]:
            c = coloring.colors[e]
            if e in bad_edges:
                touches_bad = True
            if c in seen and c not in clashed:
                clashed.add(c)
                violations.append(Violation("not-proper", vertex=v, color=c))
            seen.add(c)
            used.add(c)
        if clashed or touches_bad:
            continue  # spectrum classification is meaningless here
        s = sorted(seen)
        if cyclic:
            if _cyclic_cover_len(s, t) > len(s):
                violations.append(Violation("spectrum-not-cyclic-interval", vertex=v))
        else:
            if not is_integer_interval(s):
                violations.append(Violation("spectrum-not-interval", vertex=v))

    for c in range(1, t + 1):
        if c not in used:
            violations.append(Violation("color-unused", color=c))

    return ValidationResult(tuple(violations))
