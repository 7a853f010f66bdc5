"""Acyclic orientations of a Dynkin diagram."""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .cartan import CartanData
from .errors import OrientedCycle, ParseError


@dataclass(frozen=True)
class ValuedQuiver:
    cartan: CartanData
    arrows: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        edges = set(self.cartan.edges())
        seen = set()
        for i, j in self.arrows:
            e = (min(i, j), max(i, j))
            if e not in edges:
                raise ValueError(f"arrow {i + 1}->{j + 1} is not an edge of the diagram")
            if e in seen:
                raise ValueError(f"edge {e[0] + 1}-{e[1] + 1} oriented twice")
            seen.add(e)
        if seen != edges:
            missing = sorted(edges - seen)
            raise ValueError(f"unoriented edges: {[(i + 1, j + 1) for i, j in missing]}")
        _topological_order(self.cartan.rank, self.arrows)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def sorted_arrows(self) -> list[tuple[int, int]]:
        return sorted(self.arrows)

    def __str__(self) -> str:
        if not self.arrows:
            return "(no arrows)"
        return ",".join(f"{i + 1}>{j + 1}" for i, j in self.sorted_arrows())


def _topological_order(n: int, arrows) -> list[int]:
    indeg = [0] * n
    out: dict[int, list[int]] = {i: [] for i in range(n)}
    for i, j in arrows:
        indeg[j] += 1
        out[i].append(j)
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    order = []
    while ready:
        i = ready.pop(0)
        order.append(i)
        for j in out[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
        ready.sort()
    if len(order) != n:
        raise OrientedCycle("orientation contains an oriented cycle")
    return order


def sinks(q: ValuedQuiver) -> frozenset[int]:
    tails = {i for i, _ in q.arrows}
    return frozenset(i for i in range(q.rank) if i not in tails)


def sources(q: ValuedQuiver) -> frozenset[int]:
    heads = {j for _, j in q.arrows}
    return frozenset(i for i in range(q.rank) if i not in heads)


def reflect_orientation(q: ValuedQuiver, k: int) -> ValuedQuiver:
    arrows = frozenset((j, i) if k in (i, j) else (i, j) for i, j in q.arrows)
    return ValuedQuiver(q.cartan, arrows)


def _reflect_arrows(arrows: frozenset, k: int) -> frozenset:
    return frozenset((j, i) if k in (i, j) else (i, j) for i, j in arrows)


@lru_cache(maxsize=None)
def admissible_ordering(q: ValuedQuiver) -> tuple[int, ...]:
    """Sink sequence i_1..i_n, always taking the smallest unused sink."""
    arrows = q.arrows
    remaining = set(range(q.rank))
    order = []
    while remaining:
        tails = {i for i, _ in arrows}
        avail = sorted(v for v in remaining if v not in tails)
        if not avail:
            raise OrientedCycle("no sink available; orientation has a cycle")
        k = avail[0]
        order.append(k)
        remaining.discard(k)
        arrows = _reflect_arrows(arrows, k)
    return tuple(order)


def all_admissible_orderings(q: ValuedQuiver) -> list[tuple[int, ...]]:
    """Every admissible ordering (exhaustive; small ranks only)."""
    out = []
    for perm in permutations(range(q.rank)):
        arrows = q.arrows
        ok = True
        for k in perm:
            if any(i == k for i, _ in arrows):
                ok = False
                break
            arrows = _reflect_arrows(arrows, k)
        if ok:
            out.append(perm)
    return out


def alternating_orientation(cartan: CartanData) -> ValuedQuiver:
    """Bipartite orientation; the class of each component's smallest vertex are sources."""
    n = cartan.rank
    color: dict[int, int] = {}
    for comp in cartan.components:
        start = comp[0]
        color[start] = 0
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in cartan.neighbors(i):
                if j not in color:
                    color[j] = 1 - color[i]
                    queue.append(j)
    arrows = frozenset((i, j) if color[i] == 0 else (j, i) for i, j in cartan.edges())
    assert len(color) == n
    return ValuedQuiver(cartan, arrows)


def linear_orientation(cartan: CartanData) -> ValuedQuiver:
    """Every edge {i, j} with i < j oriented i -> j."""
    return ValuedQuiver(cartan, frozenset(cartan.edges()))


def is_alternating(q: ValuedQuiver) -> bool:
    return sinks(q) | sources(q) == frozenset(range(q.rank))


_ARROW_RE = re.compile(r"^(\d+)\s*(>|<)\s*(\d+)$")


def parse_orientation(cartan: CartanData, spec: str) -> ValuedQuiver:
    """``"alternating"``, ``"linear"`` or an arrow list such as ``"1>2,3>2"``."""
    s = spec.strip()
    if s == "alternating":
        return alternating_orientation(cartan)
    if s == "linear":
        return linear_orientation(cartan)
    arrows = set()
    for part in filter(None, (p.strip() for p in s.split(","))):
        m = _ARROW_RE.match(part)
        if not m:
            raise ParseError(f"cannot parse arrow {part!r}")
        a, b = int(m.group(1)) - 1, int(m.group(3)) - 1
        if m.group(2) == "<":
            a, b = b, a
        if not (0 <= a < cartan.rank and 0 <= b < cartan.rank):
            raise ParseError(f"arrow {part!r} out of range")
        arrows.add((a, b))
    try:
        return ValuedQuiver(cartan, frozenset(arrows))
    except ValueError as exc:
        if isinstance(exc, OrientedCycle):
            raise
        raise ParseError(str(exc)) from None
