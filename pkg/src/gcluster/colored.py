"""Almost positive roots, colored roots and the reflection-like maps on them.

An almost positive root is a plain coefficient tuple that is either a
positive root or ``-alpha_i``.
"""
from __future__ import annotations

import re
from functools import lru_cache
from typing import NamedTuple

from .cartan import (
    CartanData,
    Root,
    format_root,
    is_negative,
    is_positive,
    negative_simple_index,
    parse_root,
    root_system,
    simple_reflection,
)
from .errors import NoNegativeInOrbit, NotAlternating, ParseError
from .quiver import ValuedQuiver, admissible_ordering, is_alternating, sinks, sources


class ColoredRoot(NamedTuple):
    root: Root
    color: int

    @property
    def positive(self) -> bool:
        return is_positive(self.root)

    def __str__(self) -> str:
        return f"{format_root(self.root)}:{self.color}"

    def to_json(self) -> dict:
        return {"root": list(self.root), "color": self.color}


def colored_sort_key(x: ColoredRoot):
    """Negative simples first (by index), then positive roots by color and lex order."""
    return (x.positive, x.color, x.root)


def colored_roots(cartan: CartanData, d: int) -> list[ColoredRoot]:
    """Canonically sorted Phi^d_{>=-1}."""
    rs = root_system(cartan)
    out = [ColoredRoot(tuple(-c for c in cartan.simple_root(i)), 1) for i in range(cartan.rank)]
    out += [ColoredRoot(r, k) for k in range(1, d + 1) for r in rs.positive_roots]
    return sorted(out, key=colored_sort_key)


def is_colored_root(cartan: CartanData, d: int, x: ColoredRoot) -> bool:
    if negative_simple_index(x.root) is not None:
        return x.color == 1
    return 1 <= x.color <= d and x.root in set(root_system(cartan).positive_roots)


def parse_colored_root(text: str, cartan: CartanData, d: int) -> ColoredRoot:
    """Parse ``"a1+a2:2"`` or ``"-a1:1"``; a missing color means 1."""
    m = re.match(r"^\s*([^:]+?)\s*(?::\s*(\d+))?\s*$", text)
    if not m:
        raise ParseError(f"cannot parse colored root {text!r}")
    x = ColoredRoot(parse_root(m.group(1), cartan.rank), int(m.group(2) or 1))
    if not is_colored_root(cartan, d, x):
        raise ParseError(f"{text!r} is not a colored almost positive root for d={d}")
    return x


def colored_from_json(obj: dict) -> ColoredRoot:
    return ColoredRoot(tuple(int(c) for c in obj["root"]), int(obj["color"]))


def truncated_reflection(cartan: CartanData, i: int, alpha: Root) -> Root:
    j = negative_simple_index(alpha)
    if j is not None and j != i:
        return alpha
    return simple_reflection(cartan, i, alpha)


def r_omega(q: ValuedQuiver, alpha: Root, ordering: tuple[int, ...] | None = None) -> Root:
    """sigma_{i_n} ... sigma_{i_1} along an admissible ordering (i_1 applied first)."""
    if ordering is None:
        ordering = admissible_ordering(q)
    for i in ordering:
        alpha = truncated_reflection(q.cartan, i, alpha)
    return alpha


def tau_pm(q0: ValuedQuiver, sign: str, alpha: Root) -> Root:
    """tau_+ (product over sinks) or tau_- (product over sources)."""
    if not is_alternating(q0):
        raise NotAlternating("tau_+/- needs an alternating orientation")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    for i in sorted(sinks(q0) if sign == "+" else sources(q0)):
        alpha = truncated_reflection(q0.cartan, i, alpha)
    return alpha


@lru_cache(maxsize=None)
def t_of(q0: ValuedQuiver, beta: Root) -> int:
    """Least t >= 0 with R^t(beta) negative."""
    cap = root_system(q0.cartan).coxeter_number + 2
    x = beta
    for t in range(cap + 1):
        if is_negative(x):
            return t
        x = r_omega(q0, x)
    raise NoNegativeInOrbit(f"R-orbit of {format_root(beta)} stayed positive for {cap} steps")


def sigma_kd(cartan: CartanData, k: int, d: int, x: ColoredRoot) -> ColoredRoot:
    """d-truncated simple reflection of Phi^d_{>=-1}."""
    alpha, i = x
    neg = negative_simple_index(alpha)
    if neg is not None:
        if neg == k:
            return ColoredRoot(cartan.simple_root(k), d)
        return x
    if alpha == cartan.simple_root(k) and 1 < i <= d:
        return ColoredRoot(alpha, i - 1)
    return ColoredRoot(simple_reflection(cartan, k, alpha), i)


def r_d_omega(q: ValuedQuiver, d: int, x: ColoredRoot) -> ColoredRoot:
    alpha, k = x
    if is_positive(alpha) and k < d:
        return ColoredRoot(alpha, k + 1)
    return ColoredRoot(r_omega(q, alpha), 1)
