"""Finite-type Cartan matrices and their root systems.

Vertices are 0-based in the Python API and 1-based in every string form
(``"a1+a2"``, ``"1>2"``).  The reflection convention is
``s_i(alpha_j) = alpha_j - a_ij alpha_i``.
"""
from __future__ import annotations

import json
import math
import re
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from ._linalg import determinant, to_fractions
from .errors import NotFiniteType, NotGeneralizedCartan, NotSymmetrizable, ParseError

Root = tuple[int, ...]


@dataclass(frozen=True)
class CartanData:
    """A classified finite-type symmetrizable Cartan matrix.

    ``components`` lists the vertex sets of the irreducible components,
    ordered by smallest vertex; ``component_types`` gives the matching
    Dynkin labels such as ``"B3"``.
    """

    matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    component_types: tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def type_label(self) -> str:
        return "x".join(self.component_types)

    @property
    def simply_laced(self) -> bool:
        return all(e == 1 for e in self.symmetrizer)

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(self.rank) if j != i and self.matrix[i][j] != 0]

    def edges(self) -> list[tuple[int, int]]:
        n = self.rank
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.matrix[i][j] != 0]

    def simple_root(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def __str__(self) -> str:
        return self.type_label


def _components(a: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    n = len(a)
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            i = queue.popleft()
            comp.append(i)
            for j in range(n):
                if j != i and a[i][j] != 0 and j not in seen:
                    seen.add(j)
                    queue.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def _symmetrizer(a: Sequence[Sequence[int]], comps) -> tuple[int, ...]:
    n = len(a)
    eps: list[Fraction | None] = [None] * n
    for comp in comps:
        eps[comp[0]] = Fraction(1)
        queue = deque([comp[0]])
        while queue:
            i = queue.popleft()
            for j in comp:
                if j != i and a[i][j] != 0 and eps[j] is None:
                    # eps_i a_ij = eps_j a_ji
                    eps[j] = eps[i] * a[i][j] / a[j][i]
                    queue.append(j)
        for i in comp:
            for j in comp:
                if eps[i] * a[i][j] != eps[j] * a[j][i]:
                    raise NotSymmetrizable(f"no symmetrizer: fails at ({i + 1},{j + 1})")
        denom = math.lcm(*(eps[i].denominator for i in comp))
        ints = [int(eps[i] * denom) for i in comp]
        g = math.gcd(*ints)
        for i, v in zip(comp, ints):
            eps[i] = Fraction(v // g)
    return tuple(int(e) for e in eps)


def _label_component(a, eps, comp: tuple[int, ...]) -> str:
    n = len(comp)
    if n == 1:
        return "A1"
    adj = {i: [j for j in comp if j != i and a[i][j] != 0] for i in comp}
    mult = {(i, j): a[i][j] * a[j][i] for i in comp for j in adj[i]}
    top = max(mult.values())
    if top == 3:
        return "G2"
    if top == 2:
        if n == 2:
            return "B2"
        i, j = next(e for e, m in mult.items() if m == 2)
        if len(adj[i]) > 1 and len(adj[j]) > 1:
            return "F4"
        end, inner = (i, j) if len(adj[i]) == 1 else (j, i)
        return f"B{n}" if eps[end] < eps[inner] else f"C{n}"
    branch = [i for i in comp if len(adj[i]) == 3]
    if not branch:
        return f"A{n}"
    (b,) = branch
    arms = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [k for k in adj[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return f"E{n}"
    raise NotFiniteType(f"unrecognised diagram with arms {arms}")  # pragma: no cover


def classify(matrix: Sequence[Sequence[int]]) -> CartanData:
    """Validate an integer matrix as a finite-type Cartan matrix and label it."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise NotGeneralizedCartan("matrix must be square and non-empty")
    for i in range(n):
        if a[i][i] != 2:
            raise NotGeneralizedCartan(f"diagonal entry {i + 1} is {a[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if a[i][j] > 0:
                raise NotGeneralizedCartan(f"positive off-diagonal entry at ({i + 1},{j + 1})")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise NotGeneralizedCartan(f"asymmetric zero pattern at ({i + 1},{j + 1})")
    comps = _components(a)
    eps = _symmetrizer(a, comps)
    sym = to_fractions([[eps[i] * a[i][j] for j in range(n)] for i in range(n)])
    for k in range(1, n + 1):
        if determinant([row[:k] for row in sym[:k]]) <= 0:
            raise NotFiniteType("symmetrized matrix is not positive definite")
    labels = tuple(_label_component(a, eps, c) for c in comps)
    return CartanData(
        matrix=tuple(tuple(row) for row in a),
        symmetrizer=eps,
        components=tuple(comps),
        component_types=labels,
    )


def _irreducible_matrix(letter: str, n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j], a[j][i] = aij, aji

    bounds = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (4, None),
              "E": (6, 8), "F": (4, 4), "G": (2, 2)}
    lo, hi = bounds[letter]
    if n < lo or (hi is not None and n > hi):
        raise ParseError(f"no Dynkin type {letter}{n}")
    if letter in "ABC":
        for i in range(n - 2):
            link(i, i + 1)
        if letter == "A":
            if n > 1:
                link(n - 2, n - 1)
        elif letter == "B":
            link(n - 2, n - 1, -1, -2)  # last node short
        else:
            link(n - 2, n - 1, -2, -1)  # last node long
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    else:
        link(0, 1, -3, -1)
    return a


_TYPE_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def cartan_matrix(type_spec: str) -> list[list[int]]:
    """Cartan matrix for a spec like ``"D4"`` or ``"A1xA1"`` (block diagonal)."""
    parts = [p.strip() for p in re.split(r"[x×*]", type_spec.strip()) if p.strip()]
    if not parts:
        raise ParseError(f"empty type spec {type_spec!r}")
    blocks = []
    for p in parts:
        m = _TYPE_RE.match(p)
        if not m:
            raise ParseError(f"cannot parse Dynkin type {p!r}")
        blocks.append(_irreducible_matrix(m.group(1).upper(), int(m.group(2))))
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[off + i][off:off + len(b)] = row
        off += len(b)
    return out


def parse_type(spec: str) -> CartanData:
    """Parse ``"A3"``, ``"A1xA1"`` or a JSON integer matrix into CartanData."""
    s = spec.strip()
    if s.startswith("["):
        try:
            matrix = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON matrix: {exc}") from None
        if not (isinstance(matrix, list) and all(isinstance(r, list) for r in matrix)):
            raise ParseError("JSON Cartan matrix must be a list of integer rows")
        return classify(matrix)
    return classify(cartan_matrix(s))


def simple_reflection(cartan: CartanData, i: int, beta: Root) -> Root:
    c = sum(a * b for a, b in zip(cartan.matrix[i], beta))
    if c == 0:
        return tuple(beta)
    out = list(beta)
    out[i] -= c
    return tuple(out)


def root_coefficient(beta: Root, i: int) -> int:
    return beta[i]


def height(beta: Root) -> int:
    return sum(beta)


def is_positive(beta: Root) -> bool:
    return all(c >= 0 for c in beta) and any(beta)


def is_negative(beta: Root) -> bool:
    return all(c <= 0 for c in beta) and any(beta)


def negative_simple_index(beta: Root) -> int | None:
    """Return ``i`` if ``beta == -alpha_i``, else None."""
    if sum(beta) == -1 and all(c in (0, -1) for c in beta):
        return beta.index(-1)
    return None


@lru_cache(maxsize=None)
def positive_roots(cartan: CartanData) -> tuple[Root, ...]:
    n = cartan.rank
    simples = [cartan.simple_root(i) for i in range(n)]
    found = set(simples)
    queue = deque(simples)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            gamma = simple_reflection(cartan, i, beta)
            if is_positive(gamma) and gamma not in found:
                found.add(gamma)
                queue.append(gamma)
    return tuple(sorted(found))


def coxeter_invariants(cartan: CartanData, roots: Sequence[Root] | None = None,
                       component: Sequence[int] | None = None) -> tuple[int, tuple[int, ...]]:
    """Coxeter number and exponents of one irreducible component.

    Exponents are the conjugate partition of the positive-root height
    multiset; with no ``component`` given the system must be irreducible.
    """
    if roots is None:
        roots = positive_roots(cartan)
    if component is None:
        if len(cartan.components) != 1:
            raise ValueError("reducible system: pass a component")
        component = cartan.components[0]
    comp = set(component)
    mine = [r for r in roots if any(r[i] for i in comp)]
    n = len(comp)
    h, rem = divmod(2 * len(mine), n)
    assert rem == 0, "root count is not a multiple of the rank"
    counts = Counter(height(r) for r in mine)
    by_height = [counts[k] for k in range(1, max(counts) + 1)]
    exponents = tuple(sorted(sum(1 for c in by_height if c >= j) for j in range(1, n + 1)))
    return h, exponents


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanData
    positive_roots: tuple[Root, ...]
    coxeter_numbers: tuple[int, ...]
    component_exponents: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def coxeter_number(self) -> int:
        """Largest component Coxeter number (the only one, when irreducible)."""
        return max(self.coxeter_numbers)

    @cached_property
    def exponents(self) -> tuple[int, ...]:
        return tuple(sorted(e for exps in self.component_exponents for e in exps))

    @cached_property
    def almost_positive_roots(self) -> tuple[Root, ...]:
        negs = tuple(tuple(-c for c in self.cartan.simple_root(i)) for i in range(self.rank))
        return negs + self.positive_roots


@lru_cache(maxsize=None)
def root_system(cartan: CartanData) -> RootSystem:
    roots = positive_roots(cartan)
    invs = [coxeter_invariants(cartan, roots, comp) for comp in cartan.components]
    return RootSystem(
        cartan=cartan,
        positive_roots=roots,
        coxeter_numbers=tuple(h for h, _ in invs),
        component_exponents=tuple(e for _, e in invs),
    )


def format_root(beta: Root) -> str:
    """``(1, 2, 0)`` -> ``"a1+2a2"``; ``(0, -1)`` -> ``"-a2"``."""
    terms = []
    for i, c in enumerate(beta):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        terms.append(("-" if c < 0 else "+") + f"{mag}a{i + 1}")
    if not terms:
        return "0"
    s = "".join(terms)
    return s[1:] if s.startswith("+") else s


_TERM_RE = re.compile(r"([+-]?)(\d*)a(\d+)")


def parse_root(text: str, rank: int) -> Root:
    s = text.replace(" ", "")
    pos = 0
    coeffs = [0] * rank
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or (pos > 0 and not m.group(1)):
            raise ParseError(f"cannot parse root expression {text!r}")
        idx = int(m.group(3))
        if not 1 <= idx <= rank:
            raise ParseError(f"vertex a{idx} out of range 1..{rank}")
        c = int(m.group(2) or 1)
        coeffs[idx - 1] += -c if m.group(1) == "-" else c
        pos = m.end()
    if pos == 0:
        raise ParseError(f"empty root expression {text!r}")
    return tuple(coeffs)
