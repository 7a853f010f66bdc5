"""Explicit model of rep(Q), its derived category and the d-cluster category.

Only simply-laced Dynkin quivers are supported.  Representations carry
exact rational matrices; every indecomposable is pinned down by its
dimension vector, so derived and cluster-category objects are plain
``(root, shift)`` / ``(root, degree)`` pairs and only Hom computations
touch matrices.

Arrow ``i -> j`` carries a linear map ``M_i -> M_j``, stored as a
``dims[j] x dims[i]`` matrix.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple

from ._linalg import Matrix, identity, inverse, matmul, nullspace, rank, transpose, zeros
from .cartan import (
    Root,
    format_root,
    is_positive,
    negative_simple_index,
    root_system,
    simple_reflection,
)
from .colored import ColoredRoot, colored_sort_key
from .errors import NegativeExt, NotASink, NotSimplyLaced, SupportViolation
from .quiver import ValuedQuiver, admissible_ordering, reflect_orientation, sinks, sources


@dataclass(eq=False)
class QuiverRep:
    quiver: ValuedQuiver
    dims: tuple[int, ...]
    maps: dict[tuple[int, int], Matrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for i, j in self.quiver.arrows:
            m = self.maps.setdefault((i, j), zeros(self.dims[j], self.dims[i]))
            if len(m) != self.dims[j] or any(len(row) != self.dims[i] for row in m):
                raise ValueError(f"map on arrow {i + 1}->{j + 1} has the wrong shape")

    def __repr__(self) -> str:
        return f"QuiverRep(dims={self.dims}, quiver={self.quiver})"


class DerivedObject(NamedTuple):
    """The indecomposable ``M_root[shift]`` of the bounded derived category."""

    root: Root
    shift: int

    def __str__(self) -> str:
        return f"M({format_root(self.root)})[{self.shift}]"


class CdObject(NamedTuple):
    """Indecomposable of the d-cluster category in the fundamental domain."""

    root: Root
    degree: int

    def __str__(self) -> str:
        return f"M({format_root(self.root)})[{self.degree}]"


def simple_rep(q: ValuedQuiver, i: int) -> QuiverRep:
    return QuiverRep(q, q.cartan.simple_root(i))


def reflect_at_sink(m: QuiverRep, k: int) -> QuiverRep:
    """BGP functor S_k^+: the new space at ``k`` is the kernel of the sum map into M_k."""
    q = m.quiver
    if k not in sinks(q):
        raise NotASink(f"vertex {k + 1} is not a sink")
    incoming = sorted(i for i, j in q.arrows if j == k)
    blocks = [m.maps[(i, k)] for i in incoming]
    width = sum(m.dims[i] for i in incoming)
    h = [sum((b[r] for b in blocks), []) for r in range(m.dims[k])]
    ker = nullspace(h, width)
    new_k = len(ker[0]) if width else 0
    dims = list(m.dims)
    dims[k] = new_k
    maps = {a: mat for a, mat in m.maps.items() if k not in a}
    off = 0
    for i in incoming:
        maps[(k, i)] = [list(row) for row in ker[off:off + m.dims[i]]] if new_k else zeros(m.dims[i], 0)
        off += m.dims[i]
    return QuiverRep(reflect_orientation(q, k), tuple(dims), maps)


def reflect_at_source(m: QuiverRep, k: int) -> QuiverRep:
    """BGP functor S_k^-: the new space at ``k`` is the cokernel of M_k into the sum."""
    q = m.quiver
    if k not in sources(q):
        raise ValueError(f"vertex {k + 1} is not a source")
    outgoing = sorted(j for i, j in q.arrows if i == k)
    f: Matrix = []
    for j in outgoing:
        f.extend(list(row) for row in m.maps[(k, j)])
    height = len(f)
    # rows of the cokernel projection span the left nullspace of f
    left = nullspace(transpose(f, m.dims[k]) if f else [], height)
    proj = transpose(left) if left and left[0] else []
    new_k = len(proj)
    dims = list(m.dims)
    dims[k] = new_k
    maps = {a: mat for a, mat in m.maps.items() if k not in a}
    off = 0
    for j in outgoing:
        maps[(j, k)] = [row[off:off + m.dims[j]] for row in proj]
        off += m.dims[j]
    return QuiverRep(reflect_orientation(q, k), tuple(dims), maps)


def _require_simply_laced(q: ValuedQuiver) -> None:
    if not q.cartan.simply_laced:
        raise NotSimplyLaced(f"type {q.cartan.type_label} is not simply laced")


def build_indecomposables(q: ValuedQuiver) -> dict[Root, QuiverRep]:
    """One indecomposable per positive root, via reflection functors.

    Along the periodic sink sequence i_1, i_2, ... the simple E_{i_t} of
    the t-th reflected quiver is pulled back by S^-_{i_{t-1}} ... S^-_{i_1};
    each positive root appears exactly once before the words stop being
    reduced.
    """
    _require_simply_laced(q)
    cartan = q.cartan
    n = q.rank
    target = set(root_system(cartan).positive_roots)
    order = admissible_ordering(q)
    quivers = [q]
    out: dict[Root, QuiverRep] = {}
    for t in range(n * (root_system(cartan).coxeter_number + 2)):
        if len(out) == len(target):
            break
        k = order[t % n]
        qt = quivers[t]
        rep = simple_rep(qt, k)
        ok = True
        for s in range(t - 1, -1, -1):
            rep = reflect_at_source(rep, order[s % n])
            if not is_positive(rep.dims):
                ok = False
                break
        quivers.append(reflect_orientation(qt, k))
        if ok and rep.dims not in out:
            out[rep.dims] = rep
    if set(out) != target:
        raise RuntimeError("reflection functors did not produce every positive root")
    return dict(sorted(out.items()))


def hom_dim(m: QuiverRep, n: QuiverRep) -> int:
    """dim Hom(M, N) as the nullity of the intertwiner equations."""
    q = m.quiver
    offsets = []
    total = 0
    for i in range(q.rank):
        offsets.append(total)
        total += n.dims[i] * m.dims[i]
    if total == 0:
        return 0

    def var(i: int, r: int, c: int) -> int:
        return offsets[i] + r * m.dims[i] + c

    rows: Matrix = []
    for i, j in q.sorted_arrows():
        ma, na = m.maps[(i, j)], n.maps[(i, j)]
        # N_a phi_i - phi_j M_a = 0, an (n_j x m_i) block of equations
        for r in range(n.dims[j]):
            for c in range(m.dims[i]):
                row = [Fraction(0)] * total
                for s in range(n.dims[i]):
                    if na[r][s]:
                        row[var(i, s, c)] += na[r][s]
                for t in range(m.dims[j]):
                    if ma[t][c]:
                        row[var(j, r, t)] -= ma[t][c]
                rows.append(row)
    return total - rank(rows, total)


def euler_form(q: ValuedQuiver, x: Iterable[int], y: Iterable[int]) -> int:
    x, y = tuple(x), tuple(y)
    return sum(a * b for a, b in zip(x, y)) - sum(x[i] * y[j] for i, j in q.arrows)


def ext1_dim(m: QuiverRep, n: QuiverRep) -> int:
    e = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    if e < 0:
        raise NegativeExt(f"Ext^1 came out as {e} for dims {m.dims}, {n.dims}")
    return e


def path_counts(q: ValuedQuiver, start: int, forward: bool = True) -> Root:
    """Paths out of ``start`` (dim P_start) or, backwards, into it (dim I_start)."""
    n = q.rank
    counts = [0] * n
    counts[start] = 1
    stack = [start]
    while stack:
        v = stack.pop()
        for i, j in q.arrows:
            src, dst = (i, j) if forward else (j, i)
            if src == v:
                counts[dst] += 1
                stack.append(dst)
    return tuple(counts)


def _apply(mat: list[list[int]], v: Root) -> Root:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in mat)


class QuiverModel:
    """rep(Q) and D^b(rep Q) for a simply-laced Dynkin quiver."""

    def __init__(self, quiver: ValuedQuiver):
        _require_simply_laced(quiver)
        self.quiver = quiver
        self.indecomposables = build_indecomposables(quiver)
        self.roots = tuple(self.indecomposables)

    @cached_property
    def projectives(self) -> tuple[Root, ...]:
        return tuple(path_counts(self.quiver, i) for i in range(self.quiver.rank))

    @cached_property
    def injectives(self) -> tuple[Root, ...]:
        return tuple(path_counts(self.quiver, i, forward=False) for i in range(self.quiver.rank))

    @cached_property
    def _projective_index(self) -> dict[Root, int]:
        return {p: i for i, p in enumerate(self.projectives)}

    @cached_property
    def _injective_index(self) -> dict[Root, int]:
        return {p: i for i, p in enumerate(self.injectives)}

    def projective_index(self, root: Root) -> int | None:
        return self._projective_index.get(root)

    def injective_index(self, root: Root) -> int | None:
        return self._injective_index.get(root)

    @cached_property
    def coxeter_matrix(self) -> list[list[int]]:
        """-E^{-1} E^T where E is the Gram matrix of the Euler form."""
        n = self.quiver.rank
        e = identity(n)
        for i, j in self.quiver.arrows:
            e[i][j] -= 1
        c = matmul(inverse(e), transpose(e))
        return [[-int(x) for x in row] for row in c]

    @cached_property
    def coxeter_inverse(self) -> list[list[int]]:
        inv = inverse([[Fraction(x) for x in row] for row in self.coxeter_matrix])
        return [[int(x) for x in row] for row in inv]

    def tau_root(self, root: Root) -> Root:
        return _apply(self.coxeter_matrix, root)

    def tau_inv_root(self, root: Root) -> Root:
        return _apply(self.coxeter_inverse, root)

    def tau(self, x: DerivedObject) -> DerivedObject:
        i = self.projective_index(x.root)
        if i is not None:
            return DerivedObject(self.injectives[i], x.shift - 1)
        return DerivedObject(self.tau_root(x.root), x.shift)

    def tau_inv(self, x: DerivedObject) -> DerivedObject:
        i = self.injective_index(x.root)
        if i is not None:
            return DerivedObject(self.projectives[i], x.shift + 1)
        return DerivedObject(self.tau_inv_root(x.root), x.shift)

    @cached_property
    def _hom_table(self) -> dict[tuple[Root, Root], int]:
        reps = self.indecomposables
        return {(a, b): hom_dim(reps[a], reps[b]) for a in reps for b in reps}

    def hom(self, a: Root, b: Root) -> int:
        return self._hom_table[(a, b)]

    def ext1(self, a: Root, b: Root) -> int:
        e = self.hom(a, b) - euler_form(self.quiver, a, b)
        if e < 0:
            raise NegativeExt(f"Ext^1({format_root(a)}, {format_root(b)}) = {e}")
        return e

    def hom_derived(self, x: DerivedObject, y: DerivedObject) -> int:
        gap = y.shift - x.shift
        if gap == 0:
            return self.hom(x.root, y.root)
        if gap == 1:
            return self.ext1(x.root, y.root)
        return 0


class ClusterCategory:
    """The orbit category D / tau^{-1}[d] restricted to its fundamental domain."""

    window = 2

    def __init__(self, quiver: ValuedQuiver, d: int, model: QuiverModel | None = None):
        if d < 1:
            raise ValueError("d must be a positive integer")
        self.quiver = quiver
        self.d = d
        self.model = model if model is not None else QuiverModel(quiver)
        self._hom_cache: dict[tuple[CdObject, CdObject], int] = {}

    @property
    def cartan(self):
        return self.quiver.cartan

    @cached_property
    def objects(self) -> tuple[CdObject, ...]:
        """ind C_d in canonical order: by degree, then root lex."""
        objs = [CdObject(r, k) for k in range(self.d) for r in self.model.roots]
        objs += [CdObject(p, self.d) for p in self.model.projectives]
        return tuple(sorted(objs, key=lambda x: (x.degree, x.root)))

    def in_domain(self, x: DerivedObject) -> bool:
        return 0 <= x.shift < self.d or (
            x.shift == self.d and self.model.projective_index(x.root) is not None)

    def F(self, x: DerivedObject, power: int = 1) -> DerivedObject:
        """tau^{-power} x [power * d]."""
        m = self.model
        step = m.tau_inv if power > 0 else m.tau
        for _ in range(abs(power)):
            x = step(x)
        return DerivedObject(x.root, x.shift + power * self.d)

    def normalize(self, x: DerivedObject) -> CdObject:
        for _ in range(abs(x.shift) + 3 * self.d + 3):
            if self.in_domain(x):
                return CdObject(x.root, x.shift)
            x = self.F(x, -1 if x.shift >= self.d else 1)
        raise RuntimeError(f"{x} never reached the fundamental domain")  # pragma: no cover

    def shift(self, x: CdObject, i: int = 1) -> CdObject:
        return self.normalize(DerivedObject(x.root, x.degree + i))

    def hom(self, x: CdObject, y: CdObject) -> int:
        """Sum over k of Hom_D(x, F^k y); only |k| <= 1 may contribute."""
        key = (x, y)
        if key in self._hom_cache:
            return self._hom_cache[key]
        dx = DerivedObject(x.root, x.degree)
        dy = DerivedObject(y.root, y.degree)
        total = 0
        for k in range(-self.window, self.window + 1):
            term = self.model.hom_derived(dx, self.F(dy, k))
            if term and abs(k) > 1:
                raise SupportViolation(f"Hom({x}, F^{k} {y}) = {term}")
            total += term
        self._hom_cache[key] = total
        return total

    def ext(self, i: int, x: CdObject, y: CdObject) -> int:
        return self.hom(x, self.shift(y, i))

    def gamma(self, x: CdObject) -> ColoredRoot:
        if x.degree == self.d:
            j = self.model.projective_index(x.root)
            return ColoredRoot(tuple(-c for c in self.cartan.simple_root(j)), 1)
        return ColoredRoot(x.root, x.degree + 1)

    def gamma_inv(self, c: ColoredRoot) -> CdObject:
        j = negative_simple_index(c.root)
        if j is not None:
            return CdObject(self.model.projectives[j], self.d)
        return CdObject(c.root, c.color - 1)

    def compat_degree(self, a: ColoredRoot, b: ColoredRoot) -> int:
        """dim Ext^1(M_a, M_b[0] + ... + M_b[d-1]) in C_d."""
        x, y = self.gamma_inv(a), self.gamma_inv(b)
        return sum(self.ext(1, x, self.shift(y, i)) for i in range(self.d))

    def compatible(self, a: ColoredRoot, b: ColoredRoot) -> bool:
        return self.compat_degree(a, b) == 0

    def is_exceptional_set(self, xs: Iterable[CdObject]) -> bool:
        xs = list(xs)
        return all(self.ext(i, x, y) == 0
                   for x in xs for y in xs for i in range(1, self.d + 1))

    def vertices(self) -> list[ColoredRoot]:
        return sorted((self.gamma(x) for x in self.objects), key=colored_sort_key)

    def hom_table(self, ext_degree: int = 0) -> dict:
        """Hom (or Ext^i) matrix over the canonical object order, JSON-ready."""
        objs = self.objects
        if ext_degree:
            rows = [[self.ext(ext_degree, x, y) for y in objs] for x in objs]
        else:
            rows = [[self.hom(x, y) for y in objs] for x in objs]
        return {
            "schema": "gcc/1",
            "type": self.cartan.type_label,
            "orientation": str(self.quiver),
            "d": self.d,
            "ext_degree": ext_degree,
            "objects": [{"root": list(x.root), "degree": x.degree} for x in objs],
            "matrix": rows,
        }

    def hom_table_json(self, ext_degree: int = 0) -> str:
        return json.dumps(self.hom_table(ext_degree), indent=2)


def bgp_reflect_cd(cat: ClusterCategory, k: int, x: CdObject) -> CdObject:
    """Image of ``x`` under the BGP reflection at the sink ``k``, in C_d(s_k H)."""
    q = cat.quiver
    if k not in sinks(q):
        raise NotASink(f"vertex {k + 1} is not a sink")
    d = cat.d
    pk = cat.model.projectives[k]
    q2 = reflect_orientation(q, k)
    if x.root == pk:
        if x.degree == 0:
            return CdObject(path_counts(q2, k), d)
        return CdObject(pk, x.degree - 1)  # E'_k has the same dimension vector
    j = cat.model.projective_index(x.root)
    if x.degree == d and j is not None:
        return CdObject(path_counts(q2, j), d)
    return CdObject(simple_reflection(q.cartan, k, x.root), x.degree)

