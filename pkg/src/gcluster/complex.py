"""Generalized cluster complexes as clique complexes of a compatibility graph."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

import networkx as nx

from .cartan import CartanData, root_system
from .colored import ColoredRoot, colored_roots
from .compat import is_compatible_colored
from .errors import (
    AsymmetricRelation,
    NonIntegralProduct,
    NotABijection,
    NotAFacet,
    NotAlternating,
    NotAMember,
    VertexCapExceeded,
)
from .quiver import ValuedQuiver, is_alternating
from .repcat import ClusterCategory

PREDICATES = ("combinatorial", "categorical")
DEFAULT_VERTEX_CAP = 400


@dataclass
class ComplexData:
    vertices: list[ColoredRoot]
    adjacency: list[list[bool]]
    facets: list[tuple[int, ...]]
    type_label: str = ""
    d: int = 1
    predicate: str = "combinatorial"
    orientation: str = ""
    rank: int = 0
    _graph: nx.Graph | None = field(default=None, repr=False, compare=False)

    @property
    def graph(self) -> nx.Graph:
        if self._graph is None:
            self._graph = _graph_of(self.adjacency)
        return self._graph

    @property
    def facet_count(self) -> int:
        return len(self.facets)

    @property
    def pure(self) -> bool:
        return all(len(f) == self.rank for f in self.facets)

    def index(self, v: ColoredRoot) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise NotAMember(f"{v} is not a vertex") from None

    def facet_roots(self) -> list[list[ColoredRoot]]:
        return [[self.vertices[i] for i in f] for f in self.facets]


def _graph_of(adjacency: Sequence[Sequence[bool]]) -> nx.Graph:
    g = nx.Graph()
    n = len(adjacency)
    g.add_nodes_from(range(n))
    g.add_edges_from((i, j) for i in range(n) for j in range(i + 1, n) if adjacency[i][j])
    return g


def maximal_cliques(adjacency: Sequence[Sequence[bool]]) -> list[tuple[int, ...]]:
    """Maximal cliques as sorted index tuples, in sorted order."""
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(_graph_of(adjacency)))


def build_complex(q: ValuedQuiver, d: int, predicate: str = "combinatorial",
                  vertex_cap: int = DEFAULT_VERTEX_CAP, category=None) -> ComplexData:
    """Clique complex on Phi^d_{>=-1} for the chosen compatibility predicate.

    ``combinatorial`` needs an alternating orientation; ``categorical``
    works for any orientation of a simply-laced diagram and may reuse a
    prebuilt ``ClusterCategory``.
    """
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    cartan = q.cartan
    size = d * len(root_system(cartan).positive_roots) + cartan.rank
    if size > vertex_cap:
        raise VertexCapExceeded(f"{size} vertices exceeds the cap of {vertex_cap}")
    vertices = colored_roots(cartan, d)
    if predicate == "combinatorial":
        if not is_alternating(q):
            raise NotAlternating("the combinatorial predicate uses an alternating orientation")

        def rel(a, b):
            return is_compatible_colored(q, d, a, b)
    else:
        cat = category if category is not None else ClusterCategory(q, d)
        rel = cat.compatible
    adjacency = [[False] * len(vertices) for _ in vertices]
    for i, a in enumerate(vertices):
        for j in range(i, len(vertices)):
            b = vertices[j]
            ab = rel(a, b)
            if i != j and ab != rel(b, a):
                raise AsymmetricRelation(f"{a} vs {b}: relation is not symmetric")
            adjacency[i][j] = adjacency[j][i] = ab
    for i in range(len(vertices)):
        adjacency[i][i] = False
    return ComplexData(
        vertices=vertices,
        adjacency=adjacency,
        facets=maximal_cliques(adjacency),
        type_label=cartan.type_label,
        d=d,
        predicate=predicate,
        orientation=str(q),
        rank=cartan.rank,
    )


def positive_subcomplex(c: ComplexData) -> ComplexData:
    keep = [i for i, v in enumerate(c.vertices) if v.positive]
    adjacency = [[c.adjacency[i][j] for j in keep] for i in keep]
    return ComplexData(
        vertices=[c.vertices[i] for i in keep],
        adjacency=adjacency,
        facets=maximal_cliques(adjacency),
        type_label=c.type_label,
        d=c.d,
        predicate=c.predicate,
        orientation=c.orientation,
        rank=c.rank,
    )


def f_vector(c: ComplexData) -> list[int]:
    """Face counts f_{-1}=1, f_0, f_1, ... of the flag complex."""
    counts = [1]
    for clique in nx.enumerate_all_cliques(c.graph):
        k = len(clique)
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    return counts


def fuss_catalan(cartan: CartanData, d: int) -> int:
    """Product over components of prod_i (d h + e_i + 1) / (e_i + 1)."""
    rs = root_system(cartan)
    total = 1
    for h, exps in zip(rs.coxeter_numbers, rs.component_exponents):
        value = Fraction(1)
        for e in exps:
            value *= Fraction(d * h + e + 1, e + 1)
        if value.denominator != 1:
            raise NonIntegralProduct(f"component product {value} is not an integer")
        total *= value.numerator
    return total


def complements(c: ComplexData, facet: Sequence[int], x: int) -> list[int]:
    """Vertices v with (facet - {x}) + {v} a facet; ``x`` itself included."""
    key = tuple(sorted(facet))
    facet_set = set(c.facets)
    if key not in facet_set:
        raise NotAFacet(f"{key} is not a facet")
    if x not in key:
        raise NotAMember(f"vertex {x} is not in facet {key}")
    rest = [v for v in key if v != x]
    out = []
    for v in range(len(c.vertices)):
        if v in rest:
            continue
        if tuple(sorted(rest + [v])) in facet_set:
            out.append(v)
    return out


def complex_isomorphic(c1: ComplexData, c2: ComplexData,
                       vertex_map: Mapping[ColoredRoot, ColoredRoot] | Callable) -> bool:
    """True iff ``vertex_map`` carries the 1-skeleton of c1 exactly onto that of c2."""
    f = vertex_map if callable(vertex_map) else vertex_map.__getitem__
    image = [f(v) for v in c1.vertices]
    if len(set(image)) != len(image) or set(image) != set(c2.vertices):
        raise NotABijection("vertex map is not a bijection between vertex sets")
    pos = {v: i for i, v in enumerate(c2.vertices)}
    idx = [pos[v] for v in image]
    n = len(idx)
    return all(c1.adjacency[i][j] == c2.adjacency[idx[i]][idx[j]]
               for i in range(n) for j in range(i + 1, n))


def to_json_dict(c: ComplexData, cartan: CartanData | None = None) -> dict:
    out = {
        "schema": "gcc/1",
        "type": c.type_label,
        "d": c.d,
        "predicate": c.predicate,
        "orientation": c.orientation,
        "vertices": [v.to_json() for v in c.vertices],
        "facets": [list(f) for f in c.facets],
        "f_vector": f_vector(c),
        "facet_count": c.facet_count,
    }
    if cartan is not None:
        out["fuss_catalan"] = fuss_catalan(cartan, c.d)
    return out


def to_json(c: ComplexData, cartan: CartanData | None = None) -> str:
    return json.dumps(to_json_dict(c, cartan), indent=2)


def to_dot(c: ComplexData) -> str:
    lines = ["graph compatibility {"]
    for i, v in enumerate(c.vertices):
        lines.append(f'  {i} [label="{v}"];')
    n = len(c.vertices)
    for i in range(n):
        for j in range(i + 1, n):
            if c.adjacency[i][j]:
                lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_text(c: ComplexData, cartan: CartanData | None = None) -> str:
    lines = [
        f"type {c.type_label}  d={c.d}  predicate={c.predicate}  orientation={c.orientation}",
        f"vertices: {len(c.vertices)}",
        f"f_vector: {' '.join(map(str, f_vector(c)))}",
        f"facet_count: {c.facet_count}",
    ]
    if cartan is not None:
        lines.append(f"fuss_catalan: {fuss_catalan(cartan, c.d)}")
    lines.append("facets:")
    for roots in c.facet_roots():
        lines.append("  {" + ", ".join(map(str, roots)) + "}")
    return "\n".join(lines) + "\n"
