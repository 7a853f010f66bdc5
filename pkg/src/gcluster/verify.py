"""Theorem checks run by ``gcluster verify`` and the acceptance tests.

Every check is exhaustive over the finite data it touches and reports a
single pass/fail/skip line.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from .cartan import CartanData, root_system
from .colored import colored_roots, r_d_omega, sigma_kd
from .compat import is_compatible_colored, is_compatible_colored_oracle
from .complex import (
    ComplexData,
    build_complex,
    complements,
    complex_isomorphic,
    fuss_catalan,
    positive_subcomplex,
)
from .quiver import (
    ValuedQuiver,
    alternating_orientation,
    is_alternating,
    reflect_orientation,
    sinks,
)
from .repcat import ClusterCategory, DerivedObject, QuiverModel, bgp_reflect_cd


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def line(self) -> str:
        return f"{self.status.upper():4}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _result(name: str, failures: list, total: int, what: str = "cases") -> Check:
    if failures:
        shown = ", ".join(map(str, failures[:3]))
        return Check(name, "fail", f"{len(failures)}/{total} {what} failed: {shown}")
    return Check(name, "pass", f"{total} {what}")


# --- combinatorial checks -------------------------------------------------

def check_purity(c: ComplexData) -> Check:
    bad = [f for f in c.facets if len(f) != c.rank]
    return _result("purity", bad, len(c.facets), "facets")


def check_positive_purity(c: ComplexData) -> Check:
    pos = positive_subcomplex(c)
    bad = [f for f in pos.facets if len(f) != c.rank]
    return _result("positive purity", bad, len(pos.facets), "facets")


def check_fuss_catalan(c: ComplexData, cartan: CartanData) -> Check:
    expected = fuss_catalan(cartan, c.d)
    status = "pass" if c.facet_count == expected else "fail"
    return Check("fuss-catalan count", status, f"facets={c.facet_count} formula={expected}")


def complement_counts(c: ComplexData) -> Iterator[tuple[tuple[int, ...], int, int]]:
    for f in c.facets:
        for x in f:
            yield f, x, len(complements(c, f, x))


def check_complements(c: ComplexData) -> Check:
    counts = list(complement_counts(c))
    bad = [(f, x, k) for f, x, k in counts if k != c.d + 1]
    check = _result("complements = d+1", bad, len(counts), "facet/vertex pairs")
    if check.ok:
        return Check(check.name, "pass", f"{len(counts)} pairs, all {c.d + 1}")
    return check


def check_oracle_agreement(q0: ValuedQuiver, d: int) -> Check:
    verts = [v for v in colored_roots(q0.cartan, d) if v.positive]
    bad = [(str(x), str(y)) for x, y in product(verts, verts)
           if is_compatible_colored(q0, d, x, y) != is_compatible_colored_oracle(q0, d, x, y)]
    return _result("reduction = five-case oracle", bad, len(verts) ** 2, "pairs")


def _invariance(name: str, verts, rel: Callable, move: Callable) -> Check:
    bad = [(str(x), str(y)) for x, y in product(verts, verts)
           if rel(x, y) != rel(move(x), move(y))]
    return _result(name, bad, len(verts) ** 2, "pairs")


def _symmetry(name: str, verts, rel: Callable) -> Check:
    bad = [(str(x), str(y)) for x, y in product(verts, verts) if rel(x, y) != rel(y, x)]
    return _result(name, bad, len(verts) ** 2, "pairs")


def combinatorial_checks(q0: ValuedQuiver, d: int, c: ComplexData | None = None) -> list[Check]:
    cartan = q0.cartan
    if c is None:
        c = build_complex(q0, d, "combinatorial")
    verts = colored_roots(cartan, d)

    def rel(x, y):
        return is_compatible_colored(q0, d, x, y)

    return [
        check_purity(c),
        check_positive_purity(c),
        check_fuss_catalan(c, cartan),
        check_complements(c),
        check_oracle_agreement(q0, d),
        _invariance("R_d invariance", verts, rel, lambda x: r_d_omega(q0, d, x)),
        _symmetry("symmetry", verts, rel),
    ]


# --- categorical checks ---------------------------------------------------

def check_object_count(cat: ClusterCategory) -> Check:
    rs = root_system(cat.cartan)
    expected = cat.d * len(rs.positive_roots) + cat.cartan.rank
    gabriel = set(cat.model.roots) == set(rs.positive_roots)
    ok = len(cat.objects) == expected and gabriel
    return Check("indecomposable count", "pass" if ok else "fail",
                 f"|ind C_d|={len(cat.objects)} expected={expected} gabriel={gabriel}")


def check_module_sanity(model: QuiverModel) -> Check:
    """End = 1, Euler identity, and Ext^1(M, N) = dim Hom(N, tau M) on all pairs."""
    bad = []
    roots = model.roots
    for a in roots:
        if model.hom(a, a) != 1:
            bad.append(("End", a))
        for b in roots:
            ext = model.ext1(a, b)
            ar = 0 if model.projective_index(a) is not None else model.hom(b, model.tau_root(a))
            if ext != ar:
                bad.append(("AR", a, b))
    return _result("End=1, Euler and AR formula", bad, len(roots) ** 2, "pairs")


def hom_support_ok(d: int, x, y, hom: int) -> bool:
    """Degree window where Hom(x, y) may be nonzero in C_d, d > 1."""
    if hom == 0 or d == 1:
        return True
    i, j = x.degree, y.degree
    if j >= 1 and i in (j, j - 1):
        return True
    return j == 0 and i in (0, d - 1, d)


def check_hom_support(cat: ClusterCategory) -> Check:
    objs = cat.objects
    bad = [(str(x), str(y)) for x, y in product(objs, objs)
           if not hom_support_ok(cat.d, x, y, cat.hom(x, y))]
    return _result("Hom degree support", bad, len(objs) ** 2, "pairs")


def check_projective_vanishing(cat: ClusterCategory) -> Check:
    """Ext^1(P, X[i]) = 0 for -d <= i <= d unless i in {-1, d-1, d} (d > 1)."""
    d = cat.d
    if d == 1:
        return Check("projective Ext window", "skip", "statement needs d > 1")
    bad = []
    total = 0
    for p in cat.model.projectives:
        for r in cat.model.roots:
            for i in range(-d, d + 1):
                if i in (-1, d - 1, d):
                    continue
                total += 1
                y = cat.normalize(DerivedObject(r, i))
                if cat.ext(1, cat.normalize(DerivedObject(p, 0)), y):
                    bad.append((p, r, i))
    return _result("projective Ext window", bad, total, "cases")


def check_categorical_equals_combinatorial(cat: ClusterCategory) -> Check:
    q0, d = cat.quiver, cat.d
    if not is_alternating(q0):
        return Check("categorical = combinatorial", "skip", "orientation is not alternating")
    verts = colored_roots(cat.cartan, d)
    bad = [(str(x), str(y)) for x, y in product(verts, verts)
           if cat.compatible(x, y) != is_compatible_colored(q0, d, x, y)]
    return _result("categorical = combinatorial", bad, len(verts) ** 2, "pairs")


def check_gamma_shift(cat: ClusterCategory) -> Check:
    bad = [str(x) for x in cat.objects
           if cat.gamma(cat.shift(x, 1)) != r_d_omega(cat.quiver, cat.d, cat.gamma(x))]
    return _result("gamma intertwines [1] and R_d", bad, len(cat.objects), "objects")


def check_bgp_invariance(cat: ClusterCategory, categories: dict | None = None) -> Check:
    """Degree preserved under (sigma_{k,d}, reflection functor) for every sink k."""
    categories = {} if categories is None else categories
    q, d = cat.quiver, cat.d
    verts = colored_roots(cat.cartan, d)
    bad = []
    total = 0
    for k in sorted(sinks(q)):
        q2 = reflect_orientation(q, k)
        cat2 = categories.setdefault((q2, d), ClusterCategory(q2, d))
        for x in cat.objects:
            if cat2.gamma(bgp_reflect_cd(cat, k, x)) != sigma_kd(q.cartan, k, d, cat.gamma(x)):
                bad.append(("gamma", k, str(x)))
        for a, b in product(verts, verts):
            total += 1
            s = sigma_kd(q.cartan, k, d, a), sigma_kd(q.cartan, k, d, b)
            if cat.compat_degree(a, b) != cat2.compat_degree(*s):
                bad.append((k, str(a), str(b)))
    return _result("BGP invariance", bad, total, "sink/pair cases")


def check_orientation_independence(cat: ClusterCategory, categories: dict | None = None) -> Check:
    categories = {} if categories is None else categories
    q, d = cat.quiver, cat.d
    c1 = build_complex(q, d, "categorical", category=cat)
    bad = []
    ks = sorted(sinks(q))
    for k in ks:
        q2 = reflect_orientation(q, k)
        cat2 = categories.setdefault((q2, d), ClusterCategory(q2, d))
        c2 = build_complex(q2, d, "categorical", category=cat2)
        if not complex_isomorphic(c1, c2, lambda v: sigma_kd(q.cartan, k, d, v)):
            bad.append(k + 1)
    return _result("orientation independence", bad, len(ks), "sinks")


def categorical_checks(q: ValuedQuiver, d: int, cat: ClusterCategory | None = None,
                       categories: dict | None = None) -> list[Check]:
    names = ["indecomposable count", "End=1, Euler and AR formula", "Hom degree support",
             "projective Ext window", "gamma intertwines [1] and R_d",
             "categorical = combinatorial", "categorical R_d invariance",
             "categorical zero-symmetry", "BGP invariance", "orientation independence"]
    if not q.cartan.simply_laced:
        return [Check(n, "skip", f"valued type {q.cartan.type_label}") for n in names]
    categories = {} if categories is None else categories
    if cat is None:
        cat = categories.setdefault((q, d), ClusterCategory(q, d))
    verts = colored_roots(cat.cartan, d)

    def zero(a, b):
        return cat.compat_degree(a, b) == 0

    return [
        check_object_count(cat),
        check_module_sanity(cat.model),
        check_hom_support(cat),
        check_projective_vanishing(cat),
        check_gamma_shift(cat),
        check_categorical_equals_combinatorial(cat),
        _invariance("categorical R_d invariance", verts, cat.compat_degree,
                    lambda x: r_d_omega(q, d, x)),
        _symmetry("categorical zero-symmetry", verts, zero),
        check_bgp_invariance(cat, categories),
        check_orientation_independence(cat, categories),
    ]


def run_verify(cartan: CartanData, d: int, all_d: bool = False) -> list[tuple[int, Check]]:
    """All checks for the alternating orientation; ``all_d`` sweeps 1..d."""
    q0 = alternating_orientation(cartan)
    out = []
    categories: dict = {}
    for dd in (range(1, d + 1) if all_d else [d]):
        for chk in combinatorial_checks(q0, dd):
            out.append((dd, chk))
        for chk in categorical_checks(q0, dd, categories=categories):
            out.append((dd, chk))
    return out

