"""Compatibility degree on almost positive roots and colored compatibility.

Two routes for the colored relation: a reduction that pushes the pair
through ``R_d`` until a negative simple shows up, and a direct case
analysis on colors and ``t``-values kept as an independent oracle.
"""
from __future__ import annotations

from functools import lru_cache

from .cartan import Root, format_root, negative_simple_index, root_system
from .colored import ColoredRoot, r_d_omega, r_omega, t_of, tau_pm
from .errors import NotAlternating, ReductionCapExceeded
from .quiver import ValuedQuiver, is_alternating


def _negative_rule(i: int, beta: Root) -> int:
    return max(beta[i], 0)


@lru_cache(maxsize=None)
def compat_degree(q0: ValuedQuiver, alpha: Root, beta: Root) -> int:
    """Compatibility degree (alpha || beta) for an alternating orientation ``q0``.

    Applies tau_+ and tau_- alternately to both roots until ``alpha``
    becomes some ``-alpha_i``, then reads off ``max(n_i(beta), 0)``.
    """
    if not is_alternating(q0):
        raise NotAlternating("compatibility degree needs an alternating orientation")
    cap = 2 * (root_system(q0.cartan).coxeter_number + 2)
    a, b = alpha, beta
    signs = ("+", "-")
    for step in range(cap + 1):
        i = negative_simple_index(a)
        if i is not None:
            return _negative_rule(i, b)
        sign = signs[step % 2]
        a, b = tau_pm(q0, sign, a), tau_pm(q0, sign, b)
    raise ReductionCapExceeded(
        f"({format_root(alpha)} || {format_root(beta)}) did not reduce in {cap} steps")


def compatible(q0: ValuedQuiver, alpha: Root, beta: Root) -> bool:
    return compat_degree(q0, alpha, beta) == 0


@lru_cache(maxsize=None)
def is_compatible_colored(q0: ValuedQuiver, d: int, x: ColoredRoot, y: ColoredRoot) -> bool:
    """Colored compatibility by simultaneous R_d reduction.

    If ``y`` turns into a negative simple first the rule is read with the
    arguments swapped; this relies on the relation being symmetric, which
    the test-suite checks exhaustively.
    """
    if not is_alternating(q0):
        raise NotAlternating("colored compatibility needs an alternating orientation")
    h = root_system(q0.cartan).coxeter_number
    cap = d * (h + 2) + 2 * d
    a, b = x, y
    for _ in range(cap + 1):
        i = negative_simple_index(a.root)
        if i is not None:
            return _negative_rule(i, b.root) == 0
        j = negative_simple_index(b.root)
        if j is not None:
            return _negative_rule(j, a.root) == 0
        a, b = r_d_omega(q0, d, a), r_d_omega(q0, d, b)
    raise ReductionCapExceeded(f"colored pair ({x}, {y}) did not reduce in {cap} steps")


def is_compatible_colored_oracle(q0: ValuedQuiver, d: int, x: ColoredRoot,
                                 y: ColoredRoot) -> bool:
    """Five-case colored compatibility read directly off colors and t-values."""
    (alpha, k), (beta, l) = x, y
    i = negative_simple_index(alpha)
    if i is not None:
        return _negative_rule(i, beta) == 0
    j = negative_simple_index(beta)
    if j is not None:
        return _negative_rule(j, alpha) == 0
    if k == l:
        return compatible(q0, alpha, beta)
    ta, tb = t_of(q0, alpha), t_of(q0, beta)
    if k > l:
        if ta <= tb:
            return compatible(q0, r_omega(q0, alpha), beta)
        return compatible(q0, alpha, beta)
    if ta >= tb:
        return compatible(q0, alpha, r_omega(q0, beta))
    return compatible(q0, alpha, beta)

