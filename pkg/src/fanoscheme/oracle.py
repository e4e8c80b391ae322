"""Independent cross-checks for the degree computation.

Two routes that do not go through the same extraction as
:func:`fanoscheme.invariants.degree_theorem2`:

* :func:`degree_dm` reads the staircase monomial ``x_0^n x_1^{n-1} ... x_k^{n-k}``
  out of the same symmetric-power product times the Vandermonde
  ``prod_{i<j} (x_i - x_j)``. No factorial division is involved.
* :func:`naive_coefficient` expands a product of linear forms with plain
  dict arithmetic and no truncation. It shares nothing with the dense kernel
  and is meant for small instances only.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from typing import Sequence

from .invariants import ConsistencyError, FanoProblem, build_integrand, integrand_factors
from .polyring import ExponentVector, LinearForm, coefficient


class SparsePoly:
    """Untruncated polynomial as ``{exponents: nonzero int}``."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: dict[ExponentVector, int] | None = None):
        self.num_vars = num_vars
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def one(cls, num_vars: int) -> SparsePoly:
        return cls(num_vars, {(0,) * num_vars: 1})

    def mul_linear(self, f: LinearForm) -> SparsePoly:
        if f.num_vars != self.num_vars:
            raise ValueError(f"form has {f.num_vars} variables, polynomial has {self.num_vars}")
        acc: dict[ExponentVector, int] = defaultdict(int)
        for exps, c in self.terms.items():
            for i, a in enumerate(f.coeffs):
                if a:
                    e = list(exps)
                    e[i] += 1
                    acc[tuple(e)] += a * c
        return SparsePoly(self.num_vars, acc)

    def __mul__(self, other: SparsePoly) -> SparsePoly:
        acc: dict[ExponentVector, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return SparsePoly(self.num_vars, acc)

    def __getitem__(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def __eq__(self, other):
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def __repr__(self):
        return f"SparsePoly({self.terms!r})"


def naive_coefficient(
    factors: Sequence[LinearForm],
    extra_power: tuple[LinearForm, int] | None,
    target: Sequence[int],
) -> int:
    """Coefficient of ``x^target`` in ``prod(factors) * extra^e``, fully expanded.

    A degree mismatch between the product and ``target`` yields 0 but also
    emits a :class:`RuntimeWarning`, since it almost always means the caller
    assembled the wrong factor list.
    """
    target = tuple(target)
    forms = list(factors)
    if extra_power is not None:
        form, e = extra_power
        forms += [form] * e
    if forms:
        num_vars = forms[0].num_vars
    else:
        num_vars = len(target)
    if len(forms) != sum(target):
        warnings.warn(
            f"product has degree {len(forms)} but target {target} has degree {sum(target)}",
            RuntimeWarning,
            stacklevel=2,
        )
        return 0
    poly = SparsePoly.one(num_vars)
    for f in forms:
        poly = poly.mul_linear(f)
    return poly[target]


def staircase(p: FanoProblem) -> tuple[int, ...]:
    return tuple(p.n - i for i in range(p.num_vars))


def degree_dm(p: FanoProblem) -> int:
    """Pluecker degree via the staircase coefficient against the Vandermonde."""
    forms = integrand_factors(p, ordered_pairs=False)
    target = staircase(p)
    if len(forms) != sum(target):
        raise ConsistencyError(
            f"oracle integrand has degree {len(forms)}, staircase has degree {sum(target)}"
        )
    return coefficient(build_integrand(p, forms), target)
