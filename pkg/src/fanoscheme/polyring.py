"""Truncated dense multivariate polynomials with exact integer coefficients.

A :class:`TruncPoly` lives in the ring ``Z[x_0, ..., x_{v-1}]`` modulo every
monomial whose exponent in some variable exceeds a fixed ``cap``. Coefficients
are stored in a dense numpy array of shape ``(cap + 1,) * v`` and dtype
``object``, so every entry is a Python ``int`` and nothing can overflow. The
C-order layout of that array is the mixed-radix encoding of the exponent
vector, with radix ``cap + 1`` in every digit.

Truncating per variable is sound for the coefficient extractions in this
package because the only thing ever multiplied in is linear forms (and
products of them), whose exponents never decrease.

>>> forms = [LinearForm(a) for a in [(3, 0), (2, 1), (1, 2), (0, 3), (1, -1), (-1, 1)]]
>>> coefficient(tp_mul_linear_many(tp_one(2, 3), forms), (3, 3))
54
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

ExponentVector = tuple[int, ...]


class RingMismatchError(ValueError):
    """Operands live in rings with different variable counts or caps."""


@dataclass(frozen=True)
class LinearForm:
    """Integer linear form ``a_0 x_0 + ... + a_{v-1} x_{v-1}``.

    Forms built from compositions have nonnegative entries; differences
    ``x_i - x_j`` use entries in ``{-1, 0, 1}``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if not self.coeffs:
            raise ValueError("a linear form needs at least one variable")

    @property
    def num_vars(self) -> int:
        return len(self.coeffs)

    @classmethod
    def variable_sum(cls, num_vars: int) -> LinearForm:
        return cls((1,) * num_vars)

    @classmethod
    def difference(cls, i: int, j: int, num_vars: int) -> LinearForm:
        """The form ``x_i - x_j``."""
        if i == j:
            raise ValueError("x_i - x_i is the zero form")
        a = [0] * num_vars
        a[i] = 1
        a[j] = -1
        return cls(tuple(a))

    def __str__(self):
        parts = []
        for idx, a in enumerate(self.coeffs):
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = "" if abs(a) == 1 else str(abs(a))
            parts.append(f"{sign} {mag}x{idx}")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


class TruncPoly:
    """Dense polynomial in ``num_vars`` variables, truncated at ``cap`` per variable.

    Instances are treated as immutable: the backing array is flagged
    read-only and every operation returns a new polynomial.
    """

    __slots__ = ("num_vars", "cap", "_data")

    def __init__(self, num_vars: int, cap: int, data: np.ndarray | None = None):
        if num_vars < 1:
            raise ValueError(f"num_vars must be >= 1, got {num_vars}")
        if cap < 0:
            raise ValueError(f"cap must be >= 0, got {cap}")
        shape = (cap + 1,) * num_vars
        if data is None:
            data = np.zeros(shape, dtype=object)
        elif data.shape != shape or data.dtype != object:
            raise ValueError(f"expected object array of shape {shape}, got {data.dtype} {data.shape}")
        data.flags.writeable = False
        self.num_vars = num_vars
        self.cap = cap
        self._data = data

    @classmethod
    def from_terms(cls, num_vars: int, cap: int, terms: dict[ExponentVector, int]) -> TruncPoly:
        """Build from a ``{exponents: coefficient}`` map; terms beyond the cap are dropped."""
        data = np.zeros((cap + 1,) * num_vars, dtype=object)
        for exps, c in terms.items():
            if len(exps) != num_vars:
                raise ValueError(f"exponent vector {exps} has wrong length for {num_vars} variables")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if all(e <= cap for e in exps):
                data[tuple(exps)] += int(c)
        return cls(num_vars, cap, data)

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the dense coefficient array."""
        return self._data

    def terms(self) -> dict[ExponentVector, int]:
        """Nonzero coefficients keyed by exponent vector."""
        return {
            tuple(int(i) for i in idx): int(self._data[idx])
            for idx in zip(*np.nonzero(self._data))
        }

    def is_zero(self) -> bool:
        return not self._data.any()

    def same_ring(self, other: TruncPoly) -> bool:
        return self.num_vars == other.num_vars and self.cap == other.cap

    def __eq__(self, other):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        return self.same_ring(other) and bool(np.array_equal(self._data, other._data))

    def __hash__(self):
        return hash((self.num_vars, self.cap, tuple(sorted(self.terms().items()))))

    def __add__(self, other: TruncPoly) -> TruncPoly:
        _check_ring(self, other)
        return TruncPoly(self.num_vars, self.cap, self._data + other._data)

    def __mul__(self, other: TruncPoly) -> TruncPoly:
        return tp_mul(self, other)

    def __repr__(self):
        terms = self.terms()
        if len(terms) > 6:
            body = f"{len(terms)} terms"
        else:
            body = repr(terms)
        return f"TruncPoly(num_vars={self.num_vars}, cap={self.cap}, {body})"


def _check_ring(p: TruncPoly, q: TruncPoly):
    if not p.same_ring(q):
        raise RingMismatchError(
            f"ring mismatch: ({p.num_vars} vars, cap {p.cap}) vs ({q.num_vars} vars, cap {q.cap})"
        )


def tp_one(num_vars: int, cap: int) -> TruncPoly:
    """The constant polynomial 1."""
    data = np.zeros((cap + 1,) * num_vars, dtype=object)
    data[(0,) * num_vars] = 1
    return TruncPoly(num_vars, cap, data)


def tp_zero(num_vars: int, cap: int) -> TruncPoly:
    return TruncPoly(num_vars, cap)


def _shift_slices(num_vars: int, axis: int, start: int, stop: int | None):
    sl = [slice(None)] * num_vars
    sl[axis] = slice(start, stop)
    return tuple(sl)


def tp_mul_linear(p: TruncPoly, f: LinearForm) -> TruncPoly:
    """Multiply by a linear form, discarding terms that pass the cap."""
    if f.num_vars != p.num_vars:
        raise RingMismatchError(
            f"linear form has {f.num_vars} variables, polynomial has {p.num_vars}"
        )
    out = np.zeros_like(p.array)
    if p.cap == 0:
        return TruncPoly(p.num_vars, p.cap, out)
    src = p.array
    for axis, a in enumerate(f.coeffs):
        if a == 0:
            continue
        # x_axis * term moves it one step along that axis; the top slab falls off
        dst = _shift_slices(p.num_vars, axis, 1, None)
        sub = _shift_slices(p.num_vars, axis, 0, p.cap)
        if a == 1:
            out[dst] += src[sub]
        elif a == -1:
            out[dst] -= src[sub]
        else:
            out[dst] += a * src[sub]
    return TruncPoly(p.num_vars, p.cap, out)


def tp_mul_linear_many(p: TruncPoly, forms: Iterable[LinearForm]) -> TruncPoly:
    for f in forms:
        p = tp_mul_linear(p, f)
    return p


def tp_mul(p: TruncPoly, q: TruncPoly) -> TruncPoly:
    """Truncated product of two polynomials in the same ring."""
    _check_ring(p, q)
    # Loop over the sparser operand; each of its terms contributes one shifted block.
    if np.count_nonzero(p.array) < np.count_nonzero(q.array):
        p, q = q, p
    cap = p.cap
    out = np.zeros_like(p.array)
    src = p.array
    for idx in zip(*np.nonzero(q.array)):
        c = q.array[idx]
        dst = tuple(slice(int(e), None) for e in idx)
        sub = tuple(slice(0, cap + 1 - int(e)) for e in idx)
        out[dst] += c * src[sub]
    return TruncPoly(p.num_vars, cap, out)


def tp_pow(p: TruncPoly, e: int) -> TruncPoly:
    """Truncated ``p ** e`` by binary exponentiation; ``p ** 0`` is 1."""
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    result = tp_one(p.num_vars, p.cap)
    base = p
    while e:
        if e & 1:
            result = tp_mul(result, base)
        e >>= 1
        if e:
            base = tp_mul(base, base)
    return result


def coefficient(p: TruncPoly, e: Sequence[int]) -> int:
    """Exact coefficient of ``x^e`` (0 when absent)."""
    e = tuple(int(x) for x in e)
    if len(e) != p.num_vars:
        raise ValueError(f"exponent vector {e} has wrong length for {p.num_vars} variables")
    if any(x < 0 or x > p.cap for x in e):
        raise ValueError(f"exponent vector {e} is outside the cap {p.cap}")
    return int(p.array[e])
