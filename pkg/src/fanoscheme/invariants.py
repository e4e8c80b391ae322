"""Degree and genus of the Fano scheme of k-planes on a complete intersection.

The problem is a triple ``(n, (d_1, ..., d_r), k)``: a general complete
intersection ``X`` of multidegree ``d`` in ``P^n`` and the scheme ``F_k(X)`` of
k-dimensional linear subspaces it contains, sitting inside the Grassmannian
``G(k+1, n+1)``.

The Pluecker degree is the coefficient of ``x_0^n ... x_k^n`` in

    prod_i prod_{a |- d_i} (a_0 x_0 + ... + a_k x_k)
        * (x_0 + ... + x_k)^delta
        * prod_{i != j} (x_i - x_j)

divided by ``(k+1)!``. When ``delta == 1`` the scheme is a curve and its genus
follows from the degree and the first Chern class of the normal bundle.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from .polyring import LinearForm, TruncPoly, coefficient, tp_mul_linear, tp_one


class FanoError(Exception):
    """Base class for errors raised while computing invariants."""


class InvalidProblemError(FanoError, ValueError):
    """The input triple is malformed or has negative expected dimension."""


class ConsistencyError(FanoError, ArithmeticError):
    """An internal identity failed (divisibility, oracle agreement, sign).

    These indicate a bug, never a legitimate answer.
    """


@dataclass(frozen=True)
class FanoProblem:
    n: int
    degrees: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if not self.degrees:
            raise InvalidProblemError("at least one degree is required")
        if any(d < 2 for d in self.degrees):
            raise InvalidProblemError(
                f"every degree must be >= 2, got {list(self.degrees)}"
            )
        if self.k < 1:
            raise InvalidProblemError(f"k must be >= 1, got {self.k}")
        if self.n < self.k + 1:
            raise InvalidProblemError(f"need n >= k + 1, got n={self.n}, k={self.k}")

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def num_vars(self) -> int:
        return self.k + 1

    def __str__(self):
        ds = ",".join(map(str, self.degrees))
        return f"(n={self.n}, d=({ds}), k={self.k})"


@dataclass
class InvariantsReport:
    problem: FanoProblem
    delta: int
    hypothesis_ok: bool
    hypothesis_reason: str
    degree: int
    genus: int | None
    canonical_coefficient: int
    oracle_checked: bool
    elapsed_ms: float = field(default=0.0, compare=False)

    def to_dict(self, include_time: bool = False) -> dict:
        """JSON-ready dict; big integers become decimal strings."""
        out = {
            "n": self.problem.n,
            "degrees": list(self.problem.degrees),
            "k": self.problem.k,
            "r": self.problem.r,
            "delta": self.delta,
            "hypothesis_ok": self.hypothesis_ok,
            "hypothesis_reason": self.hypothesis_reason,
            "degree": str(self.degree),
            "genus": None if self.genus is None else str(self.genus),
            "canonical_coefficient": self.canonical_coefficient,
            "oracle_checked": self.oracle_checked,
        }
        if include_time:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    @classmethod
    def from_dict(cls, data: dict) -> InvariantsReport:
        problem = FanoProblem(int(data["n"]), tuple(data["degrees"]), int(data["k"]))
        if int(data["r"]) != problem.r:
            raise ValueError(f"r={data['r']} disagrees with {len(problem.degrees)} degrees")
        genus = data["genus"]
        return cls(
            problem=problem,
            delta=int(data["delta"]),
            hypothesis_ok=bool(data["hypothesis_ok"]),
            hypothesis_reason=data["hypothesis_reason"],
            degree=int(data["degree"]),
            genus=None if genus is None else int(genus),
            canonical_coefficient=int(data["canonical_coefficient"]),
            oracle_checked=bool(data["oracle_checked"]),
            elapsed_ms=float(data.get("elapsed_ms", 0.0)),
        )


def sym_power_rank(m: int, k: int) -> int:
    """Rank of ``Sym^m`` of a rank-(k+1) bundle."""
    return math.comb(m + k, k)


def sym_power_c1_factor(m: int, k: int) -> int:
    """``c_1(Sym^m E) / c_1(E)`` for ``E`` of rank ``k+1``."""
    return math.comb(m + k, k + 1)


def expected_dimension(p: FanoProblem) -> int:
    return (p.k + 1) * (p.n - p.k) - sum(sym_power_rank(d, p.k) for d in p.degrees)


def hypothesis_check(p: FanoProblem) -> tuple[bool, str]:
    """Dimension/smoothness conditions under which the formulas are geometric.

    Returns ``(ok, reason)`` where ``reason`` names the first failed
    condition. Only numeric conditions are checked; nothing here certifies
    smoothness of a particular ``X``.
    """
    grass_dim = (p.k + 1) * (p.n - p.k)
    rank = sum(sym_power_rank(d, p.k) for d in p.degrees)
    if grass_dim < rank:
        return False, (
            f"dimension count fails: (k+1)(n-k) = {grass_dim} < "
            f"sum C(d_i+k, k) = {rank}"
        )
    if all(d == 2 for d in p.degrees) and p.n < 2 * p.k + p.r:
        return False, (
            f"intersection of quadrics needs n >= 2k + r = {2 * p.k + p.r}, got n = {p.n}"
        )
    reason = "ok"
    if p.n < 4:
        reason = "ok (n < 4 is below the usual standing range; result is formal)"
    return True, reason


def compositions(d: int, parts: int) -> list[tuple[int, ...]]:
    """All ``parts``-tuples of nonnegative integers summing to ``d``.

    Ordered lexicographically descending, so ``(d, 0, ..., 0)`` comes first.

    >>> compositions(2, 2)
    [(2, 0), (1, 1), (0, 2)]
    """
    if parts < 1:
        raise ValueError(f"parts must be >= 1, got {parts}")
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if parts == 1:
        return [(d,)]
    return [
        (head,) + tail
        for head in range(d, -1, -1)
        for tail in compositions(d - head, parts - 1)
    ]


def symmetric_power_forms(d: int, k: int) -> list[LinearForm]:
    """Chern roots of ``Sym^d`` of a rank-(k+1) bundle, as linear forms."""
    return [LinearForm(a) for a in compositions(d, k + 1)]


def canonical_factor(p: FanoProblem) -> int:
    """``sum C(d_i+k, k+1) - n - 1``, the degree of the canonical class per unit degree."""
    return sum(sym_power_c1_factor(d, p.k) for d in p.degrees) - p.n - 1


def _require_nonnegative_delta(p: FanoProblem) -> int:
    delta = expected_dimension(p)
    if delta < 0:
        raise InvalidProblemError(f"negative expected dimension {delta} for {p}")
    return delta


def integrand_factors(p: FanoProblem, ordered_pairs: bool = True) -> list[LinearForm]:
    """Linear factors of the degree integrand, in accumulation order.

    Symmetric-power roots for each ``d_i`` (input order), then ``delta``
    copies of ``x_0 + ... + x_k``, then ``x_i - x_j`` over ordered pairs
    ``i != j`` (``ordered_pairs=True``) or over ``i < j`` only.
    """
    delta = _require_nonnegative_delta(p)
    v = p.num_vars
    forms = [f for d in p.degrees for f in symmetric_power_forms(d, p.k)]
    forms += [LinearForm.variable_sum(v)] * delta
    if ordered_pairs:
        pairs = [(i, j) for i in range(v) for j in range(v) if i != j]
    else:
        pairs = [(i, j) for i in range(v) for j in range(i + 1, v)]
    forms += [LinearForm.difference(i, j, v) for i, j in pairs]
    return forms


def build_integrand(p: FanoProblem, forms: Sequence[LinearForm]) -> TruncPoly:
    poly = tp_one(p.num_vars, p.n)
    for f in forms:
        poly = tp_mul_linear(poly, f)
    return poly


def theorem2_coefficient(p: FanoProblem) -> int:
    """The raw coefficient ``c(n, d, k)`` of ``x_0^n ... x_k^n``."""
    forms = integrand_factors(p, ordered_pairs=True)
    target_degree = p.num_vars * p.n
    if len(forms) != target_degree:
        raise ConsistencyError(
            f"integrand has degree {len(forms)}, target monomial has degree {target_degree}"
        )
    poly = build_integrand(p, forms)
    return coefficient(poly, (p.n,) * p.num_vars)


def degree_theorem2(p: FanoProblem) -> int:
    """Pluecker degree of ``F_k(X)`` as ``c(n, d, k) / (k+1)!``."""
    c = theorem2_coefficient(p)
    q, rem = divmod(c, math.factorial(p.num_vars))
    if rem:
        raise ConsistencyError(
            f"coefficient {c} is not divisible by {p.num_vars}! for {p}"
        )
    ok, _ = hypothesis_check(p)
    if ok and q <= 0:
        raise ConsistencyError(f"nonpositive degree {q} for {p} although hypotheses hold")
    return q


def genus_theorem1(p: FanoProblem, degree: int) -> int:
    """Genus of the curve ``F_k(X)`` when the expected dimension is 1."""
    delta = expected_dimension(p)
    if delta != 1:
        raise InvalidProblemError(f"genus needs expected dimension 1, got {delta} for {p}")
    twice = canonical_factor(p) * degree
    if twice % 2:
        raise ConsistencyError(
            f"canonical_factor * degree = {twice} is odd for {p}"
        )
    return 1 + twice // 2


def compute_report(p: FanoProblem, check_oracle: bool = False) -> InvariantsReport:
    start = time.perf_counter()
    delta = _require_nonnegative_delta(p)
    ok, reason = hypothesis_check(p)
    degree = degree_theorem2(p)
    if check_oracle:
        from .oracle import degree_dm

        other = degree_dm(p)
        if other != degree:
            raise ConsistencyError(
                f"oracle disagreement for {p}: degree_theorem2 = {degree}, degree_dm = {other}"
            )
    genus = genus_theorem1(p, degree) if delta == 1 else None
    elapsed = (time.perf_counter() - start) * 1000.0
    return InvariantsReport(
        problem=p,
        delta=delta,
        hypothesis_ok=ok,
        hypothesis_reason=reason,
        degree=degree,
        genus=genus,
        canonical_coefficient=canonical_factor(p),
        oracle_checked=check_oracle,
        elapsed_ms=elapsed,
    )


def permuted_coefficients_agree(poly: TruncPoly, exps: Sequence[int], sign: bool = False) -> bool:
    """Whether every permutation of ``exps`` carries the same coefficient.

    With ``sign=True`` the coefficient must instead pick up the sign of the
    permutation (antisymmetric polynomials).
    """
    base = coefficient(poly, exps)
    for perm in permutations(range(len(exps))):
        c = coefficient(poly, [exps[i] for i in perm])
        expected = base * _perm_sign(perm) if sign else base
        if c != expected:
            return False
    return True


def _perm_sign(perm: Sequence[int]) -> int:
    s = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s
