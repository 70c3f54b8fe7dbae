"""Quantum minors, the quantum determinant and the b_i family."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Sequence, TypeVar

from .pbw import MatElement, Shape, as_shape
from .scalars import QLaurent

E = TypeVar("E")


@dataclass(frozen=True)
class MinorIndex:
    """Row set and column set ``[I | Gamma]`` of a quantum minor (1-based)."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        if not self.rows or len(self.rows) != len(self.cols):
            raise ValueError(f"row and column sets must be nonempty and equal size: {self}")
        for s in (self.rows, self.cols):
            if any(a >= b for a, b in zip(s, s[1:])):
                raise ValueError(f"index sets must be strictly increasing: {self}")

    @property
    def size(self) -> int:
        return len(self.rows)

    def check(self, shape: Shape) -> None:
        if self.rows[0] < 1 or self.rows[-1] > shape.m or self.cols[0] < 1 or self.cols[-1] > shape.n:
            raise ValueError(f"minor {self} outside shape {shape}")

    def transposed(self) -> "MinorIndex":
        return MinorIndex(self.cols, self.rows)

    def __str__(self) -> str:
        return f"[{','.join(map(str, self.rows))}|{','.join(map(str, self.cols))}]"


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
               if perm[i] > perm[j])


def minor_expansion(idx: MinorIndex, entry: Callable[[int, int], E], one: E) -> E:
    """Permutation sum  sum_s (-q)^l(s) x_{i1,c_s(1)} ... x_{it,c_s(t)}.

    ``entry(i, a)`` supplies the generator images, so the same formula
    evaluates minors in O_q(M_{m,n}) and in the quantum torus.
    """
    total = None
    for perm in permutations(range(idx.size)):
        term = one
        for r, p in zip(idx.rows, perm):
            term = term * entry(r, idx.cols[p])
        ell = inversions(perm)
        term = term * QLaurent.q(ell, (-1) ** ell)
        total = term if total is None else total + term
    return total


def quantum_minor(shape, idx: MinorIndex) -> MatElement:
    shape = as_shape(shape)
    idx.check(shape)
    return minor_expansion(idx, lambda i, a: MatElement.gen(shape, i, a),
                           MatElement.one(shape))


def quantum_determinant(n: int) -> MatElement:
    r = tuple(range(1, n + 1))
    return quantum_minor(Shape(n, n), MinorIndex(r, r))


def b_index(shape, i: int) -> MinorIndex | None:
    """Index sets of ``b_i``; ``None`` for the unit ``b_{m+n}``.

    For ``m > n`` the definition is applied to the transposed shape and
    the row/column roles are swapped back.
    """
    shape = as_shape(shape)
    m, n = shape.m, shape.n
    if not 1 <= i <= m + n:
        raise ValueError(f"b_{i} undefined for shape {shape}: need 1 <= i <= {m + n}")
    if i == m + n:
        return None
    if m > n:
        return b_index(shape.transposed(), i).transposed()
    rng = lambda a, b: tuple(range(a, b + 1))
    if i <= m:
        return MinorIndex(rng(1, i), rng(n - i + 1, n))
    if i <= n:
        return MinorIndex(rng(1, m), rng(n - i + 1, n + m - i))
    return MinorIndex(rng(i - n + 1, m), rng(1, m + n - i))


def b_generator(shape, i: int) -> MatElement:
    shape = as_shape(shape)
    idx = b_index(shape, i)
    if idx is None:
        return MatElement.one(shape)
    return quantum_minor(shape, idx)


def b_family(shape) -> list[MatElement]:
    """``[b_1, ..., b_{m+n-1}]``."""
    shape = as_shape(shape)
    return [b_generator(shape, i) for i in range(1, shape.m + shape.n)]


def commutation_exponent(x: MatElement, y: MatElement) -> int | None:
    """``k`` with ``x*y = q^k * y*x`` exactly, else ``None``."""
    if x.is_zero() or y.is_zero():
        raise ValueError("commutation exponent of a zero element")
    P, Q = x * y, y * x
    if P.support() != Q.support():
        return None
    k = None
    for mono in P.support():
        a, b = P.coefficient(mono), Q.coefficient(mono)
        if k is None:
            k = a.min_degree() - b.min_degree()
        if a != b.shift(k):
            return None
    return k


def commutationbi_formula(m: int, n: int, case: int, i: int, j: int | None = None) -> int:
    """Closed-form q-exponents between ``b`` elements for ``m < n``.

    * ``case=1``: ``b_i b_j = q^e b_j b_i`` for ``m <= i < j <= n``.
    * ``case=2``: ``b_n b_i = q^e b_i b_n`` for ``1 <= i <= m-1``.
    * ``case=3``: ``b_n b_{m+n-i} = q^e b_{m+n-i} b_n``, ``1 <= i <= m-1``
      (always 0).
    """
    if not m < n:
        raise ValueError("the closed forms require m < n")
    if case == 1:
        if j is None or not (m <= i < j <= n):
            raise ValueError(f"case 1 needs m <= i < j <= n, got i={i}, j={j}")
        a = set(range(n - i + 1, m + n - i + 1))
        b = set(range(n - j + 1, m + n - j + 1))
        return len(a & b) - m
    if case in (2, 3):
        if not 1 <= i <= m - 1:
            raise ValueError(f"case {case} needs 1 <= i <= m-1, got i={i}")
        if case == 3:
            return 0
        return len(set(range(n - i + 1, n + 1)) & set(range(m + 1, n + 1)))
    raise ValueError(f"unknown case {case}")
