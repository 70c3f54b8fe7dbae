"""Quantum affine space / quantum torus on generators T_{i,a}.

``T_k T_l = q^{B[k][l]} T_l T_k`` with ``B`` read off the pairwise
relations: for ``k < l`` in row-major order, ``B[k][l] = 1`` when the two
generators share a row or a column and 0 otherwise.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Mapping, Sequence

from .minors import b_index
from .pbw import Shape, as_shape
from .scalars import (ONE, IntMatrix, QLaurent, VerificationError, ZERO,
                      kernel_basis_integer, minor_gcd_full_rank, rank_rational)


@lru_cache(maxsize=None)
def build_B(shape) -> IntMatrix:
    shape = as_shape(shape)
    N = shape.size
    rows = [[0] * N for _ in range(N)]
    for k in range(N):
        i, a = shape.pos(k)
        for l in range(k + 1, N):
            j, b = shape.pos(l)
            if i == j or a == b:
                rows[k][l], rows[l][k] = 1, -1
    return IntMatrix(rows, N)


def block_A(m: int) -> IntMatrix:
    """m x m matrix with 1 above and -1 below the diagonal."""
    return IntMatrix([[(j > i) - (j < i) for j in range(m)] for i in range(m)], m)


def block_B(shape) -> IntMatrix:
    """``B`` in block layout: ``A`` on the diagonal, ``+-I_m`` off it.

    Block ``(a, b)`` collects generators of columns ``a`` and ``b``, so this
    layout indexes generators column-major.
    """
    shape = as_shape(shape)
    m, n = shape.m, shape.n
    A = block_A(m)
    rows = [[0] * (m * n) for _ in range(m * n)]
    for a in range(n):
        for b in range(n):
            for i in range(m):
                for j in range(m):
                    if a == b:
                        v = A[i, j]
                    else:
                        v = (1 if a < b else -1) * (i == j)
                    rows[a * m + i][b * m + j] = v
    return IntMatrix(rows, m * n)


def sigma_exponent(B: IntMatrix, s: Sequence[int], t: Sequence[int]) -> int:
    """Exponent of the bicharacter: ``sigma(s, t) = q^(s^T B t)``."""
    if len(s) != B.rows or len(t) != B.cols:
        raise ValueError("vector length does not match B")
    return sum(s[k] * sum(B[k, l] * t[l] for l in range(B.cols) if t[l])
               for k in range(B.rows) if s[k])


def _reorder_exponent(B: IntMatrix, s: Sequence[int], t: Sequence[int]) -> int:
    """``T^s T^t = q^e T^(s+t)`` with ``e = sum_{k>l} B[k][l] s_k t_l``."""
    e = 0
    for k, sk in enumerate(s):
        if sk:
            row = B.entries[k]
            for l in range(k):
                if t[l] and row[l]:
                    e += row[l] * sk * t[l]
    return e


class TorusElement:
    """Finite sum of normal-ordered Laurent monomials ``c * T^s``."""

    __slots__ = ("shape", "_terms")

    def __init__(self, shape, terms: Mapping[tuple[int, ...], QLaurent] | None = None):
        self.shape = as_shape(shape)
        clean: dict = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.shape.size:
                raise ValueError(f"bad exponent vector {mono} for shape {self.shape}")
            c = QLaurent.coerce(c)
            v = clean.get(mono, ZERO) + c
            if v:
                clean[mono] = v
            else:
                clean.pop(mono, None)
        self._terms = clean

    @classmethod
    def _raw(cls, shape: Shape, terms: dict) -> "TorusElement":
        obj = cls.__new__(cls)
        obj.shape = shape
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, shape, exps: Sequence[int], coef=ONE) -> "TorusElement":
        return cls(shape, {tuple(exps): coef})

    @classmethod
    def one(cls, shape) -> "TorusElement":
        shape = as_shape(shape)
        return cls._raw(shape, {(0,) * shape.size: ONE})

    @classmethod
    def gen(cls, shape, i: int, a: int, power: int = 1) -> "TorusElement":
        shape = as_shape(shape)
        mono = [0] * shape.size
        mono[shape.index(i, a)] = power
        return cls._raw(shape, {tuple(mono): ONE})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def as_monomial(self) -> tuple[tuple[int, ...], QLaurent] | None:
        if len(self._terms) != 1:
            return None
        return next(iter(self._terms.items()))

    def _check(self, other: "TorusElement") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "TorusElement") -> "TorusElement":
        self._check(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            v = out.get(mono, ZERO) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return TorusElement._raw(self.shape, out)

    def __neg__(self) -> "TorusElement":
        return TorusElement._raw(self.shape, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def scale(self, c) -> "TorusElement":
        c = QLaurent.coerce(c)
        if not c:
            return TorusElement(self.shape)
        return TorusElement._raw(self.shape, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other) -> "TorusElement":
        if isinstance(other, TorusElement):
            return torus_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "TorusElement":
        return self.scale(other)

    def inverse(self) -> "TorusElement":
        """Inverse of a single monomial with unit coefficient."""
        mono = self.as_monomial()
        if mono is None or not mono[1].is_unit():
            raise VerificationError(f"cannot invert non-monomial torus element {self}")
        s, c = mono
        B = build_B(self.shape)
        neg = tuple(-x for x in s)
        e = _reorder_exponent(B, s, neg)
        return TorusElement._raw(self.shape, {neg: c.inverse().shift(-e)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.shape == other.shape and self._terms == other._terms

    def __hash__(self):
        return hash((self.shape, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            word = "*".join(
                (f"T{i}{a}" if e == 1 else f"T{i}{a}^{e}")
                for k, e in enumerate(mono) if e
                for i, a in [self.shape.pos(k)])
            if not word:
                parts.append(f"({c})")
            elif c.is_one():
                parts.append(word)
            else:
                parts.append(f"({c})*{word}")
        return " + ".join(parts)


def torus_multiply(a: TorusElement, b: TorusElement) -> TorusElement:
    a._check(b)
    B = build_B(a.shape)
    out: dict = {}
    for s, ca in a._terms.items():
        for t, cb in b._terms.items():
            e = _reorder_exponent(B, s, t)
            mono = tuple(x + y for x, y in zip(s, t))
            c = (ca * cb).shift(e)
            v = out.get(mono, ZERO) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return TorusElement._raw(a.shape, out)


# -- b_i as T-monomials and the central elements Delta_j --------------------

def v2(k: int) -> int:
    """2-adic valuation of a positive integer."""
    if k < 1:
        raise ValueError(f"v2 needs a positive integer, got {k}")
    e = 0
    while k % 2 == 0:
        k //= 2
        e += 1
    return e


def b_exponent(shape, i: int) -> tuple[int, ...]:
    """Exponent vector of ``b_i`` as a product of T generators.

    ``b_i = T_{r_1,c_1} T_{r_2,c_2} ...`` pairing the i-th smallest row of
    the minor with its i-th smallest column; ``b_{m+n}`` is the zero vector.
    """
    shape = as_shape(shape)
    idx = b_index(shape, i)
    exps = [0] * shape.size
    if idx is not None:
        for r, c in zip(idx.rows, idx.cols):
            exps[shape.index(r, c)] += 1
    return tuple(exps)


def _delta_params(shape: Shape) -> tuple[int, int, int]:
    m, n = shape.m, shape.n
    if v2(m) != v2(n):
        raise ValueError(f"Delta_j needs v2(m) = v2(n); shape {shape} has "
                         f"v2(m)={v2(m)}, v2(n)={v2(n)}")
    d = gcd(m, n)
    return d, m // d, n // d


def delta_exponent(shape, j: int) -> tuple[int, ...]:
    """Exponent vector of ``Delta_j = prod_i b_{id+j}^((-1)^i)``."""
    shape = as_shape(shape)
    d, mp, np_ = _delta_params(shape)
    if not 1 <= j <= d:
        raise ValueError(f"j must lie in [1, {d}], got {j}")
    total = [0] * shape.size
    for i in range(mp + np_):
        sign = -1 if i % 2 else 1
        for k, e in enumerate(b_exponent(shape, i * d + j)):
            total[k] += sign * e
    return tuple(total)


def delta_element(shape, j: int) -> TorusElement:
    """``Delta_j`` normalized to the normal-ordered monomial with coefficient 1."""
    shape = as_shape(shape)
    return TorusElement.monomial(shape, delta_exponent(shape, j))


def is_central_exponent(shape, s: Sequence[int]) -> bool:
    B = build_B(shape)
    return not any(B.transpose().apply(s))


class CentralBasis:
    """Certified lattice basis of the exponents of central torus monomials."""

    def __init__(self, shape: Shape, vectors: list[tuple[int, ...]]):
        self.shape = shape
        self.vectors = vectors

    @property
    def d(self) -> int:
        return len(self.vectors)

    def __repr__(self) -> str:
        return f"CentralBasis({self.shape}, {self.vectors})"


def center_basis(shape) -> CentralBasis:
    """The Delta exponents, checked to be central and a lattice basis.

    Raises :class:`VerificationError` if any check fails.
    """
    from .spectrum import stratum_dim

    shape = as_shape(shape)
    m, n = shape.m, shape.n
    if v2(m) != v2(n):
        vectors: list[tuple[int, ...]] = []
    else:
        vectors = [delta_exponent(shape, j) for j in range(1, gcd(m, n) + 1)]
    Bt = build_B(shape).transpose()
    for v in vectors:
        if any(Bt.apply(v)):
            raise VerificationError(f"Delta exponent {v} is not in ker(B^T)")
    if len(vectors) != stratum_dim(m, n):
        raise VerificationError("number of Delta_j differs from the stratum dimension")
    if vectors:
        g = minor_gcd_full_rank(IntMatrix(vectors, shape.size), len(vectors))
        if g != 1:
            raise VerificationError(f"Delta exponents span a sublattice of index {g}")
    return CentralBasis(shape, vectors)


def kernel_dim_B(shape) -> int:
    shape = as_shape(shape)
    return shape.size - rank_rational(build_B(shape))


def kernel_B(shape) -> list[tuple[int, ...]]:
    return kernel_basis_integer(build_B(shape))
