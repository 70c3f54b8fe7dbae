"""The algebra O_q(M_{m,n}) of quantum matrices in PBW normal form.

Elements are finite sums of ordered monomials
``Y_{1,1}^e Y_{1,2}^e ... Y_{m,n}^e`` (row-major generator order) with
coefficients in Q[q, q^-1].  Generator ``(i, a)`` (1-based) has flat index
``(i-1)*n + a-1``.

For generators ``(i,a) < (j,b)`` the defining relations rewrite the
out-of-order product ``Y_{j,b} Y_{i,a}``:

* same row (``i = j``):          ``q^-1 Y_{i,a} Y_{i,b}``
* same column (``a = b``):       ``q^-1 Y_{i,a} Y_{j,a}``
* ``i < j, a > b``:              ``Y_{i,a} Y_{j,b}``
* ``i < j, a < b``:              ``Y_{i,a} Y_{j,b} - (q - q^-1) Y_{i,b} Y_{j,a}``
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .scalars import (ONE, Q_MINUS_QINV, QLaurent, QRatio, ZERO,
                      ql_proportional, same_ratio)


@dataclass(frozen=True, order=True)
class Shape:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"shape dimensions must be >= 1, got ({self.m},{self.n})")

    @property
    def size(self) -> int:
        return self.m * self.n

    def index(self, i: int, a: int) -> int:
        if not (1 <= i <= self.m and 1 <= a <= self.n):
            raise ValueError(f"generator ({i},{a}) outside shape ({self.m},{self.n})")
        return (i - 1) * self.n + a - 1

    def pos(self, k: int) -> tuple[int, int]:
        return k // self.n + 1, k % self.n + 1

    def generators(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.m + 1):
            for a in range(1, self.n + 1):
                yield i, a

    def transposed(self) -> "Shape":
        return Shape(self.n, self.m)

    def __str__(self) -> str:
        return f"({self.m},{self.n})"


def as_shape(shape) -> Shape:
    return shape if isinstance(shape, Shape) else Shape(*shape)


# -- straightening --------------------------------------------------------

def swap_rule(n: int, h: int, g: int):
    """Rewrite ``Y_h Y_g`` for flat indices ``h > g``.

    Returns ``(c, extra)`` meaning ``Y_h Y_g = c Y_g Y_h + extra`` where
    ``extra`` is ``None`` or ``(coef, k1, k2)`` for ``coef Y_k1 Y_k2``
    with ``k1 < k2``.
    """
    i, a = divmod(g, n)
    j, b = divmod(h, n)
    if i == j or a == b:
        return QLaurent.q(-1), None
    if a > b:
        return ONE, None
    return ONE, (-Q_MINUS_QINV, i * n + b, j * n + a)


def _add_into(acc: dict, mono, c: QLaurent) -> None:
    v = acc.get(mono)
    v = c if v is None else v + c
    if v:
        acc[mono] = v
    else:
        acc.pop(mono, None)


@lru_cache(maxsize=None)
def _times_gen(n: int, mono: tuple[int, ...], g: int) -> tuple:
    """Normal form of ``mono * Y_g`` as a tuple of (monomial, coefficient)."""
    last = max((k for k, e in enumerate(mono) if e), default=-1)
    if last <= g:
        out = list(mono)
        out[g] += 1
        return ((tuple(out), ONE),)
    head = list(mono)
    head[last] -= 1
    head = tuple(head)
    c, extra = swap_rule(n, last, g)
    acc: dict = {}
    # head * (c Y_g Y_last)
    for m1, c1 in _times_gen(n, head, g):
        for m2, c2 in _times_gen(n, m1, last):
            _add_into(acc, m2, c * c1 * c2)
    if extra is not None:
        coef, k1, k2 = extra
        for m1, c1 in _times_gen(n, head, k1):
            for m2, c2 in _times_gen(n, m1, k2):
                _add_into(acc, m2, coef * c1 * c2)
    return tuple(acc.items())


@lru_cache(maxsize=200_000)
def _mono_mul(n: int, left: tuple[int, ...], right: tuple[int, ...]) -> tuple:
    cur: dict = {left: ONE}
    for k, e in enumerate(right):
        for _ in range(e):
            nxt: dict = {}
            for mono, c in cur.items():
                for m2, c2 in _times_gen(n, mono, k):
                    _add_into(nxt, m2, c * c2)
            cur = nxt
    return tuple(cur.items())


# -- elements -------------------------------------------------------------

class MatElement:
    """Immutable element of O_q(M_{m,n}) in PBW normal form."""

    __slots__ = ("shape", "_terms", "_hash")

    def __init__(self, shape, terms: Mapping[tuple[int, ...], QLaurent] | None = None):
        self.shape = as_shape(shape)
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.shape.size or min(mono, default=0) < 0:
                raise ValueError(f"bad exponent vector {mono} for shape {self.shape}")
            c = QLaurent.coerce(c)
            if c:
                clean[mono] = clean[mono] + c if mono in clean else c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, shape: Shape, terms: dict) -> "MatElement":
        obj = cls.__new__(cls)
        obj.shape = shape
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, shape) -> "MatElement":
        return cls(shape)

    @classmethod
    def one(cls, shape) -> "MatElement":
        shape = as_shape(shape)
        return cls._raw(shape, {(0,) * shape.size: ONE})

    @classmethod
    def scalar(cls, shape, c) -> "MatElement":
        shape = as_shape(shape)
        return cls(shape, {(0,) * shape.size: QLaurent.coerce(c)})

    @classmethod
    def gen(cls, shape, i: int, a: int) -> "MatElement":
        shape = as_shape(shape)
        mono = [0] * shape.size
        mono[shape.index(i, a)] = 1
        return cls._raw(shape, {tuple(mono): ONE})

    @classmethod
    def word(cls, shape, letters: Iterable[tuple[int, int]], coef=1) -> "MatElement":
        """Straightened product of generators in the given order."""
        shape = as_shape(shape)
        out = cls.scalar(shape, coef)
        for i, a in letters:
            out = out * cls.gen(shape, i, a)
        return out

    @property
    def terms(self) -> dict[tuple[int, ...], QLaurent]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, ...], QLaurent]]:
        return sorted(self._terms.items())

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coefficient(self, mono: Sequence[int]) -> QLaurent:
        return self._terms.get(tuple(mono), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: "MatElement") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def _lift(self, other) -> "MatElement":
        if isinstance(other, MatElement):
            self._check(other)
            return other
        return MatElement.scalar(self.shape, other)

    def __add__(self, other) -> "MatElement":
        other = self._lift(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            _add_into(out, mono, c)
        return MatElement._raw(self.shape, out)

    __radd__ = __add__

    def __neg__(self) -> "MatElement":
        return MatElement._raw(self.shape, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "MatElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "MatElement":
        return self._lift(other) - self

    def scale(self, c) -> "MatElement":
        c = QLaurent.coerce(c)
        if not c:
            return MatElement.zero(self.shape)
        return MatElement._raw(self.shape, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other) -> "MatElement":
        if not isinstance(other, MatElement):
            if isinstance(other, (QLaurent, int, Fraction)):
                return self.scale(other)
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other) -> "MatElement":
        return self.scale(other)

    def __pow__(self, e: int) -> "MatElement":
        if e < 0:
            raise ValueError("negative powers are not defined in O_q(M_{m,n})")
        out = MatElement.one(self.shape)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatElement):
            return NotImplemented
        return self.shape == other.shape and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            word = "*".join(
                (f"Y{i}{a}" if e == 1 else f"Y{i}{a}^{e}")
                for k, e in enumerate(mono) if e
                for i, a in [self.shape.pos(k)])
            if not word:
                parts.append(f"({c})")
            elif c.is_one():
                parts.append(word)
            else:
                parts.append(f"({c})*{word}")
        return " + ".join(parts)


def multiply(a: MatElement, b: MatElement) -> MatElement:
    """Product in PBW normal form."""
    a._check(b)
    n = a.shape.n
    acc: dict = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            c = ca * cb
            for mono, c2 in _mono_mul(n, ma, mb):
                _add_into(acc, mono, c * c2)
    return MatElement._raw(a.shape, acc)


def degree(mono: Sequence[int]) -> int:
    return sum(mono)


def total_degree(x: MatElement) -> int | None:
    """Degree of a homogeneous nonzero element, otherwise ``None``."""
    if x.is_zero():
        return None
    degs = {sum(mono) for mono in x.support()}
    return degs.pop() if len(degs) == 1 else None


def max_degree(x: MatElement) -> int | None:
    if x.is_zero():
        return None
    return max(sum(mono) for mono in x.support())


@dataclass(frozen=True)
class Character:
    """Row and column multidegrees of an H-eigenvector."""

    row: tuple[int, ...]
    col: tuple[int, ...]

    def __add__(self, other: "Character") -> "Character":
        return Character(tuple(a + b for a, b in zip(self.row, other.row)),
                         tuple(a + b for a, b in zip(self.col, other.col)))


def mono_character(shape: Shape, mono: Sequence[int]) -> Character:
    row = [0] * shape.m
    col = [0] * shape.n
    for k, e in enumerate(mono):
        if e:
            i, a = shape.pos(k)
            row[i - 1] += e
            col[a - 1] += e
    return Character(tuple(row), tuple(col))


def h_character(x: MatElement) -> Character | None:
    if x.is_zero():
        raise ValueError("the zero element has no H-character")
    chars = {mono_character(x.shape, mono) for mono in x.support()}
    return chars.pop() if len(chars) == 1 else None


def generator_elements(shape) -> list[MatElement]:
    shape = as_shape(shape)
    return [MatElement.gen(shape, i, a) for i, a in shape.generators()]


def coefficientwise_ratio(P: MatElement, Q_: MatElement) -> QRatio | None:
    """A single ratio ``c`` with ``P = c*Q`` on identical supports."""
    if P.is_zero() or Q_.is_zero() or P.support() != Q_.support():
        return None
    items = iter(sorted(P.support()))
    first = next(items)
    c = ql_proportional(P.coefficient(first), Q_.coefficient(first))
    if c is None:
        return None
    for mono in items:
        if not same_ratio(P.coefficient(mono), Q_.coefficient(mono), c):
            return None
    return c


def q_normal_check(x: MatElement) -> list[QRatio] | None:
    """Per-generator ratios ``c_g`` with ``x*g = c_g * g*x``.

    Success certifies that ``x`` is normal.  ``None`` only means the
    single-ratio test failed ("not q-normal"); it does not prove that
    ``x`` is not normal.
    """
    if x.is_zero():
        return None
    ratios = []
    for g in generator_elements(x.shape):
        c = coefficientwise_ratio(x * g, g * x)
        if c is None:
            return None
        ratios.append(c)
    return ratios


def relation_form(shape, g1: tuple[int, int], g2: tuple[int, int]) -> str:
    """Name of the relation family governing ``Y_g2 Y_g1`` with g1 < g2."""
    (i, a), (j, b) = g1, g2
    if i == j:
        return "row"
    if a == b:
        return "column"
    return "commute" if a > b else "cross"


def relation_violations(shape, y: dict) -> list[tuple]:
    """Pairs of generators whose images break a defining relation.

    ``y`` maps ``(i,a)`` to elements of any ring supporting ``+ - *`` and
    scalar multiplication by Laurent polynomials in q.
    """
    shape = as_shape(shape)
    gens = list(shape.generators())
    bad = []
    for p, (i, a) in enumerate(gens):
        for (j, b) in gens[p + 1:]:
            lhs = y[(j, b)] * y[(i, a)]
            rhs = y[(i, a)] * y[(j, b)]
            if i == j or a == b:
                rhs = rhs * QLaurent.q(-1)
            elif a < b:
                rhs = rhs - (y[(i, b)] * y[(j, a)]) * Q_MINUS_QINV
            if lhs != rhs:
                bad.append(((i, a), (j, b)))
    return bad
