"""Exact scalars: Laurent polynomials in q over the rationals, and exact
integer matrix linear algebra (rank, kernel lattice, maximal-minor gcd).

Coefficients are stored as ``int`` when integral and as
:class:`fractions.Fraction` otherwise, so equal values always have equal
representations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

Rational = Union[int, Fraction]


class QuantMatError(Exception):
    """Base class for errors raised by this package."""


class VerificationError(QuantMatError):
    """An internal mathematical self-check failed (an implementation bug)."""


def _norm(c) -> Rational:
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def parse_rational(text: str) -> Rational:
    """Parse ``"p/r"`` or ``"p"`` into a canonical rational."""
    return _norm(Fraction(text.strip()))


def format_rational(c: Rational) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


class QLaurent:
    """Immutable Laurent polynomial in ``q`` with rational coefficients.

    >>> q = QLaurent.q()
    >>> (q - q**-1) * (q + q**-1)
    q^2 - q^-2
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Rational] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[int(k)] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "QLaurent":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def q(cls, k: int = 1, c: Rational = 1) -> "QLaurent":
        return cls({k: c})

    @classmethod
    def const(cls, c: Rational) -> "QLaurent":
        return cls({0: c})

    @staticmethod
    def coerce(x) -> "QLaurent":
        if isinstance(x, QLaurent):
            return x
        if isinstance(x, (int, Fraction)):
            return QLaurent({0: x})
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial in q")

    @property
    def terms(self) -> dict[int, Rational]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(self._terms)

    def is_unit(self) -> bool:
        """Units of Q[q, q^-1] are the nonzero monomials c*q^k."""
        return len(self._terms) == 1

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def as_monomial(self) -> tuple[int, Rational] | None:
        if len(self._terms) != 1:
            return None
        ((k, c),) = self._terms.items()
        return k, c

    def shift(self, k: int) -> "QLaurent":
        """Multiply by ``q**k``."""
        if not k:
            return self
        return QLaurent._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c: Rational) -> "QLaurent":
        c = _norm(c)
        if not c:
            return ZERO
        return QLaurent._raw({e: _norm(v * c) for e, v in self._terms.items()})

    def inverse(self) -> "QLaurent":
        mono = self.as_monomial()
        if mono is None:
            raise ZeroDivisionError(f"{self} is not a unit of Q[q, q^-1]")
        k, c = mono
        return QLaurent._raw({-k: _norm(Fraction(1) / c)})

    def __add__(self, other) -> "QLaurent":
        if not isinstance(other, QLaurent):
            if isinstance(other, (int, Fraction)):
                other = QLaurent.coerce(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return QLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "QLaurent":
        if not isinstance(other, (QLaurent, int, Fraction)):
            return NotImplemented
        return self + (-QLaurent.coerce(other))

    def __rsub__(self, other) -> "QLaurent":
        return QLaurent.coerce(other) - self

    def __mul__(self, other) -> "QLaurent":
        if not isinstance(other, QLaurent):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        a, b = self._terms, other._terms
        if len(b) == 1:
            ((k, c),) = b.items()
            return QLaurent._raw({e + k: _norm(v * c) for e, v in a.items()})
        if len(a) == 1:
            ((k, c),) = a.items()
            return QLaurent._raw({e + k: _norm(v * c) for e, v in b.items()})
        out: dict[int, Rational] = {}
        for i, x in a.items():
            for j, y in b.items():
                out[i + j] = out.get(i + j, 0) + x * y
        return QLaurent._raw({k: _norm(v) for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QLaurent":
        if e < 0:
            return self.inverse() ** (-e)
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QLaurent.coerce(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                qk = "q" if k == 1 else f"q^{k}"
                body = qk if a == 1 else f"{a}*{qk}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


ZERO = QLaurent()
ONE = QLaurent({0: 1})
Q = QLaurent({1: 1})
Q_MINUS_QINV = QLaurent({1: 1, -1: -1})


def ql_arith(a: QLaurent, b: QLaurent, op: str) -> QLaurent:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


# -- ratios ---------------------------------------------------------------

def _to_poly(p: QLaurent) -> tuple[int, list[Fraction]]:
    """Split ``p = q**shift * P(q)`` with ``P`` a polynomial, P(0) != 0."""
    lo, hi = p.min_degree(), p.max_degree()
    coeffs = [Fraction(0)] * (hi - lo + 1)
    for k, c in p.items():
        coeffs[k - lo] = Fraction(c)
    return lo, coeffs


def _poly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        s = len(a) - len(b)
        quot[s] = c
        for i, y in enumerate(b):
            a[s + i] -= c * y
        a.pop()
        _poly_trim(a)
    return _poly_trim(quot), a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


def _from_poly(shift: int, coeffs: Sequence[Fraction]) -> QLaurent:
    return QLaurent({shift + i: c for i, c in enumerate(coeffs) if c})


class QRatio(NamedTuple):
    """A formal ratio ``num/den`` in Q(q), reduced, ``den`` monic with
    nonzero constant term."""

    num: QLaurent
    den: QLaurent

    def as_laurent(self) -> QLaurent | None:
        return self.num if self.den.is_one() else None

    def __repr__(self) -> str:
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num})/({self.den})"


def ql_proportional(p: QLaurent, r: QLaurent) -> QRatio | None:
    """Reduced ratio ``c`` with ``p = c*r``; ``None`` if either side is zero.

    The ratio is read off by cancelling the polynomial gcd; callers compare
    ratios by cross-multiplication only.
    """
    if p.is_zero() or r.is_zero():
        return None
    sp, P = _to_poly(p)
    sr, R = _to_poly(r)
    g = _poly_gcd(P, R)
    P1, rem1 = _poly_divmod(P, g)
    R1, rem2 = _poly_divmod(R, g)
    assert not rem1 and not rem2
    lead = R1[-1]
    P1 = [c / lead for c in P1]
    R1 = [c / lead for c in R1]
    return QRatio(_from_poly(sp - sr, P1), _from_poly(0, R1))


def same_ratio(p: QLaurent, r: QLaurent, c: QRatio) -> bool:
    """Cross-multiplied test of ``p = c*r``."""
    return p * c.den == r * c.num


# -- integer matrices -----------------------------------------------------

class IntMatrix:
    """Dense row-major integer matrix with fixed dimensions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]], cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(row) != cols for row in data):
            raise ValueError("ragged matrix")
        self.entries = data
        self.rows = len(data)
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, r: int, c: int) -> "IntMatrix":
        return cls([[0] * c for _ in range(r)], c)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntMatrix) and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.entries[i][j] for i in range(self.rows)]
                          for j in range(self.cols)], self.rows)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return IntMatrix([[a + b for a, b in zip(r, s)]
                          for r, s in zip(self.entries, other.entries)], self.cols)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + other.scale(-1)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * a for a in r] for r in self.entries], self.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols_t = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols_t]
                          for r in self.entries], other.cols)

    def __pow__(self, e: int) -> "IntMatrix":
        if self.rows != self.cols or e < 0:
            raise ValueError("power needs a square matrix and e >= 0")
        out, base = IntMatrix.identity(self.rows), self
        while e:
            if e & 1:
                out = out @ base
            base = base @ base
            e >>= 1
        return out

    def apply(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(a * b for a, b in zip(r, v)) for r in self.entries]


def _row_gcd(row: Sequence[int]) -> int:
    g = 0
    for x in row:
        g = gcd(g, x)
    return g


def _echelon(M: IntMatrix) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gauss-Jordan elimination over Z.

    Rows are divided by their content after each update, which keeps
    entries small. Returns the reduced rows and pivot columns.
    """
    a = [list(r) for r in M.entries]
    pivots: list[int] = []
    r = 0
    for c in range(M.cols):
        p = next((i for i in range(r, M.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r]
        for i in range(M.rows):
            if i != r and a[i][c]:
                f, x = piv[c], a[i][c]
                row = [f * y - x * z for y, z in zip(a[i], piv)]
                g = _row_gcd(row)
                a[i] = [y // g for y in row] if g > 1 else row
        pivots.append(c)
        r += 1
        if r == M.rows:
            break
    return a[:r], pivots


def rank_rational(M: IntMatrix) -> int:
    """Exact rank over Q (fraction-free Bareiss elimination)."""
    a = [list(r) for r in M.entries]
    rows, cols = M.rows, M.cols
    rank, prev = 0, 1
    for c in range(cols):
        p = next((i for i in range(rank, rows) if a[i][c]), None)
        if p is None:
            continue
        a[rank], a[p] = a[p], a[rank]
        piv = a[rank][c]
        for i in range(rank + 1, rows):
            x = a[i][c]
            a[i] = [(piv * a[i][j] - x * a[rank][j]) // prev for j in range(cols)]
        prev = piv
        rank += 1
        if rank == rows:
            break
    return rank


def _primitive(v: list[int]) -> tuple[int, ...]:
    g = _row_gcd(v)
    if g == 0:
        return tuple(v)
    v = [x // g for x in v]
    first = next(x for x in v if x)
    if first < 0:
        v = [-x for x in v]
    return tuple(v)


def kernel_basis_integer(M: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the rational kernel of ``M`` as primitive integer vectors.

    Each vector has coordinate gcd 1 and its first nonzero coordinate
    positive. One vector per free column, in increasing column order.
    """
    rows, pivots = _echelon(M)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        # x_f = L, x_pc = -row[f] * L / row[pc] with L a common multiple
        L = 1
        for row, pc in zip(rows, pivots):
            if row[f]:
                L = L * row[pc] // gcd(L, row[pc])
        v = [0] * M.cols
        v[f] = L
        for row, pc in zip(rows, pivots):
            if row[f]:
                v[pc] = -row[f] * L // row[pc]
        basis.append(_primitive(v))
    return basis


def _det(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss determinant of a square integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def minor_gcd_bruteforce(M: IntMatrix, d: int) -> int:
    """gcd of all d x d minors by enumeration (small matrices only)."""
    g = 0
    for cols in combinations(range(M.cols), d):
        g = gcd(g, _det([[M[i, c] for c in cols] for i in range(d)]))
        if g == 1:
            break
    return g


def minor_gcd_full_rank(M: IntMatrix, d: int) -> int:
    """gcd of the d x d minors of a rank-d matrix with d rows.

    Unimodular column operations preserve this gcd, so the matrix is
    column-reduced to ``[L | 0]`` with ``L`` lower triangular and the
    result is ``|det L|``. A value of 1 means the rows span a direct
    summand of Z^cols.
    """
    if M.rows != d:
        raise ValueError(f"expected {d} rows, got {M.rows}")
    if rank_rational(M) != d:
        raise ValueError("matrix is rank deficient")
    # work on columns as lists
    cols = [list(c) for c in zip(*M.entries)]
    det = 1
    for r in range(d):
        # gather the gcd of row r over columns r.. into column r
        for c in range(r + 1, len(cols)):
            b = cols[c][r]
            if not b:
                continue
            a = cols[r][r]
            g, x, y = _xgcd(a, b)
            # [col_r, col_c] <- [x*col_r + y*col_c, (-b/g)*col_r + (a/g)*col_c]
            cr, cc = cols[r], cols[c]
            cols[r] = [x * u + y * v for u, v in zip(cr, cc)]
            cols[c] = [(-b // g) * u + (a // g) * v for u, v in zip(cr, cc)]
        if cols[r][r] == 0:
            raise ValueError("matrix is rank deficient")
        det *= cols[r][r]
    return abs(det)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0
