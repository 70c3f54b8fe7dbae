"""Primitivity, the dimension of the 0-stratum, height-one primes and the
normal generators ``u`` attached to polynomials ``V``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping

from .minors import MinorIndex, b_generator, b_index
from .pbw import MatElement, Shape, q_normal_check
from .scalars import IntMatrix, Rational, VerificationError, _norm, rank_rational
from .torus import block_A, build_B, v2

__all__ = [
    "v2", "stratum_dim", "is_primitive", "dim_ker_B", "SpectrumReport",
    "spectrum_report", "HeightOneCatalog", "height_one_catalog", "PolyV",
    "build_u",
]


def stratum_dim(m: int, n: int) -> int:
    """Number of indeterminates of the Laurent ring modelling the 0-stratum."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return 0 if v2(m) != v2(n) else gcd(m, n)


def _rank_dim(m: int, n: int) -> int:
    return m * n - rank_rational(build_B(Shape(m, n)))


def _intermediate_dim(m: int, n: int) -> int:
    A = block_A(m)
    I = IntMatrix.identity(m)
    return m - rank_rational((A + I) ** n + (A - I) ** n)


def dim_ker_B(m: int, n: int, method: str = "all") -> int:
    """dim ker B by exact rank ("rank"), the closed form ("closed-form"),
    ``m - rk[(A+I)^n + (A-I)^n]`` ("intermediate"), or all three, which
    must agree ("all")."""
    methods = {
        "rank": _rank_dim,
        "closed-form": stratum_dim,
        "intermediate": _intermediate_dim,
    }
    if method != "all":
        if method not in methods:
            raise ValueError(f"unknown method {method!r}")
        return methods[method](m, n)
    values = {name: f(m, n) for name, f in methods.items()}
    if len(set(values.values())) != 1:
        raise VerificationError(f"dim ker B methods disagree for ({m},{n}): {values}")
    return values["rank"]


def is_primitive(m: int, n: int, method: str = "both") -> bool:
    """Whether O_q(M_{m,n}) is primitive.

    "formula" uses the 2-adic criterion, "rank" asks whether B is
    invertible, "both" computes the two and raises on disagreement.
    """
    if method == "formula":
        return v2(m) != v2(n)
    if method == "rank":
        return rank_rational(build_B(Shape(m, n))) == m * n
    if method == "both":
        f, r = is_primitive(m, n, "formula"), is_primitive(m, n, "rank")
        if f != r:
            raise VerificationError(f"primitivity methods disagree for ({m},{n})")
        return f
    raise ValueError(f"unknown method {method!r}")


@dataclass
class SpectrumReport:
    shape: Shape
    v2m: int
    v2n: int
    alpha: int
    primitive: bool
    methods_agree: bool
    d: int | None = None
    m_prime: int | None = None
    n_prime: int | None = None

    def as_dict(self) -> dict:
        return {
            "m": self.shape.m, "n": self.shape.n,
            "v2m": self.v2m, "v2n": self.v2n,
            "d": self.d, "m_prime": self.m_prime, "n_prime": self.n_prime,
            "alpha": self.alpha, "primitive": self.primitive,
            "methods_agree": self.methods_agree,
        }


def spectrum_report(m: int, n: int, method: str = "both") -> SpectrumReport:
    shape = Shape(m, n)
    formula = is_primitive(m, n, "formula")
    agree = True
    if method in ("rank", "both"):
        agree = formula == is_primitive(m, n, "rank")
    if method == "both" and not agree:
        raise VerificationError(f"primitivity methods disagree for ({m},{n})")
    primitive = formula if method != "rank" else is_primitive(m, n, "rank")
    rep = SpectrumReport(shape, v2(m), v2(n), stratum_dim(m, n), primitive, agree)
    if v2(m) == v2(n):
        rep.d = gcd(m, n)
        rep.m_prime, rep.n_prime = m // rep.d, n // rep.d
    return rep


@dataclass
class HeightOneCatalog:
    """The H-invariant height-one primes ``<b_i>``, plus whether they are all."""

    shape: Shape
    indices: list[MinorIndex]
    generators: list[MatElement] = field(repr=False)
    complete: bool
    d: int | None = None
    m_prime: int | None = None
    n_prime: int | None = None


def height_one_catalog(m: int, n: int, expand: bool = True) -> HeightOneCatalog:
    shape = Shape(m, n)
    count = m + n - 1
    indices = [b_index(shape, i) for i in range(1, count + 1)]
    gens = [b_generator(shape, i) for i in range(1, count + 1)] if expand else []
    cat = HeightOneCatalog(shape, indices, gens, complete=v2(m) != v2(n))
    if not cat.complete:
        cat.d = gcd(m, n)
        cat.m_prime, cat.n_prime = m // cat.d, n // cat.d
    return cat


# -- polynomials V and the elements u --------------------------------------

class PolyV:
    """Nonzero polynomial in X_1..X_d with rational coefficients."""

    def __init__(self, d: int, terms: Mapping[tuple[int, ...], Rational]):
        if d < 1:
            raise ValueError("a polynomial needs at least one variable")
        clean: dict[tuple[int, ...], Rational] = {}
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != d or min(exps) < 0:
                raise ValueError(f"bad exponent vector {exps} for {d} variables")
            v = clean.get(exps, 0) + Fraction(c)
            if v:
                clean[exps] = _norm(v)
            else:
                clean.pop(exps, None)
        self.d = d
        self.terms = clean

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyV) and self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, j: int) -> int:
        """Degree in ``X_{j+1}`` (0-based ``j``)."""
        return max((e[j] for e in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def divisible_by_variable(self) -> int | None:
        """0-based index of a variable dividing every term, if any."""
        for j in range(self.d):
            if self.terms and all(e[j] > 0 for e in self.terms):
                return j
        return None

    def __repr__(self) -> str:
        from .polyparse import format_poly
        return f"PolyV({format_poly(self)!r})"


def _bracket(shape: Shape, j: int, parity: int) -> MatElement:
    """``prod_{i = parity mod 2} b_{id+j}`` in increasing i."""
    d = gcd(shape.m, shape.n)
    mp, np_ = shape.m // d, shape.n // d
    out = MatElement.one(shape)
    for i in range(parity, mp + np_, 2):
        out = out * b_generator(shape, i * d + j)
    return out


def build_u(m: int, n: int, V: PolyV, verify: bool = True) -> MatElement:
    """Normal element generating the height-one prime attached to ``V``.

    Irreducibility of ``V`` is not checked; only the cheap necessary
    conditions are (nonconstant, no variable divides it).
    """
    shape = Shape(m, n)
    if v2(m) != v2(n):
        raise ValueError(f"u-elements need v2(m) = v2(n); ({m},{n}) has a finite "
                         "set of height-one primes")
    d = gcd(m, n)
    if V.d != d:
        raise ValueError(f"V must have d = gcd(m,n) = {d} variables, got {V.d}")
    if V.is_zero() or V.is_constant():
        raise ValueError("V must be nonconstant")
    j = V.divisible_by_variable()
    if j is not None:
        raise ValueError(f"V is divisible by X{j + 1} (need V != X_i and V irreducible)")
    degs = tuple(V.degree_in(j) for j in range(d))
    brackets = [(_bracket(shape, j, 0), _bracket(shape, j, 1)) for j in range(1, d + 1)]
    u = MatElement.zero(shape)
    for exps, a in sorted(V.terms.items()):
        term = MatElement.scalar(shape, a)
        for (even, odd), i_j, r_j in zip(brackets, exps, degs):
            term = term * even ** i_j * odd ** (r_j - i_j)
        u = u + term
    if verify and q_normal_check(u) is None:
        raise VerificationError(f"u built from {V} failed the q-normality check")
    return u
