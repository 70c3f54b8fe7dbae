"""Algebra maps given by generator images: relation checking, torus
automorphisms, transposition and the exceptional automorphism of
O_q(M_{1,3})."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .pbw import MatElement, Shape, as_shape, relation_violations
from .scalars import QLaurent, ZERO, ql_proportional


@dataclass(frozen=True)
class GeneratorImages:
    source: Shape
    target: Shape
    images: Mapping[tuple[int, int], MatElement]

    def __post_init__(self):
        missing = [g for g in self.source.generators() if g not in self.images]
        if missing:
            raise ValueError(f"no image given for generators {missing}")
        for g, img in self.images.items():
            if img.shape != self.target:
                raise ValueError(f"image of {g} lives in {img.shape}, expected {self.target}")

    def __call__(self, x: MatElement) -> MatElement:
        """Apply the map to an element of the source algebra."""
        if x.shape != self.source:
            raise ValueError(f"element of {x.shape} given to a map from {self.source}")
        gens = list(self.source.generators())
        out = MatElement.zero(self.target)
        for mono, c in x.items():
            term = MatElement.scalar(self.target, c)
            for k, e in enumerate(mono):
                for _ in range(e):
                    term = term * self.images[gens[k]]
            out = out + term
        return out

    def compose(self, inner: "GeneratorImages") -> "GeneratorImages":
        """``self o inner``."""
        if inner.target != self.source:
            raise ValueError("maps are not composable")
        return GeneratorImages(inner.source, self.target,
                               {g: self(img) for g, img in inner.images.items()})

    def is_identity(self) -> bool:
        return self.source == self.target and all(
            img == MatElement.gen(self.target, *g) for g, img in self.images.items())


def identity_map(shape) -> GeneratorImages:
    shape = as_shape(shape)
    return GeneratorImages(shape, shape,
                           {g: MatElement.gen(shape, *g) for g in shape.generators()})


def check_homomorphism(f: GeneratorImages) -> bool:
    """All defining relations hold on the images."""
    return not relation_violations(f.source, dict(f.images))


def _unit(c, what: str) -> QLaurent:
    c = QLaurent.coerce(c)
    if not c.is_unit():
        raise ValueError(f"{what} must be a nonzero unit c*q^k, got {c}")
    return c


@dataclass(frozen=True)
class TorusAutoParams:
    """Scalings ``Y_{i,a} -> h_i h'_a Y_{i,a}`` stored with ``h'_n = 1``."""

    h: tuple[QLaurent, ...]
    hp: tuple[QLaurent, ...]

    @classmethod
    def make(cls, h: Sequence, hp: Sequence) -> "TorusAutoParams":
        h = tuple(_unit(c, "row parameter") for c in h)
        hp = tuple(_unit(c, "column parameter") for c in hp)
        if not h or not hp:
            raise ValueError("need at least one row and one column parameter")
        last = hp[-1]
        return cls(tuple(c * last for c in h), tuple(c * last.inverse() for c in hp))

    @property
    def shape(self) -> Shape:
        return Shape(len(self.h), len(self.hp))

    def __mul__(self, other: "TorusAutoParams") -> "TorusAutoParams":
        return TorusAutoParams.make([a * b for a, b in zip(self.h, other.h)],
                                    [a * b for a, b in zip(self.hp, other.hp)])

    def scalar(self, i: int, a: int) -> QLaurent:
        return self.h[i - 1] * self.hp[a - 1]


def torus_auto(shape, params: TorusAutoParams) -> GeneratorImages:
    shape = as_shape(shape)
    if params.shape != shape:
        raise ValueError(f"parameters are for {params.shape}, not {shape}")
    return GeneratorImages(shape, shape, {
        (i, a): MatElement.gen(shape, i, a).scale(params.scalar(i, a))
        for i, a in shape.generators()})


def torus_params_of(f: GeneratorImages) -> TorusAutoParams | None:
    """Recover canonical parameters from a diagonal scaling map."""
    shape = f.source
    mu = {}
    for g, img in f.images.items():
        c = img.coefficient(MatElement.gen(shape, *g).items()[0][0])
        if len(img) != 1 or not c.is_unit():
            return None
        mu[g] = c
    m, n = shape.m, shape.n
    hp = [mu[(1, a)] * mu[(1, n)].inverse() for a in range(1, n + 1)]
    h = [mu[(i, n)] for i in range(1, m + 1)]
    p = TorusAutoParams.make(h, hp)
    if any(p.scalar(i, a) != mu[(i, a)] for i, a in shape.generators()):
        return None
    return p


def transpose_iso(shape) -> GeneratorImages:
    """``Y_{i,a} -> Y'_{a,i}`` from O_q(M_{m,n}) onto O_q(M_{n,m})."""
    shape = as_shape(shape)
    t = shape.transposed()
    return GeneratorImages(shape, t, {(i, a): MatElement.gen(t, a, i)
                                      for i, a in shape.generators()})


def alev_chamarie(mu1, mu2, mu3, lam) -> GeneratorImages:
    """``Y11 -> mu1 Y11, Y12 -> mu2 Y12 + lam Y11 Y13, Y13 -> mu3 Y13``."""
    s = Shape(1, 3)
    mu1, mu2, mu3 = (_unit(c, "mu") for c in (mu1, mu2, mu3))
    lam = QLaurent.coerce(lam)
    Y = lambda a: MatElement.gen(s, 1, a)
    return GeneratorImages(s, s, {
        (1, 1): Y(1).scale(mu1),
        (1, 2): Y(2).scale(mu2) + (Y(1) * Y(3)).scale(lam),
        (1, 3): Y(3).scale(mu3),
    })


def alev_chamarie_inverse(mu1, mu2, mu3, lam) -> GeneratorImages:
    """Two-sided inverse of :func:`alev_chamarie`.

    ``Y12 -> mu2^-1 Y12 - lam (mu1 mu2 mu3)^-1 Y11 Y13``, the other
    generators scaled by ``mu1^-1`` and ``mu3^-1``.
    """
    mu1, mu2, mu3 = (_unit(c, "mu") for c in (mu1, mu2, mu3))
    lam = QLaurent.coerce(lam)
    s = Shape(1, 3)
    Y = lambda a: MatElement.gen(s, 1, a)
    return GeneratorImages(s, s, {
        (1, 1): Y(1).scale(mu1.inverse()),
        (1, 2): Y(2).scale(mu2.inverse())
        - (Y(1) * Y(3)).scale(lam * (mu1 * mu2 * mu3).inverse()),
        (1, 3): Y(3).scale(mu3.inverse()),
    })


def unit_multiple(x: MatElement, y: MatElement) -> QLaurent | None:
    """The unit ``c`` with ``x = c*y``, if there is one."""
    if x.is_zero() or y.is_zero() or x.support() != y.support():
        return None
    c = None
    for mono in x.support():
        r = ql_proportional(x.coefficient(mono), y.coefficient(mono))
        if r is None or not r.den.is_one() or not r.num.is_unit():
            return None
        if c is None:
            c = r.num
        elif c != r.num:
            return None
    return c


def decompose(x: MatElement, parts: Sequence[MatElement]) -> list[QLaurent] | None:
    """Coefficients ``c_k`` with ``x = sum c_k parts[k]``.

    Only handles parts with pairwise disjoint supports, where each
    coefficient is forced by one monomial; ``None`` if no exact solution
    exists in that form.
    """
    seen: set = set()
    for p in parts:
        if p.is_zero() or seen & p.support():
            raise ValueError("parts must be nonzero with disjoint supports")
        seen |= p.support()
    if not x.support() <= seen:
        return None
    coeffs = []
    rest = x
    for p in parts:
        mono = min(p.support())
        r = ql_proportional(x.coefficient(mono), p.coefficient(mono))
        if x.coefficient(mono).is_zero():
            c = ZERO
        elif r is None or not r.den.is_one():
            return None
        else:
            c = r.num
        coeffs.append(c)
        rest = rest - p.scale(c)
    return coeffs if rest.is_zero() else None
