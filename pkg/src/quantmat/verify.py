"""Invariant sweeps over all shapes with m*n <= max_size.

Each suite yields ``CaseResult`` records; a suite passes when every case
does.  Cases are independent and always emitted in a fixed order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .cauchon import verify_embedding, verify_normalT
from .minors import (b_family, b_generator, commutation_exponent,
                     commutationbi_formula, quantum_determinant)
from .morphisms import (TorusAutoParams, alev_chamarie, alev_chamarie_inverse,
                        check_homomorphism, decompose, torus_auto,
                        torus_params_of, transpose_iso, unit_multiple)
from .pbw import MatElement, Shape, q_normal_check, relation_form
from .scalars import Q_MINUS_QINV, QLaurent, VerificationError
from .spectrum import dim_ker_B, is_primitive, stratum_dim
from .torus import (TorusElement, b_exponent, build_B, center_basis,
                    delta_element, sigma_exponent, v2)


@dataclass
class CaseResult:
    suite: str
    case: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  {self.detail}" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.suite}: {self.case}{tail}"


def shapes_up_to(max_size: int) -> list[Shape]:
    return [Shape(m, n) for m in range(1, max_size + 1)
            for n in range(1, max_size // m + 1)]


def _guard(suite: str, case: str, fn: Callable[[], tuple[bool, str] | bool]) -> CaseResult:
    try:
        out = fn()
    except VerificationError as exc:
        return CaseResult(suite, case, False, str(exc))
    ok, detail = out if isinstance(out, tuple) else (out, "")
    return CaseResult(suite, case, bool(ok), detail)


# -- relations -----------------------------------------------------------

def _expected_pair(shape: Shape, g1, g2) -> MatElement:
    """``Y_g2 Y_g1`` rewritten by the relation family, g1 < g2."""
    (i, a), (j, b) = g1, g2
    low = MatElement.word(shape, [g1, g2])
    form = relation_form(shape, g1, g2)
    if form in ("row", "column"):
        return low.scale(QLaurent.q(-1))
    if form == "commute":
        return low
    return low - MatElement.word(shape, [(i, b), (j, a)]).scale(Q_MINUS_QINV)


def relation_audit(shape: Shape) -> tuple[bool, str]:
    gens = list(shape.generators())
    for p, g1 in enumerate(gens):
        for g2 in gens[p + 1:]:
            got = MatElement.gen(shape, *g2) * MatElement.gen(shape, *g1)
            if got != _expected_pair(shape, g1, g2):
                return False, f"Y{g2}*Y{g1} = {got}"
    return True, f"{len(gens) * (len(gens) - 1) // 2} pairs"


def random_element(shape: Shape, rng: random.Random, terms: int = 3, deg: int = 2) -> MatElement:
    out = MatElement.zero(shape)
    gens = list(shape.generators())
    for _ in range(terms):
        word = [rng.choice(gens) for _ in range(rng.randint(0, deg))]
        c = QLaurent.q(rng.randint(-2, 2), rng.choice([1, -1, 2, Fraction(1, 3)]))
        out = out + MatElement.word(shape, word, c)
    return out


def suite_relations(max_size: int) -> Iterator[CaseResult]:
    rng = random.Random(20070101)
    for s in shapes_up_to(max_size):
        yield _guard("relations", f"audit {s}", lambda s=s: relation_audit(s))
    for s in shapes_up_to(max_size):
        if s.m > 3 or s.n > 3:
            continue

        def assoc(s=s):
            for _ in range(5):
                a, b, c = (random_element(s, rng) for _ in range(3))
                if (a * b) * c != a * (b * c):
                    return False, f"{a} | {b} | {c}"
            return True
        yield _guard("relations", f"associativity {s}", assoc)


# -- commutation ---------------------------------------------------------

def b_pair_cases(m: int, n: int):
    """(label, i, j, expected) with ``b_i b_j = q^expected b_j b_i``."""
    for i in range(m, n + 1):
        for j in range(i + 1, n + 1):
            yield f"b{i} b{j}", i, j, commutationbi_formula(m, n, 1, i, j)
    for i in range(1, m):
        yield f"b{n} b{i}", n, i, commutationbi_formula(m, n, 2, i)
        yield f"b{n} b{m + n - i}", n, m + n - i, commutationbi_formula(m, n, 3, i)


def check_b_pairs(shape: Shape) -> tuple[bool, str]:
    b = [None] + b_family(shape)
    count = 0
    for label, i, j, want in b_pair_cases(shape.m, shape.n):
        got = commutation_exponent(b[i], b[j])
        count += 1
        if got != want:
            return False, f"{label}: got {got}, formula {want}"
    return True, f"{count} pairs"


def det_central(n: int) -> bool:
    ratios = q_normal_check(quantum_determinant(n))
    return ratios is not None and all(r.num.is_one() and r.den.is_one() for r in ratios)


def suite_commutation(max_size: int) -> Iterator[CaseResult]:
    for s in shapes_up_to(max_size):
        if s.m < s.n:
            yield _guard("commutation", f"b-pairs {s}", lambda s=s: check_b_pairs(s))
    for n in range(2, 4):
        if n * n <= max_size:
            yield _guard("commutation", f"det_q central ({n},{n})", lambda n=n: det_central(n))
    for s in shapes_up_to(max_size):
        if s.m <= 3 and s.n <= 4:
            yield _guard("commutation", f"b_i normal {s}",
                         lambda s=s: all(q_normal_check(x) is not None for x in b_family(s)))


# -- center --------------------------------------------------------------

def delta_centrality(shape: Shape) -> tuple[bool, str]:
    gens = [TorusElement.gen(shape, i, a) for i, a in shape.generators()]
    basis = center_basis(shape)
    for j in range(1, basis.d + 1):
        D = delta_element(shape, j)
        for g in gens:
            if D * g != g * D:
                return False, f"Delta_{j} does not commute with {g}"
    return True, f"d={basis.d}"


def exponent_criteria_agree(shape: Shape) -> tuple[bool, str]:
    """``B^T s = 0`` iff ``sigma(s, e_k) = 0`` for all k, on kernel and unit vectors."""
    B = build_B(shape)
    N = shape.size
    units = [tuple(int(k == l) for l in range(N)) for k in range(N)]
    samples = list(center_basis(shape).vectors) + units
    for s in samples:
        ker = not any(B.transpose().apply(s))
        sig = all(sigma_exponent(B, s, e) == 0 for e in units)
        if ker != sig:
            return False, f"criteria disagree on {s}"
    return True


def suite_center(max_size: int) -> Iterator[CaseResult]:
    for s in shapes_up_to(max_size):
        if v2(s.m) != v2(s.n):
            yield _guard("center", f"empty basis {s}", lambda s=s: center_basis(s).d == 0)
            continue
        yield _guard("center", f"Delta central {s}", lambda s=s: delta_centrality(s))
        yield _guard("center", f"kernel criteria {s}", lambda s=s: exponent_criteria_agree(s))


# -- restore -------------------------------------------------------------

def coherence(shape: Shape) -> tuple[bool, str]:
    B = build_B(shape)
    b = b_family(shape)
    for i in range(len(b)):
        for j in range(len(b)):
            got = commutation_exponent(b[i], b[j])
            want = sigma_exponent(B, b_exponent(shape, i + 1), b_exponent(shape, j + 1))
            if got != want:
                return False, f"b{i + 1} b{j + 1}: pbw {got}, torus {want}"
    return True


def suite_restore(max_size: int) -> Iterator[CaseResult]:
    for s in shapes_up_to(max_size):
        yield _guard("restore", f"embedding {s}", lambda s=s: verify_embedding(s))
        yield _guard("restore", f"b_i as T-monomials {s}", lambda s=s: verify_normalT(s))
    for s in shapes_up_to(max_size):
        if s.m <= 3 and s.n <= 4:
            yield _guard("restore", f"coherence {s}", lambda s=s: coherence(s))


# -- spectrum ------------------------------------------------------------

def suite_spectrum(max_size: int) -> Iterator[CaseResult]:
    for s in shapes_up_to(max_size):
        def case(s=s):
            d = dim_ker_B(s.m, s.n)
            p = is_primitive(s.m, s.n, "both")
            return p == (stratum_dim(s.m, s.n) == 0), f"dim={d} primitive={p}"
        yield _guard("spectrum", f"dim ker B {s}", case)


# -- morphisms -----------------------------------------------------------

def random_unit(rng: random.Random) -> QLaurent:
    c = rng.choice([1, -1, 2, -3, Fraction(1, 2), Fraction(-5, 7)])
    return QLaurent.q(rng.randint(-3, 3), c)


def random_params(shape: Shape, rng: random.Random) -> TorusAutoParams:
    return TorusAutoParams.make([random_unit(rng) for _ in range(shape.m)],
                                [random_unit(rng) for _ in range(shape.n)])


def torus_group_laws(shape: Shape, rng: random.Random, trials: int) -> tuple[bool, str]:
    b = b_family(shape)
    for _ in range(trials):
        p1, p2 = random_params(shape, rng), random_params(shape, rng)
        f1, f2 = torus_auto(shape, p1), torus_auto(shape, p2)
        if not check_homomorphism(f1):
            return False, "torus scaling is not a homomorphism"
        if torus_params_of(f1.compose(f2)) != p1 * p2:
            return False, "composition law fails"
        c = random_unit(rng)
        h = [x * c for x in p1.h]
        hp = [x * c.inverse() for x in p1.hp]
        if TorusAutoParams.make(h, hp) != p1:
            return False, "canonical form is not invariant under (c*h, h'/c)"
        for i, x in enumerate(b, start=1):
            if unit_multiple(f1(x), x) is None:
                return False, f"b_{i} is not mapped to a unit multiple of itself"
    return True, f"{trials} parameter pairs"


def exceptional_auto(mu1, mu2, mu3, lam) -> tuple[bool, str]:
    s = Shape(1, 3)
    f = alev_chamarie(mu1, mu2, mu3, lam)
    g = alev_chamarie_inverse(mu1, mu2, mu3, lam)
    if not (check_homomorphism(f) and check_homomorphism(g)):
        return False, "relations fail"
    if not (f.compose(g).is_identity() and g.compose(f).is_identity()):
        return False, "inverse does not compose to the identity"
    b1, b2, b3 = (b_generator(s, i) for i in (1, 2, 3))
    coeffs = decompose(f.images[(1, 2)], [b2, b1 * b3])
    if coeffs is None or not coeffs[0].is_unit():
        return False, "image of Y12 is not lambda b2 + mu b1 b3"
    if QLaurent.coerce(lam) and not coeffs[1].is_unit():
        return False, "b1 b3 coefficient is not a unit"
    return True, f"sigma(b2) = ({coeffs[0]}) b2 + ({coeffs[1]}) b1 b3"


def suite_morphisms(max_size: int) -> Iterator[CaseResult]:
    rng = random.Random(31415)
    for s in shapes_up_to(max_size):
        if s.size <= 8:
            yield _guard("morphisms", f"torus automorphisms {s}",
                         lambda s=s: torus_group_laws(s, rng, 5))
        yield _guard("morphisms", f"transposition {s}",
                     lambda s=s: check_homomorphism(transpose_iso(s)))
        if s.m == s.n and s.size <= 9:
            def square(s=s):
                t = transpose_iso(s)
                if not t.compose(t).is_identity():
                    return False, "transpose is not an involution"
                f = torus_auto(s, random_params(s, rng))
                return check_homomorphism(t.compose(f).compose(t))
            yield _guard("morphisms", f"transposition involution {s}", square)
    if max_size >= 3:
        yield _guard("morphisms", "Alev-Chamarie (1,1,1,1)", lambda: exceptional_auto(1, 1, 1, 1))
        yield _guard("morphisms", "Alev-Chamarie generic",
                     lambda: exceptional_auto(QLaurent.q(1, 2), -1, Fraction(1, 3), QLaurent.q(-2, 5)))


SUITES = {
    "relations": suite_relations,
    "commutation": suite_commutation,
    "center": suite_center,
    "restore": suite_restore,
    "spectrum": suite_spectrum,
    "morphisms": suite_morphisms,
}


def run_suite(name: str, max_size: int) -> list[CaseResult]:
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise ValueError(f"unknown suite {name!r}")
    return [r for n in names for r in SUITES[n](max_size)]
