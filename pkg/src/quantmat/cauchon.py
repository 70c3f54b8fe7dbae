"""Restoring the generators Y_{i,a} inside the quantum torus.

The deleting-derivations algorithm walks ``r = (j, b)`` downward through
``E = ([1,m] x [1,n] + {(m, n+1)}) - {(1,1)}`` (row-major order) and, for
``i < j`` and ``a < b``, sets

    Y^(r)_{i,a} = Y^(r+)_{i,a} - Y^(r+)_{i,b} (Y^(r+)_{j,b})^-1 Y^(r+)_{j,a}

leaving every other entry alone.  The entries ``(i,b)``, ``(j,b)`` and
``(j,a)`` are themselves untouched by step ``r``, so the step inverts to

    Y^(r+)_{i,a} = Y^(r)_{i,a} + Y^(r)_{i,b} (Y^(r)_{j,b})^-1 Y^(r)_{j,a}.

Starting from ``Y^(1,2) = T`` and walking ``r`` upward therefore rebuilds
``Y = Y^(m,n+1)``.  Entry ``(j,b)`` is only modified by steps strictly
after ``(j,b)``, so when step ``(j,b)`` runs it is still the monomial
``T_{j,b}`` and the inverse above is a Laurent monomial.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .minors import b_index, minor_expansion
from .pbw import Shape, as_shape, relation_violations
from .scalars import ONE, VerificationError
from .torus import TorusElement, b_exponent


def step_indices(shape) -> Iterator[tuple[int, int]]:
    """``E`` in increasing standard order, ending with ``(m, n+1)``."""
    shape = as_shape(shape)
    for j, b in shape.generators():
        if (j, b) != (1, 1):
            yield j, b
    yield shape.m, shape.n + 1


def successor(shape, r: tuple[int, int]) -> tuple[int, int]:
    """Least element of ``E`` strictly above ``r``."""
    shape = as_shape(shape)
    later = [s for s in step_indices(shape) if s > r]
    if not later:
        raise ValueError(f"{r} has no successor in E")
    return later[0]


@lru_cache(maxsize=None)
def _restore(shape: Shape) -> tuple:
    m, n = shape.m, shape.n
    cur = {(i, a): TorusElement.gen(shape, i, a) for i, a in shape.generators()}
    for r in step_indices(shape):
        if r == (m, n + 1):
            break
        j, b = r
        pivot = cur[(j, b)]
        if pivot != TorusElement.gen(shape, j, b):
            raise VerificationError(f"stage invariant broken at step {r}: entry is {pivot}")
        inv = pivot.inverse()
        nxt = dict(cur)
        for i in range(1, j):
            for a in range(1, b):
                nxt[(i, a)] = cur[(i, a)] + cur[(i, b)] * inv * cur[(j, a)]
        cur = nxt
    return tuple(sorted(cur.items()))


def restore_generators(shape) -> dict[tuple[int, int], TorusElement]:
    """The generators ``Y_{i,a}`` of O_q(M_{m,n}) written in the torus."""
    return dict(_restore(as_shape(shape)))


def verify_embedding(shape) -> bool:
    shape = as_shape(shape)
    return not relation_violations(shape, restore_generators(shape))


def restored_minor(shape, i: int) -> TorusElement:
    """``b_i`` evaluated on the restored generators."""
    shape = as_shape(shape)
    idx = b_index(shape, i)
    if idx is None:
        return TorusElement.one(shape)
    y = restore_generators(shape)
    return minor_expansion(idx, lambda r, c: y[(r, c)], TorusElement.one(shape))


def verify_normalT(shape) -> bool:
    """Each ``b_i`` collapses to its T-monomial with coefficient exactly 1."""
    shape = as_shape(shape)
    for i in range(1, shape.m + shape.n):
        got = restored_minor(shape, i)
        if got != TorusElement.monomial(shape, b_exponent(shape, i), ONE):
            return False
    return True
