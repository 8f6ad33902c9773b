"""Incidence strata for trivial characters: truncated matrices, equations, dimensions, Chow data."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bposet import BPoset, build, polya_rank_generating
from .character import trivial_character
from .exactalg import MVPoly
from .immanant import Matrix, generic_matrix, immanant
from .permgrp import PermGroup, canonical_rep, rho, stabilizer


@dataclass(frozen=True)
class Stratum:
    base: BPoset
    top: tuple
    ideal: tuple
    dimension: int


def trivial_poset(G: PermGroup, n: int) -> BPoset:
    return build(trivial_character(G), n)


def stratum(P: BPoset, x: Sequence[int]) -> Stratum:
    x = tuple(x)
    if x not in P:
        raise ValueError(f"{x} is not an element of B")
    return Stratum(P, x, tuple(P.principal_ideal(x)), rho(x))


def truncate(A: Matrix, x: Sequence[int]) -> Matrix:
    """A^x: keep A[i, j] when i <= x_j, zero it otherwise."""
    x = tuple(x)
    if len(x) != A.cols:
        raise ValueError(f"x has length {len(x)} but the matrix has {A.cols} columns")
    if any(not 1 <= v <= A.rows for v in x):
        raise ValueError(f"{x} is not in [{A.rows}]^{A.cols}")
    sample = A.entries[0][0]
    zero = MVPoly.zero(sample.variables) if isinstance(sample, MVPoly) else Fraction(0)
    return Matrix(
        tuple(
            tuple(c if i <= x[j] else zero for j, c in enumerate(row))
            for i, row in enumerate(A.entries, start=1)
        )
    )


def stratum_equations(G: PermGroup, k: int, n: int, x: Sequence[int], P: BPoset | None = None) -> dict[tuple, MVPoly]:
    """y -> |G_y|^-1 (1_G)_{y,(1..k)}(A^x) for y below x, and 0 for the other y in B."""
    if G.k != k:
        raise ValueError(f"group acts on {G.k} letters, not {k}")
    P = trivial_poset(G, n) if P is None else P
    x = tuple(x)
    if x not in P:
        raise ValueError(f"{x} is not an element of B_(1_G)({k},{n})")
    chi = P.chi
    Ax = truncate(generic_matrix(n, k), x)
    cols = tuple(range(1, k + 1))
    zero = MVPoly.zero(Ax.entries[0][0].variables)
    out = {}
    for y in P.elements:
        if P.leq(y, x):
            out[y] = immanant(chi, y, cols, Ax).scale(Fraction(1, len(stabilizer(G, y))))
        else:
            out[y] = zero
    return out


def stratum_dimension(x: Sequence[int]) -> int:
    return rho(x)


def chow_generators(G: PermGroup, k: int, n: int, P: BPoset | None = None) -> list[tuple[tuple, int]]:
    """Classes of the closed strata, one per element of B, with their dimensions.

    These generate the Chow vector space but may be linearly dependent.
    """
    if G.k != k:
        raise ValueError(f"group acts on {G.k} letters, not {k}")
    P = trivial_poset(G, n) if P is None else P
    return [(x, rho(x)) for x in P.elements]


def hp_upper_bound(G: PermGroup, k: int, n: int) -> tuple[int, ...]:
    """Coefficientwise upper bound for the Hilbert-Poincare polynomial (never claimed sharp)."""
    return polya_rank_generating(G, k, n)


def ideal_projection_check(G: PermGroup, k: int, n: int, P: BPoset | None = None) -> bool:
    """For every x in B, canonical images of the box below x form the principal ideal of x."""
    P = trivial_poset(G, n) if P is None else P
    for x in P.elements:
        box = itertools.product(*(range(1, v + 1) for v in x))
        image = {canonical_rep(G, z) for z in box}
        if image != set(P.principal_ideal(x)):
            return False
    return True
