"""chi-matroids: subsets of B_chi(k,n) with a unique maximum after every relabeling of values."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bposet import BPoset, build
from .character import Character, idempotent_vector
from .errors import BoundExceededError, ZeroProjectionError
from .exactalg import simplify
from .permgrp import Perm, canonical_rep
from .symtensor import apply_idempotent, canonical_index_set, coords_in_basis, decomposable

RELABEL_BOUND = 7


def relabel(P: BPoset, sigma: Perm | Sequence[int], X: Iterable[tuple]) -> list[tuple]:
    """{canonical(sigma*(x)) : x in X}, sorted, where sigma acts on values."""
    sigma = sigma if isinstance(sigma, Perm) else Perm.parse(sigma)
    if len(sigma) != P.n:
        raise ValueError(f"relabeling must permute [{P.n}]")
    G = P.group
    out = {canonical_rep(G, tuple(sigma[v - 1] for v in x)) for x in X}
    missing = [y for y in out if y not in P]
    if missing:
        raise AssertionError(f"relabeled elements {missing} fell outside the poset")
    return sorted(out)


def has_unique_max(P: BPoset, X: Iterable[tuple]) -> tuple[bool, list[tuple]]:
    """(unique maximum exists, maximal elements of X in lex order)."""
    X = list(X)
    if not X:
        raise ValueError("the empty subset has no maximum")
    maxima = P.maximal(X)
    return len(maxima) == 1, maxima


@dataclass(frozen=True)
class MatroidVerdict:
    is_matroid: bool
    witness: Perm | None = None
    maxima: tuple = ()
    checked: int = 0
    support: tuple = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {
            "is_chi_matroid": self.is_matroid,
            "witness": None if self.witness is None else str(self.witness),
            "maxima": [list(m) for m in self.maxima],
            "relabelings_checked": self.checked,
        }


def is_chi_matroid(P: BPoset, X: Iterable[tuple], bound: int = RELABEL_BOUND) -> MatroidVerdict:
    """Check every sigma in S_n in lex order; the first failure is the witness."""
    X = sorted(set(map(tuple, X)))
    if not X:
        raise ValueError("the empty subset is not a chi-matroid candidate")
    if P.n > bound:
        raise BoundExceededError(f"n = {P.n} exceeds the relabeling bound {bound} ({math.factorial(P.n)} permutations)")
    count = 0
    for img in itertools.permutations(range(1, P.n + 1)):
        sigma = Perm(img)
        count += 1
        ok, maxima = has_unique_max(P, relabel(P, sigma, X))
        if not ok:
            return MatroidVerdict(False, sigma, tuple(maxima), count)
    ok, maxima = has_unique_max(P, X)
    return MatroidVerdict(True, None, tuple(maxima), count)


def projected_support(chi: Character, factors: Sequence[Sequence]) -> list[tuple]:
    """supp_chi of P_chi(v_1 (x) ... (x) v_k), as a sorted list of elements of B_chi.

    Only the coordinates at canonical representatives are computed: the coefficient
    of e_x in P(v) is sum_g c_g v_{g^-1(x)}, and the entries of a decomposable v are
    products of factor entries, so the dense tensor is never formed.
    """
    vectors = [[simplify(c) for c in f] for f in factors]
    if not vectors or len({len(f) for f in vectors}) != 1:
        raise ValueError("factors must be a non-empty list of equal-length vectors")
    for j, f in enumerate(vectors):
        if all(c == 0 for c in f):
            raise ValueError(f"factor {j + 1} is the zero vector")
    if len(vectors) != chi.group.k:
        raise ValueError(f"{len(vectors)} factors for a character of a subgroup of S_{chi.group.k}")
    G = chi.group
    inv = G.inverse_index
    coeffs = [(inv[i], simplify(c)) for i, c in enumerate(idempotent_vector(chi)) if c != 0]
    supp = []
    for x in canonical_index_set(chi, len(vectors[0])):
        images = G.act_all(x)
        total = 0
        for i, c in coeffs:
            term = c
            for f, a in zip(vectors, images[i]):
                term = term * f[a - 1]
                if term == 0:
                    break
            total = term + total
        if total != 0:
            supp.append(x)
    if not supp:
        raise ZeroProjectionError("the idempotent maps this decomposable tensor to zero")
    return supp


def projected_support_dense(chi: Character, factors: Sequence[Sequence]) -> list[tuple]:
    """Same as :func:`projected_support`, through the full tensor P_chi(v)."""
    v = apply_idempotent(chi, decomposable(factors))
    if v.is_zero():
        raise ZeroProjectionError("the idempotent maps this decomposable tensor to zero")
    return sorted(coords_in_basis(chi, v))


def support_is_matroid(chi: Character, factors: Sequence[Sequence], P: BPoset | None = None) -> MatroidVerdict:
    n = len(factors[0])
    if P is None:
        P = build(chi, n)
    supp = projected_support(chi, factors)
    verdict = is_chi_matroid(P, supp)
    return MatroidVerdict(verdict.is_matroid, verdict.witness, verdict.maxima, verdict.checked, tuple(supp))


def interval_representing_tensor(x: Sequence[int], y: Sequence[int], n: int) -> list[list[int]]:
    """Box factors sum_{i=x_j}^{y_j} e_i whose symmetrization has support [x, y] in B_{1_{S_k}}."""
    x, y = tuple(x), tuple(y)
    if len(x) != len(y):
        raise ValueError("x and y have different lengths")
    if list(x) != sorted(x) or list(y) != sorted(y):
        raise ValueError("x and y must be weakly increasing")
    if any(a > b for a, b in zip(x, y)) or any(not 1 <= v <= n for v in x + y):
        raise ValueError(f"{x} is not below {y} in [{n}]^{len(x)}")
    return [[1 if a <= i <= b else 0 for i in range(1, n + 1)] for a, b in zip(x, y)]
