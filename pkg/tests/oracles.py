"""Reference computations written independently of the library code paths they check."""

from __future__ import annotations

import cmath
import itertools
from fractions import Fraction


def cyclo_to_complex(c) -> complex:
    """Numeric value of a CycloNum (or rational) via explicit roots of unity."""
    if not hasattr(c, "coeffs"):
        return complex(Fraction(c))
    z = cmath.exp(2j * cmath.pi / c.m)
    return sum(complex(a) * z**i for i, a in enumerate(c.coeffs))


def perm_sign(p) -> int:
    """Sign by counting inversions."""
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def det_cofactor(M) -> Fraction:
    """Determinant by Laplace expansion along the first row."""
    n = len(M)
    if n == 1:
        return Fraction(M[0][0])
    total = Fraction(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * Fraction(M[0][j]) * det_cofactor(minor)
    return total


def permanent_ryser(M) -> Fraction:
    """Ryser's inclusion-exclusion formula."""
    n = len(M)
    total = Fraction(0)
    for r in range(1, n + 1):
        for cols in itertools.combinations(range(n), r):
            prod = Fraction(1)
            for row in M:
                prod *= sum(Fraction(row[c]) for c in cols)
            total += (-1) ** r * prod
    return (-1) ** n * total


def dense_rank(rows) -> int:
    """Rank of a list of equal-length lists of exact scalars (Gauss-Jordan, dense)."""
    A = [list(r) for r in rows]
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(A)) if A[i][col] != 0), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        inv = 1 / A[rank][col]
        A[rank] = [v * inv for v in A[rank]]
        for i in range(len(A)):
            if i != rank and A[i][col] != 0:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[rank])]
        rank += 1
    return rank


def product_leq(x, y) -> bool:
    return all(a <= b for a, b in zip(x, y))


def act_by_definition(w, x):
    """(x_{w^-1(1)}, ..., x_{w^-1(k)}) computed through an explicit inverse."""
    k = len(w)
    winv = [0] * k
    for i in range(k):
        winv[w[i] - 1] = i + 1
    return tuple(x[winv[i] - 1] for i in range(k))


def hall_mobius(elements, leq, x, y) -> int:
    """mu(x, y) = sum_i (-1)^i c_i with c_i the number of chains x = z_0 < ... < z_i = y."""
    if x == y:
        return 1
    inside = [z for z in elements if leq(x, z) and leq(z, y) and z != x and z != y]
    total = 0

    def chains(last, length):
        nonlocal total
        # close the chain at y
        total += (-1) ** (length + 1)
        for z in inside:
            if leq(last, z) and z != last:
                chains(z, length + 1)

    chains(x, 0)
    return total


def basis_exchange(bases) -> bool:
    B = {frozenset(b) for b in bases}
    for A in B:
        for C in B:
            for a in A - C:
                if not any((A - {a}) | {c} in B for c in C - A):
                    return False
    return True


def is_shelling_by_faces(order) -> bool:
    """Nonpure shelling condition checked through explicit face sets."""
    seen: set[frozenset] = set()
    for idx, F in enumerate(order):
        F = frozenset(F)
        faces_F = {frozenset(s) for r in range(len(F) + 1) for s in itertools.combinations(sorted(F), r)}
        if idx:
            common = faces_F & seen
            maximal = [f for f in common if not any(f < g for g in common)]
            if any(len(f) != len(F) - 1 for f in maximal):
                return False
        seen |= faces_F
    return True
